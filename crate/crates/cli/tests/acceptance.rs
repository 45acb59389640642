//! The fourteen acceptance criteria, one line each. Every check is exact;
//! time limits are pinned below. Criterion 14 may stop at its budget and
//! report "skipped", but never "fail".

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rankalg_cli::report::Status;
use rankalg_cli::verify::{run_criterion, Context, CRITERIA};

/// Per-run budget for the stretch engine attempts.
const STRETCH_BUDGET: Duration = Duration::from_secs(300);

fn main() -> ExitCode {
    // `cargo test -- --list` and filters from the harness protocol.
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    if let Some(f) = args.iter().find(|a| !a.starts_with('-')) {
        if !"acceptance".contains(f.as_str()) {
            return ExitCode::SUCCESS;
        }
    }
    let ctx = Context {
        stretch_budget: STRETCH_BUDGET,
        ..Context::default()
    };
    let mut failures = 0;
    for c in &CRITERIA {
        let t = Instant::now();
        let section = run_criterion(c, &ctx);
        let elapsed = t.elapsed();
        let status = section.status();
        let in_time = elapsed <= c.limit;
        let ok = in_time
            && if c.id == 14 {
                status != Status::Fail
            } else {
                status == Status::Pass
            };
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {:>2} {} [{}] {} ({:.2}s of {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            status.as_str(),
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for check in &section.checks {
            if check.status != Status::Pass {
                let expected = check.expected.as_deref().map(|e| format!(" (expected {e})")).unwrap_or_default();
                println!("    {} {}: {}{expected}", check.status.as_str(), check.name, check.computed);
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all {} criteria met", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria not met");
        ExitCode::FAILURE
    }
}
