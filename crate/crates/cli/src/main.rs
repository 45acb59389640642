use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use rankalg_cli::commands::{capped_report, error_code, run, Cli};
use rankalg_core::Error;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let command = argv[1..].to_vec();
    let outcome = match run(&cli, command.clone()) {
        Ok(o) => o,
        Err(Error::CapExceeded(why)) => capped_report(command, &why),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e) as u8);
        }
    };
    let Some(out) = outcome.render(cli.format) else {
        let name = format!("{:?}", cli.format).to_lowercase();
        eprintln!("error: this command has no {name} output");
        return ExitCode::from(2);
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code() as u8)
}
