#![no_main]

use libfuzzer_sys::fuzz_target;
use rankalg_core::poly::parse::{parse_polynomial, parse_relation};

const NAMES: [&str; 6] = ["p_{123}", "p_{132}", "p_{213}", "p_{231}", "p_{312}", "p_{321}"];

fuzz_target!(|data: &str| {
    let names: Vec<String> = NAMES.iter().map(|s| s.to_string()).collect();
    if let Ok(f) = parse_polynomial(data, &names) {
        assert_eq!(f.nvars(), names.len());
    }
    _ = parse_relation(data, &names);
});
