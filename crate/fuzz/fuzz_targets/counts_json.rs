#![no_main]

use libfuzzer_sys::fuzz_target;
use rankalg_cli::input::{parse_counts, parse_params};

fuzz_target!(|data: &str| {
    _ = parse_counts(data);
    _ = parse_params(data);
});
