#![no_main]

use libfuzzer_sys::fuzz_target;
use rankalg_cli::input::parse_shorthand;

fuzz_target!(|data: &str| {
    _ = parse_shorthand(data);
});
