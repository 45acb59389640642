#![no_main]

use libfuzzer_sys::fuzz_target;
use rankalg_cli::input::parse_rational_list;
use rankalg_core::poly::parse::parse_rational;

fuzz_target!(|data: &str| {
    // Round trip through the canonical form.
    if let Ok(q) = parse_rational(data) {
        assert_eq!(parse_rational(&q.to_string()).ok(), Some(q));
    }
    _ = parse_rational_list(data);
});
