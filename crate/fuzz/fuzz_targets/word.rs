#![no_main]

use libfuzzer_sys::fuzz_target;
use rankalg_core::poly::hilbert::parse_numerator;
use rankalg_core::poset::{format_word, parse_word};

fuzz_target!(|data: &str| {
    if let Ok(w) = parse_word(data) {
        assert_eq!(parse_word(&format_word(&w)).ok(), Some(w));
    }
    _ = parse_numerator(data);
});
