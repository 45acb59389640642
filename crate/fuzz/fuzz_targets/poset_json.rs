#![no_main]

use libfuzzer_sys::fuzz_target;
use rankalg_cli::input::parse_poset_file;

fuzz_target!(|data: &str| {
    // Accepted files must grade or report an error, never panic.
    if let Ok(p) = parse_poset_file(data) {
        let _ = p.graded();
    }
});
