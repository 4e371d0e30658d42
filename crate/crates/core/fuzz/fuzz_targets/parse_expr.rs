#![no_main]

use bicomplex_cas::expr::{self, ParseOptions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let _ = expr::parse(src);
    let _ = expr::parse_bicomplex(src);
    if let Ok(f) = expr::parse_with(src, ParseOptions::raw()) {
        let _ = expr::format_compact(&f);
    }
});
