#![no_main]

use bicomplex_cas::expr::{self, ParseOptions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let Ok(f) = expr::parse_with(src, ParseOptions::raw()) else { return };
    let text = expr::format(&f);
    assert_eq!(expr::parse_with(&text, ParseOptions::raw()).unwrap(), f, "{text}");
    let json = expr::function_to_json(&f).to_string();
    assert_eq!(expr::parse_function_json(&json).unwrap(), f);
});
