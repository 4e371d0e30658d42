#![no_main]

use bicomplex_cas::expr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(v) = expr::parse_bicomplex_json(src) {
        // accepted input is canonical, so re-encoding reproduces it
        let again = expr::bicomplex_to_json(&v).to_string();
        assert_eq!(expr::parse_bicomplex_json(&again).unwrap(), v);
    }
});
