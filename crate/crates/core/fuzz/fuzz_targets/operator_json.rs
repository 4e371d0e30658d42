#![no_main]

use bicomplex_cas::expr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(v) = expr::parse_operator_json(src) {
        // accepted input is canonical, so re-encoding reproduces it
        let again = expr::operator_to_json(&v).to_string();
        assert_eq!(expr::parse_operator_json(&again).unwrap(), v);
    }
});
