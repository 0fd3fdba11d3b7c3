#![no_main]

use knotconc::seifert::{alexander_poly, SeifertMatrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = SeifertMatrix::from_json(s) {
        if v.size() <= 6 {
            let _ = alexander_poly(&v);
        }
    }
});
