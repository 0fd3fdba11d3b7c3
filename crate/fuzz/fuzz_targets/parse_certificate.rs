#![no_main]

use knotconc::obstruction::verify_certificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = verify_certificate(s);
});
