#![no_main]

use knotconc::twist::Rho1Table;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = Rho1Table::from_json(s) {
        let _ = t.status(34);
    }
});
