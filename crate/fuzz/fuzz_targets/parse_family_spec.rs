#![no_main]

use knotconc_cli::family_spec::FamilySpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = FamilySpec::from_json(s);
});
