#![no_main]

use knotconc::LaurentPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<LaurentPoly>() {
        let again: LaurentPoly = p.to_string().parse().expect("printed form reparses");
        assert_eq!(again, p);
    }
});
