#![no_main]

use libfuzzer_sys::fuzz_target;
use rrlab::poly::{parse_poly, Field, PolyRing};

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    for field in [Field::Prime(32003), Field::Rational] {
        let ring = PolyRing::with_vars(&["x", "y", "z"], field);
        if let Ok(p) = parse_poly(src, &ring) {
            let again = parse_poly(&p.to_string(), &ring).expect("printed polynomial reparses");
            assert_eq!(p, again);
        }
    }
});
