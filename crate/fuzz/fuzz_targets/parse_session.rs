#![no_main]

use libfuzzer_sys::fuzz_target;
use rrlab::session::parse_session;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_session(src) {
        let again = parse_session(&s.to_string()).expect("printed session reparses");
        assert_eq!(s.to_string(), again.to_string());
    }
});
