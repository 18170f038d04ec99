#![no_main]
use coterie::exactla::parse_rational;
use coterie::RationalVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = RationalVector::parse(s) {
        let text = v.to_string();
        let back = RationalVector::parse(text.trim_start_matches('(').trim_end_matches(')')).unwrap();
        assert_eq!(back, v);
    }
    if let Ok(q) = parse_rational(s) {
        assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
    }
});
