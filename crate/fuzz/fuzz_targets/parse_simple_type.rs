#![no_main]
use coterie::{RootSystem, SimpleType};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<SimpleType>() {
        // printing and reparsing is the identity on accepted types
        assert_eq!(t.to_string().parse::<SimpleType>().unwrap(), t);
        if t.rank() <= 8 {
            let rs = RootSystem::build(t);
            assert!(rs.validate().is_ok());
        }
    }
});
