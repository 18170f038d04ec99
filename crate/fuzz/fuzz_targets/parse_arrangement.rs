#![no_main]
use coterie::arrangement::parse_arrangement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(arr) = parse_arrangement(s) {
        let _ = arr.classifying_map();
        let _ = arr.weyl_orbit(64);
    }
});
