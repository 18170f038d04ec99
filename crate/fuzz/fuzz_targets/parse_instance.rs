#![no_main]
use coterie::coterie::{general_member, parse_instance};
use coterie::RationalVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(inst) = parse_instance(s) {
        let n = inst.root_system().rank();
        let _ = general_member(&inst, &RationalVector::from_i64s(&vec![1; n]));
    }
});
