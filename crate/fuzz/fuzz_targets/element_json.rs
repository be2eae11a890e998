//! Fuzz the element-file loader against a fixed small space.

#![no_main]

use libfuzzer_sys::fuzz_target;

use hopfq::formats::ElementJson;
use hopfq::space::BasedSpace;
use hopfq::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parsed) = ElementJson::parse(text) else {
        return;
    };
    if parsed.entries.len() > 4096 {
        return;
    }
    let sp = BasedSpace::numbered(4).unwrap();
    if let Ok(m) = parsed.to_map(Field::Rational, &sp) {
        let exported = ElementJson::from_map(&m).unwrap();
        let back = exported.to_map(Field::Rational, &sp).unwrap();
        assert_eq!(m, back);
    }
});
