//! Fuzz the functional-file loader against a fixed small base space.

#![no_main]

use libfuzzer_sys::fuzz_target;

use hopfq::formats::FunctionalJson;
use hopfq::space::BasedSpace;
use hopfq::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parsed) = FunctionalJson::parse(text) else {
        return;
    };
    if parsed.entries.len() > 4096 {
        return;
    }
    let left = BasedSpace::numbered(3).unwrap();
    let right = BasedSpace::numbered(4).unwrap();
    if let Ok(m) = parsed.to_map(Field::Rational, &left, &right) {
        let exported = FunctionalJson::from_map(&m, parsed.base.clone()).unwrap();
        let back = exported.to_map(Field::Rational, &left, &right).unwrap();
        assert_eq!(m, back);
    }
});
