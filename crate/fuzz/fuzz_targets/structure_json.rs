//! Fuzz the structure-file loader: untrusted JSON must either produce a
//! shape-valid structure (with any division/antipode hints re-verified) or
//! fail cleanly, never panic.

#![no_main]

use libfuzzer_sys::fuzz_target;

use hopfq::formats::StructureJson;
use hopfq::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parsed) = StructureJson::parse(text) else {
        return;
    };
    // Keep the expensive path bounded; the loader itself caps at 4096.
    if parsed.dim > 64 {
        return;
    }
    if let Ok(s) = parsed.to_structure(Field::Rational) {
        let exported = StructureJson::from_structure(&s);
        let rebuilt = exported
            .to_structure(Field::Rational)
            .expect("exported structures reload");
        assert_eq!(s.mul(), rebuilt.mul());
        assert_eq!(s.comul(), rebuilt.comul());
    }
    // A prime field with small characteristic must behave the same way.
    let _ = parsed.to_structure(Field::Prime(7));
});
