//! Fuzz the loop text-format parser: arbitrary bytes must either parse into
//! a validated loop (which then round-trips) or fail cleanly.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(l) = hopfq::loops::parse_loop_text(text) {
        // Anything accepted is a genuine loop: re-render and re-parse.
        let back = hopfq::loops::parse_loop_text(&l.to_text()).expect("round trip");
        assert_eq!(l, back);
        if l.order() <= 6 {
            // Classification must not panic on small accepted tables.
            let _ = l.classify();
        }
    }
});
