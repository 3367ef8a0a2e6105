//! Fuzzes the graph6 decoder: arbitrary bytes must never panic, and
//! any successfully decoded graph must survive an emit/parse round
//! trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = starfree::codec::parse_graph6(text) else {
        return;
    };
    let again = starfree::codec::emit_graph6(&g);
    let h = starfree::codec::parse_graph6(&again)
        .expect("emitted graph6 must reparse");
    assert_eq!(g.n(), h.n());
    assert_eq!(g.edges(), h.edges());
});
