//! Fuzzes the edge-list parser: arbitrary bytes must never panic, and
//! any successfully parsed graph must survive an emit/parse round trip
//! unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = starfree::codec::parse_edge_list(text) else {
        return;
    };
    let again = starfree::codec::emit_edge_list(&g);
    let h = starfree::codec::parse_edge_list(&again)
        .expect("emitted edge list must reparse");
    assert_eq!(g.n(), h.n());
    assert_eq!(g.edges(), h.edges());

    // The sniffer must route both encodings back to the same graph.
    let auto = starfree::codec::parse_as(&again, None)
        .expect("sniffed reparse succeeds");
    assert_eq!(auto.edges(), g.edges());
});
