//! Fuzzes the sweep configuration parser: arbitrary bytes must never
//! panic. Accepted configs are only validated structurally; they are
//! not evaluated, since evaluation cost scales with requested work.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cfg) = starfree::sweep::parse_config(text) {
        // Invariants promised by the parser.
        assert!(!cfg.graphs.is_empty());
        assert!(cfg.all_applicable || !cfg.theorems.is_empty());
    }
});
