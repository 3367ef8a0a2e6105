//! Round-trip and cross-validation tests for the text codecs, including
//! an independent graph6 decoder written directly from the byte layout
//! (order header, then upper-triangle bits column by column, six bits
//! per printable byte, most significant bit first).

use proptest::prelude::*;

use starfree::codec::{
    self, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6,
    sniff_format, TextFormat,
};
use starfree::graph::Graph;

/// Decode graph6 text using only the published byte layout; shares no
/// code with the production parser.
fn reference_decode(text: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = text.trim().as_bytes();
    let (n, body) = if bytes[0] == b'~' {
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            assert!((63..=126).contains(&b), "header byte {b} out of range");
            n = (n << 6) | (b as usize - 63);
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let mut bits = Vec::with_capacity(body.len() * 6);
    for &b in body {
        assert!((63..=126).contains(&b), "body byte {b} out of range");
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push(v >> shift & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[t] {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    assert!(bits[t..].iter().all(|&b| !b), "nonzero padding bits");
    (n, edges)
}

/// Arbitrary graph on 1..=max vertices with independent edge bits.
fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut t = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[t] {
                            edges.push((i, j));
                        }
                        t += 1;
                    }
                }
                Graph::from_edges(n, &edges).expect("valid edges")
            },
        )
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).expect("own output parses");
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn graph6_emission_matches_reference_decoder(g in arb_graph(40)) {
        let (n, mut edges) = reference_decode(&emit_graph6(&g));
        edges.sort_unstable();
        let mut expected = g.edges();
        expected.sort_unstable();
        prop_assert_eq!(n, g.n());
        prop_assert_eq!(edges, expected);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(40)) {
        let text = emit_edge_list(&g);
        let back = parse_edge_list(&text).expect("own output parses");
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn sniffer_classifies_both_emitters(g in arb_graph(40)) {
        prop_assert_eq!(sniff_format(&emit_graph6(&g)), TextFormat::Graph6);
        prop_assert_eq!(
            sniff_format(&emit_edge_list(&g)),
            TextFormat::EdgeList
        );
        let auto = codec::parse_as(&emit_graph6(&g), None).expect("auto");
        prop_assert_eq!(auto.edges(), g.edges());
    }

    #[test]
    fn graph6_parser_never_panics(text in "\\PC*") {
        let _ = parse_graph6(&text);
    }

    #[test]
    fn edge_list_parser_never_panics(text in "\\PC*") {
        let _ = parse_edge_list(&text);
    }

    #[test]
    fn auto_parser_never_panics(text in "\\PC*") {
        let _ = codec::parse_as(&text, None);
    }
}

#[test]
fn long_form_header_round_trips() {
    // Orders above 62 switch to the four-byte header.
    let n = 70;
    let edges: Vec<(usize, usize)> =
        (0..n).map(|i| (i, (i + 1) % n)).collect();
    let g = Graph::from_edges(n, &edges).expect("cycle");
    let text = emit_graph6(&g);
    assert!(text.starts_with('~'), "expected long form: {text}");
    let (rn, mut redges) = reference_decode(&text);
    redges.sort_unstable();
    let mut expected = g.edges();
    expected.sort_unstable();
    assert_eq!(rn, n);
    assert_eq!(redges, expected);
    let back = parse_graph6(&text).expect("parses");
    assert_eq!(back.edges(), g.edges());
}

#[test]
fn known_encodings_decode_to_the_expected_graphs() {
    let c5 = parse_graph6("Dhc").expect("C5");
    assert_eq!((c5.n(), c5.m()), (5, 5));
    assert_eq!(c5.regularity(), Some(2));
    assert!(c5.is_connected());

    let k4 = parse_graph6("C~").expect("K4");
    assert!(k4.is_complete() && k4.n() == 4);

    let star = parse_graph6("D?{").expect("K_{1,4}");
    assert_eq!((star.n(), star.m()), (5, 4));
    assert_eq!(star.max_degree(), 4);
    assert!(!star.is_k1r_free(4));

    // Optional tool header is accepted.
    let with_header = parse_graph6(">>graph6<<Dhc").expect("header");
    assert_eq!(with_header.edges(), c5.edges());
}

#[test]
fn orders_beyond_the_cap_are_rejected() {
    // Craft a long-form header claiming 513 vertices.
    let n = 513usize;
    let header: String = std::iter::once('~')
        .chain((0..3).map(|i| {
            char::from(63 + ((n >> (6 * (2 - i))) & 0x3f) as u8)
        }))
        .collect();
    let body_bytes = n * (n - 1) / 2 / 6 + 1;
    let text: String =
        header + &"?".repeat(body_bytes);
    assert!(parse_graph6(&text).is_err());

    // The edge-list path enforces the same cap.
    assert!(parse_edge_list("n 513\n0 1\n").is_err());
}

#[test]
fn edge_list_accepts_comments_blanks_and_inferred_order() {
    let g = parse_edge_list("# triangle plus isolated max vertex\n\n0 1\n1 2\n0 2\n3 3").ok();
    // A self loop must be rejected, not silently dropped.
    assert!(g.is_none());

    let g = parse_edge_list("# triangle\n\n0 1\n1 2\n0 2\n").expect("parses");
    assert_eq!((g.n(), g.m()), (3, 3));

    let g = parse_edge_list("n 6\n0 1\n").expect("parses");
    assert_eq!((g.n(), g.m()), (6, 1));

    assert!(parse_edge_list("n 4\n0 9\n").is_err(), "endpoint out of range");
    assert!(parse_edge_list("0 1 2\n").is_err(), "three fields");
}
