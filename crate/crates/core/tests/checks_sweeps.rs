//! Catalog-wide validation: both cubic enumeration strategies agree
//! with published counts, the cubic bounds' equality descriptions match
//! computation across the whole enumeration, and seeded star-free
//! samples never violate an applicable bound.

use std::collections::BTreeSet;

use starfree::check::{self, CheckParams, Session, TheoremId};
use starfree::enumerate::{
    enumerate_cubic, enumerate_cubic_by_completion,
    enumerate_cubic_by_edge_backtracking,
};
use starfree::error::Error;
use starfree::iso::canonical_form;
use starfree::sample::{self, SampleStrategy};
use starfree::solve::Limits;

#[test]
fn cubic_enumeration_matches_published_counts_under_both_strategies() {
    let expected = [(4, 1usize), (6, 2), (8, 5), (10, 19), (12, 85)];
    for (n, count) in expected {
        let a = enumerate_cubic_by_completion(n).unwrap();
        let b = enumerate_cubic_by_edge_backtracking(n).unwrap();
        assert_eq!(a.len(), count, "completion count at n={n}");
        assert_eq!(b.len(), count, "backtracking count at n={n}");

        let canon_a: BTreeSet<_> =
            a.iter().map(|g| canonical_form(g).unwrap()).collect();
        let canon_b: BTreeSet<_> =
            b.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(canon_a.len(), count, "duplicates from completion at n={n}");
        assert_eq!(canon_a, canon_b, "strategies disagree at n={n}");

        for g in &a {
            assert_eq!(g.regularity(), Some(3), "non-cubic output at n={n}");
            assert!(g.is_connected(), "disconnected output at n={n}");
        }
    }
}

#[test]
fn cubic_bound_equality_descriptions_match_computation() {
    // Across every connected cubic graph up to order 12, the two cubic
    // domination/independence bounds must hold whenever their
    // hypotheses do, with equality exactly on the described graphs.
    let mut checked = 0usize;
    let mut tight = 0usize;
    for n in [4, 6, 8, 10, 12] {
        for g in enumerate_cubic(n).unwrap() {
            for id in [TheoremId::T4_7_8, TheoremId::T4_9] {
                let outcome = check::check(&g, id, CheckParams::none());
                let c = match outcome {
                    Err(Error::HypothesisFailed { .. }) => continue,
                    other => other.unwrap(),
                };
                assert!(c.holds, "{id:?} violated on a cubic graph, n={n}");
                let described = check::equality_characterization(id, &g)
                    .expect("both bounds have equality descriptions");
                assert_eq!(
                    c.equality, described,
                    "{id:?} equality mismatch on n={n}"
                );
                checked += 1;
                tight += usize::from(c.equality);
            }
        }
    }
    // Few cubic graphs are claw-free, but both the tight and the
    // strict branch of each description must have been exercised.
    assert!(checked >= 10, "hypotheses filtered out too much: {checked}");
    assert!(tight >= 2, "no tight instances seen");
    assert!(tight < checked, "no strict instances seen");
}

#[test]
fn seeded_star_free_samples_violate_no_applicable_bound() {
    let mut total = 0usize;
    for (r, seed) in [(3usize, 0x51u64), (4, 0x52)] {
        let graphs =
            sample::sample_many(r, 24, seed, SampleStrategy::Rejection, 500)
                .expect("sampling succeeds");
        assert_eq!(graphs.len(), 500);
        for (i, g) in graphs.iter().enumerate() {
            assert!(g.is_k1r_free(r), "sampler broke its contract");
            let mut session = Session::with_limits(g, Limits::default());
            let checks = session
                .check_all_applicable()
                .expect("applicable checks evaluate");
            assert!(!checks.is_empty(), "no applicable checks on sample {i}");
            for c in &checks {
                assert!(
                    c.holds,
                    "{:?} violated on r={r} sample {i} (n={}, m={}): {c}",
                    c.theorem,
                    g.n(),
                    g.m()
                );
            }
            total += checks.len();
        }
    }
    assert!(total > 10_000, "suspiciously few checks ran: {total}");
}

#[test]
fn check_all_applicable_covers_a_spread_of_the_catalog() {
    // One dense sample per r should trigger parameterized families:
    // clique-bounded, degree-bounded, and cubic entries where present.
    let g = sample::sample_k1r_free(3, 18, 11, SampleStrategy::Rejection)
        .unwrap();
    let mut session = Session::new(&g);
    let ids: BTreeSet<_> = session
        .check_all_applicable()
        .unwrap()
        .into_iter()
        .map(|c| c.theorem)
        .collect();
    assert!(ids.len() >= 5, "catalog coverage too thin: {ids:?}");
    assert!(ids.contains(&TheoremId::O3_1));
}
