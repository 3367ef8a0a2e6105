//! Brute-force reference implementations.
//!
//! Each oracle enumerates candidate solutions exhaustively over `u64`
//! adjacency masks, sharing no search code with the production solvers,
//! and reports the same lexicographically least optimal witness. They
//! exist to cross-check the solvers on small graphs; every entry point
//! enforces a hard size cap.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`oracle_alpha`].
pub const ORACLE_ALPHA_MAX: usize = 24;
/// Largest order accepted by [`oracle_alpha_k`].
pub const ORACLE_ALPHA_K_MAX: usize = 18;
/// Largest order accepted by [`oracle_gamma`] and [`oracle_gamma_k`].
pub const ORACLE_GAMMA_MAX: usize = 20;
/// Largest order accepted by [`oracle_chi`].
pub const ORACLE_CHI_MAX: usize = 32;
/// Largest order accepted by [`oracle_max_subset`].
pub const ORACLE_SUBSET_MAX: usize = 20;

fn check_cap(op: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::SizeLimit { op, n, max });
    }
    Ok(())
}

/// Adjacency as one `u64` mask per vertex (graphs up to 64 vertices).
fn adj_masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for &(u, v) in &g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// For masks of equal popcount: is `a` lexicographically less than `b`
/// as a sorted vertex list? (The holder of the lowest differing bit is
/// the smaller set.)
fn lex_less_same_size(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & d & d.wrapping_neg() != 0
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Scan all subsets, keeping the best accepted one: largest (or
/// smallest, per `maximize`) and lexicographically least on ties.
fn scan(n: usize, maximize: bool, mut accept: impl FnMut(u64) -> bool) -> Option<(usize, u64)> {
    let mut best: Option<(usize, u64)> = None;
    for mask in 0..1u64 << n {
        if !accept(mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        let better = match best {
            None => true,
            Some((bs, bm)) => {
                (if maximize { size > bs } else { size < bs })
                    || (size == bs && lex_less_same_size(mask, bm))
            }
        };
        if better {
            best = Some((size, mask));
        }
    }
    best
}

/// Independence number by exhaustive subset enumeration.
pub fn oracle_alpha(g: &Graph) -> Result<(usize, VertexSet)> {
    check_cap("oracle_alpha", g.n(), ORACLE_ALPHA_MAX)?;
    let adj = adj_masks(g);
    let (size, mask) = scan(g.n(), true, |mask| {
        (0..g.n()).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0)
    })
    .expect("empty set is independent");
    Ok((size, mask_to_set(mask)))
}

/// k-independence number (induced maximum degree at most k) by
/// exhaustive subset enumeration.
pub fn oracle_alpha_k(g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
    check_cap("oracle_alpha_k", g.n(), ORACLE_ALPHA_K_MAX)?;
    let adj = adj_masks(g);
    let (size, mask) = scan(g.n(), true, |mask| {
        (0..g.n()).all(|v| mask >> v & 1 == 0 || (adj[v] & mask).count_ones() as usize <= k)
    })
    .expect("empty set qualifies");
    Ok((size, mask_to_set(mask)))
}

/// Domination number by exhaustive subset enumeration.
pub fn oracle_gamma(g: &Graph) -> Result<(usize, VertexSet)> {
    check_cap("oracle_gamma", g.n(), ORACLE_GAMMA_MAX)?;
    oracle_gamma_any(g, 1)
}

/// k-domination number by exhaustive subset enumeration (`k >= 1`).
pub fn oracle_gamma_k(g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
    if k < 1 {
        return Err(Error::ParamOutOfRange {
            op: "oracle_gamma_k",
            param: "k",
            value: k as i64,
            requirement: "k >= 1",
        });
    }
    check_cap("oracle_gamma_k", g.n(), ORACLE_GAMMA_MAX)?;
    oracle_gamma_any(g, k)
}

fn oracle_gamma_any(g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
    let adj = adj_masks(g);
    let (size, mask) = scan(g.n(), false, |mask| {
        (0..g.n()).all(|v| mask >> v & 1 == 1 || (adj[v] & mask).count_ones() as usize >= k)
    })
    .expect("the whole vertex set dominates");
    Ok((size, mask_to_set(mask)))
}

/// Chromatic number by plain ascending backtracking: try k = 1, 2, ...
/// colors; within each attempt, color vertices in index order with the
/// smallest feasible color, introducing new colors in increasing order.
/// The first coloring found at the chromatic number is the
/// lexicographically least optimal coloring.
pub fn oracle_chi(g: &Graph) -> Result<(usize, Vec<u32>)> {
    check_cap("oracle_chi", g.n(), ORACLE_CHI_MAX)?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = adj_masks(g);
    fn dfs(adj: &[u64], k: usize, colors: &mut Vec<u32>, used: usize) -> bool {
        let v = colors.len();
        if v == adj.len() {
            return true;
        }
        for c in 0..k.min(used + 1) as u32 {
            if (0..v).any(|u| adj[v] >> u & 1 == 1 && colors[u] == c) {
                continue;
            }
            colors.push(c);
            if dfs(adj, k, colors, used.max(c as usize + 1)) {
                return true;
            }
            colors.pop();
        }
        false
    }
    for k in 1..=g.n() {
        let mut colors = Vec::with_capacity(g.n());
        if dfs(&adj, k, &mut colors, 0) {
            return Ok((k, colors));
        }
    }
    unreachable!("n colors always suffice")
}

/// Largest subset accepted by `pred` (which sees the candidate vertex
/// set), by exhaustive enumeration. `pred` must accept the empty set.
pub fn oracle_max_subset(
    g: &Graph,
    pred: &mut dyn FnMut(&VertexSet) -> bool,
) -> Result<(usize, VertexSet)> {
    check_cap("oracle_max_subset", g.n(), ORACLE_SUBSET_MAX)?;
    let (size, mask) = scan(g.n(), true, |mask| pred(&mask_to_set(mask)))
        .expect("predicate accepts the empty set");
    Ok((size, mask_to_set(mask)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Deterministic scrambled graphs for agreement tests.
    fn random_graph(n: usize, seed: u64) -> Graph {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15) | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if next() % 100 < 45 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn oracles_match_solvers_on_random_graphs() {
        for seed in 0..40 {
            let n = 4 + (seed as usize % 7);
            let g = random_graph(n, seed);
            let a = solve::alpha(&g);
            let (ov, os) = oracle_alpha(&g).unwrap();
            assert_eq!((a.value, a.witness.as_set().unwrap()), (ov, &os), "alpha seed {seed}");

            let d = solve::gamma(&g);
            let (ov, os) = oracle_gamma(&g).unwrap();
            assert_eq!((d.value, d.witness.as_set().unwrap()), (ov, &os), "gamma seed {seed}");

            for k in 1..=2 {
                let s = solve::gamma_k(&g, k).unwrap();
                let (ov, os) = oracle_gamma_k(&g, k).unwrap();
                assert_eq!((s.value, s.witness.as_set().unwrap()), (ov, &os), "gamma_{k} seed {seed}");
                let s = solve::alpha_k(&g, k);
                let (ov, os) = oracle_alpha_k(&g, k).unwrap();
                assert_eq!((s.value, s.witness.as_set().unwrap()), (ov, &os), "alpha_{k} seed {seed}");
            }

            let c = solve::chi(&g);
            let (ov, oc) = oracle_chi(&g).unwrap();
            assert_eq!(c.value, ov, "chi seed {seed}");
            assert_eq!(c.witness.as_coloring().unwrap(), &oc[..], "chi witness seed {seed}");
        }
    }

    #[test]
    fn oracle_values_on_known_graphs() {
        assert_eq!(oracle_alpha(&cycle(7)).unwrap().0, 3);
        assert_eq!(oracle_gamma(&cycle(7)).unwrap().0, 3);
        assert_eq!(oracle_chi(&cycle(7)).unwrap(), (3, vec![0, 1, 0, 1, 0, 1, 2]));
        assert_eq!(oracle_gamma_k(&cycle(5), 2).unwrap().1.to_vec(), vec![0, 1, 3]);
        let w = cycle(5).join(&Graph::complete(1).unwrap()).unwrap();
        let (v, s) = oracle_max_subset(&w, &mut |s| !w.induced(s).contains_clique(3)).unwrap();
        assert_eq!((v, s.to_vec()), (5, vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn oracle_size_caps() {
        let big = Graph::empty(33).unwrap();
        assert!(matches!(oracle_alpha(&big), Err(Error::SizeLimit { op: "oracle_alpha", .. })));
        assert!(matches!(oracle_chi(&big), Err(Error::SizeLimit { op: "oracle_chi", .. })));
        assert!(matches!(
            oracle_gamma_k(&cycle(4), 0),
            Err(Error::ParamOutOfRange { op: "oracle_gamma_k", .. })
        ));
    }
}
