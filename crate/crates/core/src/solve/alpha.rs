//! Independence number α and its bounded-degree generalization α_k.

use crate::bits::VertexSet;
use crate::graph::Graph;
use crate::solve::subset::{clique_capped_bound, Hooks, MaxSubset};
use crate::solve::{InvariantKind, InvariantValue};

/// Greedy independent set by repeatedly taking a vertex of minimum
/// residual degree. Only the size is used (as a search seed).
fn greedy_independent(g: &Graph) -> usize {
    let mut cand = VertexSet::full(g.n());
    let mut size = 0;
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| ((g.neighbors(v) & cand).len(), v))
            .unwrap();
        size += 1;
        cand -= g.closed_neighbors(v);
    }
    size
}

/// Independence number: the largest set of pairwise nonadjacent
/// vertices, with the lexicographically least maximum independent set as
/// witness.
pub fn alpha(g: &Graph) -> InvariantValue {
    let seed = greedy_independent(g).saturating_sub(1);
    let (value, set) = MaxSubset::run(
        Hooks {
            can_include: &mut |_, _| true,
            restrict: &mut |_, v, rest| rest - g.neighbors(v),
            bound: &mut |cand| clique_capped_bound(g, cand, 1),
        },
        VertexSet::full(g.n()),
        seed,
    );
    InvariantValue::of_set(InvariantKind::Alpha, value, set)
}

fn alpha_k_can_include(g: &Graph, k: usize, chosen: &VertexSet, v: usize) -> bool {
    let nv = g.neighbors(v) & *chosen;
    if nv.len() > k {
        return false;
    }
    nv.iter().all(|u| (g.neighbors(u) & *chosen).len() < k)
}

fn alpha_k_restrict(
    g: &Graph,
    k: usize,
    chosen: &VertexSet,
    v: usize,
    mut rest: VertexSet,
) -> VertexSet {
    // Vertices adjacent to a member that just reached induced degree k
    // can never join; drop them now so the bound tightens.
    let with_v = chosen.with(v);
    for u in with_v {
        if (g.neighbors(u) & with_v).len() == k {
            rest -= g.neighbors(u);
        }
    }
    rest
}

/// k-independence number: the largest vertex set whose induced subgraph
/// has maximum degree at most `k` (so `alpha_k(g, 0)` is the
/// independence number), with the lexicographically least maximum
/// witness.
pub fn alpha_k(g: &Graph, k: usize) -> InvariantValue {
    // Ascending feasibility greedy for the seed.
    let seed = {
        let mut chosen = VertexSet::EMPTY;
        let mut cand = VertexSet::full(g.n());
        while let Some(v) = cand.pop_min() {
            if alpha_k_can_include(g, k, &chosen, v) {
                cand = alpha_k_restrict(g, k, &chosen, v, cand);
                chosen.insert(v);
            }
        }
        chosen.len().saturating_sub(1)
    };
    let (value, set) = MaxSubset::run(
        Hooks {
            can_include: &mut |chosen, v| alpha_k_can_include(g, k, chosen, v),
            restrict: &mut |chosen, v, rest| alpha_k_restrict(g, k, chosen, v, rest),
            bound: &mut |cand| clique_capped_bound(g, cand, k + 1),
        },
        VertexSet::full(g.n()),
        seed,
    );
    InvariantValue::of_set(InvariantKind::AlphaK(k), value, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, 5 + i));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn alpha_on_cycles() {
        for n in 3..=12 {
            let iv = alpha(&cycle(n));
            assert_eq!(iv.value, n / 2, "C_{n}");
            assert!(iv.verify(&cycle(n)).unwrap());
        }
        // Lexicographically least maximum independent set of C_6.
        let iv = alpha(&cycle(6));
        assert_eq!(iv.witness.as_set().unwrap().to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn alpha_on_dense_graphs() {
        let iv = alpha(&Graph::complete(7).unwrap());
        assert_eq!(iv.value, 1);
        assert_eq!(iv.witness.as_set().unwrap().to_vec(), vec![0]);
        let iv = alpha(&Graph::empty(9).unwrap());
        assert_eq!(iv.value, 9);
        let iv = alpha(&Graph::empty(0).unwrap());
        assert_eq!(iv.value, 0);
    }

    #[test]
    fn alpha_on_petersen() {
        let g = petersen();
        let iv = alpha(&g);
        assert_eq!(iv.value, 4);
        assert!(iv.verify(&g).unwrap());
    }

    #[test]
    fn alpha_k_small_cases() {
        let c5 = cycle(5);
        let iv = alpha_k(&c5, 1);
        assert_eq!(iv.value, 3);
        assert_eq!(iv.witness.as_set().unwrap().to_vec(), vec![0, 1, 3]);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(alpha_k(&k4, 1).value, 2);
        assert_eq!(alpha_k(&k4, 2).value, 3);
        assert_eq!(alpha_k(&k4, 3).value, 4);
        // With k at least the maximum degree, everything qualifies.
        assert_eq!(alpha_k(&c5, 2).value, 5);
    }

    #[test]
    fn alpha_zero_matches_alpha() {
        for g in [cycle(9), petersen(), Graph::complete(5).unwrap()] {
            let a = alpha(&g);
            let a0 = alpha_k(&g, 0);
            assert_eq!(a.value, a0.value);
            assert_eq!(a.witness.as_set(), a0.witness.as_set());
        }
    }
}
