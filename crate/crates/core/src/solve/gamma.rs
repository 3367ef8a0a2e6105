//! Domination number γ and its multiple-domination generalization γ_k.
//!
//! Both solvers find the value by iterative deepening on the set size,
//! then rebuild the lexicographically least optimal witness with a
//! sequence of prefix-constrained decision searches: for each candidate
//! next element, ask whether an optimal set exists that extends the
//! current prefix using only higher-numbered vertices.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{InvariantKind, InvariantValue};
use std::cmp::Reverse;

/// Rebuilds the lexicographically least optimal set, given one optimal
/// witness and a decision procedure `exists(prefix, allowed_above)` that
/// returns an optimal set containing `prefix` whose remaining members
/// all exceed `allowed_above`, if any exists.
///
/// Invariant: `w` is optimal, contains `s`, and its other members all
/// exceed `max(s)`. The smallest feasible next element is found by
/// probing every index below `min(w - s)`; if all fail, `min(w - s)`
/// itself is accepted for free.
pub(crate) fn reconstruct_min(
    size: usize,
    first_witness: VertexSet,
    mut exists: impl FnMut(VertexSet, usize) -> Option<VertexSet>,
) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    let mut w = first_witness;
    debug_assert_eq!(w.len(), size);
    while s.len() < size {
        let start = s.max().map_or(0, |m| m + 1);
        let m = (w - s).min().expect("witness extends prefix");
        let mut accepted = m;
        for cand in start..m {
            if let Some(w2) = exists(s.with(cand), cand) {
                w = w2;
                accepted = cand;
                break;
            }
        }
        s.insert(accepted);
    }
    s
}

/// Greedy dominating set: repeatedly take the vertex covering the most
/// still-undominated vertices (ties to the least index).
fn greedy_dominating(g: &Graph) -> VertexSet {
    let mut d = VertexSet::EMPTY;
    let mut undom = VertexSet::full(g.n());
    while !undom.is_empty() {
        let v = g
            .vertices()
            .max_by_key(|&v| ((g.closed_neighbors(v) & undom).len(), Reverse(v)))
            .unwrap();
        d.insert(v);
        undom -= g.closed_neighbors(v);
    }
    d
}

/// Greedy packing of pairwise disjoint closed neighborhoods. Any
/// dominating set must hit each ball, so the count is a lower bound.
fn packing_lower_bound(g: &Graph) -> usize {
    let mut used = VertexSet::EMPTY;
    let mut count = 0;
    for v in g.vertices() {
        if g.closed_neighbors(v).is_disjoint(&used) {
            count += 1;
            used |= g.closed_neighbors(v);
        }
    }
    count
}

/// Decision search for ordinary domination: branch on the closed
/// neighborhood of the least undominated vertex.
struct DomSearch<'g> {
    g: &'g Graph,
    /// Members beyond the initial prefix must exceed this index, or be
    /// unrestricted when `None`.
    allowed: Option<VertexSet>,
    /// Coverage cap per added vertex (max degree + 1), for pruning.
    cap: usize,
    found: Option<VertexSet>,
}

impl<'g> DomSearch<'g> {
    fn dfs(&mut self, chosen: VertexSet, undom: VertexSet, banned: VertexSet, budget: usize) -> bool {
        if undom.is_empty() {
            debug_assert_eq!(budget, 0, "optimal targets leave no slack");
            self.found = Some(chosen);
            return true;
        }
        if budget == 0 || undom.len() > budget * self.cap {
            return false;
        }
        let u = undom.min().unwrap();
        let mut cands = self.g.closed_neighbors(u) - banned;
        if let Some(a) = self.allowed {
            cands &= a;
        }
        let mut banned = banned;
        for c in cands {
            if self.dfs(
                chosen.with(c),
                undom - self.g.closed_neighbors(c),
                banned,
                budget - 1,
            ) {
                return true;
            }
            banned.insert(c);
        }
        false
    }
}

fn exists_dominating(g: &Graph, prefix: VertexSet, allowed_above: Option<usize>, size: usize) -> Option<VertexSet> {
    debug_assert!(prefix.len() <= size);
    let mut covered = VertexSet::EMPTY;
    for v in prefix {
        covered |= g.closed_neighbors(v);
    }
    let mut search = DomSearch {
        g,
        allowed: allowed_above.map(|a| VertexSet::full(g.n()).above(a)),
        cap: g.max_degree() + 1,
        found: None,
    };
    search.dfs(
        prefix,
        VertexSet::full(g.n()) - covered,
        VertexSet::EMPTY,
        size - prefix.len(),
    );
    search.found
}

/// Domination number: the smallest set whose closed neighborhoods cover
/// every vertex, with the lexicographically least minimum dominating set
/// as witness.
pub fn gamma(g: &Graph) -> InvariantValue {
    if g.n() == 0 {
        return InvariantValue::of_set(InvariantKind::Gamma, 0, VertexSet::EMPTY);
    }
    let ub_set = greedy_dominating(g);
    let lb = packing_lower_bound(g);
    let (value, witness) = if ub_set.len() == lb {
        (lb, ub_set)
    } else {
        let mut found = None;
        for target in lb..ub_set.len() {
            if let Some(w) = exists_dominating(g, VertexSet::EMPTY, None, target) {
                found = Some((target, w));
                break;
            }
        }
        found.unwrap_or((ub_set.len(), ub_set))
    };
    let set = reconstruct_min(value, witness, |prefix, above| {
        exists_dominating(g, prefix, Some(above), value)
    });
    InvariantValue::of_set(InvariantKind::Gamma, value, set)
}

/// Decision search for k-fold domination: branch on the least deficient
/// vertex `u` (outside the set with fewer than `k` chosen neighbors),
/// whose deficiency only `u` itself or a non-chosen neighbor can mend.
struct DomKSearch<'g> {
    g: &'g Graph,
    k: usize,
    allowed: Option<VertexSet>,
    /// Max total deficiency one added vertex can remove (k + max degree).
    cap: usize,
    found: Option<VertexSet>,
}

impl<'g> DomKSearch<'g> {
    fn deficiency(&self, chosen: &VertexSet) -> usize {
        self.g
            .vertices()
            .filter(|v| !chosen.contains(*v))
            .map(|v| self.k.saturating_sub((self.g.neighbors(v) & *chosen).len()))
            .sum()
    }

    fn least_deficient(&self, chosen: &VertexSet) -> Option<usize> {
        self.g
            .vertices()
            .find(|&v| !chosen.contains(v) && (self.g.neighbors(v) & *chosen).len() < self.k)
    }

    fn dfs(&mut self, chosen: VertexSet, banned: VertexSet, budget: usize) -> bool {
        let u = match self.least_deficient(&chosen) {
            None => {
                debug_assert_eq!(budget, 0, "optimal targets leave no slack");
                self.found = Some(chosen);
                return true;
            }
            Some(u) => u,
        };
        if budget == 0 || self.deficiency(&chosen).div_ceil(self.cap) > budget {
            return false;
        }
        let mut cands = (self.g.neighbors(u) - chosen).with(u) - banned;
        if let Some(a) = self.allowed {
            cands &= a;
        }
        let mut banned = banned;
        for c in cands {
            if self.dfs(chosen.with(c), banned, budget - 1) {
                return true;
            }
            banned.insert(c);
        }
        false
    }
}

fn exists_dominating_k(
    g: &Graph,
    k: usize,
    forced: &VertexSet,
    prefix: VertexSet,
    allowed_above: Option<usize>,
    size: usize,
) -> Option<VertexSet> {
    debug_assert!(prefix.len() <= size);
    // Every low-degree vertex is forced into the set; if one is already
    // below the floor for new members, no extension can succeed.
    if let Some(a) = allowed_above {
        if !(*forced - prefix - VertexSet::full(g.n()).above(a)).is_empty() {
            return None;
        }
    }
    let mut search = DomKSearch {
        g,
        k,
        allowed: allowed_above.map(|a| VertexSet::full(g.n()).above(a)),
        cap: k + g.max_degree(),
        found: None,
    };
    search.dfs(prefix, VertexSet::EMPTY, size - prefix.len());
    search.found
}

/// Greedy upper bound for γ_k: starting from the forced members, add the
/// vertex that removes the most total deficiency until none remains.
fn greedy_dominating_k(g: &Graph, k: usize, forced: &VertexSet) -> VertexSet {
    let mut d = *forced;
    loop {
        let deficient: Vec<usize> = g
            .vertices()
            .filter(|&v| !d.contains(v) && (g.neighbors(v) & d).len() < k)
            .collect();
        if deficient.is_empty() {
            return d;
        }
        let gain = |c: usize| -> usize {
            deficient
                .iter()
                .map(|&v| {
                    if v == c {
                        k - (g.neighbors(v) & d).len()
                    } else if g.has_edge(v, c) {
                        1
                    } else {
                        0
                    }
                })
                .sum()
        };
        let c = g
            .vertices()
            .filter(|&c| !d.contains(c))
            .max_by_key(|&c| (gain(c), Reverse(c)))
            .unwrap();
        d.insert(c);
    }
}

/// k-domination number: the smallest set such that every vertex outside
/// it has at least `k` neighbors inside, with the lexicographically
/// least minimum witness. Vertices of degree below `k` are forced
/// members. Requires `k >= 1`; `gamma_k(g, 1)` equals `gamma(g)`.
pub fn gamma_k(g: &Graph, k: usize) -> Result<InvariantValue> {
    if k < 1 {
        return Err(Error::ParamOutOfRange {
            op: "gamma_k",
            param: "k",
            value: k as i64,
            requirement: "k >= 1",
        });
    }
    let kind = InvariantKind::GammaK(k);
    if g.n() == 0 {
        return Ok(InvariantValue::of_set(kind, 0, VertexSet::EMPTY));
    }
    let forced: VertexSet = g.vertices().filter(|&v| g.degree(v) < k).collect();
    let ub_set = greedy_dominating_k(g, k, &forced);
    let lb = {
        let probe = DomKSearch {
            g,
            k,
            allowed: None,
            cap: k + g.max_degree(),
            found: None,
        };
        forced.len() + probe.deficiency(&forced).div_ceil(probe.cap)
    };
    let (value, witness) = {
        let mut found = None;
        for target in lb..ub_set.len() {
            if let Some(w) = exists_dominating_k(g, k, &forced, forced, None, target) {
                found = Some((target, w));
                break;
            }
        }
        found.unwrap_or((ub_set.len(), ub_set))
    };
    let set = reconstruct_min(value, witness, |prefix, above| {
        exists_dominating_k(g, k, &forced, prefix, Some(above), value)
    });
    Ok(InvariantValue::of_set(kind, value, set))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn gamma_on_cycles_and_paths() {
        for n in 3..=12 {
            let iv = gamma(&cycle(n));
            assert_eq!(iv.value, n.div_ceil(3), "C_{n}");
            assert!(iv.verify(&cycle(n)).unwrap());
        }
        assert_eq!(gamma(&cycle(5)).witness.as_set().unwrap().to_vec(), vec![0, 2]);
        assert_eq!(gamma(&cycle(6)).witness.as_set().unwrap().to_vec(), vec![0, 3]);
        assert_eq!(gamma(&path(4)).witness.as_set().unwrap().to_vec(), vec![0, 2]);
    }

    #[test]
    fn gamma_small_cases() {
        assert_eq!(gamma(&Graph::complete(6).unwrap()).witness.as_set().unwrap().to_vec(), vec![0]);
        assert_eq!(gamma(&Graph::empty(0).unwrap()).value, 0);
        // Isolated vertices are all mandatory.
        assert_eq!(gamma(&Graph::empty(5).unwrap()).value, 5);
        // Star with its center labeled last.
        let star = Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(gamma(&star).witness.as_set().unwrap().to_vec(), vec![4]);
        // Two disjoint triangles.
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(gamma(&two).witness.as_set().unwrap().to_vec(), vec![0, 3]);
    }

    #[test]
    fn gamma_k_rejects_zero() {
        let g = cycle(4);
        assert!(matches!(
            gamma_k(&g, 0),
            Err(Error::ParamOutOfRange { op: "gamma_k", .. })
        ));
    }

    #[test]
    fn gamma_1_matches_gamma() {
        for g in [cycle(7), cycle(9), path(6), Graph::complete(5).unwrap()] {
            let a = gamma(&g);
            let b = gamma_k(&g, 1).unwrap();
            assert_eq!(a.value, b.value);
            assert_eq!(a.witness.as_set(), b.witness.as_set());
        }
    }

    #[test]
    fn gamma_k_small_cases() {
        assert_eq!(gamma_k(&cycle(4), 2).unwrap().witness.as_set().unwrap().to_vec(), vec![0, 2]);
        assert_eq!(gamma_k(&cycle(5), 2).unwrap().witness.as_set().unwrap().to_vec(), vec![0, 1, 3]);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(gamma_k(&k4, 2).unwrap().value, 2);
        assert_eq!(gamma_k(&k4, 3).unwrap().value, 3);
        // Leaves have degree 1 < 2, so they are forced.
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(gamma_k(&star, 2).unwrap().witness.as_set().unwrap().to_vec(), vec![1, 2, 3, 4]);
        // Degree 2 < 3 everywhere: the whole vertex set is forced.
        assert_eq!(gamma_k(&cycle(5), 3).unwrap().value, 5);
        assert_eq!(gamma_k(&path(3), 2).unwrap().witness.as_set().unwrap().to_vec(), vec![0, 2]);
    }
}
