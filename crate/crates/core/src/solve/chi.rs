//! Chromatic number χ.
//!
//! The value is found by testing k-colorability upward from a greedy
//! clique lower bound, using a saturation-guided (DSATUR-ordered)
//! decision search. The witness is then rebuilt independently as the
//! lexicographically least proper coloring in vertex order, where each
//! vertex takes the smallest color consistent with a completion and new
//! colors are introduced in increasing order.

use crate::bits::VertexSet;
use crate::graph::Graph;
use crate::solve::{InvariantKind, InvariantValue, Witness};
use std::cmp::Reverse;

/// Size of a greedily grown clique, maximized over all start vertices.
fn greedy_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    for v in g.vertices() {
        let mut size = 1;
        let mut cand = g.neighbors(v);
        while let Some(u) = cand
            .iter()
            .max_by_key(|&u| ((g.neighbors(u) & cand).len(), Reverse(u)))
        {
            size += 1;
            cand &= g.neighbors(u);
        }
        best = best.max(size);
    }
    best
}

/// Number of colors used by the ascending-order greedy coloring.
fn greedy_coloring_size(g: &Graph) -> usize {
    let mut colors: Vec<usize> = Vec::with_capacity(g.n());
    let mut used = 0;
    for v in g.vertices() {
        let forbidden: VertexSet = g
            .neighbors(v)
            .iter()
            .filter(|&u| u < v)
            .map(|u| colors[u])
            .collect();
        let c = (0..).find(|&c| !forbidden.contains(c)).unwrap();
        colors.push(c);
        used = used.max(c + 1);
    }
    used
}

struct KColor<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<Option<usize>>,
    colored: VertexSet,
}

impl<'g> KColor<'g> {
    fn neighbor_colors(&self, v: usize) -> VertexSet {
        (self.g.neighbors(v) & self.colored)
            .iter()
            .map(|u| self.colors[u].unwrap())
            .collect()
    }

    /// Next vertex: maximum saturation, then maximum degree, then least
    /// index.
    fn select(&self) -> Option<usize> {
        self.g
            .vertices()
            .filter(|&v| !self.colored.contains(v))
            .max_by_key(|&v| (self.neighbor_colors(v).len(), self.g.degree(v), Reverse(v)))
    }

    fn dfs(&mut self, used: usize) -> bool {
        let v = match self.select() {
            None => return true,
            Some(v) => v,
        };
        let forbidden = self.neighbor_colors(v);
        for c in 0..self.k.min(used + 1) {
            if forbidden.contains(c) {
                continue;
            }
            self.colors[v] = Some(c);
            self.colored.insert(v);
            if self.dfs(used.max(c + 1)) {
                return true;
            }
            self.colors[v] = None;
            self.colored.remove(v);
        }
        false
    }
}

/// Whether the graph has a proper coloring with at most `k` colors.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut search = KColor {
        g,
        k,
        colors: vec![None; g.n()],
        colored: VertexSet::EMPTY,
    };
    search.dfs(0)
}

/// Lexicographically least proper coloring with at most `k` colors, as a
/// color vector indexed by vertex; new colors appear in increasing
/// order, so color 0 goes to vertex 0.
fn lex_least_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn dfs(g: &Graph, k: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        let forbidden: VertexSet = g
            .neighbors(v)
            .iter()
            .filter(|&u| u < v)
            .map(|u| colors[u])
            .collect();
        for c in 0..k.min(used + 1) {
            if forbidden.contains(c) {
                continue;
            }
            colors.push(c);
            if dfs(g, k, colors, used.max(c + 1)) {
                return true;
            }
            colors.pop();
        }
        false
    }
    let mut colors = Vec::with_capacity(g.n());
    dfs(g, k, &mut colors, 0).then_some(colors)
}

/// Chromatic number, with the lexicographically least optimal proper
/// coloring as witness.
pub fn chi(g: &Graph) -> InvariantValue {
    if g.n() == 0 {
        return InvariantValue {
            kind: InvariantKind::Chi,
            value: 0,
            witness: Witness::Coloring(Vec::new()),
        };
    }
    let lb = greedy_clique_size(g).max(1);
    let ub = greedy_coloring_size(g);
    let mut value = lb;
    while value < ub && !is_k_colorable(g, value) {
        value += 1;
    }
    let colors = lex_least_coloring(g, value).expect("coloring exists at the chromatic number");
    InvariantValue {
        kind: InvariantKind::Chi,
        value,
        witness: Witness::Coloring(colors.into_iter().map(|c| c as u32).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn chi_on_basic_graphs() {
        assert_eq!(chi(&Graph::empty(0).unwrap()).value, 0);
        assert_eq!(chi(&Graph::empty(4).unwrap()).value, 1);
        for n in 1..=7 {
            let iv = chi(&Graph::complete(n).unwrap());
            assert_eq!(iv.value, n);
            let colors = iv.witness.as_coloring().unwrap();
            assert_eq!(colors, (0..n as u32).collect::<Vec<_>>());
        }
        assert_eq!(chi(&cycle(6)).value, 2);
        assert_eq!(chi(&cycle(7)).value, 3);
    }

    #[test]
    fn chi_witnesses_are_lex_least() {
        let iv = chi(&cycle(5));
        assert_eq!(iv.value, 3);
        assert_eq!(iv.witness.as_coloring().unwrap(), vec![0, 1, 0, 1, 2]);
        assert!(iv.verify(&cycle(5)).unwrap());
        let iv = chi(&cycle(6));
        assert_eq!(iv.witness.as_coloring().unwrap(), vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn chi_on_petersen_and_wheel() {
        let mut e: Vec<(usize, usize)> = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, 5 + i));
        }
        let petersen = Graph::from_edges(10, &e).unwrap();
        let iv = chi(&petersen);
        assert_eq!(iv.value, 3);
        assert!(iv.verify(&petersen).unwrap());

        // Odd wheel: 5-cycle joined to a hub.
        let wheel = cycle(5).join(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(chi(&wheel).value, 4);
    }

    #[test]
    fn colorability_decision() {
        assert!(!is_k_colorable(&cycle(5), 2));
        assert!(is_k_colorable(&cycle(5), 3));
        assert!(!is_k_colorable(&Graph::complete(4).unwrap(), 3));
        assert!(is_k_colorable(&Graph::complete(4).unwrap(), 4));
        assert!(is_k_colorable(&Graph::empty(0).unwrap(), 0));
        assert!(!is_k_colorable(&Graph::empty(3).unwrap(), 0));
    }
}
