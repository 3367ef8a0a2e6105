//! Immutable simple graphs on up to 512 vertices.
//!
//! Adjacency is stored as one [`VertexSet`] bit row per vertex. The row for
//! `v` holds the open neighborhood N(v); the diagonal is always zero and the
//! matrix is kept symmetric by construction, so every public constructor
//! yields a simple, loopless, undirected graph.
//!
//! Everything here is a pure function of the graph; once built, a [`Graph`]
//! is never mutated through its public API, and all queries are safe to call
//! concurrently.

use crate::bits::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An immutable simple graph: vertex count plus one adjacency bit row per
/// vertex, with an optional display label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    // ------------------------------------------------------------------
    // Construction
    // ------------------------------------------------------------------

    /// Edgeless graph on `n` vertices (`n ≤ 512`).
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::NOutOfRange { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            label: None,
        })
    }

    /// Graph on `n` vertices with the given edges. Rejects out-of-range
    /// endpoints and loops; duplicate edges collapse silently.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::singleton(v).complement_within(n);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge { v });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Internal unchecked edge insertion for generators that already validate
    /// their indices.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Attach a display label (used by family generators and reports).
    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    // ------------------------------------------------------------------
    // Basic accessors
    // ------------------------------------------------------------------

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Optional display label.
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Open neighborhood N(v) as a bit row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Adjacency test.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Iterator over `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].above(u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Maximum degree Δ(G); 0 for the empty-vertex graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Minimum degree δ(G); 0 for the empty-vertex graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    /// Common neighbors N(u) ∩ N(v).
    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        self.adj[u] & self.adj[v]
    }

    // ------------------------------------------------------------------
    // Derived graphs
    // ------------------------------------------------------------------

    /// Subgraph induced by `s`, with vertices renumbered in ascending order
    /// of their original index. Vertices of `s` outside `0..n` are ignored.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut g = Graph {
            n: keep.len(),
            adj: vec![VertexSet::EMPTY; keep.len()],
            label: None,
        };
        for (new_u, &old_u) in keep.iter().enumerate() {
            for old_v in self.adj[old_u].above(old_u) {
                if index[old_v] != usize::MAX {
                    g.add_edge(new_u, index[old_v]);
                }
            }
        }
        g
    }

    /// Complement graph: edge iff non-edge (and u ≠ v).
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: Vec::with_capacity(self.n),
            label: None,
        };
        for v in 0..self.n {
            g.adj.push(self.adj[v].with(v).complement_within(self.n));
        }
        g
    }

    /// Relabel vertices: vertex `v` of `self` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph {
            n: self.n,
            adj: vec![VertexSet::EMPTY; self.n],
            label: self.label.clone(),
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union: `self` keeps its indices, `other` is shifted by
    /// `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Join: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..g.n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Line graph: one vertex per edge of `self` (in the lexicographic
    /// edge order of [`Graph::edges`]), two vertices adjacent when the
    /// underlying edges share an endpoint. Errors if `self` has more
    /// edges than the vertex cap.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        let mut g = Graph::empty(edges.len())?;
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    // ------------------------------------------------------------------
    // Structural predicates
    // ------------------------------------------------------------------

    /// Connectivity via bitset BFS. The empty-vertex graph and K_1 count as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = VertexSet::singleton(0);
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next -= seen;
            seen |= next;
            frontier = next;
        }
        seen.len() == self.n
    }

    /// `Some(d)` when every vertex has degree exactly `d`; `None` for
    /// irregular graphs and for the vertexless graph.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    /// 3-regular?
    pub fn is_cubic(&self) -> bool {
        self.regularity() == Some(3)
    }

    /// Complete graph test (used by check hypotheses like "G ≠ K_n").
    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Two-colorability via BFS; vertexless and edgeless graphs qualify.
    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// One side of a proper 2-coloring, when one exists.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut color = vec![u8::MAX; self.n];
        let mut side = VertexSet::EMPTY;
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            side.insert(start);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in self.adj[v] {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        if color[u] == 0 {
                            side.insert(u);
                        }
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// True when no vertex has `r` pairwise-nonadjacent neighbors, i.e. the
    /// graph has no induced star K_{1,r}. `r = 3` is the claw-free test.
    pub fn is_k1r_free(&self, r: usize) -> bool {
        self.find_induced_star(r).is_none()
    }

    /// Smallest-center induced K_{1,r} witness: `(center, leaves)` where
    /// `leaves` is the lexicographically least independent `r`-subset of the
    /// center's neighborhood, or `None` when the graph is K_{1,r}-free.
    ///
    /// Decided per vertex by testing whether the neighborhood contains an
    /// independent set of size `r`.
    pub fn find_induced_star(&self, r: usize) -> Option<(usize, VertexSet)> {
        assert!(r >= 2, "induced-star test requires r >= 2");
        for v in 0..self.n {
            if self.degree(v) < r {
                continue;
            }
            if let Some(leaves) =
                self.independent_subset(self.adj[v], r, VertexSet::EMPTY)
            {
                return Some((v, leaves));
            }
        }
        None
    }

    /// Lexicographically least independent set of size exactly `size` inside
    /// `within`, if one exists, found by ascending-inclusion backtracking.
    fn independent_subset(
        &self,
        within: VertexSet,
        size: usize,
        chosen: VertexSet,
    ) -> Option<VertexSet> {
        if size == 0 {
            return Some(chosen);
        }
        if within.len() < size {
            return None;
        }
        let mut cand = within;
        while let Some(v) = cand.pop_min() {
            if cand.len() + 1 < size {
                return None;
            }
            if let Some(found) =
                self.independent_subset(cand - self.adj[v], size - 1, chosen.with(v))
            {
                return Some(found);
            }
        }
        None
    }

    /// Lexicographically least clique of size exactly `size` inside `within`,
    /// if one exists.
    pub(crate) fn clique_subset(
        &self,
        within: VertexSet,
        size: usize,
    ) -> Option<VertexSet> {
        self.clique_subset_rec(within, size, VertexSet::EMPTY)
    }

    fn clique_subset_rec(
        &self,
        within: VertexSet,
        size: usize,
        chosen: VertexSet,
    ) -> Option<VertexSet> {
        if size == 0 {
            return Some(chosen);
        }
        if within.len() < size {
            return None;
        }
        let mut cand = within;
        while let Some(v) = cand.pop_min() {
            if cand.len() + 1 < size {
                return None;
            }
            if let Some(found) =
                self.clique_subset_rec(cand & self.adj[v], size - 1, chosen.with(v))
            {
                return Some(found);
            }
        }
        None
    }

    /// Does the graph contain K_q as a subgraph? (`q ≥ 1`; K_1 is a vertex,
    /// K_0 is vacuously present.)
    pub fn contains_clique(&self, q: usize) -> bool {
        if q == 0 {
            return true;
        }
        self.find_clique(q).is_some()
    }

    /// Lexicographically least clique on `q` vertices, if any.
    pub fn find_clique(&self, q: usize) -> Option<VertexSet> {
        self.clique_subset(VertexSet::full(self.n), q)
    }

    /// True when the graph has no induced diamond (K_4 minus an edge).
    /// Note K_4 itself is diamond-free: the diamond must be induced.
    pub fn is_diamond_free(&self) -> bool {
        self.find_induced_diamond().is_none()
    }

    /// First induced diamond `{u, v, x, y}` in edge order, where `uv` is the
    /// shared edge (degree-3 pair) and `x, y` are the nonadjacent tips.
    pub fn find_induced_diamond(&self) -> Option<[usize; 4]> {
        // An induced diamond is an edge uv plus two common neighbors x, y
        // that are themselves nonadjacent.
        for u in 0..self.n {
            for v in self.adj[u].above(u) {
                let common = self.common_neighbors(u, v);
                let mut xs = common;
                while let Some(x) = xs.pop_min() {
                    let nonadj = xs - self.adj[x];
                    if let Some(y) = nonadj.min() {
                        return Some([u, v, x, y]);
                    }
                }
            }
        }
        None
    }

    /// True when every vertex lies in at least one triangle (a hypothesis of
    /// one of the domination bounds).
    pub fn every_vertex_in_triangle(&self) -> bool {
        (0..self.n).all(|v| {
            self.adj[v]
                .iter()
                .any(|u| !(self.adj[v] & self.adj[u]).is_empty())
        })
    }

    /// True when the graph has no K_3.
    pub fn is_triangle_free(&self) -> bool {
        !self.contains_clique(3)
    }

    /// Number of triangles containing vertex `v`.
    pub fn triangles_at(&self, v: usize) -> usize {
        let mut count = 0;
        let mut nbrs = self.adj[v];
        while let Some(u) = nbrs.pop_min() {
            count += (self.adj[u] & nbrs).len();
        }
        count
    }
}

/// Structural equality: same order and same adjacency rows (labels ignored).
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.m())?;
        if let Some(l) = &self.label {
            write!(f, ", label={l:?}")?;
        }
        write!(f, ", edges={:?})", self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(Graph::empty(513).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2); // duplicate collapsed
    }

    #[test]
    fn line_graph_shapes() {
        // L(K_4) is the octahedron: 6 vertices, 4-regular, claw-free,
        // and its complement is a perfect matching.
        let lg = Graph::complete(4).unwrap().line_graph().unwrap();
        assert_eq!(lg.n(), 6);
        assert_eq!(lg.regularity(), Some(4));
        assert!(lg.is_k1r_free(3));
        assert_eq!(lg.complement().regularity(), Some(1));

        // L(P_4) = P_3; L(C_5) = C_5.
        let lp = path(4).line_graph().unwrap();
        assert_eq!((lp.n(), lp.m()), (3, 2));
        let lc = cycle(5).line_graph().unwrap();
        assert_eq!(lc.regularity(), Some(2));
        assert!(lc.is_connected());
    }

    #[test]
    fn degrees_and_edges() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(g.m(), 10);
        assert_eq!(g.regularity(), Some(4));
        assert!(g.is_complete());
        assert_eq!(g.edges().len(), 10);
        let p = path(4);
        assert_eq!(p.regularity(), None);
        assert_eq!((p.min_degree(), p.max_degree()), (1, 2));
    }

    #[test]
    fn induced_of_complete_is_complete() {
        let g = Graph::complete(5).unwrap();
        let s: VertexSet = [0, 2, 4].into_iter().collect();
        let h = g.induced(&s);
        assert_eq!(h, Graph::complete(3).unwrap());
    }

    #[test]
    fn induced_alternate_cycle_vertices_is_empty() {
        let g = cycle(6);
        let s: VertexSet = [0, 2, 4].into_iter().collect();
        assert_eq!(g.induced(&s), Graph::empty(3).unwrap());
    }

    #[test]
    fn induced_of_full_set_is_identity() {
        let g = cycle(7);
        assert_eq!(g.induced(&VertexSet::full(7)), g);
    }

    #[test]
    fn complement_involution_and_complete() {
        let g = cycle(6);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(
            Graph::complete(4).unwrap().complement(),
            Graph::empty(4).unwrap()
        );
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).is_connected());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn bipartite_tests() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(Graph::empty(3).unwrap().is_bipartite());
        let side = cycle(6).bipartition().unwrap();
        assert_eq!(side.len(), 3);
    }

    #[test]
    fn claw_detection() {
        // K_{1,3}: center 0.
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!claw.is_k1r_free(3));
        let (center, leaves) = claw.find_induced_star(3).unwrap();
        assert_eq!(center, 0);
        assert_eq!(leaves.to_vec(), vec![1, 2, 3]);
        // But it is K_{1,4}-free.
        assert!(claw.is_k1r_free(4));
        // Cliques have no induced stars at all.
        assert!(Graph::complete(6).unwrap().is_k1r_free(2));
        // C_5 is claw-free.
        assert!(cycle(5).is_k1r_free(3));
        // A path of length 2 is an induced K_{1,2}.
        assert!(!path(3).is_k1r_free(2));
    }

    #[test]
    fn clique_detection() {
        assert!(Graph::complete(4).unwrap().contains_clique(3));
        assert!(!cycle(5).contains_clique(3));
        assert_eq!(
            Graph::complete(4).unwrap().find_clique(3).unwrap().to_vec(),
            vec![0, 1, 2]
        );
        assert!(cycle(5).contains_clique(1));
        assert!(Graph::empty(0).unwrap().contains_clique(0));
        assert!(!Graph::empty(0).unwrap().contains_clique(1));
    }

    #[test]
    fn diamond_detection() {
        // K_4 minus an edge is itself a diamond.
        let d = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!d.is_diamond_free());
        // K_4 has no induced diamond.
        assert!(Graph::complete(4).unwrap().is_diamond_free());
        assert!(cycle(6).is_diamond_free());
    }

    #[test]
    fn triangle_coverage() {
        assert!(Graph::complete(3).unwrap().every_vertex_in_triangle());
        assert!(!path(3).every_vertex_in_triangle());
        assert_eq!(Graph::complete(4).unwrap().triangles_at(0), 3);
        assert!(cycle(5).is_triangle_free());
    }

    #[test]
    fn permuted_preserves_structure() {
        let g = path(4);
        let h = g.permuted(&[3, 2, 1, 0]);
        assert_eq!(h.degree(3), 1);
        assert_eq!(h.degree(2), 2);
        assert!(h.has_edge(3, 2));
    }

    #[test]
    fn union_and_join() {
        let u = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!((u.n(), u.m()), (4, 2));
        let j = Graph::empty(2).unwrap().join(&Graph::empty(1).unwrap()).unwrap();
        // K_{1,2}: the single right-hand vertex joined to both left vertices.
        assert_eq!((j.n(), j.m()), (3, 2));
        assert_eq!(j.degree(2), 2);
    }
}
