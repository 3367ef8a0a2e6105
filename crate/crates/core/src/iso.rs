//! Graph isomorphism: invariant signatures, exact isomorphism testing,
//! and a canonical form for deduplication.
//!
//! [`signature`] is a cheap isomorphism invariant (order, size, and the
//! sorted multiset of per-vertex profiles). Equal signatures do not imply
//! isomorphism — strongly regular pairs defeat any such invariant — so
//! [`are_isomorphic`] backtracks over profile-compatible assignments, and
//! [`canonical_form`] produces a true canonical key: two graphs are
//! isomorphic exactly when their canonical forms are equal.
//!
//! The canonical form is the lexicographically largest upper-triangle
//! adjacency bitstring over all relabelings, read column by column. It is
//! found by branch and bound: placements that fall below the best known
//! bitstring are pruned, and a greedy completion reseeds the incumbent
//! whenever a placement strictly beats it, so the search frontier always
//! matches the incumbent prefix exactly.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX: usize = 64;

// ----------------------------------------------------------------------
// Invariant signature
// ----------------------------------------------------------------------

/// Per-vertex profile: degree, number of triangles through the vertex,
/// and the breadth-first distance histogram (entry `d` counts vertices at
/// distance `d`; unreachable vertices are the shortfall from `n`).
type Profile = (usize, usize, Vec<u16>);

/// A cheap isomorphism invariant. Isomorphic graphs always compare equal;
/// the converse fails in general.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    n: usize,
    m: usize,
    profile: Vec<Profile>,
}

fn distance_histogram(g: &Graph, v: usize) -> Vec<u16> {
    let mut hist = Vec::new();
    let mut seen = VertexSet::singleton(v);
    let mut frontier = seen;
    while !frontier.is_empty() {
        hist.push(frontier.len() as u16);
        let mut next = VertexSet::EMPTY;
        for u in frontier {
            next |= g.neighbors(u);
        }
        next -= seen;
        seen |= next;
        frontier = next;
    }
    hist
}

fn vertex_profiles(g: &Graph) -> Vec<Profile> {
    (0..g.n())
        .map(|v| (g.degree(v), g.triangles_at(v), distance_histogram(g, v)))
        .collect()
}

/// Compute the invariant signature of `g`.
pub fn signature(g: &Graph) -> Signature {
    let mut profile = vertex_profiles(g);
    profile.sort_unstable();
    Signature {
        n: g.n(),
        m: g.m(),
        profile,
    }
}

// ----------------------------------------------------------------------
// Isomorphism test
// ----------------------------------------------------------------------

/// Exact isomorphism test by backtracking over profile-compatible vertex
/// assignments.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    let pa = vertex_profiles(a);
    let pb = vertex_profiles(b);
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    // Class ids shared between the two graphs.
    let mut class_ids: std::collections::HashMap<Profile, usize> = Default::default();
    let mut intern = |p: &Profile| -> usize {
        let next = class_ids.len();
        *class_ids.entry(p.clone()).or_insert(next)
    };
    let ca: Vec<usize> = pa.iter().map(&mut intern).collect();
    let cb: Vec<usize> = pb.iter().map(&mut intern).collect();
    let mut class_size = vec![0usize; ca.len() + cb.len()];
    for &c in &ca {
        class_size[c] += 1;
    }
    // Static matching order over a's vertices: most constrained first —
    // prefer vertices with many already-ordered neighbors, then rare
    // classes, then high degree.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    (a.neighbors(v) & placed).len(),
                    std::cmp::Reverse(class_size[ca[v]]),
                    a.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(v);
        placed.insert(v);
    }

    struct Search<'s> {
        a: &'s Graph,
        b: &'s Graph,
        ca: &'s [usize],
        cb: &'s [usize],
        order: &'s [usize],
        image: Vec<usize>,
        used_b: VertexSet,
        mapped_a: VertexSet,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            // The images of v's already-mapped neighbors, which must be
            // exactly w's neighbors among used images.
            let mut required = VertexSet::EMPTY;
            for u in self.a.neighbors(v) & self.mapped_a {
                required.insert(self.image[u]);
            }
            for w in 0..self.b.n() {
                if self.used_b.contains(w)
                    || self.cb[w] != self.ca[v]
                    || self.b.neighbors(w) & self.used_b != required
                {
                    continue;
                }
                self.image[v] = w;
                self.used_b.insert(w);
                self.mapped_a.insert(v);
                if self.go(depth + 1) {
                    return true;
                }
                self.used_b.remove(w);
                self.mapped_a.remove(v);
            }
            false
        }
    }

    Search {
        a,
        b,
        ca: &ca,
        cb: &cb,
        order: &order,
        image: vec![usize::MAX; n],
        used_b: VertexSet::EMPTY,
        mapped_a: VertexSet::EMPTY,
    }
    .go(0)
}

// ----------------------------------------------------------------------
// Canonical form
// ----------------------------------------------------------------------

/// A canonical key: equal keys exactly characterize isomorphic graphs
/// (of order at most [`CANONICAL_MAX`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    /// Column `j` of the canonical adjacency matrix (`j = 1..n`), packed
    /// with the bit for row `i` at position `j-1-i`, so comparing the
    /// vector lexicographically compares bitstrings.
    cols: Vec<u64>,
}

impl CanonicalForm {
    /// Rebuild the canonically labeled graph from the key.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("canonical order is within range");
        for (jm1, &col) in self.cols.iter().enumerate() {
            let j = jm1 + 1;
            for i in 0..j {
                if col >> (j - 1 - i) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

struct Canon<'g> {
    g: &'g Graph,
    n: usize,
    perm: Vec<usize>,
    placed: VertexSet,
    best: Vec<u64>,
    best_perm: Vec<usize>,
    /// `twins[u]` holds the vertices `v` with the same adjacency as `u`
    /// outside the pair (`N(u) \ {v} == N(v) \ {u}`); swapping such a
    /// pair is an automorphism. Used to branch on only one member per
    /// interchangeable sibling group — without it, graphs with large
    /// twin classes (cliques, near-cliques, empty graphs) degenerate to
    /// factorial search.
    twins: Vec<VertexSet>,
}

fn twin_classes(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut twins = vec![VertexSet::EMPTY; n];
    for u in 0..n {
        for v in (u + 1)..n {
            if g.neighbors(u).without(v) == g.neighbors(v).without(u) {
                twins[u].insert(v);
                twins[v].insert(u);
            }
        }
    }
    twins
}

impl Canon<'_> {
    /// Bits of the column added when `v` is placed after `prefix`.
    fn column_of(&self, v: usize, prefix: &[usize]) -> u64 {
        let d = prefix.len();
        let mut col = 0u64;
        for (i, &p) in prefix.iter().enumerate() {
            col |= (self.g.has_edge(v, p) as u64) << (d - 1 - i);
        }
        col
    }

    /// Extend the first `depth` entries of the current permutation
    /// greedily (always the largest next column) and install the result
    /// as the incumbent. The incumbent then agrees with the current
    /// prefix on all decided columns.
    fn reseed(&mut self, depth: usize) {
        let mut perm = self.perm[..depth].to_vec();
        let mut placed = self.placed;
        for _ in depth..self.n {
            let v = (0..self.n)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| self.column_of(v, &perm))
                .unwrap();
            perm.push(v);
            placed.insert(v);
        }
        self.best = (1..self.n)
            .map(|j| self.column_of(perm[j], &perm[..j]))
            .collect();
        self.best_perm = perm;
    }

    fn dfs(&mut self, depth: usize) {
        if depth == self.n {
            return;
        }
        let mut tried = VertexSet::EMPTY;
        for v in 0..self.n {
            if self.placed.contains(v) {
                continue;
            }
            // The first placement contributes no column; all later ones
            // are compared against the incumbent column.
            let reseed_here = if depth > 0 {
                let col = self.column_of(v, &self.perm[..depth]);
                match col.cmp(&self.best[depth - 1]) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Equal => false,
                }
            } else {
                false
            };
            // A twin of an already-branched sibling spans an isomorphic
            // subtree (both lie outside the prefix, so the swap fixes
            // it); the incumbent already accounts for that subtree.
            if !self.twins[v].is_disjoint(&tried) {
                continue;
            }
            self.perm[depth] = v;
            self.placed.insert(v);
            if reseed_here {
                self.reseed(depth + 1);
            }
            self.dfs(depth + 1);
            self.placed.remove(v);
            tried.insert(v);
        }
    }
}

/// Compute the canonical form of `g` (order at most [`CANONICAL_MAX`]).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_MAX {
        return Err(Error::SizeLimit {
            op: "canonical form",
            n,
            max: CANONICAL_MAX,
        });
    }
    if n <= 1 {
        return Ok(CanonicalForm { n, cols: Vec::new() });
    }
    let mut c = Canon {
        g,
        n,
        perm: vec![usize::MAX; n],
        placed: VertexSet::EMPTY,
        best: Vec::new(),
        best_perm: Vec::new(),
        twins: twin_classes(g),
    };
    // Initial incumbent from the all-greedy completion.
    c.reseed(0);
    c.dfs(0);
    Ok(CanonicalForm {
        n,
        cols: c.best.clone(),
    })
}

/// The canonically labeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Deterministic permutations without an RNG dependency.
    fn scramble(n: usize, salt: u64) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = salt.wrapping_mul(0x9e3779b97f4a7c15).max(1);
        for i in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        perm
    }

    #[test]
    fn degree_sequence_alone_is_not_enough() {
        // Same degree sequence, different graphs.
        let c6 = cycle(6);
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        assert_ne!(signature(&c6), signature(&two_triangles));
        assert!(!are_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn permuted_copies_are_isomorphic() {
        for (i, g) in [cycle(7), Graph::complete(5).unwrap(), petersen()]
            .iter()
            .enumerate()
        {
            for salt in 0..5u64 {
                let h = g.permuted(&scramble(g.n(), salt + 10 * i as u64 + 1));
                assert_eq!(signature(g), signature(&h));
                assert!(are_isomorphic(g, &h));
                assert_eq!(
                    canonical_form(g).unwrap(),
                    canonical_form(&h).unwrap()
                );
            }
        }
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

    fn rook_4x4() -> Graph {
        let idx = |r: usize, c: usize| 4 * r + c;
        let mut edges = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                for c2 in (c + 1)..4 {
                    edges.push((idx(r, c), idx(r, c2)));
                }
                for r2 in (r + 1)..4 {
                    edges.push((idx(r, c), idx(r2, c)));
                }
            }
        }
        Graph::from_edges(16, &edges).unwrap()
    }

    fn shrikhande() -> Graph {
        // Cayley graph on Z_4 x Z_4 with connection set ±{(1,0),(0,1),(1,1)}.
        let idx = |x: usize, y: usize| 4 * x + y;
        let mut edges = Vec::new();
        for x in 0..4usize {
            for y in 0..4usize {
                for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
                    edges.push((idx(x, y), idx((x + dx) % 4, (y + dy) % 4)));
                }
            }
        }
        Graph::from_edges(16, &edges).unwrap()
    }

    #[test]
    fn strongly_regular_pair_distinguished() {
        // Both are strongly regular with identical parameters, so every
        // profile-based invariant agrees; only real search can tell them
        // apart.
        let a = rook_4x4();
        let b = shrikhande();
        assert_eq!(signature(&a).profile, signature(&b).profile);
        assert!(!are_isomorphic(&a, &b));
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        // Sanity: each is isomorphic to a scrambled self.
        assert!(are_isomorphic(&a, &a.permuted(&scramble(16, 3))));
        assert!(are_isomorphic(&b, &b.permuted(&scramble(16, 4))));
    }

    #[test]
    fn canonical_graph_is_isomorphic_to_input() {
        for g in [cycle(9), petersen(), Graph::complete(6).unwrap()] {
            let cg = canonical_graph(&g).unwrap();
            assert!(are_isomorphic(&g, &cg));
            // Idempotent: canonicalizing the canonical graph is stable.
            assert_eq!(
                canonical_form(&cg).unwrap(),
                canonical_form(&g).unwrap()
            );
        }
    }

    #[test]
    fn canonical_form_small_graphs() {
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).unwrap().n, 0);
        assert_eq!(canonical_form(&Graph::empty(1).unwrap()).unwrap().n, 1);
        // K_2: single column, single bit set.
        let k2 = canonical_form(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.cols, vec![1]);
        // Edge against non-edge.
        assert_ne!(
            canonical_form(&Graph::empty(2).unwrap()).unwrap(),
            canonical_form(&Graph::complete(2).unwrap()).unwrap()
        );
        let over = Graph::empty(65).unwrap();
        assert!(canonical_form(&over).is_err());
    }

    #[test]
    fn canonical_form_is_fast_on_highly_symmetric_graphs() {
        // Graphs with large interchangeable-vertex classes (cliques,
        // empty graphs, complete bipartite, clique minus a perfect
        // matching) rely on twin pruning; without it these searches are
        // factorial. Each must finish instantly and agree across
        // relabelings.
        let k16 = Graph::complete(16).unwrap();
        let e16 = Graph::empty(16).unwrap();
        assert_ne!(
            canonical_form(&k16).unwrap(),
            canonical_form(&e16).unwrap()
        );
        let mut k88 = Graph::empty(16).unwrap();
        for u in 0..8 {
            for v in 8..16 {
                k88.add_edge(u, v);
            }
        }
        let minus_matching: Vec<(usize, usize)> = (0..16)
            .flat_map(|u| ((u + 1)..16).map(move |v| (u, v)))
            .filter(|&(u, v)| v != u + 8)
            .collect();
        let knm = Graph::from_edges(16, &minus_matching).unwrap();
        for (g, salt) in [(&k16, 1), (&e16, 2), (&k88, 3), (&knm, 4)] {
            let h = g.permuted(&scramble(16, salt));
            assert_eq!(
                canonical_form(g).unwrap(),
                canonical_form(&h).unwrap()
            );
        }
        assert_ne!(
            canonical_form(&k88).unwrap(),
            canonical_form(&knm).unwrap()
        );
    }

    #[test]
    fn canonical_distinguishes_all_four_vertex_graphs() {
        // The 11 isomorphism classes on 4 vertices must give 11 distinct
        // canonical forms across all 64 labeled graphs.
        let all_pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = all_pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            seen.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(seen.len(), 11);
    }

    #[test]
    fn empty_graphs_isomorphic() {
        assert!(are_isomorphic(
            &Graph::empty(0).unwrap(),
            &Graph::empty(0).unwrap()
        ));
        assert!(!are_isomorphic(
            &Graph::empty(3).unwrap(),
            &Graph::empty(4).unwrap()
        ));
    }
}
