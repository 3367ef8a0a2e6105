//! Triangle–diamond vertex partition of connected claw-free cubic
//! graphs.
//!
//! In every connected claw-free cubic graph other than K_4, the vertex
//! set partitions uniquely into induced diamonds (K_4 minus an edge) and
//! triangles: each vertex lies in a triangle, a vertex in two triangles
//! lies in a diamond, and diamonds are pairwise disjoint with no
//! triangle leaving them. [`td_partition`] computes that partition;
//! structure violations after the preconditions hold are impossible and
//! are asserted, not returned as errors.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso;

/// One unit of the triangle–diamond partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdUnit {
    /// An induced triangle (3 vertices, 3 edges).
    Triangle(VertexSet),
    /// An induced diamond, K_4 minus an edge (4 vertices, 5 edges).
    Diamond(VertexSet),
}

impl TdUnit {
    /// The vertices of this unit.
    pub fn vertices(&self) -> VertexSet {
        match *self {
            TdUnit::Triangle(s) | TdUnit::Diamond(s) => s,
        }
    }
}

/// Partition the vertices of a connected claw-free cubic graph (other
/// than K_4) into induced diamonds and triangles, ordered by smallest
/// member.
pub fn td_partition(g: &Graph) -> Result<Vec<TdUnit>> {
    if g.regularity() != Some(3) {
        return Err(Error::TdpNotCubic);
    }
    if !g.is_k1r_free(3) {
        return Err(Error::TdpNotClawFree);
    }
    if !g.is_connected() {
        return Err(Error::TdpNotConnected);
    }
    if g.n() == 4 {
        return Err(Error::TdpIsK4);
    }

    let mut units: Vec<TdUnit> = Vec::new();
    let mut assigned = VertexSet::EMPTY;

    // Diamonds first. Each induced diamond is found exactly once, from
    // its degree-3 pair: the common neighbors of that edge are the two
    // nonadjacent side vertices.
    for (u, v) in g.edges() {
        let common = g.common_neighbors(u, v);
        if common.len() != 2 {
            continue;
        }
        let side = common.to_vec();
        if g.has_edge(side[0], side[1]) {
            // A K_4 would be a whole component, excluded above.
            continue;
        }
        let unit = VertexSet::from_iter([u, v, side[0], side[1]]);
        assert!(
            assigned.is_disjoint(&unit),
            "diamonds in a connected claw-free cubic graph are disjoint"
        );
        assigned |= unit;
        units.push(TdUnit::Diamond(unit));
    }

    // Every remaining vertex lies in exactly one triangle, which avoids
    // all diamond vertices.
    for v in g.vertices() {
        if assigned.contains(v) {
            continue;
        }
        let nbrs = g.neighbors(v).to_vec();
        let mut tri: Option<(usize, usize)> = None;
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    assert!(
                        tri.is_none(),
                        "a vertex of two triangles lies in a diamond"
                    );
                    tri = Some((a, b));
                }
            }
        }
        let (a, b) = tri.expect("every vertex of a claw-free cubic graph is in a triangle");
        let unit = VertexSet::from_iter([v, a, b]);
        assert!(
            (assigned & unit).is_empty(),
            "triangles outside diamonds are pairwise disjoint"
        );
        assigned |= unit;
        units.push(TdUnit::Triangle(unit));
    }

    debug_assert_eq!(assigned, VertexSet::full(g.n()));
    units.sort_by_key(|u| u.vertices().min());
    Ok(units)
}

/// Is this graph a necklace of triangles (connected claw-free
/// diamond-free cubic, on 6k vertices, isomorphic to
/// [`crate::families::triangle_necklace`] of the matching order)?
pub fn is_triangle_necklace(g: &Graph) -> bool {
    if g.n() % 6 != 0 || g.n() == 0 {
        return false;
    }
    if g.regularity() != Some(3)
        || !g.is_connected()
        || !g.is_k1r_free(3)
        || !g.is_diamond_free()
    {
        return false;
    }
    let reference = crate::families::triangle_necklace(g.n() / 6)
        .expect("order is a positive multiple of 6");
    iso::are_isomorphic(g, &reference)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Ring of `k` diamonds (`k >= 2`), linked side-to-side: connected,
    /// claw-free and cubic.
    fn diamond_ring(k: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..k {
            let b = 4 * i;
            edges.extend([(b, b + 1), (b, b + 2), (b, b + 3), (b + 1, b + 2), (b + 1, b + 3)]);
            edges.push((b + 3, 4 * ((i + 1) % k) + 2));
        }
        Graph::from_edges(4 * k, &edges).unwrap()
    }

    /// One diamond and two triangles in a ring (10 vertices).
    fn mixed_ring() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 5),
                (4, 6),
                (5, 6),
                (7, 8),
                (7, 9),
                (8, 9),
                (3, 4),
                (5, 7),
                (6, 8),
                (9, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn preconditions_are_reported() {
        assert!(matches!(
            td_partition(&families::cycle(6).unwrap()),
            Err(Error::TdpNotCubic)
        ));
        // Cubic and connected but with a claw: K_{3,3}.
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(matches!(td_partition(&k33), Err(Error::TdpNotClawFree)));
        let two_prisms = families::triangle_necklace(1)
            .unwrap()
            .disjoint_union(&families::triangle_necklace(1).unwrap())
            .unwrap();
        assert!(matches!(td_partition(&two_prisms), Err(Error::TdpNotConnected)));
        assert!(matches!(
            td_partition(&Graph::complete(4).unwrap()),
            Err(Error::TdpIsK4)
        ));
    }

    #[test]
    fn prism_splits_into_two_triangles() {
        let units = td_partition(&families::triangle_necklace(1).unwrap()).unwrap();
        assert_eq!(units.len(), 2);
        assert!(matches!(units[0], TdUnit::Triangle(_)));
        assert_eq!(units[0].vertices().to_vec(), vec![0, 1, 2]);
        assert_eq!(units[1].vertices().to_vec(), vec![3, 4, 5]);
    }

    #[test]
    fn diamond_rings_split_into_diamonds() {
        for k in 2..=4 {
            let g = diamond_ring(k);
            assert_eq!(g.regularity(), Some(3));
            let units = td_partition(&g).unwrap();
            assert_eq!(units.len(), k);
            for (i, u) in units.iter().enumerate() {
                assert!(matches!(u, TdUnit::Diamond(_)));
                assert_eq!(
                    u.vertices().to_vec(),
                    vec![4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3]
                );
            }
        }
    }

    #[test]
    fn mixed_ring_partition() {
        let g = mixed_ring();
        assert_eq!(g.regularity(), Some(3));
        assert!(g.is_k1r_free(3));
        let units = td_partition(&g).unwrap();
        assert_eq!(units.len(), 3);
        assert!(matches!(units[0], TdUnit::Diamond(_)));
        assert_eq!(units[0].vertices().to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(units[1].vertices().to_vec(), vec![4, 5, 6]);
        assert_eq!(units[2].vertices().to_vec(), vec![7, 8, 9]);
    }

    #[test]
    fn partition_units_induce_correct_shapes() {
        for g in [
            families::g12_chain(1).unwrap(),
            families::g12_chain(2).unwrap(),
            families::g20_chain(2).unwrap(),
            families::triangle_necklace(3).unwrap(),
            diamond_ring(3),
            mixed_ring(),
        ] {
            let units = td_partition(&g).unwrap();
            let mut covered = VertexSet::EMPTY;
            for u in &units {
                let s = u.vertices();
                assert!(covered.is_disjoint(&s));
                covered |= s;
                let ind = g.induced(&s);
                match u {
                    TdUnit::Triangle(_) => assert_eq!((ind.n(), ind.m()), (3, 3)),
                    TdUnit::Diamond(_) => assert_eq!((ind.n(), ind.m()), (4, 5)),
                }
            }
            assert_eq!(covered, VertexSet::full(g.n()));
        }
    }

    #[test]
    fn partition_is_permutation_invariant() {
        let g = mixed_ring();
        let units = td_partition(&g).unwrap();
        // Reverse labeling: the same units must come back, renumbered.
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        let h = g.permuted(&perm);
        let hunits = td_partition(&h).unwrap();
        let mut expected: Vec<VertexSet> = units
            .iter()
            .map(|u| u.vertices().iter().map(|v| perm[v]).collect())
            .collect();
        expected.sort_by_key(|s| s.min());
        let got: Vec<VertexSet> = hunits.iter().map(|u| u.vertices()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn necklace_recognition() {
        for k in 1..=4 {
            assert!(is_triangle_necklace(&families::triangle_necklace(k).unwrap()));
        }
        // Right order and all prefilters, but not a necklace.
        let g = families::g12_chain(1).unwrap();
        assert!(g.is_diamond_free());
        assert!(!is_triangle_necklace(&g));
        assert!(!is_triangle_necklace(&Graph::complete(4).unwrap()));
        assert!(!is_triangle_necklace(&families::cycle(6).unwrap()));
        assert!(!is_triangle_necklace(&diamond_ring(3)));
    }
}
