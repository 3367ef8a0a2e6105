//! Generators for the extremal graph families on which the implemented
//! inequalities are tight.
//!
//! Every generator returns a labeled [`Graph`] with a fixed, documented
//! vertex numbering, so invariant witnesses on family members are
//! reproducible. [`FamilySpec`] names each family for configs and the
//! command line.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

fn param_err(family: &str, reason: impl Into<String>) -> Error {
    Error::FamilyParam {
        family: family.to_string(),
        reason: reason.into(),
    }
}

/// Cycle C_n on vertices 0..n in natural order (`n >= 3`).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_err("cycle", format!("n = {n}, need n >= 3")));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("cycle({n})")))
}

/// Wheel: cycle on `rim` vertices 0..rim plus a hub (vertex `rim`)
/// adjacent to the whole rim (`rim >= 3`).
pub fn wheel(rim: usize) -> Result<Graph> {
    if rim < 3 {
        return Err(param_err("wheel", format!("rim = {rim}, need rim >= 3")));
    }
    let g = cycle(rim)?.join(&Graph::complete(1)?)?;
    Ok(g.with_label(format!("wheel({rim})")))
}

/// Necklace of `2k` triangles (`k >= 1`), a connected claw-free
/// diamond-free cubic graph on `6k` vertices whose independence and
/// domination numbers are both `2k`.
///
/// Triangle `i` is the vertex triple `(3i, 3i+1, 3i+2)`. First-position
/// vertices of triangles `2i-1` and `2i` are matched, as are
/// second-position vertices; third-position vertices of triangles `2i`
/// and `2i+1` are matched (indices mod `2k`). For `k = 1` this is the
/// triangular prism.
pub fn triangle_necklace(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(param_err("triangle_necklace", format!("k = {k}, need k >= 1")));
    }
    let m = 2 * k;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        edges.push((3 * i, 3 * i + 1));
        edges.push((3 * i + 1, 3 * i + 2));
        edges.push((3 * i, 3 * i + 2));
    }
    for i in 1..=k {
        let a = 2 * i - 1;
        let b = (2 * i) % m;
        edges.push((3 * a, 3 * b));
        edges.push((3 * a + 1, 3 * b + 1));
    }
    for i in 0..k {
        let a = 2 * i;
        let b = 2 * i + 1;
        edges.push((3 * a + 2, 3 * b + 2));
    }
    Ok(Graph::from_edges(6 * k, &edges)?.with_label(format!("triangle_necklace({k})")))
}

/// Edges of the 12-vertex block: three triangles {0,1,2}, {4,5,6},
/// {8,9,10} linked through 3, 7 and 11, with 0 and 9 of degree two.
const G12_EDGES: [(usize, usize); 17] = [
    (0, 1),
    (1, 2),
    (2, 0),
    (4, 5),
    (5, 6),
    (6, 4),
    (8, 9),
    (9, 10),
    (10, 8),
    (2, 3),
    (3, 7),
    (7, 11),
    (6, 7),
    (10, 11),
    (1, 4),
    (5, 8),
    (3, 11),
];

/// Claw-free 12-vertex block with exactly two degree-2 vertices (0 and
/// 9); its domination number is 3 and its independence number 4. Closing
/// the block (see [`g12_chain`]) gives a cubic graph with α = (4/3)γ.
pub fn g12() -> Graph {
    Graph::from_edges(12, &G12_EDGES)
        .expect("fixed edge list is valid")
        .with_label("g12")
}

/// Cyclic chain of `k` copies of [`g12`] (`k >= 1`): vertex 9 of each
/// copy is joined to vertex 0 of the next, making the graph connected,
/// claw-free and cubic with γ = 3k and α = 4k.
pub fn g12_chain(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(param_err("g12_chain", format!("k = {k}, need k >= 1")));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        let off = 12 * i;
        edges.extend(G12_EDGES.iter().map(|&(u, v)| (u + off, v + off)));
        edges.push((off + 9, 12 * ((i + 1) % k)));
    }
    Ok(Graph::from_edges(12 * k, &edges)?.with_label(format!("g12_chain({k})")))
}

/// Edges of the 20-vertex block: four triangles glued through degree-3
/// vertices, with 2 and 3 of degree two.
const G20_EDGES: [(usize, usize); 29] = [
    (1, 2),
    (2, 3),
    (1, 3),
    (0, 1),
    (0, 11),
    (11, 19),
    (0, 19),
    (4, 5),
    (5, 6),
    (6, 7),
    (5, 7),
    (4, 6),
    (8, 9),
    (8, 10),
    (9, 10),
    (10, 11),
    (4, 8),
    (7, 9),
    (12, 13),
    (13, 14),
    (14, 15),
    (13, 15),
    (12, 14),
    (16, 17),
    (16, 18),
    (17, 18),
    (18, 19),
    (12, 16),
    (15, 17),
];

/// Claw-free 20-vertex block with exactly two degree-2 vertices (2 and
/// 3); its domination number is 5 and its independence number 8. Chained
/// copies (see [`g20_chain`]) give connected claw-free cubic graphs with
/// α = (8/5)γ.
pub fn g20() -> Graph {
    Graph::from_edges(20, &G20_EDGES)
        .expect("fixed edge list is valid")
        .with_label("g20")
}

/// Cyclic chain of `k` copies of [`g20`] (`k >= 2`): vertex 2 of each
/// copy is joined to vertex 3 of the next, making the graph connected,
/// claw-free and cubic with γ = 5k and α = 8k.
pub fn g20_chain(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(param_err("g20_chain", format!("k = {k}, need k >= 2")));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        let off = 20 * i;
        edges.extend(G20_EDGES.iter().map(|&(u, v)| (u + off, v + off)));
        edges.push((off + 2, 20 * ((i + 1) % k) + 3));
    }
    Ok(Graph::from_edges(20 * k, &edges)?.with_label(format!("g20_chain({k})")))
}

/// Edges of the 15-vertex 4-regular block.
const G15_EDGES: [(usize, usize); 30] = [
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 4),
    (2, 3),
    (5, 1),
    (5, 2),
    (5, 6),
    (5, 7),
    (6, 7),
    (8, 0),
    (8, 3),
    (8, 9),
    (8, 6),
    (9, 6),
    (10, 9),
    (10, 11),
    (10, 1),
    (10, 4),
    (9, 11),
    (12, 13),
    (12, 11),
    (13, 11),
    (12, 3),
    (12, 2),
    (14, 13),
    (14, 7),
    (13, 7),
    (14, 4),
    (14, 0),
];

/// Claw-free 4-regular graph on 15 vertices with domination number 3
/// and independence number 5 (α = (5/3)γ). Vertex 11 and its neighbors
/// 12, 13 are the attachment point used by [`g15_ring`].
pub fn g15() -> Graph {
    Graph::from_edges(15, &G15_EDGES)
        .expect("fixed edge list is valid")
        .with_label("g15")
}

/// Ring of `k` copies of [`g15`] (`k >= 2`): in each copy the edges from
/// 11 to 12 and 13 are removed, and vertex 11 of the *next* copy is
/// joined to 12 and 13 instead. The result is connected, claw-free,
/// 4-regular and nonplanar with γ = 3k and α = 5k.
pub fn g15_ring(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(param_err("g15_ring", format!("k = {k}, need k >= 2")));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for j in 0..k {
        let off = 15 * j;
        let next = 15 * ((j + 1) % k);
        edges.extend(
            G15_EDGES
                .iter()
                .filter(|&&e| e != (12, 11) && e != (13, 11))
                .map(|&(u, v)| (u + off, v + off)),
        );
        edges.push((next + 11, off + 12));
        edges.push((next + 11, off + 13));
    }
    Ok(Graph::from_edges(15 * k, &edges)?.with_label(format!("g15_ring({k})")))
}

/// Edges of the 30-vertex 4-regular planar block: five concentric rings
/// (inner cycle 0..5, hubs 5..10, middle cycle 10..20, outer hubs
/// 20..25, outer cycle 25..30).
const G30_EDGES: [(usize, usize); 60] = [
    // middle 10-cycle
    (10, 11),
    (11, 12),
    (12, 13),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (17, 18),
    (18, 19),
    (19, 10),
    // outer 5-cycle
    (25, 26),
    (26, 27),
    (27, 28),
    (28, 29),
    (29, 25),
    // hub spokes into the middle cycle
    (10, 5),
    (5, 11),
    (12, 6),
    (6, 13),
    (14, 7),
    (7, 15),
    (16, 8),
    (8, 17),
    (18, 9),
    (9, 19),
    // outer hub spokes into the middle cycle
    (19, 20),
    (20, 10),
    (11, 21),
    (21, 12),
    (13, 22),
    (22, 14),
    (15, 23),
    (23, 16),
    (17, 24),
    (24, 18),
    // outer hubs to outer cycle
    (20, 25),
    (25, 21),
    (21, 26),
    (26, 22),
    (22, 27),
    (27, 23),
    (23, 28),
    (28, 24),
    (24, 29),
    (29, 20),
    // inner spokes
    (8, 3),
    (3, 9),
    (7, 2),
    (2, 8),
    (6, 1),
    (1, 7),
    (5, 0),
    (0, 6),
    (5, 4),
    (4, 9),
    // inner 5-cycle
    (4, 0),
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
];

/// Claw-free 4-regular planar graph on 30 vertices with domination
/// number 6 and independence number 10 (α = (5/3)γ).
pub fn g30() -> Graph {
    Graph::from_edges(30, &G30_EDGES)
        .expect("fixed edge list is valid")
        .with_label("g30")
}

/// `r-1` disjoint copies of K_k, all joined to one K_t (`r >= 2`,
/// `k >= 1`, `t >= 0`). Clique copies come first (copy `c` is the range
/// `c*k..(c+1)*k`), the K_t last. With cliques of order `k+1` this is
/// extremal for the k-independence bound; with `t = 1` it gives the
/// hub-joined clique unions used by the chromatic-family bounds.
pub fn join_cliques(r: usize, k: usize, t: usize) -> Result<Graph> {
    if r < 2 {
        return Err(param_err("join_cliques", format!("r = {r}, need r >= 2")));
    }
    if k < 1 {
        return Err(param_err("join_cliques", format!("k = {k}, need k >= 1")));
    }
    let mut copies = Graph::complete(k)?;
    for _ in 1..r - 1 {
        copies = copies.disjoint_union(&Graph::complete(k)?)?;
    }
    let g = copies.join(&Graph::complete(t)?)?;
    Ok(g.with_label(format!("join_cliques({r},{k},{t})")))
}

/// Ring of `p` blocks extremal for the k-independence bound at minimum
/// degree `k + 2t + mu` (`r >= 2`, `p >= 1`, `t >= 0`, `mu <= 1`,
/// `2t + mu >= 1`).
///
/// Each block holds `r-1` copies of K_{k+1} (the group) plus two
/// connector cliques: A of order `t+mu` joined to the whole group, and B
/// of order `t` joined to every group copy except the first — plus the
/// first copy of the *next* block's group, cyclically. A and B together
/// induce a clique. Every group vertex then has degree `k + 2t + mu`,
/// and taking all group vertices shows the k-independence number is
/// `p(r-1)(k+1)`, matching the bound exactly. With `p = 1` the
/// construction collapses to [`join_cliques`] of K_{k+1} copies with a
/// K_{2t+mu}.
pub fn clique_ring(r: usize, k: usize, t: usize, p: usize, mu: usize) -> Result<Graph> {
    if r < 2 {
        return Err(param_err("clique_ring", format!("r = {r}, need r >= 2")));
    }
    if p < 1 {
        return Err(param_err("clique_ring", format!("p = {p}, need p >= 1")));
    }
    if mu > 1 {
        return Err(param_err("clique_ring", format!("mu = {mu}, need mu in {{0, 1}}")));
    }
    if 2 * t + mu < 1 {
        return Err(param_err(
            "clique_ring",
            format!("t = {t}, mu = {mu}, need 2t + mu >= 1"),
        ));
    }
    let group = (r - 1) * (k + 1);
    let block = group + 2 * t + mu;
    let n = p * block;
    let mut g = Graph::empty(n)?;
    let clique = |g: &mut Graph, members: &[usize]| {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                g.add_edge(u, v);
            }
        }
    };
    let join_sets = |g: &mut Graph, a: &[usize], b: &[usize]| {
        for &u in a {
            for &v in b {
                g.add_edge(u, v);
            }
        }
    };
    for j in 0..p {
        let base = j * block;
        let copies: Vec<Vec<usize>> = (0..r - 1)
            .map(|c| (0..k + 1).map(|i| base + c * (k + 1) + i).collect())
            .collect();
        let a: Vec<usize> = (0..t + mu).map(|i| base + group + i).collect();
        let b: Vec<usize> = (0..t).map(|i| base + group + t + mu + i).collect();
        for copy in &copies {
            clique(&mut g, copy);
            join_sets(&mut g, &a, copy);
        }
        for copy in &copies[1..] {
            join_sets(&mut g, &b, copy);
        }
        let next_first: Vec<usize> =
            (0..k + 1).map(|i| (j + 1) % p * block + i).collect();
        join_sets(&mut g, &b, &next_first);
        let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
        clique(&mut g, &ab);
    }
    Ok(g.with_label(format!("clique_ring({r},{k},{t},{p},{mu})")))
}

/// The 5-cycle joined to a K_k, `1 <= k <= 3`: claw-free, with
/// k-domination number k while the largest induced triangle-free
/// subgraph keeps all five rim vertices.
pub fn c5_join_clique(k: usize) -> Result<Graph> {
    if !(1..=3).contains(&k) {
        return Err(param_err("c5_join_clique", format!("k = {k}, need 1 <= k <= 3")));
    }
    let g = cycle(5)?.join(&Graph::complete(k)?)?;
    Ok(g.with_label(format!("c5_join_clique({k})")))
}

/// A named family member; serializable for sweep configs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Cycle { n: usize },
    Wheel { rim: usize },
    TriangleNecklace { k: usize },
    G12,
    G12Chain { k: usize },
    G20,
    G20Chain { k: usize },
    G15,
    G15Ring { k: usize },
    G30,
    JoinCliques { r: usize, k: usize, #[serde(default)] t: usize },
    CliqueRing {
        r: usize,
        k: usize,
        t: usize,
        p: usize,
        #[serde(default)] mu: usize,
    },
    C5JoinClique { k: usize },
}

impl FamilySpec {
    /// Construct the graph this spec names.
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Wheel { rim } => wheel(rim),
            FamilySpec::TriangleNecklace { k } => triangle_necklace(k),
            FamilySpec::G12 => Ok(g12()),
            FamilySpec::G12Chain { k } => g12_chain(k),
            FamilySpec::G20 => Ok(g20()),
            FamilySpec::G20Chain { k } => g20_chain(k),
            FamilySpec::G15 => Ok(g15()),
            FamilySpec::G15Ring { k } => g15_ring(k),
            FamilySpec::G30 => Ok(g30()),
            FamilySpec::JoinCliques { r, k, t } => join_cliques(r, k, t),
            FamilySpec::CliqueRing { r, k, t, p, mu } => clique_ring(r, k, t, p, mu),
            FamilySpec::C5JoinClique { k } => c5_join_clique(k),
        }
    }

    /// Build a spec from a family name and positional integer arguments,
    /// as given on the command line.
    pub fn from_name_args(name: &str, args: &[usize]) -> Result<FamilySpec> {
        let arity = |want: usize| -> Result<()> {
            if args.len() == want {
                Ok(())
            } else {
                Err(Error::FamilyParam {
                    family: name.to_string(),
                    reason: format!("takes {want} argument(s), got {}", args.len()),
                })
            }
        };
        Ok(match name {
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: args[0] }
            }
            "wheel" => {
                arity(1)?;
                FamilySpec::Wheel { rim: args[0] }
            }
            "triangle_necklace" => {
                arity(1)?;
                FamilySpec::TriangleNecklace { k: args[0] }
            }
            "g12" => {
                arity(0)?;
                FamilySpec::G12
            }
            "g12_chain" => {
                arity(1)?;
                FamilySpec::G12Chain { k: args[0] }
            }
            "g20" => {
                arity(0)?;
                FamilySpec::G20
            }
            "g20_chain" => {
                arity(1)?;
                FamilySpec::G20Chain { k: args[0] }
            }
            "g15" => {
                arity(0)?;
                FamilySpec::G15
            }
            "g15_ring" => {
                arity(1)?;
                FamilySpec::G15Ring { k: args[0] }
            }
            "g30" => {
                arity(0)?;
                FamilySpec::G30
            }
            "join_cliques" => {
                arity(3)?;
                FamilySpec::JoinCliques { r: args[0], k: args[1], t: args[2] }
            }
            "clique_ring" => {
                arity(5)?;
                FamilySpec::CliqueRing {
                    r: args[0],
                    k: args[1],
                    t: args[2],
                    p: args[3],
                    mu: args[4],
                }
            }
            "c5_join_clique" => {
                arity(1)?;
                FamilySpec::C5JoinClique { k: args[0] }
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        })
    }
}

/// Family names with their positional-argument signatures, for help
/// text.
pub const CATALOG: &[(&str, &str)] = &[
    ("cycle", "n"),
    ("wheel", "rim"),
    ("triangle_necklace", "k"),
    ("g12", ""),
    ("g12_chain", "k"),
    ("g20", ""),
    ("g20_chain", "k"),
    ("g15", ""),
    ("g15_ring", "k"),
    ("g30", ""),
    ("join_cliques", "r k t"),
    ("clique_ring", "r k t p mu"),
    ("c5_join_clique", "k"),
];

/// Is `g` a single cycle (connected and 2-regular)?
pub fn is_single_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.regularity() == Some(2) && g.is_connected()
}

/// Is `g` isomorphic to [`g12_chain`]`(k)` for some `k >= 1`?
pub fn is_g12_chain(g: &Graph) -> bool {
    let n = g.n();
    n % 12 == 0
        && n >= 12
        && g.regularity() == Some(3)
        && g.is_connected()
        && matches!(g12_chain(n / 12), Ok(h) if crate::iso::are_isomorphic(g, &h))
}

/// Is `g` isomorphic to [`g20_chain`]`(k)` for some `k >= 2`?
pub fn is_g20_chain(g: &Graph) -> bool {
    let n = g.n();
    n % 20 == 0
        && n >= 40
        && g.regularity() == Some(3)
        && g.is_connected()
        && matches!(g20_chain(n / 20), Ok(h) if crate::iso::are_isomorphic(g, &h))
}
