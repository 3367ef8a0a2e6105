//! Planarity and outerplanarity testing.
//!
//! The main test is the left-right (LR) planarity criterion: after a DFS
//! orientation, back edges are partitioned into two sides around each
//! fundamental cycle, and the graph is planar exactly when the arising
//! constraints are satisfiable. The implementation follows the standard
//! two-pass formulation (orientation pass computing lowpoints and nesting
//! depths, then a testing pass maintaining a stack of conflict pairs).
//!
//! Outerplanarity reduces to planarity: a graph is outerplanar exactly
//! when adding one vertex adjacent to everything leaves it planar.
//!
//! [`has_kuratowski_subdivision`] is an independent brute-force oracle
//! (find five branch vertices pairwise linked by internally disjoint
//! paths, or six in the three-plus-three pattern). It is exponential and
//! only intended for cross-validation on small graphs.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`is_planar`].
pub const PLANARITY_MAX: usize = 64;

/// Largest order accepted by [`is_outerplanar`] (one vertex is reserved
/// for the apex construction).
pub const OUTERPLANAR_MAX: usize = PLANARITY_MAX - 1;

/// Planarity via the left-right criterion. Orders above
/// [`PLANARITY_MAX`] are rejected with a size-cap error.
pub fn is_planar(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > PLANARITY_MAX {
        return Err(Error::SizeLimit {
            op: "planarity",
            n,
            max: PLANARITY_MAX,
        });
    }
    if n <= 4 {
        return Ok(true);
    }
    if g.m() > 3 * n - 6 {
        return Ok(false);
    }
    Ok(Lr::new(g).run())
}

/// Outerplanarity via the apex reduction: join one universal vertex and
/// test planarity.
pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > OUTERPLANAR_MAX {
        return Err(Error::SizeLimit {
            op: "outerplanarity",
            n,
            max: OUTERPLANAR_MAX,
        });
    }
    if n <= 3 {
        return Ok(true);
    }
    if g.m() > 2 * n - 3 {
        return Ok(false);
    }
    let apexed = g.join(&Graph::empty(1)?)?;
    is_planar(&apexed)
}

// ----------------------------------------------------------------------
// Left-right planarity test
// ----------------------------------------------------------------------

#[derive(Clone, Copy, Default, PartialEq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.l, &mut self.r);
    }
}

struct Lr<'a> {
    g: &'a Graph,
    height: Vec<Option<u32>>,
    parent_edge: Vec<Option<usize>>,
    /// Per vertex: neighbors whose connecting edge is already oriented.
    oriented: Vec<VertexSet>,
    /// Oriented edges, by id, in discovery order.
    edges: Vec<(usize, usize)>,
    /// Oriented out-edges per source vertex (sorted by nesting depth
    /// before the testing pass).
    out_edges: Vec<Vec<usize>>,
    lowpt: Vec<u32>,
    lowpt2: Vec<u32>,
    nesting: Vec<u32>,
    // Testing-pass state, indexed by edge id.
    refer: Vec<Option<usize>>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl<'a> Lr<'a> {
    fn new(g: &'a Graph) -> Lr<'a> {
        let n = g.n();
        Lr {
            g,
            height: vec![None; n],
            parent_edge: vec![None; n],
            oriented: vec![VertexSet::EMPTY; n],
            edges: Vec::with_capacity(g.m()),
            out_edges: vec![Vec::new(); n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting: Vec::new(),
            refer: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        // Orientation pass, one DFS per component.
        for root in 0..self.g.n() {
            if self.height[root].is_none() {
                self.height[root] = Some(0);
                self.orient(root);
            }
        }
        let m = self.edges.len();
        self.refer = vec![None; m];
        self.lowpt_edge = vec![None; m];
        self.stack_bottom = vec![0; m];
        for v in 0..self.g.n() {
            let nesting = &self.nesting;
            self.out_edges[v].sort_by_key(|&e| nesting[e]);
        }
        // Testing pass.
        for root in 0..self.g.n() {
            if self.parent_edge[root].is_none() && !self.test(root) {
                return false;
            }
        }
        true
    }

    fn orient(&mut self, v: usize) {
        let h = self.height[v].unwrap();
        for w in self.g.neighbors(v) {
            if self.oriented[v].contains(w) {
                continue;
            }
            self.oriented[v].insert(w);
            self.oriented[w].insert(v);
            let e = self.edges.len();
            self.edges.push((v, w));
            self.out_edges[v].push(e);
            self.lowpt.push(h);
            self.lowpt2.push(h);
            self.nesting.push(0);
            if self.height[w].is_none() {
                self.parent_edge[w] = Some(e);
                self.height[w] = Some(h + 1);
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[w].unwrap();
            }
            self.nesting[e] = 2 * self.lowpt[e] + u32::from(self.lowpt2[e] < h);
            if let Some(pe) = self.parent_edge[v] {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> u32 {
        match (p.l.low, p.r.low) {
            (Some(a), Some(b)) => self.lowpt[a].min(self.lowpt[b]),
            (Some(a), None) => self.lowpt[a],
            (None, Some(b)) => self.lowpt[b],
            (None, None) => unreachable!("conflict pair with two empty intervals"),
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let ordered = self.out_edges[v].clone();
        let hv = self.height[v].unwrap();
        for (idx, &ei) in ordered.iter().enumerate() {
            self.stack_bottom[ei] = self.stack.len();
            let w = self.edges[ei].1;
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    l: Interval::default(),
                    r: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < hv {
                // ei leads back below v.
                if idx == 0 {
                    if let Some(pe) = e {
                        self.lowpt_edge[pe] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, e.expect("non-root has a parent edge")) {
                    return false;
                }
            }
        }
        if let Some(pe) = e {
            self.remove_back_edges(pe);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // Fold the return edges of ei into the right interval of p.
        loop {
            let mut q = self.stack.pop().expect("return edges on the stack");
            if !q.l.is_empty() {
                q.swap();
            }
            if !q.l.is_empty() {
                return false;
            }
            let qrl = q.r.low.expect("normalized pair has a right interval");
            if self.lowpt[qrl] > self.lowpt[e] {
                // Interval still constrains the embedding: chain it on.
                match p.r.low {
                    None => p.r.high = q.r.high,
                    Some(prl) => self.refer[prl] = q.r.high,
                }
                p.r.low = q.r.low;
            } else {
                // Interval returns only to the lowpoint of the parent:
                // align it with the parent's lowpoint edge.
                self.refer[qrl] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // Fold intervals of earlier siblings that conflict with ei into
        // the left interval of p.
        loop {
            let top = match self.stack.last() {
                Some(t) => *t,
                None => break,
            };
            if !(self.conflicting(&top.l, ei) || self.conflicting(&top.r, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.r, ei) {
                q.swap();
            }
            if self.conflicting(&q.r, ei) {
                return false;
            }
            if let Some(prl) = p.r.low {
                self.refer[prl] = q.r.high;
            }
            if q.r.low.is_some() {
                p.r.low = q.r.low;
            }
            match p.l.low {
                None => p.l.high = q.l.high,
                Some(pll) => self.refer[pll] = q.l.high,
            }
            p.l.low = q.l.low;
        }
        if !(p.l.is_empty() && p.r.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.edges[e].0;
        let hu = self.height[u].unwrap();
        // Drop conflict pairs that return no deeper than u.
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == hu {
                self.stack.pop();
            } else {
                break;
            }
        }
        // Trim the topmost remaining pair: back edges ending exactly at u
        // are no longer constraints.
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.l.high {
                if self.edges[h].1 == u {
                    p.l.high = self.refer[h];
                } else {
                    break;
                }
            }
            if p.l.high.is_none() && p.l.low.is_some() {
                let pll = p.l.low.unwrap();
                self.refer[pll] = p.r.low;
                p.l.low = None;
            }
            while let Some(h) = p.r.high {
                if self.edges[h].1 == u {
                    p.r.high = self.refer[h];
                } else {
                    break;
                }
            }
            if p.r.high.is_none() && p.r.low.is_some() {
                let prl = p.r.low.unwrap();
                self.refer[prl] = p.l.low;
                p.r.low = None;
            }
            self.stack.push(p);
        }
        // Record which side's highest return edge e follows.
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let hl = top.l.high;
                let hr = top.r.high;
                self.refer[e] = match (hl, hr) {
                    (Some(a), Some(b)) => {
                        if self.lowpt[a] > self.lowpt[b] {
                            hl
                        } else {
                            hr
                        }
                    }
                    (Some(_), None) => hl,
                    _ => hr,
                };
            }
        }
    }
}

// ----------------------------------------------------------------------
// Brute-force subdivision oracle
// ----------------------------------------------------------------------

/// Does `g` contain a subdivision of the five-clique or of the complete
/// bipartite graph on three plus three vertices?
///
/// By Kuratowski's theorem this holds exactly when `g` is nonplanar, so
/// the function serves as an implementation-independent planarity oracle.
/// The search is exponential (choose branch vertices, then route
/// internally disjoint paths); keep it to small graphs.
pub fn has_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.n();
    // Subdivision of the five-clique: 5 branch vertices, all 10 pairs linked.
    let mut pairs10 = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            pairs10.push((i, j));
        }
    }
    if choose_branches(g, 5, &mut |branch| {
        let free = branch_free(n, branch);
        let pairs: Vec<(usize, usize)> =
            pairs10.iter().map(|&(i, j)| (branch[i], branch[j])).collect();
        route_all(g, &pairs, free)
    }) {
        return true;
    }
    // Subdivision of the three-plus-three biclique: 6 branch vertices split
    // into two sides of three, all 9 cross pairs linked.
    choose_branches(g, 6, &mut |branch| {
        // All unordered 3/3 splits with branch[0] fixed on side one.
        let splits: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 1, 3],
            [0, 1, 4],
            [0, 1, 5],
            [0, 2, 3],
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [0, 3, 5],
            [0, 4, 5],
        ];
        let free = branch_free(n, branch);
        splits.iter().any(|side| {
            let other: Vec<usize> =
                (0..6).filter(|i| !side.contains(i)).collect();
            let pairs: Vec<(usize, usize)> = side
                .iter()
                .flat_map(|&i| other.iter().map(move |&j| (branch[i], branch[j])))
                .collect();
            route_all(g, &pairs, free)
        })
    })
}

fn branch_free(n: usize, branch: &[usize]) -> VertexSet {
    let mut free = VertexSet::full(n);
    for &b in branch {
        free.remove(b);
    }
    free
}

/// Enumerate ascending `k`-subsets of the vertex set, stopping early when
/// the visitor reports success.
fn choose_branches(
    g: &Graph,
    k: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(n, k, v + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if g.n() < k {
        return false;
    }
    rec(g.n(), k, 0, &mut Vec::new(), visit)
}

/// Route every pair through internally disjoint paths whose interior
/// vertices come from `free`.
fn route_all(g: &Graph, pairs: &[(usize, usize)], free: VertexSet) -> bool {
    let Some(&(s, t)) = pairs.first() else {
        return true;
    };
    route_from(g, s, t, free, VertexSet::EMPTY, &pairs[1..])
}

fn route_from(
    g: &Graph,
    cur: usize,
    t: usize,
    free: VertexSet,
    used: VertexSet,
    rest: &[(usize, usize)],
) -> bool {
    if g.has_edge(cur, t) && route_all(g, rest, free - used) {
        return true;
    }
    for w in g.neighbors(cur) & free {
        if route_from(g, w, t, free.without(w), used.with(w), rest) {
            return true;
        }
    }
    false
}
