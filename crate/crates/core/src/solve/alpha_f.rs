//! Largest induced subgraphs inside hereditary families: bounded
//! chromatic number, clique-free, bipartite, outerplanar, planar, and a
//! generic black-box hereditary predicate.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar;
use crate::solve::subset::{clique_capped_bound, Hooks, MaxSubset};
use crate::solve::{alpha, is_k_colorable, InvariantKind, InvariantValue, Limits};

fn check_cap(op: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::SizeLimit { op, n, max });
    }
    Ok(())
}

/// Ascending feasibility greedy: grow a set vertex by vertex, keeping
/// each vertex whose addition `feasible` accepts. Returns the size.
fn greedy_feasible(g: &Graph, mut feasible: impl FnMut(&VertexSet, usize) -> bool) -> usize {
    let mut chosen = VertexSet::EMPTY;
    for v in g.vertices() {
        if feasible(&chosen, v) {
            chosen.insert(v);
        }
    }
    chosen.len()
}

/// Largest set of vertices whose induced subgraph is k-colorable, with
/// the lexicographically least maximum witness. Requires `k >= 1`; for
/// `k = 1` this is the independence number.
pub fn alpha_f_chromatic(g: &Graph, k: usize) -> Result<InvariantValue> {
    alpha_f_chromatic_with_limits(g, k, &Limits::default())
}

/// [`alpha_f_chromatic`] with explicit size caps.
pub fn alpha_f_chromatic_with_limits(
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<InvariantValue> {
    if k < 1 {
        return Err(Error::ParamOutOfRange {
            op: "alphaF_chromatic",
            param: "k",
            value: k as i64,
            requirement: "k >= 1",
        });
    }
    let kind = InvariantKind::AlphaFChromatic(k);
    if k == 1 {
        let mut iv = alpha(g);
        iv.kind = kind;
        return Ok(iv);
    }
    check_cap("alphaF_chromatic", g.n(), limits.alpha_f)?;
    if is_k_colorable(g, k) {
        return Ok(InvariantValue::of_set(kind, g.n(), VertexSet::full(g.n())));
    }
    let feasible =
        |chosen: &VertexSet, v: usize| is_k_colorable(&g.induced(&chosen.with(v)), k);
    let seed = greedy_feasible(g, feasible).saturating_sub(1);
    let (value, set) = MaxSubset::run(
        Hooks {
            can_include: &mut |chosen, v| feasible(chosen, v),
            restrict: &mut |_, _, rest| rest,
            bound: &mut |cand| clique_capped_bound(g, cand, k),
        },
        VertexSet::full(g.n()),
        seed,
    );
    Ok(InvariantValue::of_set(kind, value, set))
}

/// Largest set of vertices inducing no clique on `q` vertices, with the
/// lexicographically least maximum witness. Requires `q >= 3`.
pub fn alpha_f_kq_free(g: &Graph, q: usize) -> Result<InvariantValue> {
    alpha_f_kq_free_with_limits(g, q, &Limits::default())
}

/// [`alpha_f_kq_free`] with explicit size caps.
pub fn alpha_f_kq_free_with_limits(
    g: &Graph,
    q: usize,
    limits: &Limits,
) -> Result<InvariantValue> {
    if q < 3 {
        return Err(Error::ParamOutOfRange {
            op: "alphaF_kqfree",
            param: "q",
            value: q as i64,
            requirement: "q >= 3",
        });
    }
    check_cap("alphaF_kqfree", g.n(), limits.alpha_f)?;
    let kind = InvariantKind::AlphaFKqFree(q);
    if !g.contains_clique(q) {
        return Ok(InvariantValue::of_set(kind, g.n(), VertexSet::full(g.n())));
    }
    // Adding v creates a q-clique exactly when some (q-1)-clique already
    // lies inside the chosen neighbors of v.
    let feasible = |chosen: &VertexSet, v: usize| {
        g.clique_subset(*chosen & g.neighbors(v), q - 1).is_none()
    };
    let seed = greedy_feasible(g, feasible).saturating_sub(1);
    let (value, set) = MaxSubset::run(
        Hooks {
            can_include: &mut |chosen, v| feasible(chosen, v),
            restrict: &mut |_, _, rest| rest,
            bound: &mut |cand| clique_capped_bound(g, cand, q - 1),
        },
        VertexSet::full(g.n()),
        seed,
    );
    Ok(InvariantValue::of_set(kind, value, set))
}

/// Largest set of vertices inducing a triangle-free subgraph (the
/// clique-free case `q = 3`).
pub fn alpha_f_triangle_free(g: &Graph) -> Result<InvariantValue> {
    let mut iv = alpha_f_kq_free(g, 3)?;
    iv.kind = InvariantKind::AlphaFTriangleFree;
    Ok(iv)
}

/// Largest set of vertices whose induced subgraph satisfies `pred`,
/// which must be hereditary (closed under induced subgraphs) for the
/// result to be the true maximum. Returns the size and the
/// lexicographically least maximum witness. Capped at
/// `limits.max_induced` vertices.
pub fn max_induced(
    g: &Graph,
    pred: &mut dyn FnMut(&Graph) -> Result<bool>,
) -> Result<(usize, VertexSet)> {
    max_induced_with_limits(g, pred, &Limits::default())
}

/// [`max_induced`] with explicit size caps.
pub fn max_induced_with_limits(
    g: &Graph,
    pred: &mut dyn FnMut(&Graph) -> Result<bool>,
    limits: &Limits,
) -> Result<(usize, VertexSet)> {
    check_cap("max_induced", g.n(), limits.max_induced)?;
    if pred(g)? {
        return Ok((g.n(), VertexSet::full(g.n())));
    }
    let mut first_err: Option<Error> = None;
    let (value, set) = MaxSubset::run(
        Hooks {
            can_include: &mut |chosen, v| {
                if first_err.is_some() {
                    return false;
                }
                match pred(&g.induced(&chosen.with(v))) {
                    Ok(ok) => ok,
                    Err(e) => {
                        first_err = Some(e);
                        false
                    }
                }
            },
            restrict: &mut |_, _, rest| rest,
            bound: &mut |cand| cand.len(),
        },
        VertexSet::full(g.n()),
        0,
    );
    match first_err {
        Some(e) => Err(e),
        None => Ok((value, set)),
    }
}

fn named_max_induced(
    g: &Graph,
    kind: InvariantKind,
    pred: &mut dyn FnMut(&Graph) -> Result<bool>,
    limits: &Limits,
) -> Result<InvariantValue> {
    let (value, set) = max_induced_with_limits(g, pred, limits)?;
    Ok(InvariantValue::of_set(kind, value, set))
}

/// Largest set of vertices inducing a bipartite subgraph.
pub fn max_bipartite(g: &Graph, limits: &Limits) -> Result<InvariantValue> {
    named_max_induced(
        g,
        InvariantKind::Bipartite,
        &mut |h| Ok(h.is_bipartite()),
        limits,
    )
}

/// Largest set of vertices inducing an outerplanar subgraph.
pub fn max_outerplanar(g: &Graph, limits: &Limits) -> Result<InvariantValue> {
    named_max_induced(
        g,
        InvariantKind::Outerplanar,
        &mut |h| planar::is_outerplanar(h),
        limits,
    )
}

/// Largest set of vertices inducing a planar subgraph.
pub fn max_planar(g: &Graph, limits: &Limits) -> Result<InvariantValue> {
    named_max_induced(g, InvariantKind::Planar, &mut |h| planar::is_planar(h), limits)
}
