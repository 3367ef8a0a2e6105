//! Exact invariant solvers.
//!
//! Every solver returns an [`InvariantValue`]: the exact value plus a
//! witness that can be re-checked against the defining predicate with
//! [`InvariantValue::verify`]. Maximization solvers return the
//! lexicographically least optimal vertex set (compare
//! [`VertexSet::lex_cmp`]); minimization solvers do the same; the
//! chromatic solver returns the lexicographically least optimal color
//! vector. This makes every output deterministic and directly comparable
//! against the brute-force oracles in [`oracle`].

pub(crate) mod subset;

mod alpha;
mod alpha_f;
mod chi;
mod gamma;
pub mod oracle;

pub use alpha::{alpha, alpha_k};
pub use alpha_f::{
    alpha_f_chromatic, alpha_f_chromatic_with_limits, alpha_f_kq_free,
    alpha_f_kq_free_with_limits, alpha_f_triangle_free, max_bipartite, max_induced,
    max_induced_with_limits, max_outerplanar, max_planar,
};
pub use chi::{chi, is_k_colorable};
pub use gamma::{gamma, gamma_k};

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar;

/// Which invariant an [`InvariantValue`] reports, together with its
/// integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    /// Independence number.
    Alpha,
    /// Domination number.
    Gamma,
    /// k-domination number (every vertex outside the set has at least k
    /// neighbors inside).
    GammaK(usize),
    /// k-independence number (largest set inducing maximum degree ≤ k).
    AlphaK(usize),
    /// Chromatic number.
    Chi,
    /// Largest induced subgraph with chromatic number ≤ k.
    AlphaFChromatic(usize),
    /// Largest induced subgraph with no clique on q vertices.
    AlphaFKqFree(usize),
    /// Largest induced triangle-free subgraph.
    AlphaFTriangleFree,
    /// Largest induced bipartite subgraph.
    Bipartite,
    /// Largest induced outerplanar subgraph.
    Outerplanar,
    /// Largest induced planar subgraph.
    Planar,
}

impl std::fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InvariantKind::Alpha => write!(f, "alpha"),
            InvariantKind::Gamma => write!(f, "gamma"),
            InvariantKind::GammaK(k) => write!(f, "gamma_{k}"),
            InvariantKind::AlphaK(k) => write!(f, "alpha_{k}"),
            InvariantKind::Chi => write!(f, "chi"),
            InvariantKind::AlphaFChromatic(k) => write!(f, "alphaF_chromatic_{k}"),
            InvariantKind::AlphaFKqFree(q) => write!(f, "alphaF_kqfree_{q}"),
            InvariantKind::AlphaFTriangleFree => write!(f, "alphaF_trianglefree"),
            InvariantKind::Bipartite => write!(f, "bipartite"),
            InvariantKind::Outerplanar => write!(f, "outerplanar"),
            InvariantKind::Planar => write!(f, "planar"),
        }
    }
}

impl std::str::FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<InvariantKind> {
        let parse_suffix = |rest: &str| -> Option<usize> { rest.parse().ok() };
        Ok(match s {
            "alpha" => InvariantKind::Alpha,
            "gamma" => InvariantKind::Gamma,
            "chi" => InvariantKind::Chi,
            "alphaF_trianglefree" => InvariantKind::AlphaFTriangleFree,
            "bipartite" => InvariantKind::Bipartite,
            "outerplanar" => InvariantKind::Outerplanar,
            "planar" => InvariantKind::Planar,
            _ => {
                if let Some(rest) = s.strip_prefix("gamma_") {
                    InvariantKind::GammaK(parse_suffix(rest).ok_or_else(|| {
                        Error::SweepConfig(format!("bad invariant name {s:?}"))
                    })?)
                } else if let Some(rest) = s.strip_prefix("alphaF_chromatic_") {
                    InvariantKind::AlphaFChromatic(parse_suffix(rest).ok_or_else(
                        || Error::SweepConfig(format!("bad invariant name {s:?}")),
                    )?)
                } else if let Some(rest) = s.strip_prefix("alphaF_kqfree_") {
                    InvariantKind::AlphaFKqFree(parse_suffix(rest).ok_or_else(|| {
                        Error::SweepConfig(format!("bad invariant name {s:?}"))
                    })?)
                } else if let Some(rest) = s.strip_prefix("alpha_") {
                    InvariantKind::AlphaK(parse_suffix(rest).ok_or_else(|| {
                        Error::SweepConfig(format!("bad invariant name {s:?}"))
                    })?)
                } else {
                    return Err(Error::SweepConfig(format!("bad invariant name {s:?}")));
                }
            }
        })
    }
}

/// A certificate accompanying an invariant value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A vertex set achieving the value (all invariants except the
    /// chromatic number).
    Set(VertexSet),
    /// A proper coloring using exactly `value` colors, one entry per
    /// vertex.
    Coloring(Vec<u32>),
}

impl Witness {
    /// The vertex set inside, for set-valued witnesses.
    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Witness::Set(s) => Some(s),
            Witness::Coloring(_) => None,
        }
    }

    /// The coloring inside, for coloring witnesses.
    pub fn as_coloring(&self) -> Option<&[u32]> {
        match self {
            Witness::Set(_) => None,
            Witness::Coloring(c) => Some(c),
        }
    }
}

/// An exactly computed invariant with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub value: usize,
    pub witness: Witness,
}

impl InvariantValue {
    pub(crate) fn of_set(kind: InvariantKind, value: usize, set: VertexSet) -> Self {
        InvariantValue {
            kind,
            value,
            witness: Witness::Set(set),
        }
    }

    /// Re-check the witness against the defining predicate of the
    /// invariant on `g`: the witness must have the reported cardinality
    /// (or color count) and satisfy the predicate. This checks
    /// certification, not optimality.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        match (&self.kind, &self.witness) {
            (InvariantKind::Chi, Witness::Coloring(colors)) => {
                if colors.len() != g.n() {
                    return Ok(false);
                }
                let used: std::collections::HashSet<u32> =
                    colors.iter().copied().collect();
                if used.len() != self.value
                    || colors.iter().any(|&c| c as usize >= self.value)
                {
                    return Ok(false);
                }
                Ok(g.edges().iter().all(|&(u, v)| colors[u] != colors[v]))
            }
            (InvariantKind::Chi, _) => Ok(false),
            (kind, Witness::Set(s)) => {
                if s.len() != self.value || s.iter().any(|v| v >= g.n()) {
                    return Ok(false);
                }
                let ind = || g.induced(s);
                Ok(match *kind {
                    InvariantKind::Alpha => {
                        s.iter().all(|v| (g.neighbors(v) & *s).is_empty())
                    }
                    InvariantKind::Gamma => is_dominating(g, s, 1),
                    InvariantKind::GammaK(k) => is_dominating(g, s, k),
                    InvariantKind::AlphaK(k) => {
                        s.iter().all(|v| (g.neighbors(v) & *s).len() <= k)
                    }
                    InvariantKind::Chi => unreachable!(),
                    InvariantKind::AlphaFChromatic(k) => is_k_colorable(&ind(), k),
                    InvariantKind::AlphaFKqFree(q) => !ind().contains_clique(q),
                    InvariantKind::AlphaFTriangleFree => !ind().contains_clique(3),
                    InvariantKind::Bipartite => ind().is_bipartite(),
                    InvariantKind::Outerplanar => planar::is_outerplanar(&ind())?,
                    InvariantKind::Planar => planar::is_planar(&ind())?,
                })
            }
            (_, Witness::Coloring(_)) => Ok(false),
        }
    }
}

// JSON forms used by reports: a kind serializes as its display name, a
// witness as {"set": [vertices...]} or {"coloring": [colors...]}.
impl serde::Serialize for InvariantKind {
    fn serialize<S: serde::Serializer>(
        &self,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for Witness {
    fn serialize<S: serde::Serializer>(
        &self,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(1))?;
        match self {
            Witness::Set(set) => {
                m.serialize_entry("set", &set.iter().collect::<Vec<_>>())?
            }
            Witness::Coloring(c) => m.serialize_entry("coloring", c)?,
        }
        m.end()
    }
}

impl serde::Serialize for InvariantValue {
    fn serialize<S: serde::Serializer>(
        &self,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("InvariantValue", 3)?;
        st.serialize_field("invariant", &self.kind)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

/// Is `d` a k-dominating set of `g` (every vertex outside `d` has at
/// least `k` neighbors inside `d`)?
pub fn is_dominating(g: &Graph, d: &VertexSet, k: usize) -> bool {
    (0..g.n()).all(|v| d.contains(v) || (g.neighbors(v) & *d).len() >= k)
}

/// Size caps for the subset-search solvers. The defaults keep every
/// search comfortably interactive; raise them explicitly for larger
/// instances.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Cap for the chromatic-family and clique-free-family searches.
    pub alpha_f: usize,
    /// Cap for black-box hereditary subgraph search (and the bipartite /
    /// outerplanar / planar invariants built on it).
    pub max_induced: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            alpha_f: 30,
            max_induced: 22,
        }
    }
}

/// Compute any invariant through one entry point (default limits).
pub fn compute(g: &Graph, kind: InvariantKind) -> Result<InvariantValue> {
    compute_with_limits(g, kind, &Limits::default())
}

/// Compute any invariant through one entry point.
pub fn compute_with_limits(
    g: &Graph,
    kind: InvariantKind,
    limits: &Limits,
) -> Result<InvariantValue> {
    match kind {
        InvariantKind::Alpha => Ok(alpha(g)),
        InvariantKind::Gamma => Ok(gamma(g)),
        InvariantKind::GammaK(k) => gamma_k(g, k),
        InvariantKind::AlphaK(k) => Ok(alpha_k(g, k)),
        InvariantKind::Chi => Ok(chi(g)),
        InvariantKind::AlphaFChromatic(k) => {
            alpha_f_chromatic_with_limits(g, k, limits)
        }
        InvariantKind::AlphaFKqFree(q) => alpha_f_kq_free_with_limits(g, q, limits),
        InvariantKind::AlphaFTriangleFree => alpha_f_kq_free_with_limits(g, 3, limits)
            .map(|mut iv| {
                iv.kind = InvariantKind::AlphaFTriangleFree;
                iv
            }),
        InvariantKind::Bipartite => max_bipartite(g, limits),
        InvariantKind::Outerplanar => max_outerplanar(g, limits),
        InvariantKind::Planar => max_planar(g, limits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_strings_round_trip() {
        let kinds = [
            InvariantKind::Alpha,
            InvariantKind::Gamma,
            InvariantKind::GammaK(2),
            InvariantKind::AlphaK(1),
            InvariantKind::Chi,
            InvariantKind::AlphaFChromatic(3),
            InvariantKind::AlphaFKqFree(4),
            InvariantKind::AlphaFTriangleFree,
            InvariantKind::Bipartite,
            InvariantKind::Outerplanar,
            InvariantKind::Planar,
        ];
        for k in kinds {
            let s = k.to_string();
            assert_eq!(s.parse::<InvariantKind>().unwrap(), k, "{s}");
        }
        assert!("alpha_x".parse::<InvariantKind>().is_err());
        assert!("nonsense".parse::<InvariantKind>().is_err());
    }

    #[test]
    fn dominating_predicate() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_dominating(&star, &VertexSet::singleton(0), 1));
        assert!(!is_dominating(&star, &VertexSet::singleton(1), 1));
        assert!(!is_dominating(&star, &VertexSet::singleton(0), 2));
    }
}
