//! Exact verification of the bound catalog.
//!
//! Every inequality the crate knows about is identified by a
//! [`TheoremId`], evaluated by [`Session::check`] (or the one-shot
//! [`check`]) into a [`BoundCheck`]: both sides as exact rationals, a
//! `holds` flag (`lhs <= rhs`), an `equality` flag (`lhs == rhs`), and
//! the solver certificates that produced the sides. Hypotheses are
//! verified before anything is computed; a graph that fails one gets a
//! [`Error::HypothesisFailed`] naming the failed predicate, never a
//! silently vacuous result.
//!
//! [`applicable_theorems`] lists every catalog entry (with a small
//! parameter grid for the parameterized ones) whose hypotheses a given
//! graph satisfies, and [`equality_characterization`] exposes the known
//! exact descriptions of the equality cases so exhaustive sweeps can
//! cross-check them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::ramsey;
use crate::solve::{self, InvariantKind, InvariantValue, Limits};
use crate::tdp;

/// An exact rational quantity; the two sides of every bound are
/// compared through this type, never through floating point.
///
/// Displays as `"5/3"`, or just `"5"` when the denominator is 1, and
/// serializes as that string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(Ratio<i64>);

impl Exact {
    /// The integer `v` as an exact rational.
    pub fn int(v: usize) -> Exact {
        Exact(Ratio::from_integer(v as i64))
    }

    /// The fraction `num/den` in lowest terms. Panics if `den == 0`;
    /// call sites only build fractions whose denominators are sums of
    /// positive graph parameters.
    pub fn frac(num: i64, den: i64) -> Exact {
        Exact(Ratio::new(num, den))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// The underlying normalized ratio.
    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl From<usize> for Exact {
    fn from(v: usize) -> Exact {
        Exact::int(v)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Exact {
    type Err = Error;

    fn from_str(s: &str) -> Result<Exact> {
        let bad = || Error::SweepConfig(format!("bad rational {s:?}"));
        match s.split_once('/') {
            None => Ok(Exact(Ratio::from_integer(
                s.trim().parse().map_err(|_| bad())?,
            ))),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                let den: i64 = den.trim().parse().map_err(|_| bad())?;
                if den == 0 {
                    return Err(bad());
                }
                Ok(Exact(Ratio::new(num, den)))
            }
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(
        &self,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: serde::Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Exact, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Identifier of one entry in the bound catalog.
///
/// The spellings are stable API tokens used on the command line and in
/// sweep configs. Each doc comment states the inequality the entry
/// evaluates (always oriented `lhs <= rhs`) and its hypotheses.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `alphaF_chromatic_k <= (r-1)*k*gamma` on K_{1,r}-free graphs
    /// (`r >= 3`, `k >= 1`).
    T2_1,
    /// `alphaF_kqfree_q <= (ramsey(r,q) - 1) * gamma` on K_{1,r}-free
    /// graphs (`r, q >= 3`).
    T2_2,
    /// `alphaF_kqfree_q <= ramsey(r,q) * gamma` on K_{1,r}-free graphs:
    /// the clique-free instance of the bound for subgraph-closed
    /// families, one looser than [`TheoremId::T2_2`].
    T2_3_kq_reduction,
    /// `alpha_k <= (r-1)(k+1) / (delta - k + (r-1)(k+1)) * n` on
    /// K_{1,r}-free graphs with `delta >= k + 1` (`r >= 3`, `k >= 0`).
    T2_4,
    /// `n / (Delta + 1) <= gamma` on every graph.
    O3_1,
    /// `n / Delta <= alpha` on connected non-complete graphs with
    /// `Delta >= 3`.
    O3_2,
    /// `alpha <= 2n / (delta + 2)` on claw-free graphs.
    T3_3,
    /// `alpha <= 2*gamma` on claw-free graphs.
    C4_1,
    /// `alpha <= 2(d+1)/(d+2) * gamma` on claw-free d-regular graphs
    /// (`d >= 2`).
    T4_2,
    /// `alpha <= (3/2)*gamma` on 2-regular graphs; equality exactly on
    /// single cycles of length divisible by 6.
    P4_3,
    /// `alpha = n/3` on connected claw-free diamond-free cubic graphs
    /// other than K_4 (an equality statement; the check reports
    /// `alpha <= n/3` and the equality flag).
    O4_5,
    /// `gamma <= n/3` when every vertex lies in a triangle.
    T4_6,
    /// `gamma <= n/3` on connected claw-free cubic graphs; equality
    /// exactly on the triangle-necklace family.
    T4_7_8,
    /// `gamma <= alpha` on connected claw-free cubic graphs; equality
    /// exactly on the triangle-necklace family plus K_4.
    T4_9,
    /// `alpha <= (4/3)*gamma` on claw-free diamond-free cubic graphs.
    T4_10,
    /// `alpha = (4/3)*gamma` on members of the 12-vertex-block cubic
    /// chain family ([`families::g12_chain`]).
    P4_11,
    /// `alpha <= (8/5)*gamma` on connected claw-free cubic graphs;
    /// equality on the 20-vertex-block chain family
    /// ([`families::g20_chain`]).
    P4_12,
    /// `alpha <= (5/3)*gamma` on claw-free 4-regular graphs; equality
    /// on [`families::g15_ring`] and [`families::g30`].
    P4_13,
    /// `alphaF_trianglefree <= (5/k)*gamma_k` on claw-free graphs
    /// (`1 <= k <= 3`).
    T5_1,
    /// `alphaF_trianglefree <= ((k+2)/k)*gamma_k` on claw-free graphs
    /// (`k >= 4`); no graph attaining equality is known.
    R5_remark,
}

/// Whether the shipped constructions attain equality in a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sharpness {
    /// Some shipped family attains equality (asserted by sweeps).
    Attained,
    /// Off by at most one from a bound that is attained; no equality
    /// case is shipped.
    NearlyAttained,
    /// No equality case is known.
    Unknown,
}

impl TheoremId {
    /// Every catalog entry, in report order.
    pub const ALL: [TheoremId; 20] = [
        TheoremId::T2_1,
        TheoremId::T2_2,
        TheoremId::T2_3_kq_reduction,
        TheoremId::T2_4,
        TheoremId::O3_1,
        TheoremId::O3_2,
        TheoremId::T3_3,
        TheoremId::C4_1,
        TheoremId::T4_2,
        TheoremId::P4_3,
        TheoremId::O4_5,
        TheoremId::T4_6,
        TheoremId::T4_7_8,
        TheoremId::T4_9,
        TheoremId::T4_10,
        TheoremId::P4_11,
        TheoremId::P4_12,
        TheoremId::P4_13,
        TheoremId::T5_1,
        TheoremId::R5_remark,
    ];

    /// The stable identifier string.
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T2_1 => "T2_1",
            TheoremId::T2_2 => "T2_2",
            TheoremId::T2_3_kq_reduction => "T2_3_kq_reduction",
            TheoremId::T2_4 => "T2_4",
            TheoremId::O3_1 => "O3_1",
            TheoremId::O3_2 => "O3_2",
            TheoremId::T3_3 => "T3_3",
            TheoremId::C4_1 => "C4_1",
            TheoremId::T4_2 => "T4_2",
            TheoremId::P4_3 => "P4_3",
            TheoremId::O4_5 => "O4_5",
            TheoremId::T4_6 => "T4_6",
            TheoremId::T4_7_8 => "T4_7_8",
            TheoremId::T4_9 => "T4_9",
            TheoremId::T4_10 => "T4_10",
            TheoremId::P4_11 => "P4_11",
            TheoremId::P4_12 => "P4_12",
            TheoremId::P4_13 => "P4_13",
            TheoremId::T5_1 => "T5_1",
            TheoremId::R5_remark => "R5_remark",
        }
    }

    /// The evaluated comparison, in plain text.
    pub fn formula(self) -> &'static str {
        match self {
            TheoremId::T2_1 => "alphaF_chromatic_k <= (r-1)*k*gamma",
            TheoremId::T2_2 => "alphaF_kqfree_q <= (ramsey(r,q)-1)*gamma",
            TheoremId::T2_3_kq_reduction => "alphaF_kqfree_q <= ramsey(r,q)*gamma",
            TheoremId::T2_4 => {
                "alpha_k <= (r-1)(k+1)/(delta-k+(r-1)(k+1)) * n"
            }
            TheoremId::O3_1 => "n/(Delta+1) <= gamma",
            TheoremId::O3_2 => "n/Delta <= alpha",
            TheoremId::T3_3 => "alpha <= 2n/(delta+2)",
            TheoremId::C4_1 => "alpha <= 2*gamma",
            TheoremId::T4_2 => "alpha <= 2(d+1)/(d+2)*gamma",
            TheoremId::P4_3 => "alpha <= (3/2)*gamma",
            TheoremId::O4_5 => "alpha = n/3",
            TheoremId::T4_6 => "gamma <= n/3",
            TheoremId::T4_7_8 => "gamma <= n/3",
            TheoremId::T4_9 => "gamma <= alpha",
            TheoremId::T4_10 => "alpha <= (4/3)*gamma",
            TheoremId::P4_11 => "alpha = (4/3)*gamma",
            TheoremId::P4_12 => "alpha <= (8/5)*gamma",
            TheoremId::P4_13 => "alpha <= (5/3)*gamma",
            TheoremId::T5_1 => "alphaF_trianglefree <= (5/k)*gamma_k",
            TheoremId::R5_remark => "alphaF_trianglefree <= ((k+2)/k)*gamma_k",
        }
    }

    /// Does the statement assert equality (not just `<=`) under its
    /// hypotheses?
    pub fn expects_equality(self) -> bool {
        matches!(self, TheoremId::O4_5 | TheoremId::P4_11)
    }

    /// Whether equality in this bound is attained by shipped
    /// constructions.
    pub fn sharpness(self) -> Sharpness {
        match self {
            TheoremId::T2_3_kq_reduction => Sharpness::NearlyAttained,
            TheoremId::R5_remark => Sharpness::Unknown,
            _ => Sharpness::Attained,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(
        &self,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<TheoremId, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer parameters for a check. Which fields are required depends on
/// the theorem: `r` and `k` for [`TheoremId::T2_1`] / [`TheoremId::T2_4`],
/// `r` and `q` for the clique-family bounds, `k` alone for the
/// k-domination bounds. `d` is optional for [`TheoremId::T4_2`]; when
/// absent it is read off the graph's regularity and recorded in the
/// result.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash,
    Serialize, Deserialize,
)]
pub struct CheckParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

impl CheckParams {
    /// No parameters.
    pub fn none() -> CheckParams {
        CheckParams::default()
    }

    pub fn for_r_k(r: usize, k: usize) -> CheckParams {
        CheckParams {
            r: Some(r),
            k: Some(k),
            ..CheckParams::default()
        }
    }

    pub fn for_r_q(r: usize, q: usize) -> CheckParams {
        CheckParams {
            r: Some(r),
            q: Some(q),
            ..CheckParams::default()
        }
    }

    pub fn for_k(k: usize) -> CheckParams {
        CheckParams {
            k: Some(k),
            ..CheckParams::default()
        }
    }

    pub fn for_d(d: usize) -> CheckParams {
        CheckParams {
            d: Some(d),
            ..CheckParams::default()
        }
    }

    fn suffix(&self) -> String {
        let mut parts = Vec::new();
        for (name, v) in [("r", self.r), ("k", self.k), ("q", self.q), ("d", self.d)]
        {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if parts.is_empty() {
            String::new()
        } else {
            format!("[{}]", parts.join(","))
        }
    }
}

/// The outcome of evaluating one bound on one graph.
///
/// `holds` is exactly `lhs <= rhs` and `equality` exactly `lhs == rhs`,
/// both as rationals. `witnesses` carries the solver certificates the
/// sides were computed from, so a reader can re-verify them against the
/// graph. `notes` records anything the comparison rests on beyond the
/// solvers (currently: which Ramsey constants were used and how they
/// are justified).
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub theorem: TheoremId,
    pub params: CheckParams,
    pub lhs: Exact,
    pub rhs: Exact,
    pub holds: bool,
    pub equality: bool,
    pub witnesses: Vec<InvariantValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundCheck {
    fn finish(
        theorem: TheoremId,
        params: CheckParams,
        lhs: Exact,
        rhs: Exact,
        witnesses: Vec<InvariantValue>,
        notes: Vec<String>,
    ) -> BoundCheck {
        BoundCheck {
            theorem,
            params,
            lhs,
            rhs,
            holds: lhs <= rhs,
            equality: lhs == rhs,
            witnesses,
            notes,
        }
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}: {} <= {} -> {}{}",
            self.theorem,
            self.params.suffix(),
            self.lhs,
            self.rhs,
            if self.holds { "holds" } else { "VIOLATED" },
            if self.equality { " (equality)" } else { "" },
        )
    }
}

/// A per-graph checking session that caches every invariant it
/// computes, so checking many bounds on one graph never solves the same
/// problem twice.
pub struct Session<'g> {
    g: &'g Graph,
    limits: Limits,
    cache: HashMap<InvariantKind, InvariantValue>,
}

impl<'g> Session<'g> {
    pub fn new(g: &'g Graph) -> Session<'g> {
        Session::with_limits(g, Limits::default())
    }

    pub fn with_limits(g: &'g Graph, limits: Limits) -> Session<'g> {
        Session {
            g,
            limits,
            cache: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    /// The value of `kind` on this session's graph, computed at most
    /// once. The triangle-free subgraph invariant and the q = 3
    /// clique-free one are the same computation, so either serves from
    /// the other's cache entry.
    pub fn value(&mut self, kind: InvariantKind) -> Result<InvariantValue> {
        if let Some(v) = self.cache.get(&kind) {
            return Ok(v.clone());
        }
        let alias = match kind {
            InvariantKind::AlphaFTriangleFree => {
                Some(InvariantKind::AlphaFKqFree(3))
            }
            InvariantKind::AlphaFKqFree(3) => Some(InvariantKind::AlphaFTriangleFree),
            _ => None,
        };
        if let Some(alias) = alias {
            if let Some(v) = self.cache.get(&alias) {
                let mut v = v.clone();
                v.kind = kind;
                self.cache.insert(kind, v.clone());
                return Ok(v);
            }
        }
        let v = solve::compute_with_limits(self.g, kind, &self.limits)?;
        self.cache.insert(kind, v.clone());
        Ok(v)
    }

    /// Evaluate one bound. Parameters are validated first, then the
    /// hypotheses in statement order; only then are invariants
    /// computed.
    pub fn check(&mut self, id: TheoremId, params: CheckParams) -> Result<BoundCheck> {
        let g = self.g;
        let n = g.n();
        let hyp = |ok: bool, predicate: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::HypothesisFailed {
                    theorem: id.name(),
                    predicate: predicate.to_string(),
                })
            }
        };
        let need = |v: Option<usize>, param: &'static str| -> Result<usize> {
            v.ok_or(Error::MissingParam {
                theorem: id.name(),
                param,
            })
        };
        let range =
            |v: usize, param: &'static str, ok: bool, req: &'static str| -> Result<usize> {
                if ok {
                    Ok(v)
                } else {
                    Err(Error::ParamOutOfRange {
                        op: id.name(),
                        param,
                        value: v as i64,
                        requirement: req,
                    })
                }
            };

        match id {
            TheoremId::T2_1 => {
                let r = need(params.r, "r")?;
                let r = range(r, "r", r >= 3, "r >= 3")?;
                let k = need(params.k, "k")?;
                let k = range(k, "k", k >= 1, "k >= 1")?;
                hyp(g.is_k1r_free(r), &format!("is_k1r_free({r})"))?;
                let af = self.value(InvariantKind::AlphaFChromatic(k))?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::for_r_k(r, k),
                    Exact::int(af.value),
                    Exact::int((r - 1) * k * gam.value),
                    vec![af, gam],
                    vec![],
                ))
            }
            TheoremId::T2_2 | TheoremId::T2_3_kq_reduction => {
                let r = need(params.r, "r")?;
                let r = range(r, "r", r >= 3, "r >= 3")?;
                let q = need(params.q, "q")?;
                let q = range(q, "q", q >= 3, "q >= 3")?;
                hyp(g.is_k1r_free(r), &format!("is_k1r_free({r})"))?;
                let info = ramsey::ramsey_number(r, q)?;
                let factor = if id == TheoremId::T2_2 {
                    info.value - 1
                } else {
                    info.value
                };
                let af = self.value(InvariantKind::AlphaFKqFree(q))?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::for_r_q(r, q),
                    Exact::int(af.value),
                    Exact::int(factor * gam.value),
                    vec![af, gam],
                    vec![format!(
                        "ramsey({r},{q}) = {} provenance={}",
                        info.value, info.provenance
                    )],
                ))
            }
            TheoremId::T2_4 => {
                let r = need(params.r, "r")?;
                let r = range(r, "r", r >= 3, "r >= 3")?;
                let k = need(params.k, "k")?;
                hyp(g.is_k1r_free(r), &format!("is_k1r_free({r})"))?;
                let delta = g.min_degree();
                hyp(delta >= k + 1, &format!("min_degree >= {}", k + 1))?;
                let ak = self.value(InvariantKind::AlphaK(k))?;
                let num = ((r - 1) * (k + 1) * n) as i64;
                let den = (delta - k + (r - 1) * (k + 1)) as i64;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::for_r_k(r, k),
                    Exact::int(ak.value),
                    Exact::frac(num, den),
                    vec![ak],
                    vec![],
                ))
            }
            TheoremId::O3_1 => {
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::frac(n as i64, (g.max_degree() + 1) as i64),
                    Exact::int(gam.value),
                    vec![gam],
                    vec![],
                ))
            }
            TheoremId::O3_2 => {
                hyp(g.is_connected(), "is_connected")?;
                hyp(!g.is_complete(), "graph is not complete")?;
                hyp(g.max_degree() >= 3, "max_degree >= 3")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::frac(n as i64, g.max_degree() as i64),
                    Exact::int(alpha.value),
                    vec![alpha],
                    vec![],
                ))
            }
            TheoremId::T3_3 => {
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::frac(2 * n as i64, (g.min_degree() + 2) as i64),
                    vec![alpha],
                    vec![],
                ))
            }
            TheoremId::C4_1 => {
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::int(2 * gam.value),
                    vec![alpha, gam],
                    vec![],
                ))
            }
            TheoremId::T4_2 => {
                let d = match (params.d, g.regularity()) {
                    (Some(d), Some(actual)) if d == actual => d,
                    (None, Some(actual)) => actual,
                    (Some(d), _) => {
                        return Err(Error::HypothesisFailed {
                            theorem: id.name(),
                            predicate: format!("regular of degree {d}"),
                        })
                    }
                    (None, None) => {
                        return Err(Error::HypothesisFailed {
                            theorem: id.name(),
                            predicate: "regular".to_string(),
                        })
                    }
                };
                hyp(d >= 2, "degree >= 2")?;
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::for_d(d),
                    Exact::int(alpha.value),
                    Exact::frac(
                        2 * (d as i64 + 1) * gam.value as i64,
                        d as i64 + 2,
                    ),
                    vec![alpha, gam],
                    vec![],
                ))
            }
            TheoremId::P4_3 => {
                hyp(g.regularity() == Some(2), "2-regular")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::frac(3 * gam.value as i64, 2),
                    vec![alpha, gam],
                    vec![],
                ))
            }
            TheoremId::O4_5 => {
                hyp(g.is_connected(), "is_connected")?;
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                hyp(g.is_diamond_free(), "is_diamond_free")?;
                hyp(g.regularity() == Some(3), "3-regular")?;
                hyp(!(n == 4 && g.is_complete()), "graph != K_4")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::frac(n as i64, 3),
                    vec![alpha],
                    vec![],
                ))
            }
            TheoremId::T4_6 => {
                hyp(g.every_vertex_in_triangle(), "every_vertex_in_triangle")?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(gam.value),
                    Exact::frac(n as i64, 3),
                    vec![gam],
                    vec![],
                ))
            }
            TheoremId::T4_7_8 => {
                hyp(g.is_connected(), "is_connected")?;
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                hyp(g.regularity() == Some(3), "3-regular")?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(gam.value),
                    Exact::frac(n as i64, 3),
                    vec![gam],
                    vec![],
                ))
            }
            TheoremId::T4_9 => {
                hyp(g.is_connected(), "is_connected")?;
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                hyp(g.regularity() == Some(3), "3-regular")?;
                let gam = self.value(InvariantKind::Gamma)?;
                let alpha = self.value(InvariantKind::Alpha)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(gam.value),
                    Exact::int(alpha.value),
                    vec![gam, alpha],
                    vec![],
                ))
            }
            TheoremId::T4_10 => {
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                hyp(g.is_diamond_free(), "is_diamond_free")?;
                hyp(g.regularity() == Some(3), "3-regular")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::frac(4 * gam.value as i64, 3),
                    vec![alpha, gam],
                    vec![],
                ))
            }
            TheoremId::P4_11 => {
                hyp(
                    families::is_g12_chain(g),
                    "member of the g12_chain family",
                )?;
                let alpha = self.value(InvariantKind::Alpha)?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::frac(4 * gam.value as i64, 3),
                    vec![alpha, gam],
                    vec![],
                ))
            }
            TheoremId::P4_12 => {
                hyp(g.is_connected(), "is_connected")?;
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                hyp(g.regularity() == Some(3), "3-regular")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::frac(8 * gam.value as i64, 5),
                    vec![alpha, gam],
                    vec![],
                ))
            }
            TheoremId::P4_13 => {
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                hyp(g.regularity() == Some(4), "4-regular")?;
                let alpha = self.value(InvariantKind::Alpha)?;
                let gam = self.value(InvariantKind::Gamma)?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::none(),
                    Exact::int(alpha.value),
                    Exact::frac(5 * gam.value as i64, 3),
                    vec![alpha, gam],
                    vec![],
                ))
            }
            TheoremId::T5_1 => {
                let k = need(params.k, "k")?;
                let k = range(k, "k", (1..=3).contains(&k), "1 <= k <= 3")?;
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                let af = self.value(InvariantKind::AlphaFTriangleFree)?;
                let gk = self.value(InvariantKind::GammaK(k))?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::for_k(k),
                    Exact::int(af.value),
                    Exact::frac(5 * gk.value as i64, k as i64),
                    vec![af, gk],
                    vec![],
                ))
            }
            TheoremId::R5_remark => {
                let k = need(params.k, "k")?;
                let k = range(k, "k", k >= 4, "k >= 4")?;
                hyp(g.is_k1r_free(3), "is_k1r_free(3)")?;
                let af = self.value(InvariantKind::AlphaFTriangleFree)?;
                let gk = self.value(InvariantKind::GammaK(k))?;
                Ok(BoundCheck::finish(
                    id,
                    CheckParams::for_k(k),
                    Exact::int(af.value),
                    Exact::frac((k as i64 + 2) * gk.value as i64, k as i64),
                    vec![af, gk],
                    vec![],
                ))
            }
        }
    }

    /// Evaluate every applicable catalog entry (see
    /// [`applicable_theorems`]) on this session's graph.
    pub fn check_all_applicable(&mut self) -> Result<Vec<BoundCheck>> {
        applicable_theorems(self.g)
            .into_iter()
            .map(|(id, params)| self.check(id, params))
            .collect()
    }
}

/// One-shot convenience wrapper: evaluate a single bound on `g`.
pub fn check(g: &Graph, id: TheoremId, params: CheckParams) -> Result<BoundCheck> {
    Session::new(g).check(id, params)
}

/// Every catalog entry whose hypotheses `g` satisfies, with a bounded
/// parameter grid for the parameterized ones:
///
/// - `r` is the least value in `3..=5` for which `g` has no induced
///   K_{1,r} star;
/// - chromatic caps `k` run over `1..=3`, clique orders `q` over `3..=4`
///   (and only where the Ramsey table has an entry for `(r, q)`);
/// - degree caps for the k-independence bound run over `0..=2`, gated
///   on the minimum-degree hypothesis;
/// - the k-domination bounds use `k` in `1..=3` and `4..=5`.
///
/// The result is sorted in catalog order, then by parameters.
pub fn applicable_theorems(g: &Graph) -> Vec<(TheoremId, CheckParams)> {
    let mut out: Vec<(TheoremId, CheckParams)> = Vec::new();
    let n = g.n();
    let delta = g.min_degree();
    let reg = g.regularity();
    let connected = g.is_connected();
    let min_r = (3..=5).find(|&r| g.is_k1r_free(r));
    let claw_free = min_r == Some(3);

    if let Some(r) = min_r {
        for k in 1..=3 {
            out.push((TheoremId::T2_1, CheckParams::for_r_k(r, k)));
        }
        for q in 3..=4 {
            if ramsey::ramsey_number(r, q).is_ok() {
                out.push((TheoremId::T2_2, CheckParams::for_r_q(r, q)));
                out.push((
                    TheoremId::T2_3_kq_reduction,
                    CheckParams::for_r_q(r, q),
                ));
            }
        }
        for k in 0..=2 {
            if delta >= k + 1 {
                out.push((TheoremId::T2_4, CheckParams::for_r_k(r, k)));
            }
        }
    }

    out.push((TheoremId::O3_1, CheckParams::none()));
    if connected && !g.is_complete() && g.max_degree() >= 3 {
        out.push((TheoremId::O3_2, CheckParams::none()));
    }
    if g.every_vertex_in_triangle() {
        out.push((TheoremId::T4_6, CheckParams::none()));
    }

    if claw_free {
        out.push((TheoremId::T3_3, CheckParams::none()));
        out.push((TheoremId::C4_1, CheckParams::none()));
        if let Some(d) = reg {
            if d >= 2 {
                out.push((TheoremId::T4_2, CheckParams::for_d(d)));
            }
        }
        if reg == Some(2) {
            out.push((TheoremId::P4_3, CheckParams::none()));
        }
        if reg == Some(3) {
            if connected {
                out.push((TheoremId::T4_7_8, CheckParams::none()));
                out.push((TheoremId::T4_9, CheckParams::none()));
                out.push((TheoremId::P4_12, CheckParams::none()));
                if g.is_diamond_free() && !(n == 4 && g.is_complete()) {
                    out.push((TheoremId::O4_5, CheckParams::none()));
                }
            }
            if g.is_diamond_free() {
                out.push((TheoremId::T4_10, CheckParams::none()));
            }
            if families::is_g12_chain(g) {
                out.push((TheoremId::P4_11, CheckParams::none()));
            }
        }
        if reg == Some(4) {
            out.push((TheoremId::P4_13, CheckParams::none()));
        }
        for k in 1..=3 {
            out.push((TheoremId::T5_1, CheckParams::for_k(k)));
        }
        for k in 4..=5 {
            out.push((TheoremId::R5_remark, CheckParams::for_k(k)));
        }
    }

    out.sort();
    out
}

/// The known exact description of the equality case, where one exists:
/// `Some(p)` means equality is attained on `g` if and only if `p`,
/// `None` means no characterization is part of the catalog. Callers
/// (exhaustive sweeps) compare this prediction against the computed
/// `equality` flag.
pub fn equality_characterization(id: TheoremId, g: &Graph) -> Option<bool> {
    match id {
        TheoremId::P4_3 => {
            Some(families::is_single_cycle(g) && g.n() % 6 == 0)
        }
        TheoremId::T4_7_8 => Some(tdp::is_triangle_necklace(g)),
        TheoremId::T4_9 => Some(
            tdp::is_triangle_necklace(g) || (g.n() == 4 && g.is_complete()),
        ),
        TheoremId::O4_5 | TheoremId::P4_11 => Some(true),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        c5_join_clique, cycle, g12_chain, g15, join_cliques, triangle_necklace,
    };

    #[test]
    fn exact_display_parse_serde() {
        assert_eq!(Exact::frac(5, 3).to_string(), "5/3");
        assert_eq!(Exact::int(4).to_string(), "4");
        assert_eq!(Exact::frac(10, 2), Exact::int(5));
        assert_eq!("5/3".parse::<Exact>().unwrap(), Exact::frac(5, 3));
        assert_eq!("7".parse::<Exact>().unwrap(), Exact::int(7));
        assert!("7/0".parse::<Exact>().is_err());
        assert!("x/2".parse::<Exact>().is_err());
        assert!(Exact::frac(3, 2) < Exact::int(2));
        let json = serde_json::to_string(&Exact::frac(8, 5)).unwrap();
        assert_eq!(json, "\"8/5\"");
        let back: Exact = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Exact::frac(8, 5));
    }

    #[test]
    fn theorem_id_names_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("t4_10".parse::<TheoremId>().unwrap(), TheoremId::T4_10);
        assert!(matches!(
            "T9_9".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
        assert_eq!(
            serde_json::to_string(&TheoremId::T2_3_kq_reduction).unwrap(),
            "\"T2_3_kq_reduction\""
        );
    }

    #[test]
    fn two_regular_bound_equality_exactly_on_length_multiple_of_six() {
        let c6 = cycle(6).unwrap();
        let r = check(&c6, TheoremId::P4_3, CheckParams::none()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!((r.lhs, r.rhs), (Exact::int(3), Exact::int(3)));
        assert_eq!(equality_characterization(TheoremId::P4_3, &c6), Some(true));

        let c5 = cycle(5).unwrap();
        let r = check(&c5, TheoremId::P4_3, CheckParams::none()).unwrap();
        assert!(r.holds && !r.equality);
        assert_eq!(equality_characterization(TheoremId::P4_3, &c5), Some(false));
    }

    #[test]
    fn regular_claw_free_bound_tight_on_four_regular_block() {
        let g = g15();
        let r = check(&g, TheoremId::T4_2, CheckParams::none()).unwrap();
        assert_eq!(r.params.d, Some(4));
        assert_eq!((r.lhs, r.rhs), (Exact::int(5), Exact::int(5)));
        assert!(r.holds && r.equality);
        for w in &r.witnesses {
            assert_eq!(w.verify(&g), Ok(true));
        }

        // An explicit wrong degree parameter is a hypothesis failure.
        let err = check(&g, TheoremId::T4_2, CheckParams::for_d(3)).unwrap_err();
        assert!(matches!(err, Error::HypothesisFailed { theorem: "T4_2", .. }));
    }

    #[test]
    fn domination_vs_independence_on_cubic_graphs() {
        let k4 = Graph::complete(4).unwrap();
        let r = check(&k4, TheoremId::T4_9, CheckParams::none()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!((r.lhs, r.rhs), (Exact::int(1), Exact::int(1)));
        assert_eq!(equality_characterization(TheoremId::T4_9, &k4), Some(true));

        let prism = triangle_necklace(1).unwrap();
        let r = check(&prism, TheoremId::O4_5, CheckParams::none()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!(
            equality_characterization(TheoremId::T4_7_8, &prism),
            Some(true)
        );
    }

    #[test]
    fn chain_family_attains_four_thirds() {
        let g = g12_chain(2).unwrap();
        let r = check(&g, TheoremId::T4_10, CheckParams::none()).unwrap();
        assert_eq!((r.lhs, r.rhs), (Exact::int(8), Exact::int(8)));
        assert!(r.equality);
        let r = check(&g, TheoremId::P4_11, CheckParams::none()).unwrap();
        assert!(r.equality);
        assert_eq!(equality_characterization(TheoremId::P4_11, &g), Some(true));
    }

    #[test]
    fn chromatic_cap_bound_tight_on_join_construction() {
        let g = join_cliques(3, 2, 1).unwrap();
        let r = check(&g, TheoremId::T2_1, CheckParams::for_r_k(3, 2)).unwrap();
        assert_eq!((r.lhs, r.rhs), (Exact::int(4), Exact::int(4)));
        assert!(r.holds && r.equality);
    }

    #[test]
    fn k_domination_bound_tight_on_c5_joins() {
        for k in 1..=3 {
            let g = c5_join_clique(k).unwrap();
            let r = check(&g, TheoremId::T5_1, CheckParams::for_k(k)).unwrap();
            assert_eq!(r.lhs, Exact::int(5));
            assert!(r.equality, "k = {k}: {r}");
        }
    }

    #[test]
    fn ramsey_backed_checks_report_provenance_or_fail_closed() {
        let g = c5_join_clique(1).unwrap();
        let r = check(&g, TheoremId::T2_2, CheckParams::for_r_q(3, 3)).unwrap();
        assert_eq!(r.lhs, Exact::int(5));
        assert_eq!(r.rhs, Exact::int(5));
        assert!(r.equality);
        assert_eq!(r.notes.len(), 1);
        assert!(r.notes[0].contains("ramsey(3,3) = 6"));
        assert!(r.notes[0].contains("verified_both_sides"));

        let loose =
            check(&g, TheoremId::T2_3_kq_reduction, CheckParams::for_r_q(3, 3))
                .unwrap();
        assert_eq!(loose.rhs, Exact::int(6));
        assert!(loose.holds && !loose.equality);

        // Outside the stored table the check refuses rather than guesses.
        let c5 = cycle(5).unwrap();
        let err = check(&c5, TheoremId::T2_2, CheckParams::for_r_q(5, 5))
            .unwrap_err();
        assert_eq!(err, Error::RamseyOutOfTable { r: 5, q: 5 });
    }

    #[test]
    fn hypothesis_failures_name_the_predicate() {
        let k5 = Graph::complete(5).unwrap();
        match check(&k5, TheoremId::O3_2, CheckParams::none()) {
            Err(Error::HypothesisFailed { theorem, predicate }) => {
                assert_eq!(theorem, "O3_2");
                assert!(predicate.contains("complete"));
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }

        let two_parts = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        match check(&two_parts, TheoremId::O3_2, CheckParams::none()) {
            Err(Error::HypothesisFailed { predicate, .. }) => {
                assert_eq!(predicate, "is_connected");
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }

        let petersen = crate::codec::parse_graph6("IsP@PGXD_").unwrap();
        assert!(!petersen.is_k1r_free(3));
        match check(&petersen, TheoremId::C4_1, CheckParams::none()) {
            Err(Error::HypothesisFailed { predicate, .. }) => {
                assert_eq!(predicate, "is_k1r_free(3)");
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }
    }

    #[test]
    fn missing_parameters_are_reported() {
        let c6 = cycle(6).unwrap();
        assert_eq!(
            check(&c6, TheoremId::T2_1, CheckParams::none()).unwrap_err(),
            Error::MissingParam {
                theorem: "T2_1",
                param: "r"
            }
        );
        assert!(matches!(
            check(&c6, TheoremId::T5_1, CheckParams::for_k(4)).unwrap_err(),
            Error::ParamOutOfRange { op: "T5_1", .. }
        ));
    }

    #[test]
    fn applicable_catalog_on_a_hexagon() {
        let c6 = cycle(6).unwrap();
        let apps = applicable_theorems(&c6);
        let ids: Vec<TheoremId> = apps.iter().map(|(id, _)| *id).collect();
        assert!(ids.contains(&TheoremId::P4_3));
        assert!(ids.contains(&TheoremId::T4_2));
        assert!(ids.contains(&TheoremId::T3_3));
        assert!(ids.contains(&TheoremId::C4_1));
        assert!(ids.contains(&TheoremId::T5_1));
        assert!(ids.contains(&TheoremId::R5_remark));
        assert!(ids.contains(&TheoremId::O3_1));
        // Max degree 2 rules these out.
        assert!(!ids.contains(&TheoremId::O3_2));
        assert!(!ids.contains(&TheoremId::T4_7_8));
        // Sorted catalog order.
        let mut sorted = apps.clone();
        sorted.sort();
        assert_eq!(apps, sorted);

        let mut session = Session::new(&c6);
        for r in session.check_all_applicable().unwrap() {
            assert!(r.holds, "{r}");
        }
    }

    #[test]
    fn session_reuses_the_triangle_free_computation() {
        let g = c5_join_clique(2).unwrap();
        let mut s = Session::new(&g);
        let a = s.value(InvariantKind::AlphaFTriangleFree).unwrap();
        let b = s.value(InvariantKind::AlphaFKqFree(3)).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.kind, InvariantKind::AlphaFTriangleFree);
        assert_eq!(b.kind, InvariantKind::AlphaFKqFree(3));
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn bound_check_serializes_with_named_fields() {
        let g = g15();
        let r = check(&g, TheoremId::T4_2, CheckParams::none()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["theorem"], "T4_2");
        assert_eq!(v["params"]["d"], 4);
        assert_eq!(v["lhs"], "5");
        assert_eq!(v["rhs"], "5");
        assert_eq!(v["holds"], true);
        assert_eq!(v["equality"], true);
        assert_eq!(v["witnesses"][0]["invariant"], "alpha");
        assert!(v["witnesses"][0]["witness"]["set"].is_array());
        assert_eq!(
            r.to_string(),
            "T4_2[d=4]: 5 <= 5 -> holds (equality)"
        );
    }

    use crate::graph::Graph;
}
