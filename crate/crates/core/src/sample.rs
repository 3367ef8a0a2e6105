//! Seeded random generation of star-free graphs.
//!
//! Two strategies produce graphs with no induced K_{1,r}:
//!
//! - [`SampleStrategy::Rejection`]: draw an Erdős–Rényi graph with an
//!   edge probability tuned so the expected number of induced K_{1,r}
//!   stars is near one, and reject draws that contain one. Works for
//!   every `r >= 3`.
//! - [`SampleStrategy::LineGraph`]: take the line graph of a random
//!   base graph. Line graphs never contain an induced K_{1,3}, so this
//!   produces sparser claw-free graphs than rejection can reach, but it
//!   only applies when `r = 3`.
//!
//! All draws are keyed by an explicit seed through a fixed-stream
//! generator, so a `(seed, parameters)` pair reproduces the identical
//! graph on every platform, and [`derive_seed`] splits one base seed
//! into independent per-index seeds for batch and parallel use.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// How to generate a K_{1,r}-free graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleStrategy {
    /// Tuned Erdős–Rényi draws filtered by the star-freeness predicate.
    Rejection,
    /// Line graphs of random base graphs (claw-free by construction;
    /// requires `r = 3`).
    LineGraph,
}

impl Default for SampleStrategy {
    fn default() -> SampleStrategy {
        SampleStrategy::Rejection
    }
}

impl std::fmt::Display for SampleStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SampleStrategy::Rejection => "rejection",
            SampleStrategy::LineGraph => "line_graph",
        })
    }
}

impl std::str::FromStr for SampleStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<SampleStrategy> {
        match s {
            "rejection" => Ok(SampleStrategy::Rejection),
            "line_graph" => Ok(SampleStrategy::LineGraph),
            _ => Err(Error::SweepConfig(format!("bad sample strategy {s:?}"))),
        }
    }
}

/// Attempt cap for one sampled graph before reporting exhaustion.
pub const DEFAULT_SAMPLE_BUDGET: usize = 20_000;

/// Mix a base seed and an index into an independent per-index seed
/// (splitmix64 finalizer over a Weyl step). Distinct `(base, index)`
/// pairs give well-separated streams, so batches can be generated in
/// parallel and still be reproducible element by element.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Edge probability for an order-`nv` Erdős–Rényi draw, chosen so the
/// expected number of induced K_{1,r} stars is near one: solves
/// `nv * C(nv-1, r) * (1-p)^C(r,2) ~= 1` for `p` (the `p^r` factor is
/// close to one in the regime this targets and is ignored).
fn tuned_edge_probability(r: usize, nv: usize) -> f64 {
    if nv <= r {
        // No star fits; any density is accepted.
        return 0.5;
    }
    let stars = (nv as f64) * binomial(nv - 1, r);
    let nonedge_pairs = (r * (r - 1) / 2) as f64;
    let q = (1.0 / stars).powf(1.0 / nonedge_pairs);
    (1.0 - q).clamp(0.30, 0.995)
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut out = 1.0;
    for i in 0..k {
        out *= (n - i) as f64 / (k - i) as f64;
    }
    out
}

fn gnp(nv: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(nv).expect("order is bounded by the caller");
    for u in 0..nv {
        for v in (u + 1)..nv {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Draw one K_{1,r}-free graph on at most `n` vertices, using the
/// default attempt budget. See [`sample_k1r_free_with_budget`].
pub fn sample_k1r_free(
    r: usize,
    n: usize,
    seed: u64,
    strategy: SampleStrategy,
) -> Result<Graph> {
    sample_k1r_free_with_budget(r, n, seed, strategy, DEFAULT_SAMPLE_BUDGET)
}

/// Draw one K_{1,r}-free graph on at most `n` vertices (`r >= 3`,
/// `n >= 1`; the order is drawn uniformly from `1..=n`). A fixed
/// `(r, n, seed, strategy)` tuple always produces the identical graph.
/// Fails with [`Error::SampleBudgetExhausted`] if no draw is accepted
/// within `budget` attempts.
pub fn sample_k1r_free_with_budget(
    r: usize,
    n: usize,
    seed: u64,
    strategy: SampleStrategy,
    budget: usize,
) -> Result<Graph> {
    if r < 3 {
        return Err(Error::ParamOutOfRange {
            op: "sample_k1r_free",
            param: "r",
            value: r as i64,
            requirement: "r >= 3",
        });
    }
    if n < 1 || n > crate::bits::MAX_VERTICES {
        return Err(Error::ParamOutOfRange {
            op: "sample_k1r_free",
            param: "n",
            value: n as i64,
            requirement: "1 <= n <= 512",
        });
    }
    if strategy == SampleStrategy::LineGraph && r != 3 {
        return Err(Error::ParamOutOfRange {
            op: "sample_k1r_free",
            param: "r",
            value: r as i64,
            requirement: "r = 3 for the line_graph strategy",
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..budget {
        let g = match strategy {
            SampleStrategy::Rejection => {
                let nv = rng.gen_range(1..=n);
                // Spread densities around the tuned value so accepted
                // graphs are not all near one density.
                let base_p = tuned_edge_probability(r, nv);
                let jitter = 0.5 + rng.gen::<f64>();
                let p = 1.0 - ((1.0 - base_p) * jitter).min(0.7);
                gnp(nv, p, &mut rng)
            }
            SampleStrategy::LineGraph => {
                let base_order = rng.gen_range(3..=12usize);
                let max_edges = base_order * (base_order - 1) / 2;
                let target = rng.gen_range(1..=n.min(max_edges));
                let p = target as f64 / max_edges as f64;
                let base = gnp(base_order, p, &mut rng);
                if base.m() == 0 || base.m() > n {
                    continue;
                }
                base.line_graph()?
            }
        };
        if g.n() >= 1 && g.is_k1r_free(r) {
            let label = format!(
                "sample(r={r},n<={n},seed={seed},strategy={strategy},attempt={attempt})"
            );
            return Ok(g.with_label(label));
        }
    }
    Err(Error::SampleBudgetExhausted {
        attempts: budget,
        accepted: 0,
    })
}

/// Draw `count` graphs from per-index seeds derived off `base_seed`
/// (see [`derive_seed`]); element `i` of the result is exactly
/// `sample_k1r_free(r, n, derive_seed(base_seed, i), strategy)`.
pub fn sample_many(
    r: usize,
    n: usize,
    base_seed: u64,
    strategy: SampleStrategy,
    count: usize,
) -> Result<Vec<Graph>> {
    (0..count)
        .map(|i| sample_k1r_free(r, n, derive_seed(base_seed, i as u64), strategy))
        .collect()
}
