//! Config-driven batch evaluation of bound checks over graph collections.
//!
//! A [`SweepConfig`] (TOML on disk, see [`parse_config`]) declares where the
//! graphs come from — named families, parameter grids, reproducible random
//! draws, graph6 literals, or files of graph6 lines — and which catalog
//! entries to evaluate on each of them, optionally asserting the equality
//! flag per entry. [`run_sweep`] evaluates everything in parallel and returns
//! a [`SweepReport`] whose row order is canonical (config order for sources,
//! grid order within a grid, seed index within a random block), so repeated
//! runs produce byte-identical JSONL/CSV output.
//!
//! [`equality_search`] is the exploratory counterpart: given an excluded-star
//! order and a catalog entry, it scans small enumerated cubic graphs and
//! seeded random draws for graphs that meet the bound with equality.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{self, BoundCheck, CheckParams, Session, TheoremId};
use crate::codec;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::iso;
use crate::ramsey;
use crate::sample::{self, SampleStrategy};
use crate::solve::Limits;

/// A reproducible block of random graphs in a config: `count` draws with
/// per-index seeds derived from `seed` (see [`sample::derive_seed`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSpec {
    /// Excluded star order: draws are K_{1,r}-free.
    pub r: usize,
    /// Largest order a draw may have.
    pub n: usize,
    /// How many graphs to draw.
    pub count: usize,
    /// Base seed; element `i` uses `derive_seed(seed, i)`.
    pub seed: u64,
    #[serde(default)]
    pub strategy: SampleStrategy,
}

/// One block of graphs in a sweep config. In TOML each block is a
/// `[[graphs]]` table distinguished by its key: `family`, `family_grid`,
/// `random`, `graph6`, or `file`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    /// A single named family member, e.g. `family = "g12_chain", k = 2`.
    Family(FamilySpec),
    /// A grid over a family's positional arguments: one graph per element
    /// of the cartesian product of the `args` lists (last axis fastest).
    Grid {
        family_grid: String,
        #[serde(default)]
        args: Vec<Vec<usize>>,
    },
    /// Reproducible random graphs.
    Random { random: RandomSpec },
    /// Literal graph6 strings.
    Graph6 { graph6: Vec<String> },
    /// A file of graph6 strings, one per line; blank lines and lines
    /// starting with `#` are ignored.
    File { file: String },
}

/// One check to run on every graph of the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremEntry {
    /// Catalog entry to evaluate.
    pub id: TheoremId,
    /// Integer parameters, written inline in TOML (`id = "T2_1", r = 3,
    /// k = 2`).
    #[serde(flatten)]
    pub params: CheckParams,
    /// When set, also assert that the check's equality flag has this
    /// value; a mismatch counts as a failure. This is how a config pins
    /// the exact tightness pattern a family is supposed to exhibit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect_equality: Option<bool>,
    /// Record a skip instead of failing the sweep when a graph does not
    /// satisfy this entry's hypotheses.
    #[serde(default)]
    pub skip_inapplicable: bool,
}

/// Optional solver-cap overrides (the `[limits]` table of a config).
/// Unset fields keep the crate defaults.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize,
)]
#[serde(deny_unknown_fields)]
pub struct LimitsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_f: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_induced: Option<usize>,
}

impl LimitsSpec {
    fn resolve(self) -> Limits {
        let base = Limits::default();
        Limits {
            alpha_f: self.alpha_f.unwrap_or(base.alpha_f),
            max_induced: self.max_induced.unwrap_or(base.max_induced),
        }
    }
}

/// Declarative description of a sweep: which graphs, which checks, which
/// expectations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Optional display name for reports.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Also run every catalog entry whose hypotheses the graph satisfies
    /// (in addition to any explicit `theorems` entries).
    #[serde(default)]
    pub all_applicable: bool,
    /// Explicit checks, run in order on every graph.
    #[serde(default)]
    pub theorems: Vec<TheoremEntry>,
    /// Graph sources, materialized in order.
    #[serde(default)]
    pub graphs: Vec<GraphSource>,
    /// Solver-cap overrides.
    #[serde(default)]
    pub limits: LimitsSpec,
}

/// Parse a TOML sweep config and validate that it describes at least one
/// graph and at least one check.
pub fn parse_config(text: &str) -> Result<SweepConfig> {
    let cfg: SweepConfig =
        toml::from_str(text).map_err(|e| Error::SweepConfig(e.to_string()))?;
    if cfg.graphs.is_empty() {
        return Err(Error::SweepConfig("config lists no graphs".into()));
    }
    if cfg.theorems.is_empty() && !cfg.all_applicable {
        return Err(Error::SweepConfig(
            "config lists no checks (add [[theorems]] entries or set \
             all_applicable = true)"
                .into(),
        ));
    }
    Ok(cfg)
}

/// Read and parse a TOML sweep config from a file.
pub fn load_config(path: &str) -> Result<SweepConfig> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::SweepConfig(format!("{path}: {e}")))?;
    parse_config(&text)
}

/// What happened for one (graph, check) pair.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RowOutcome {
    /// The bound holds and any equality expectation matched.
    Passed { check: BoundCheck },
    /// The bound failed (`lhs > rhs`).
    Violated { check: BoundCheck },
    /// The bound holds but its equality flag is not what the config
    /// demanded.
    EqualityMismatch {
        check: BoundCheck,
        expected_equality: bool,
    },
    /// The graph fails the entry's hypotheses and the entry opted into
    /// skipping; `reason` is the failed predicate.
    Skipped { theorem: TheoremId, reason: String },
}

/// One report row: a graph (with identifying metadata) and the outcome of
/// one check on it.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    /// Where the graph came from (family label, seed description, graph6
    /// literal, or `file:line`).
    pub source: String,
    /// The graph itself, as graph6.
    pub graph6: String,
    /// Order.
    pub n: usize,
    /// Size.
    pub m: usize,
    #[serde(flatten)]
    pub outcome: RowOutcome,
}

impl SweepRow {
    /// Violated bound or unmet equality expectation.
    pub fn is_failure(&self) -> bool {
        matches!(
            self.outcome,
            RowOutcome::Violated { .. } | RowOutcome::EqualityMismatch { .. }
        )
    }

    /// The evaluated check, if the row was not skipped.
    pub fn check(&self) -> Option<&BoundCheck> {
        match &self.outcome {
            RowOutcome::Passed { check }
            | RowOutcome::Violated { check }
            | RowOutcome::EqualityMismatch { check, .. } => Some(check),
            RowOutcome::Skipped { .. } => None,
        }
    }

    fn status_str(&self) -> &'static str {
        match self.outcome {
            RowOutcome::Passed { .. } => "passed",
            RowOutcome::Violated { .. } => "violated",
            RowOutcome::EqualityMismatch { .. } => "equality_mismatch",
            RowOutcome::Skipped { .. } => "skipped",
        }
    }
}

/// Outcome of a whole sweep, with deterministic row order.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    /// Name from the config, if any.
    pub name: Option<String>,
    /// How many graphs were materialized.
    pub graphs: usize,
    pub passed: usize,
    pub violated: usize,
    pub equality_mismatches: usize,
    pub skipped: usize,
    /// Wall-clock evaluation time.
    pub elapsed_ms: u128,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    /// No violated bounds and no unmet equality expectations.
    pub fn ok(&self) -> bool {
        self.violated == 0 && self.equality_mismatches == 0
    }

    /// First failing row, if any — the counterexample to report.
    pub fn first_failure(&self) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.is_failure())
    }

    /// One JSON object per row, newline-separated. Deterministic for a
    /// fixed config.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(
                &serde_json::to_string(row)
                    .expect("report rows serialize to JSON"),
            );
            out.push('\n');
        }
        out
    }

    /// CSV export with one row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "source,graph6,n,m,theorem,params,lhs,rhs,holds,equality,status\n",
        );
        for row in &self.rows {
            let (theorem, params, lhs, rhs, holds, equality) =
                match row.check() {
                    Some(c) => (
                        c.theorem.name().to_string(),
                        csv_params(&c.params),
                        c.lhs.to_string(),
                        c.rhs.to_string(),
                        c.holds.to_string(),
                        c.equality.to_string(),
                    ),
                    None => {
                        let theorem = match &row.outcome {
                            RowOutcome::Skipped { theorem, .. } => {
                                theorem.name().to_string()
                            }
                            _ => unreachable!("non-skip rows carry a check"),
                        };
                        (
                            theorem,
                            String::new(),
                            String::new(),
                            String::new(),
                            String::new(),
                            String::new(),
                        )
                    }
                };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                csv_quote(&row.source),
                row.graph6,
                row.n,
                row.m,
                theorem,
                csv_quote(&params),
                lhs,
                rhs,
                holds,
                equality,
                row.status_str(),
            );
        }
        out
    }

    /// Multi-line plain-text summary for terminals.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        let name = self.name.as_deref().unwrap_or("sweep");
        let _ = writeln!(
            out,
            "{name}: {} check(s) on {} graph(s)",
            self.rows.len(),
            self.graphs,
        );
        let _ = writeln!(
            out,
            "  passed {}, violated {}, equality mismatches {}, skipped {}",
            self.passed, self.violated, self.equality_mismatches, self.skipped,
        );
        let _ = writeln!(out, "  elapsed {} ms", self.elapsed_ms);
        if let Some(row) = self.first_failure() {
            let check = row.check().expect("failures carry a check");
            let _ = writeln!(
                out,
                "  first failure: {check} on {} ({})",
                row.graph6, row.source,
            );
            if let RowOutcome::EqualityMismatch {
                expected_equality, ..
            } = row.outcome
            {
                let _ = writeln!(
                    out,
                    "    expected equality = {expected_equality}",
                );
            }
        }
        out
    }
}

fn csv_params(p: &CheckParams) -> String {
    let mut parts = Vec::new();
    for (name, v) in [("r", p.r), ("k", p.k), ("q", p.q), ("d", p.d)] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    parts.join(" ")
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn source_label(g: &Graph, fallback: &str) -> String {
    g.label().unwrap_or(fallback).to_string()
}

fn cartesian(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut combos = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(combos.len() * list.len());
        for combo in &combos {
            for &v in list {
                let mut combo = combo.clone();
                combo.push(v);
                next.push(combo);
            }
        }
        combos = next;
    }
    combos
}

/// Build the graph list a config describes, in canonical order. Labels
/// come from the builders (family name and arguments, or the sample's
/// seed description), so every row names its graph's origin.
fn materialize(cfg: &SweepConfig) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for src in &cfg.graphs {
        match src {
            GraphSource::Family(spec) => {
                let g = spec.build()?;
                out.push((source_label(&g, "family"), g));
            }
            GraphSource::Grid { family_grid, args } => {
                if args.iter().any(|axis| axis.is_empty()) {
                    return Err(Error::SweepConfig(format!(
                        "family_grid {family_grid:?}: empty argument axis",
                    )));
                }
                for combo in cartesian(args) {
                    let spec =
                        FamilySpec::from_name_args(family_grid, &combo)?;
                    let g = spec.build()?;
                    out.push((source_label(&g, family_grid), g));
                }
            }
            GraphSource::Random { random } => {
                for g in sample::sample_many(
                    random.r,
                    random.n,
                    random.seed,
                    random.strategy,
                    random.count,
                )? {
                    out.push((source_label(&g, "random"), g));
                }
            }
            GraphSource::Graph6 { graph6 } => {
                for text in graph6 {
                    let g = codec::parse_graph6(text)?;
                    out.push((text.clone(), g));
                }
            }
            GraphSource::File { file } => {
                let body = fs::read_to_string(file).map_err(|e| {
                    Error::SweepConfig(format!("{file}: {e}"))
                })?;
                for (i, line) in body.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let g = codec::parse_graph6(line)?;
                    out.push((format!("{file}:{}", i + 1), g));
                }
            }
        }
    }
    Ok(out)
}

fn evaluate_graph(
    source: &str,
    g: &Graph,
    cfg: &SweepConfig,
    limits: Limits,
) -> Result<Vec<SweepRow>> {
    let graph6 = codec::emit_graph6(g);
    let mut session = Session::with_limits(g, limits);
    let mut tasks: Vec<(TheoremId, CheckParams, Option<bool>, bool)> = cfg
        .theorems
        .iter()
        .map(|e| (e.id, e.params, e.expect_equality, e.skip_inapplicable))
        .collect();
    if cfg.all_applicable {
        for (id, params) in check::applicable_theorems(g) {
            if !tasks.iter().any(|t| t.0 == id && t.1 == params) {
                tasks.push((id, params, None, false));
            }
        }
    }
    let mut rows = Vec::with_capacity(tasks.len());
    for (id, params, expect, skip) in tasks {
        let row = |outcome| SweepRow {
            source: source.to_string(),
            graph6: graph6.clone(),
            n: g.n(),
            m: g.m(),
            outcome,
        };
        match session.check(id, params) {
            Ok(c) => {
                let outcome = if !c.holds {
                    RowOutcome::Violated { check: c }
                } else {
                    match expect {
                        Some(want) if c.equality != want => {
                            RowOutcome::EqualityMismatch {
                                check: c,
                                expected_equality: want,
                            }
                        }
                        _ => RowOutcome::Passed { check: c },
                    }
                };
                rows.push(row(outcome));
            }
            Err(Error::HypothesisFailed { predicate, .. }) if skip => {
                rows.push(row(RowOutcome::Skipped {
                    theorem: id,
                    reason: predicate,
                }));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(rows)
}

/// Evaluate a config: materialize its graphs, run every requested check on
/// each of them in parallel, and tally the outcomes. Row order is
/// independent of scheduling. Violated bounds and unmet equality
/// expectations are reported in the rows (see [`SweepReport::ok`]);
/// hypothesis failures abort with an error unless the entry set
/// `skip_inapplicable`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let started = Instant::now();
    let graphs = materialize(cfg)?;
    let limits = cfg.limits.resolve();
    let per_graph: Vec<Result<Vec<SweepRow>>> = graphs
        .par_iter()
        .map(|(source, g)| evaluate_graph(source, g, cfg, limits))
        .collect();
    let mut rows = Vec::new();
    for graph_rows in per_graph {
        rows.extend(graph_rows?);
    }
    let mut report = SweepReport {
        name: cfg.name.clone(),
        graphs: graphs.len(),
        passed: 0,
        violated: 0,
        equality_mismatches: 0,
        skipped: 0,
        elapsed_ms: started.elapsed().as_millis(),
        rows,
    };
    for row in &report.rows {
        match row.outcome {
            RowOutcome::Passed { .. } => report.passed += 1,
            RowOutcome::Violated { .. } => report.violated += 1,
            RowOutcome::EqualityMismatch { .. } => {
                report.equality_mismatches += 1
            }
            RowOutcome::Skipped { .. } => report.skipped += 1,
        }
    }
    Ok(report)
}

/// Fixed base seed for the sampling phase of [`equality_search`], so
/// repeated runs examine the same graphs.
const EQUALITY_SEARCH_SEED: u64 = 1;

/// Order cap for sampled candidates in [`equality_search`].
const EQUALITY_SEARCH_ORDER: usize = 16;

/// Parameter grids to try for one catalog entry during the equality
/// search, given the excluded-star order `r`.
fn search_params(g: &Graph, id: TheoremId, r: usize) -> Vec<CheckParams> {
    match id {
        TheoremId::T2_1 => {
            (1..=3).map(|k| CheckParams::for_r_k(r, k)).collect()
        }
        TheoremId::T2_2 | TheoremId::T2_3_kq_reduction => (3..=4)
            .filter(|&q| ramsey::ramsey_number(r, q).is_ok())
            .map(|q| CheckParams::for_r_q(r, q))
            .collect(),
        TheoremId::T2_4 => (0..=2)
            .filter(|&k| g.min_degree() >= k + 1)
            .map(|k| CheckParams::for_r_k(r, k))
            .collect(),
        TheoremId::T5_1 => (1..=3).map(CheckParams::for_k).collect(),
        TheoremId::R5_remark => (4..=5).map(CheckParams::for_k).collect(),
        _ => vec![CheckParams::none()],
    }
}

/// Does `g` meet the bound with equality for some parameter choice?
/// Hypothesis failures mean "no" rather than an error; anything else
/// (solver caps, missing table entries) propagates.
fn attains_equality(g: &Graph, id: TheoremId, r: usize) -> Result<bool> {
    let mut session = Session::new(g);
    for params in search_params(g, id, r) {
        match session.check(id, params) {
            Ok(c) if c.holds && c.equality => return Ok(true),
            Ok(_) => {}
            Err(Error::HypothesisFailed { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(false)
}

/// Search for graphs that meet the named bound with equality.
///
/// Two phases share the `budget` (total candidate graphs examined): first
/// every connected cubic graph of order 4, 6, 8, 10 in enumeration order
/// (these small graphs realize the known tightness patterns of the
/// degree-bounded entries), then K_{1,r}-free random draws of order at
/// most 16 from a fixed seed. Candidates failing the entry's hypotheses
/// are skipped, parameterized entries are tried over their standard small
/// parameter grids, and results are deduplicated up to isomorphism. An
/// empty result means no equality instance was found within budget — it
/// does not mean none exists. Every returned graph re-verifies: checking
/// it again reports `lhs == rhs`.
pub fn equality_search(
    r: usize,
    id: TheoremId,
    budget: usize,
) -> Result<Vec<Graph>> {
    if r < 3 {
        return Err(Error::ParamOutOfRange {
            op: "equality_search",
            param: "r",
            value: r as i64,
            requirement: "r >= 3",
        });
    }
    let mut found: Vec<Graph> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut examined = 0usize;
    // Enumerated phase. Cubic graphs have maximum degree 3, so they are
    // K_{1,r}-free for every r >= 3 and are valid candidates regardless
    // of the requested star order.
    'enumerated: for n in [4usize, 6, 8, 10] {
        if examined >= budget {
            break;
        }
        for g in enumerate::enumerate_cubic(n)? {
            if examined >= budget {
                break 'enumerated;
            }
            examined += 1;
            if attains_equality(&g, id, r)? && seen.insert(iso::canonical_form(&g)?)
            {
                found.push(g);
            }
        }
    }
    // Sampled phase.
    let mut index = 0u64;
    while examined < budget {
        let g = sample::sample_k1r_free(
            r,
            EQUALITY_SEARCH_ORDER,
            sample::derive_seed(EQUALITY_SEARCH_SEED, index),
            SampleStrategy::Rejection,
        )?;
        index += 1;
        examined += 1;
        if attains_equality(&g, id, r)? && seen.insert(iso::canonical_form(&g)?)
        {
            found.push(g);
        }
    }
    Ok(found)
}
