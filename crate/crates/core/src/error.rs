//! Crate-wide error type.
//!
//! Every fallible operation in the crate reports through [`Error`]. The
//! variants are grouped roughly by subsystem; the CLI maps a few of them to
//! dedicated process exit codes (hypothesis failures and size caps), so those
//! carry enough structure to be reported precisely.

use thiserror::Error;

/// Errors produced by graph construction, codecs, solvers, generators, the
/// partition routine, the Ramsey table, and the sweep engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Vertex count outside the supported range (1..=512 for decoding,
    /// 0..=512 for in-memory construction).
    #[error("vertex count {n} out of range (max {max})")]
    NOutOfRange { n: usize, max: usize },

    /// A vertex index referenced a vertex that does not exist.
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    /// Self-loops are not representable.
    #[error("loop edge ({v},{v}) is not allowed in a simple graph")]
    LoopEdge { v: usize },

    /// Malformed graph6 input.
    #[error("graph6 parse error: {0}")]
    Graph6(String),

    /// Malformed edge-list input.
    #[error("edge list parse error: {0}")]
    EdgeList(String),

    /// An operation was invoked on a graph larger than its supported cap.
    /// The CLI reports this with a dedicated exit code.
    #[error("{op}: graph of order {n} exceeds the size cap {max}")]
    SizeLimit {
        op: &'static str,
        n: usize,
        max: usize,
    },

    /// A solver parameter was outside its domain (e.g. k = 0 for gamma_k).
    #[error("{op}: parameter {param} = {value} out of range ({requirement})")]
    ParamOutOfRange {
        op: &'static str,
        param: &'static str,
        value: i64,
        requirement: &'static str,
    },

    /// A family generator was given parameters outside its declared ranges.
    #[error("family {family}: {reason}")]
    FamilyParam { family: String, reason: String },

    /// A named family or parameter key in a request/config was not recognized.
    #[error("unknown family name {0:?}")]
    UnknownFamily(String),

    /// Triangle-diamond partition precondition failures, reported distinctly.
    #[error("triangle-diamond partition requires a cubic graph")]
    TdpNotCubic,
    #[error("triangle-diamond partition requires a claw-free graph")]
    TdpNotClawFree,
    #[error("triangle-diamond partition requires a connected graph")]
    TdpNotConnected,
    #[error("triangle-diamond partition is undefined for K_4")]
    TdpIsK4,

    /// Ramsey lookup outside the stored table. Never silently bounded.
    #[error("Ramsey number r({r},{q}) is not in the table")]
    RamseyOutOfTable { r: usize, q: usize },

    /// Requested a stored witness that the table does not carry.
    #[error("no witness graph stored for Ramsey entry ({r},{q})")]
    RamseyNoWitness { r: usize, q: usize },

    /// A theorem check was invoked on a graph that fails the theorem's
    /// hypotheses. The CLI reports this with a dedicated exit code.
    #[error("hypothesis failed for {theorem}: {predicate}")]
    HypothesisFailed {
        theorem: &'static str,
        predicate: String,
    },

    /// An unknown theorem identifier string.
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    /// A theorem check was invoked without a parameter it requires.
    #[error("check {theorem}: missing required parameter {param}")]
    MissingParam {
        theorem: &'static str,
        param: &'static str,
    },

    /// Rejection sampling did not produce an accepting graph within budget.
    #[error(
        "sampling budget exhausted after {attempts} attempts \
         (accepted {accepted}); try a larger budget or different parameters"
    )]
    SampleBudgetExhausted { attempts: usize, accepted: usize },

    /// Sweep configuration file problems (I/O is reported by the CLI layer).
    #[error("sweep config error: {0}")]
    SweepConfig(String),

    /// Cubic enumeration parameter errors.
    #[error("cubic enumeration: n = {n} out of range (need even n, 4 ≤ n ≤ {max})")]
    EnumerateRange { n: usize, max: usize },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
