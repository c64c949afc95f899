use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Construction errors (`RepeatedVertex`, `WrongEdgeSize`, `VertexOutOfRange`)
/// are kept distinct so file parsers can surface the exact violation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    InvalidUniformity(usize),

    #[error("edge {edge:?} has a repeated vertex")]
    RepeatedVertex { edge: Vec<usize> },

    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    WrongEdgeSize {
        edge: Vec<usize>,
        got: usize,
        expected: usize,
    },

    #[error("edge {edge:?} mentions vertex {vertex} outside 0..{n}")]
    VertexOutOfRange {
        edge: Vec<usize>,
        vertex: usize,
        n: usize,
    },

    #[error("subset {subset:?} has {got} elements, expected {expected}")]
    WrongSubsetSize {
        subset: Vec<usize>,
        got: usize,
        expected: usize,
    },

    #[error("operation requires a non-empty vertex set")]
    EmptyVertexSet,

    #[error("host has {n} vertices but uniformity is {k}; need n >= k")]
    HostTooSmall { n: usize, k: usize },

    #[error("uniformity mismatch: {left} vs {right}")]
    UniformityMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{parts:?} is not a partition of {subset:?}: {reason}")]
    InvalidPartition {
        subset: Vec<usize>,
        parts: Vec<Vec<usize>>,
        reason: String,
    },

    #[error("target length {target} is not a multiple of base length {base}")]
    NotAMultiple { base: usize, target: usize },

    #[error("ladder of length {length} is too short to force a repeated class set (need > {needed})")]
    LadderTooShort { length: usize, needed: usize },

    #[error("inconsistent blow-up map: {0}")]
    InconsistentBlowup(String),

    #[error("scan cap exceeded: C({n},{k}) = {candidates} candidate edges > cap {cap}")]
    ScanCapExceeded {
        n: usize,
        k: usize,
        candidates: usize,
        cap: usize,
    },

    #[error("construction contains a forbidden configuration (family member {member})")]
    ConstructionNotFree { member: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("line {line}: {source}")]
    ParseAt {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
