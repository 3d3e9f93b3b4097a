use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("color count must be at least 1")]
    ZeroColors,
    #[error("vertex {vertex} has color {color}, outside 0..{r}")]
    ColorOutOfRange { vertex: usize, color: usize, r: usize },
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("swap ({u}, {v}) is not along an edge")]
    AdjacencyViolation { u: usize, v: usize },
    #[error("invalid move at position {index}: {reason}")]
    InvalidMove { index: usize, reason: String },
    #[error("certificate move kinds do not match the instance variant")]
    MoveKindMismatch,
    #[error("adjacent-only swaps require the swap variant")]
    AdjacentOnlyRequiresSwap,
    #[error("{what}: size {size} exceeds the exact-search cap {cap}")]
    SearchCapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("target coloring does not have the same color-class multiset")]
    MultisetMismatch,
    #[error("invalid target color count {requested}: must exceed {current} and be at least 3")]
    InvalidTarget { requested: usize, current: usize },
    #[error("formula batch shape mismatch: {0}")]
    BatchShapeMismatch(String),
    #[error("source graph is not bipartite")]
    NotBipartite,
    #[error("precolored vertex {0} does not have degree 1")]
    PrecoloredDegreeNotOne(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid witness: {0}")]
    WitnessInvalid(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
