use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not unicyclic: {vertices} vertices, {edges} edges")]
    NotUnicyclic { vertices: usize, edges: usize },
    #[error("vertex set activates no cycle vertex")]
    NoActiveVertex,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("instance size {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("component of cycle vertex {0} is not a star centered on the cycle")]
    NotReduced(usize),
    #[error("operation requires even girth")]
    OddGirth,
    #[error("operation requires odd girth")]
    EvenGirth,
    #[error("graph has no basis forced vertex")]
    NoForcedVertex,
    #[error("every vertex is basis forced; no farthest non-forced vertex exists")]
    DegenerateForcedSet,
    #[error("vertex {0} is not a basis forced vertex")]
    NotForced(usize),
    #[error("vertex {0} is not a basis forced pendant")]
    NotForcedPendant(usize),
    #[error("vertex {0} is not a basis forced cycle vertex")]
    NotForcedCycleVertex(usize),
    #[error("generator bounds infeasible: {0}")]
    BoundsInfeasible(String),
}

impl Error {
    /// Short stable identifier, used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Empty => "empty",
            Error::SelfLoop(_) => "self-loop",
            Error::DuplicateEdge(..) => "duplicate-edge",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::Disconnected => "disconnected",
            Error::NotUnicyclic { .. } => "not-unicyclic",
            Error::NoActiveVertex => "no-active-vertex",
            Error::PreconditionViolated(_) => "precondition",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::NotReduced(_) => "not-reduced",
            Error::OddGirth => "odd-girth",
            Error::EvenGirth => "even-girth",
            Error::NoForcedVertex => "no-forced-vertex",
            Error::DegenerateForcedSet => "degenerate-forced-set",
            Error::NotForced(_) => "not-forced",
            Error::NotForcedPendant(_) => "not-forced-pendant",
            Error::NotForcedCycleVertex(_) => "not-forced-cycle-vertex",
            Error::BoundsInfeasible(_) => "bounds-infeasible",
        }
    }
}
