use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(BigInt),

    #[error("interpolation produced non-integer coefficient {0}")]
    NonIntegerCoefficient(String),

    #[error("polynomial is not divisible by `{0}`")]
    InexactDivision(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` already exists")]
    DuplicateVertex(String),

    #[error("`{0}` and `{1}` are not adjacent")]
    NotAnEdge(String, String),

    #[error("graph has a loop at `{0}`; a simple graph is required")]
    LoopsNotAllowed(String),

    #[error("graph with {0} vertices is too large for a subset state sum")]
    TooLarge(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed chord diagram: {0}")]
    MalformedDiagram(String),

    #[error("chords `{0}` and `{1}` do not cross")]
    ChordsDoNotCross(String, String),

    #[error("not a 2-in 2-out digraph: {0}")]
    NotTwoInTwoOut(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no edges")]
    Empty,

    #[error("invalid Euler circuit: {0}")]
    InvalidCircuit(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("invalid construction sequence: {0}")]
    InvalidSequence(String),

    #[error("series-parallel reduction got stuck with {0} edges left")]
    NotSeriesParallel(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a bipartite distance-hereditary graph: {0}")]
    NotBdh(String),

    #[error("{0} is not a perfect square")]
    NotPerfectSquare(BigInt),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
