use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("parts {parts:?} of vertex {vertex} do not sum to its degree {degree}")]
    PartsSumMismatch {
        vertex: usize,
        degree: usize,
        parts: Vec<usize>,
    },

    #[error("vertex {0} has odd degree")]
    OddDegreeVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no edges")]
    NoEdges,

    #[error("all degrees are even and the edge count is odd; use the pinned 2-coloring")]
    PreconditionOddEvenAll,

    #[error(
        "pinned 2-coloring needs all degrees even, an odd edge count and a pin of degree >= 2"
    )]
    PreconditionNotEulerOdd,

    #[error("degree {0} is too small to split (need >= 2)")]
    DegreeTooSmall(usize),

    #[error("degree {degree} is below the threshold k(k-1) = {threshold} for k = {k}")]
    DegreeBelowThreshold {
        degree: usize,
        k: usize,
        threshold: usize,
    },

    #[error("vertex {vertex} has degree {degree}, minimum degree {degree} < {required}")]
    MinDegreeTooLow {
        vertex: usize,
        degree: usize,
        required: usize,
    },

    #[error("graph is not factor-critical: no perfect matching after removing vertex {0}")]
    NotFactorCritical(usize),

    #[error("internal structure violation: {0}")]
    InternalStructureViolation(String),

    #[error("edge selection infeasible: max flow {value} < {required}")]
    SelectionInfeasible { value: u64, required: u64 },

    #[error("no valid coloring after {0} resampling rounds")]
    Timeout(usize),

    #[error("edge {0} is uncolored")]
    PartialColoring(usize),

    #[error("edge {edge} has color {color} outside 1..={palette}")]
    ColorOutOfRange {
        edge: usize,
        color: u32,
        palette: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Shifts vertex ids carried by the error by `base`, for reporting in
    /// the numbering of an input file.
    pub fn offset_vertices(self, base: usize) -> Error {
        match self {
            Error::SelfLoop(u) => Error::SelfLoop(u + base),
            Error::DuplicateEdge(u, v) => Error::DuplicateEdge(u + base, v + base),
            Error::UnknownVertex(u) => Error::UnknownVertex(u + base),
            Error::OddDegreeVertex(u) => Error::OddDegreeVertex(u + base),
            Error::NotFactorCritical(u) => Error::NotFactorCritical(u + base),
            Error::MinDegreeTooLow {
                vertex,
                degree,
                required,
            } => Error::MinDegreeTooLow {
                vertex: vertex + base,
                degree,
                required,
            },
            Error::PartsSumMismatch {
                vertex,
                degree,
                parts,
            } => Error::PartsSumMismatch {
                vertex: vertex + base,
                degree,
                parts,
            },
            other => other,
        }
    }

    /// Bad input text, as opposed to a graph that fails a precondition.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::SelfLoop(_) | Error::DuplicateEdge(..)
        )
    }
}
