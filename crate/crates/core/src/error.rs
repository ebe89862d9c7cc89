use thiserror::Error;

use crate::cut::CutKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("star centered at {0} lists its center as a leaf")]
    CenterIsLeaf(usize),

    #[error("star centered at {center} uses leaf {leaf}, which is not adjacent to the center")]
    InvalidStar { center: usize, leaf: usize },

    #[error("elements {first} and {second} of the family share vertex {vertex}")]
    OverlappingStars {
        first: usize,
        second: usize,
        vertex: usize,
    },

    #[error("{kind} element {index} has {leaves} leaves but M = {m}")]
    LeafCount {
        kind: CutKind,
        index: usize,
        leaves: usize,
        m: usize,
    },

    #[error("connectivity is undefined on a disconnected or trivial graph")]
    DegenerateInput,

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("oracle input has {n} vertices, above the cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("not a 3-dimensional matching: {0}")]
    InvalidMatching(String),

    #[error("not a vertex cover: edge ({0}, {1}) is uncovered")]
    NotACover(usize, usize),

    #[error("family is not a verified {0} cut of the reduced graph")]
    NotACut(CutKind),

    #[error("rejection sampling gave up after {0} attempts; try a different size or extra count")]
    RejectionLimit(usize),
}

impl Error {
    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }
}
