use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("edge `{edge}` has an illegal sign assignment: {reason}")]
    IllegalSigns { edge: String, reason: &'static str },
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("unknown edge index {0}")]
    UnknownEdge(usize),
    #[error("walk ends at vertex {left} but the next walk starts at vertex {right}")]
    EndpointMismatch { left: usize, right: usize },
    #[error("degree spec covers {got} vertices, graph has {expected}")]
    SpecMismatch { expected: usize, got: usize },
    #[error("edge {0} is both forced and forbidden")]
    Conflict(usize),
    #[error("graph has no b-factor")]
    NotFactorizable,
    #[error("edge set is not a b-factor")]
    NotAFactor,
    #[error("restricted degree at vertex {0} is negative")]
    NegativeRestriction(usize),
    #[error("no circular component with index {0}")]
    BadComponent(usize),
}
