use thiserror::Error;

/// Errors produced by the placement library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("coincident centers: direction is undefined")]
    CoincidentCenters,

    #[error("point coincides with the module center")]
    CoincidentPoint,

    #[error("module center lies on the edge's supporting line")]
    CenterOnEdgeLine,

    #[error("operation requires triangular modules")]
    NotATriangle,

    #[error("modules are not mutual neighbours")]
    NotMutualNeighbours,

    #[error("unknown module id {0}")]
    UnknownModule(usize),

    #[error("duplicate module id {0}")]
    DuplicateModule(usize),

    #[error("empty placement")]
    EmptyPlacement,

    #[error("no candidate placements to select from")]
    EmptyCandidateSet,

    #[error("rejection sampling failed to find interior points")]
    SamplingFailed,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{path}: {message}")]
    FileFormat { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
