use thiserror::Error;

/// Errors produced by complex construction, subdivision and the measure
/// harnesses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty facet list")]
    EmptyFacetList,

    #[error("facet {0:?} has a repeated vertex")]
    RepeatedVertex(Vec<u32>),

    #[error("simplex {0:?} is not a face of the complex")]
    FaceNotInComplex(Vec<u32>),

    #[error("vertex {0} has no coordinates")]
    MissingCoordinates(u32),

    #[error("facet {0:?} is affinely degenerate")]
    DegenerateFacet(Vec<u32>),

    #[error("coordinate dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("face-vector length {got} does not match dimension {dim} (expected {})", dim + 1)]
    DimensionMismatch { dim: usize, got: usize },

    #[error("resource cap exceeded: estimated {estimate} simplices, cap {cap}")]
    CapExceeded { estimate: String, cap: u64 },

    #[error("root refinement budget exceeded")]
    RefinementBudget,

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
