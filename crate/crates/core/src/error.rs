use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("a simplicial circle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("face dimension {k} out of range for a complex of dimension {dim}")]
    DimensionOutOfRange { k: usize, dim: usize },
    #[error("not a closed pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("not orientable: {0}")]
    NonOrientable(String),
    #[error("{0:?} is not a facet of the complex")]
    FacetNotFound(Vec<usize>),
    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),
    #[error("dimension mismatch: source has dimension {source_dim}, target has dimension {target_dim}")]
    DimensionMismatch { source_dim: usize, target_dim: usize },
    #[error("complex mismatch: {0}")]
    ComplexMismatch(String),
    #[error("cycle of length {source_len} does not wrap onto a cycle of length {target_len}")]
    NotAMultiple { source_len: usize, target_len: usize },
    #[error("degree shift impossible: {0}")]
    NoUsableFacet(String),
    #[error("homology: {0}")]
    Homology(String),
    #[error("realization: {0}")]
    Realization(String),
    #[error("construction: {0}")]
    Construction(String),
    #[error("format: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
