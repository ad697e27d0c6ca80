use crate::vertex_set::VertexSet;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    ZeroVertices,

    #[error("vertex count {0} exceeds the supported maximum of {max}", max = VertexSet::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("invalid complement: {subset} is a face")]
    InvalidComplement { subset: VertexSet },

    #[error("complement restricted to {j} has {count} generators, exceeding the cap of {cap}")]
    SizeCap {
        j: VertexSet,
        count: usize,
        cap: usize,
    },

    #[error("boundary maps do not compose to zero")]
    NonComposable,

    #[error("matrix dimensions {left:?} and {right:?} are incompatible")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("Poincare polynomial requires field coefficients")]
    FieldRequired,

    #[error("intermediate entry exceeded the fast integer range")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
