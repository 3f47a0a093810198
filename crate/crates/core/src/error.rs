use thiserror::Error;

/// Errors raised by the algebra kernel and the module layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("rank mismatch: element has rank {found}, ambient has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("generator {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("ideal generator {index} has degree {degree}; degree >= 2 required")]
    LinearForm { index: usize, degree: u32 },
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("map is not well defined: image of relation {index} is not a relation")]
    IllDefinedMap { index: usize },
    #[error("operation undefined for the zero module")]
    ZeroModule,
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
