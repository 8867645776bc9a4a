use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("speed {0} is outside [0, 1] (units of c)")]
    SpeedOutOfRange(f64),
    #[error("speed is not a finite number")]
    NonFiniteSpeed,
    #[error("rapidity is infinite at the speed of light")]
    InfiniteRapidity,
    #[error("matrix dimensions {rows}x{cols} do not match {len} entries")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("tensor factors {factors:?} do not multiply to dimension {dim}")]
    FactorMismatch { factors: Vec<usize>, dim: usize },
    #[error("expected dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("trace {0} differs from 1")]
    TraceNotUnity(f64),
    #[error("matrix has negative eigenvalue {0:e}")]
    NotPositive(f64),
    #[error("state norm {0} differs from 1")]
    NotNormalized(f64),
    #[error("operation requires a tensor-product basis with at least two factors")]
    MissingBasisLabels,
    #[error("factor index {index} out of range for {count} factors")]
    FactorOutOfRange { index: usize, count: usize },
    #[error("state has already been boosted")]
    AlreadyBoosted,
    #[error("density matrix is not of the equal-weight two-mode form (diagonal {0}, {1})")]
    NotEqualWeight(f64, f64),
    #[error("Jacobi eigensolver did not converge (off-diagonal norm {0:e})")]
    NoConvergence(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
