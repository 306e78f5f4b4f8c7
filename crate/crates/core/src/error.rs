use thiserror::Error;

use crate::numerics::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector is zero under the current tolerance")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("matrix is ill-conditioned (condition estimate {cond:e} exceeds {cond_max:e})")]
    IllConditioned { cond: f64, cond_max: f64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("every column is below the rank tolerance")]
    RankDeficientToZero,
    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("value out of range: {0}")]
    InvalidRange(String),
    #[error("non-finite entry in input")]
    NonFinite,
    #[error("complementary subspaces are not transverse (smallest singular value {0:e})")]
    NotTransverse(f64),
    #[error("base points coincide")]
    SamePoint,
    #[error("no stereographic pole avoids both fibers")]
    DegenerateProjection,
    #[error("coefficients are singular (|ad - bc| = {0:e})")]
    SingularCoefficients(f64),
}

impl Error {
    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }

    pub(crate) fn check_field(expected: Field, found: Field) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::FieldMismatch { expected, found })
        }
    }
}
