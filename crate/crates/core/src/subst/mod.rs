//! Morphisms of free monoids, incidence matrices, fixed points and spectral classes.

mod linalg;
mod matrix;
mod morphism;
mod spectral;

use thiserror::Error;

use crate::words::WordError;

pub use linalg::kernel_vector;
pub use matrix::IncidenceMatrix;
pub use morphism::{b_image_positions, FixedPoint, Morphism};
pub use spectral::{characteristic_polynomial, spectral_class, Classification, SpectralClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("malformed morphism at offset {position}: {reason}")]
    Parse {
        position: usize,
        reason: &'static str,
    },
    #[error("image of '{letter}' is empty")]
    EmptyImage { letter: char },
    #[error("image of '{letter}' uses a letter outside the target alphabet")]
    LetterOutsideTarget { letter: char },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: String, found: String },
    #[error("matrix is not square ({rows}×{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix entries must be non-negative")]
    NegativeEntry,
    #[error("spectral classification supports dimensions 1 to 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("characteristic polynomial has no real root")]
    NoRealEigenvalue,
    #[error("integer overflow in exact computation")]
    Overflow,
    #[error("source and target alphabets differ")]
    NotASubstitution,
    #[error("no letter generates a fixed point")]
    NoFixedPoint,
    #[error(transparent)]
    Word(#[from] WordError),
}
