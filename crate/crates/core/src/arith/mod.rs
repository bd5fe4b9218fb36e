//! Exact rational and real-quadratic arithmetic.

mod parse;
mod quadratic;

use thiserror::Error;

pub use parse::{parse_quadratic, ParseError, ParseErrorKind};
pub use quadratic::{square_free_split, QuadraticNumber, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error(
        "numbers from distinct fields Q(sqrt({left})) and Q(sqrt({right})) cannot be combined"
    )]
    FieldMismatch { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand must be a positive integer")]
    NonPositiveRadicand,
}

/// Coordinates `(p, q)` with `x = p + q·ε`, for irrational `ε` in the same field as `x`.
///
/// Returns `None` when `ε` is rational (the basis `{1, ε}` is degenerate).
pub fn coordinates_in_basis(
    x: &QuadraticNumber,
    epsilon: &QuadraticNumber,
) -> Result<Option<(Rational, Rational)>, ArithError> {
    QuadraticNumber::field_of([x, epsilon])?;
    if epsilon.is_rational() {
        return Ok(None);
    }
    let q = x.surd_part() / epsilon.surd_part();
    let p = x.rational_part() - &q * epsilon.rational_part();
    Ok(Some((p, q)))
}

/// Exact test of `x ∈ Z + Zε` for irrational `ε`.
pub fn in_integer_span(x: &QuadraticNumber, epsilon: &QuadraticNumber) -> Result<bool, ArithError> {
    Ok(match coordinates_in_basis(x, epsilon)? {
        Some((p, q)) => p.is_integer() && q.is_integer(),
        None => false,
    })
}
