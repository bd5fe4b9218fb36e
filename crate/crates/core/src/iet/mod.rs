//! Three-interval exchanges, the underlying rotations, orbit codings and induction.

mod exchange;
mod induction;
mod params;
mod rotation;

use thiserror::Error;

use crate::arith::{in_integer_span, ArithError, ParseError, QuadraticNumber, Rational};

pub use exchange::{Convention, Orbit, ThreeIet};
pub use induction::{first_return, InducedMap, InducedPiece, DEFAULT_RETURN_CAP};
pub use params::{translation_vector, IetParameters};
pub use rotation::Rotation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IetError {
    #[error("parameter constraint violated: {inequality}")]
    ConstraintViolation { inequality: &'static str },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("orbit point {index} lies outside the domain")]
    OutsideDomain { index: usize },
    #[error("return time exceeded the cap of {cap}")]
    ReturnTimeCapExceeded { cap: usize },
    #[error("interval must be non-empty and contained in the rotation domain")]
    InvalidInterval,
    #[error("orbit of 0 did not close up within {cap} steps")]
    PeriodNotFound { cap: usize },
}

/// Keane's infinite distinct orbit condition: `ε ∉ Q` and `l ∉ Z + Zε`.
pub fn idoc(params: &IetParameters) -> bool {
    !params.epsilon().is_rational()
        && !in_integer_span(params.l(), params.epsilon()).expect("parameters share one field")
}

/// Letter densities of the coded orbit of 0.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Densities {
    /// `ε` irrational: `(α/l, β/l, γ/l)`.
    Exact([QuadraticNumber; 3]),
    /// `ε` rational: frequencies over one period of the (periodic) word.
    Periodic {
        period: usize,
        frequencies: [Rational; 3],
    },
}

impl Densities {
    pub fn values(&self) -> [QuadraticNumber; 3] {
        match self {
            Densities::Exact(v) => v.clone(),
            Densities::Periodic { frequencies, .. } => {
                frequencies.clone().map(QuadraticNumber::from_rational)
            }
        }
    }
}

pub fn densities(params: &IetParameters) -> Result<Densities, IetError> {
    if !params.epsilon().is_rational() {
        let l = params.l();
        return Ok(Densities::Exact(params.lengths().map(|len| &len / l)));
    }
    let t = ThreeIet::new(params.clone());
    let zero = QuadraticNumber::zero();
    let mut counts = [0usize; 3];
    let mut x = zero.clone();
    for step in 1..=DEFAULT_RETURN_CAP {
        let letter = t.locate(&x).expect("T maps I onto itself");
        counts[letter as usize] += 1;
        x = &x + t.translation(letter);
        if x == zero {
            let frequencies = counts.map(|k| Rational::new(k.into(), step.into()));
            return Ok(Densities::Periodic {
                period: step,
                frequencies,
            });
        }
    }
    Err(IetError::PeriodNotFound {
        cap: DEFAULT_RETURN_CAP,
    })
}
