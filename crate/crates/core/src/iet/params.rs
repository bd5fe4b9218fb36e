use serde::Serialize;

use crate::arith::QuadraticNumber;

use super::IetError;

/// Parameters `(ε, l, c)` of a 3iet under the normalization `α + 2β + γ = 1`.
///
/// Construction checks `0 < ε < 1`, `max(ε, 1−ε) < l < 1` and `−l < c ≤ 0`
/// exactly, and that all three values share one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IetParameters {
    epsilon: QuadraticNumber,
    l: QuadraticNumber,
    c: QuadraticNumber,
}

impl IetParameters {
    pub fn new(
        epsilon: QuadraticNumber,
        l: QuadraticNumber,
        c: QuadraticNumber,
    ) -> Result<Self, IetError> {
        QuadraticNumber::field_of([&epsilon, &l, &c])?;
        let zero = QuadraticNumber::zero();
        let one = QuadraticNumber::one();
        let check = |holds: bool, inequality: &'static str| {
            if holds {
                Ok(())
            } else {
                Err(IetError::ConstraintViolation { inequality })
            }
        };
        check(epsilon > zero && epsilon < one, "0 < ε < 1")?;
        check(l > epsilon && l > &one - &epsilon, "l > max(ε,1−ε)")?;
        check(l < one, "l < 1")?;
        check(c > -&l, "c > −l")?;
        check(c <= zero, "c ≤ 0")?;
        Ok(IetParameters { epsilon, l, c })
    }

    /// Parses the three values from the exact expression grammar.
    pub fn parse(epsilon: &str, l: &str, c: &str) -> Result<Self, IetError> {
        Self::new(epsilon.parse()?, l.parse()?, c.parse()?)
    }

    pub fn epsilon(&self) -> &QuadraticNumber {
        &self.epsilon
    }

    pub fn l(&self) -> &QuadraticNumber {
        &self.l
    }

    pub fn c(&self) -> &QuadraticNumber {
        &self.c
    }

    /// `α = ε + l − 1`, the length of `I_A`.
    pub fn alpha(&self) -> QuadraticNumber {
        &self.epsilon + &self.l - QuadraticNumber::one()
    }

    /// `β = 1 − l`, the length of `I_B`.
    pub fn beta(&self) -> QuadraticNumber {
        QuadraticNumber::one() - &self.l
    }

    /// `γ = l − ε`, the length of `I_C`.
    pub fn gamma(&self) -> QuadraticNumber {
        &self.l - &self.epsilon
    }

    pub fn lengths(&self) -> [QuadraticNumber; 3] {
        [self.alpha(), self.beta(), self.gamma()]
    }

    /// `(t_A, t_B, t_C) = (1−ε, 1−2ε, −ε)`.
    pub fn translations(&self) -> [QuadraticNumber; 3] {
        translation_vector(&self.epsilon)
    }

    /// The common quadratic field of the parameters, if any is irrational.
    pub fn field(&self) -> Option<u64> {
        QuadraticNumber::field_of([&self.epsilon, &self.l, &self.c])
            .expect("validated at construction")
    }
}

/// The translation vector `(1−ε, 1−2ε, −ε)` of a 3iet with slope `ε`.
pub fn translation_vector(epsilon: &QuadraticNumber) -> [QuadraticNumber; 3] {
    let one = QuadraticNumber::one();
    [&one - epsilon, &one - &epsilon.scale_int(2), -epsilon]
}
