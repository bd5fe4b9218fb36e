use crate::arith::QuadraticNumber;
use crate::words::{Alphabet, Word};

use super::{IetError, IetParameters};

/// Exchange of `J_0 = [start, split)` and `J_1 = [split, end)`, i.e. the
/// rotation `x ↦ x + (end − split)` on `J_0` and `x ↦ x − (split − start)` on `J_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    start: QuadraticNumber,
    split: QuadraticNumber,
    end: QuadraticNumber,
    shifts: [QuadraticNumber; 2],
}

impl Rotation {
    pub fn new(
        start: QuadraticNumber,
        split: QuadraticNumber,
        end: QuadraticNumber,
    ) -> Result<Self, IetError> {
        QuadraticNumber::field_of([&start, &split, &end])?;
        if !(start < split && split < end) {
            return Err(IetError::InvalidInterval);
        }
        let shifts = [&end - &split, &start - &split];
        Ok(Rotation {
            start,
            split,
            end,
            shifts,
        })
    }

    /// `R` on `J = [c, c+1)` with `J_0 = I_A ∪ I_B`, `J_1 = I_C ∪ I_D`.
    pub fn r(params: &IetParameters) -> Self {
        let start = params.c().clone();
        let split = &start + params.epsilon();
        let end = &start + &QuadraticNumber::one();
        Self::new(start, split, end).expect("valid parameters give a valid rotation")
    }

    /// `R′` on `J′ = [c−β, c+l)` with `J′_0 = I_E ∪ I_A`, `J′_1 = I_B ∪ I_C`.
    pub fn r_prime(params: &IetParameters) -> Self {
        let start = params.c() - &params.beta();
        let split = params.c() + &params.alpha();
        let end = params.c() + params.l();
        Self::new(start, split, end).expect("valid parameters give a valid rotation")
    }

    pub fn domain(&self) -> (&QuadraticNumber, &QuadraticNumber) {
        (&self.start, &self.end)
    }

    pub fn split(&self) -> &QuadraticNumber {
        &self.split
    }

    /// Lengths `(|J_0|, |J_1|)`.
    pub fn lengths(&self) -> (QuadraticNumber, QuadraticNumber) {
        (&self.split - &self.start, &self.end - &self.split)
    }

    pub fn shift(&self, part: u8) -> &QuadraticNumber {
        &self.shifts[part as usize]
    }

    pub fn contains(&self, x: &QuadraticNumber) -> bool {
        &self.start <= x && x < &self.end
    }

    /// 0 for `J_0`, 1 for `J_1`.
    pub fn locate(&self, x: &QuadraticNumber) -> Option<u8> {
        if !self.contains(x) {
            None
        } else if x < &self.split {
            Some(0)
        } else {
            Some(1)
        }
    }

    pub fn map(&self, x: &QuadraticNumber) -> Option<QuadraticNumber> {
        self.locate(x).map(|part| x + self.shift(part))
    }

    /// Binary coding of the first `n` points of the orbit of 0.
    pub fn code(&self, n: usize) -> Result<Word, IetError> {
        let mut letters = Vec::with_capacity(n);
        let mut x = QuadraticNumber::zero();
        for index in 0..n {
            let part = self.locate(&x).ok_or(IetError::OutsideDomain { index })?;
            x = &x + self.shift(part);
            letters.push(part);
        }
        Ok(Word::from_indices_unchecked(Alphabet::binary(), letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_parts_have_slope_lengths() {
        let p = IetParameters::parse("(-1+sqrt(5))/2", "(1+sqrt(5))/4", "-1/5").unwrap();
        let one_minus = QuadraticNumber::one() - p.epsilon();
        for r in [Rotation::r(&p), Rotation::r_prime(&p)] {
            let (j0, j1) = r.lengths();
            assert_eq!(&j0, p.epsilon());
            assert_eq!(j1, one_minus);
        }
    }

    #[test]
    fn rational_rotation_codes_periodically() {
        let p = IetParameters::parse("1/2", "3/4", "0").unwrap();
        assert_eq!(Rotation::r(&p).code(6).unwrap().to_string(), "010101");
        assert!(Rotation::r(&p).code(0).unwrap().is_empty());
    }

    #[test]
    fn rejects_degenerate_intervals() {
        let z = QuadraticNumber::zero();
        let one = QuadraticNumber::one();
        assert_eq!(
            Rotation::new(z.clone(), z.clone(), one),
            Err(IetError::InvalidInterval)
        );
    }
}
