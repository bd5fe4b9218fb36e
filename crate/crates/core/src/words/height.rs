//! The height maps `f` (binary words) and `g` (ternary words), and the sets `E_X`.

use serde::Serialize;

use crate::arith::QuadraticNumber;
use crate::iet::{IetParameters, ThreeIet};

use super::{Alphabet, AnalysisError, Word};

/// Exact values on all prefixes, `values[n]` for the prefix of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HeightSeries {
    pub values: Vec<QuadraticNumber>,
    /// `running_min[n]` is an index in `0..=n` where the minimum of `values[..=n]` is attained.
    pub running_min: Vec<usize>,
}

impl HeightSeries {
    fn from_values(values: Vec<QuadraticNumber>) -> Self {
        let mut running_min = Vec::with_capacity(values.len());
        let mut best = 0;
        for (i, v) in values.iter().enumerate() {
            if v < &values[best] {
                best = i;
            }
            running_min.push(best);
        }
        HeightSeries {
            values,
            running_min,
        }
    }

    pub fn min(&self) -> &QuadraticNumber {
        &self.values[*self
            .running_min
            .last()
            .expect("series includes the empty prefix")]
    }

    pub fn max(&self) -> &QuadraticNumber {
        self.values
            .iter()
            .reduce(|a, b| if b > a { b } else { a })
            .expect("series includes the empty prefix")
    }

    /// `max − min = max_{i,j} |values[i] − values[j]|`.
    pub fn spread(&self) -> QuadraticNumber {
        self.max() - self.min()
    }
}

/// `f(V) = |V|_0(1−ε) − |V|_1 ε = |V|_0 − |V|ε` on every prefix `V` of `v`.
pub fn height_f(v: &Word, epsilon: &QuadraticNumber) -> Result<HeightSeries, AnalysisError> {
    v.expect_alphabet(&Alphabet::binary())?;
    let mut zeros = 0i64;
    let mut values = Vec::with_capacity(v.len() + 1);
    values.push(QuadraticNumber::zero());
    for (n, &letter) in v.letters().iter().enumerate() {
        zeros += (letter == 0) as i64;
        values.push(QuadraticNumber::from_integer(zeros) - epsilon.scale_int(n as i64 + 1));
    }
    Ok(HeightSeries::from_values(values))
}

/// `g(w) = |w|_A t_A + |w|_B t_B + |w|_C t_C` on every prefix `w` of `u`.
pub fn height_g(u: &Word, params: &IetParameters) -> Result<HeightSeries, AnalysisError> {
    u.expect_alphabet(&Alphabet::ternary())?;
    Ok(HeightSeries::from_values(g_values(
        u.letters(),
        params.epsilon(),
    )))
}

/// `g` on every prefix, as `(|w|_A + |w|_B) − (|w|_A + 2|w|_B + |w|_C)ε`.
pub(crate) fn g_values(letters: &[u8], epsilon: &QuadraticNumber) -> Vec<QuadraticNumber> {
    let (mut integer, mut slope) = (0i64, 0i64);
    let mut values = Vec::with_capacity(letters.len() + 1);
    values.push(QuadraticNumber::zero());
    for &letter in letters {
        match letter {
            0 => {
                integer += 1;
                slope += 1;
            }
            1 => {
                integer += 1;
                slope += 2;
            }
            _ => slope += 1,
        }
        values.push(QuadraticNumber::from_integer(integer) - epsilon.scale_int(slope));
    }
    values
}

/// Sampled `E_X = { g(u_0⋯u_{n−1}) | u_n = X }` for `X = A, B, C`.
pub fn e_sets(
    u: &Word,
    params: &IetParameters,
) -> Result<[Vec<QuadraticNumber>; 3], AnalysisError> {
    u.expect_alphabet(&Alphabet::ternary())?;
    let values = g_values(u.letters(), params.epsilon());
    let mut sets: [Vec<QuadraticNumber>; 3] = Default::default();
    for (value, &letter) in values.into_iter().zip(u.letters()) {
        sets[letter as usize].push(value);
    }
    Ok(sets)
}

/// Whether every sampled point of `E_X` lies in `I_X`.
pub fn e_sets_within_intervals(sets: &[Vec<QuadraticNumber>; 3], t: &ThreeIet) -> bool {
    sets.iter().zip(0u8..).all(|(points, letter)| {
        let (lo, hi) = t.interval(letter);
        points.iter().all(|x| t.convention().contains(lo, hi, x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> IetParameters {
        IetParameters::parse("(-1+sqrt(5))/2", "(1+sqrt(5))/4", "0").unwrap()
    }

    #[test]
    fn f_examples() {
        let p = golden();
        let f = height_f(&Word::binary("01").unwrap(), p.epsilon()).unwrap();
        assert_eq!(
            f.values[2],
            QuadraticNumber::one() - p.epsilon().scale_int(2)
        );
        let empty = height_f(&Word::binary("").unwrap(), p.epsilon()).unwrap();
        assert_eq!(empty.values, vec![QuadraticNumber::zero()]);
        assert!(height_f(&Word::ternary("A").unwrap(), p.epsilon()).is_err());
    }

    #[test]
    fn g_examples() {
        let p = golden();
        let g = height_g(&Word::ternary("A").unwrap(), &p).unwrap();
        assert_eq!(g.values[0], QuadraticNumber::zero());
        assert_eq!(g.values[1], QuadraticNumber::one() - p.epsilon());
    }

    #[test]
    fn g_matches_orbit_points() {
        let p = golden();
        let orbit = ThreeIet::new(p.clone()).orbit(500).unwrap();
        let g = height_g(&orbit.word, &p).unwrap();
        assert_eq!(g.values, orbit.points);
    }

    #[test]
    fn single_letter_e_sets() {
        let p = golden();
        let u = Word::ternary("A").unwrap();
        let sets = e_sets(&u, &p).unwrap();
        assert_eq!(sets[0], vec![QuadraticNumber::zero()]);
        assert!(sets[1].is_empty() && sets[2].is_empty());
    }

    #[test]
    fn running_minimum() {
        let eps: QuadraticNumber = "(-1+sqrt(5))/2".parse().unwrap();
        let f = height_f(&Word::binary("0110").unwrap(), &eps).unwrap();
        // values: 0, 1−ε, 1−2ε, 1−3ε, 2−4ε
        assert_eq!(f.running_min, vec![0, 0, 2, 3, 3]);
        assert_eq!(f.min(), &(QuadraticNumber::one() - eps.scale_int(3)));
        assert_eq!(f.max(), &(QuadraticNumber::one() - &eps));
    }
}
