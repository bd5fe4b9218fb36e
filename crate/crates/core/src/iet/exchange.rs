use serde::Serialize;

use crate::arith::QuadraticNumber;
use crate::words::{Alphabet, Word};

use super::{IetError, IetParameters};

/// Which end of each interval is closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `[a, b)`, used everywhere by default.
    LeftClosed,
    /// `(a, b]`.
    RightClosed,
}

impl Convention {
    pub fn contains(self, lo: &QuadraticNumber, hi: &QuadraticNumber, x: &QuadraticNumber) -> bool {
        match self {
            Convention::LeftClosed => lo <= x && x < hi,
            Convention::RightClosed => lo < x && x <= hi,
        }
    }
}

/// The exchange `T` of `I_A`, `I_B`, `I_C` with permutation (321).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeIet {
    params: IetParameters,
    convention: Convention,
    // c, c+α, c+ε, c+l
    endpoints: [QuadraticNumber; 4],
    translations: [QuadraticNumber; 3],
}

/// Coding of the orbit of 0 together with the orbit points.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub word: Word,
    /// `points[k] = T^k(0)` for `0 ≤ k ≤ n`.
    pub points: Vec<QuadraticNumber>,
}

impl ThreeIet {
    pub fn new(params: IetParameters) -> Self {
        Self::with_convention(params, Convention::LeftClosed)
    }

    pub fn with_convention(params: IetParameters, convention: Convention) -> Self {
        let c = params.c().clone();
        let endpoints = [
            c.clone(),
            &c + &params.alpha(),
            &c + params.epsilon(),
            &c + params.l(),
        ];
        let translations = params.translations();
        ThreeIet {
            params,
            convention,
            endpoints,
            translations,
        }
    }

    pub fn params(&self) -> &IetParameters {
        &self.params
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Endpoints `(lo, hi)` of `I_X` for letter index `x`.
    pub fn interval(&self, letter: u8) -> (&QuadraticNumber, &QuadraticNumber) {
        let i = letter as usize;
        (&self.endpoints[i], &self.endpoints[i + 1])
    }

    pub fn translation(&self, letter: u8) -> &QuadraticNumber {
        &self.translations[letter as usize]
    }

    pub fn translations(&self) -> &[QuadraticNumber; 3] {
        &self.translations
    }

    /// The domain `I = I_A ∪ I_B ∪ I_C` as `(c, c+l)`.
    pub fn domain(&self) -> (&QuadraticNumber, &QuadraticNumber) {
        (&self.endpoints[0], &self.endpoints[3])
    }

    pub fn contains(&self, x: &QuadraticNumber) -> bool {
        let (lo, hi) = self.domain();
        self.convention.contains(lo, hi, x)
    }

    /// The letter whose interval contains `x`.
    pub fn locate(&self, x: &QuadraticNumber) -> Option<u8> {
        (0..3u8).find(|&letter| {
            let (lo, hi) = self.interval(letter);
            self.convention.contains(lo, hi, x)
        })
    }

    pub fn map(&self, x: &QuadraticNumber) -> Option<QuadraticNumber> {
        self.locate(x).map(|letter| x + self.translation(letter))
    }

    /// Codes the first `n` points of the orbit of 0.
    ///
    /// Under the left-closed convention this never fails: `0 ∈ I` and `T`
    /// maps `I` onto itself. Under the right-closed convention the orbit
    /// leaves the domain immediately when `c = 0`.
    pub fn orbit(&self, n: usize) -> Result<Orbit, IetError> {
        let mut letters = Vec::with_capacity(n);
        let mut points = Vec::with_capacity(n + 1);
        let mut x = QuadraticNumber::zero();
        for index in 0..n {
            let letter = self.locate(&x).ok_or(IetError::OutsideDomain { index })?;
            let next = &x + self.translation(letter);
            letters.push(letter);
            points.push(x);
            x = next;
        }
        points.push(x);
        Ok(Orbit {
            word: Word::from_indices_unchecked(Alphabet::ternary(), letters),
            points,
        })
    }

    pub fn code_orbit(&self, n: usize) -> Result<Word, IetError> {
        Ok(self.orbit(n)?.word)
    }
}
