use serde::Serialize;

use crate::arith::{QuadraticNumber, Rational};
use crate::iet::{Convention, IetParameters, ThreeIet};
use crate::subst::{b_image_positions, Morphism};
use crate::words::{height_f, Alphabet, Word};

use super::TheoremError;

/// Minimal fraction of letters a regenerated word must reproduce.
pub const REGENERATION_THRESHOLD: f64 = 0.99;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EpsilonSource {
    Supplied,
    /// Frequency of `0` in `σ(u)`.
    Estimated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Regeneration {
    pub convention: Convention,
    pub matched_letters: usize,
    pub length: usize,
    pub fraction: f64,
    pub first_mismatch: Option<usize>,
}

impl Regeneration {
    pub fn compare(params: &IetParameters, convention: Convention, u: &Word) -> Self {
        let t = ThreeIet::with_convention(params.clone(), convention);
        let mut x = QuadraticNumber::zero();
        let mut matched_letters = 0;
        let mut first_mismatch = None;
        for (i, &letter) in u.letters().iter().enumerate() {
            let Some(coded) = t.locate(&x) else {
                first_mismatch.get_or_insert(i);
                break;
            };
            if coded == letter {
                matched_letters += 1;
            } else {
                first_mismatch.get_or_insert(i);
            }
            x = &x + t.translation(coded);
        }
        let length = u.len();
        let fraction = if length == 0 {
            1.0
        } else {
            matched_letters as f64 / length as f64
        };
        Regeneration {
            convention,
            matched_letters,
            length,
            fraction,
            first_mismatch,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RecoveredParameters {
    pub epsilon: QuadraticNumber,
    pub epsilon_source: EpsilonSource,
    /// `min_k f(V_k)` over `v = σ(u)`.
    pub c_hat: QuadraticNumber,
    /// `min_k f(V_{n_k}) − c_hat` over the positions `n_k` of the `1` of each `σ(B)`.
    pub l_hat: QuadraticNumber,
    /// The minimum of `f(V_{n_k})` is attained at more than one `n_k`.
    pub attained_infimum_flag: bool,
    /// `|σ(u)|`.
    pub sample_size: usize,
    pub b_count: usize,
    /// `i` is some `n_k` exactly when `f(V_i) ≥ l_hat + c_hat`.
    pub position_classification_holds: bool,
    pub regeneration: Regeneration,
}

impl RecoveredParameters {
    pub fn params(&self) -> IetParameters {
        IetParameters::new(self.epsilon.clone(), self.l_hat.clone(), self.c_hat.clone())
            .expect("validated during recovery")
    }
}

/// Rebuilds `(c, l)` from the heights of `σ(u)` and checks them by regenerating `u`.
pub fn recover_parameters(
    u: &Word,
    epsilon: Option<&QuadraticNumber>,
) -> Result<RecoveredParameters, TheoremError> {
    u.expect_alphabet(&Alphabet::ternary())?;
    if u.len() < 2 {
        return Err(TheoremError::InsufficientData { length: u.len() });
    }
    let v = Morphism::sigma().apply(u)?;
    let positions = b_image_positions(u)?;
    if positions.is_empty() {
        return Err(TheoremError::NoBOccurrence);
    }
    let (epsilon, epsilon_source) = match epsilon {
        Some(e) => (e.clone(), EpsilonSource::Supplied),
        None => {
            let zeros = v.counts()[0];
            let ratio = Rational::new(zeros.into(), v.len().into());
            (
                QuadraticNumber::from_rational(ratio),
                EpsilonSource::Estimated,
            )
        }
    };
    let f = height_f(&v, &epsilon)?;
    let c_hat = f.min().clone();
    let threshold = positions
        .iter()
        .map(|&n| &f.values[n])
        .reduce(|a, b| if b < a { b } else { a })
        .expect("at least one B")
        .clone();
    let attained_infimum_flag = positions
        .iter()
        .filter(|&&n| f.values[n] == threshold)
        .count()
        > 1;
    let l_hat = &threshold - &c_hat;

    let mut is_position = vec![false; f.values.len()];
    for &n in &positions {
        is_position[n] = true;
    }
    let position_classification_holds = f
        .values
        .iter()
        .zip(&is_position)
        .all(|(value, &chosen)| (value >= &threshold) == chosen);

    let params = IetParameters::new(epsilon.clone(), l_hat.clone(), c_hat.clone())?;
    let mut regeneration = Regeneration::compare(&params, Convention::LeftClosed, u);
    if !regeneration.is_exact() {
        let right = Regeneration::compare(&params, Convention::RightClosed, u);
        if right.matched_letters > regeneration.matched_letters {
            regeneration = right;
        }
    }
    if regeneration.fraction < REGENERATION_THRESHOLD {
        return Err(TheoremError::InconsistentRegeneration {
            first_mismatch: regeneration.first_mismatch.unwrap_or(0),
            fraction: regeneration.fraction,
        });
    }
    Ok(RecoveredParameters {
        epsilon,
        epsilon_source,
        c_hat,
        l_hat,
        attained_infimum_flag,
        sample_size: v.len(),
        b_count: positions.len(),
        position_classification_holds,
        regeneration,
    })
}
