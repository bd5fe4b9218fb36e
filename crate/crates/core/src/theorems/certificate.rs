use serde::Serialize;

use crate::subst::Morphism;
use crate::words::{factor_counts, find_imbalance, Alphabet, ImbalanceWitness, Word};

use super::TheoremError;

pub const DEFAULT_MIN_LENGTH: usize = 1000;

/// Largest factor length for the aperiodicity check `C(n) ≥ n + 1`.
const APERIODICITY_MAX_N: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Image {
    Sigma,
    SigmaPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CertificateVerdict {
    #[serde(rename = "consistent-with-3iet")]
    ConsistentWith3iet,
    #[serde(rename_all = "camelCase")]
    Refuted {
        image: Image,
        witness: ImbalanceWitness,
        factors: (String, String),
    },
    #[serde(rename_all = "camelCase")]
    /// `C(length) = complexity ≤ length`, and the second half of the image
    /// repeats with `period`.
    Periodic {
        image: Image,
        length: usize,
        complexity: usize,
        period: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    #[serde(flatten)]
    pub verdict: CertificateVerdict,
    pub word_length: usize,
    /// Factor lengths scanned for 1-balance in each image.
    pub balance_checked_up_to: usize,
    /// Factor lengths checked for `C(n) ≥ n + 1`.
    pub complexity_checked_up_to: usize,
}

impl CertificateVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            CertificateVerdict::ConsistentWith3iet => "consistent-with-3iet",
            CertificateVerdict::Refuted { .. } => "refuted",
            CertificateVerdict::Periodic { .. } => "periodic",
        }
    }
}

impl Certificate {
    pub fn is_consistent(&self) -> bool {
        self.verdict == CertificateVerdict::ConsistentWith3iet
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateOptions {
    pub min_length: usize,
    /// Longest factor length scanned for 1-balance; `None` scans all.
    pub max_factor_length: Option<usize>,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions {
            min_length: DEFAULT_MIN_LENGTH,
            max_factor_length: None,
        }
    }
}

/// Smallest `p ≤ max_period` with `w[i] = w[i+p]` throughout the second half of `w`.
fn tail_period(w: &[u8], max_period: usize) -> Option<usize> {
    let start = w.len() / 2;
    (1..=max_period).find(|&p| (start..w.len().saturating_sub(p)).all(|i| w[i] == w[i + p]))
}

/// Finite check that `σ(u)` and `σ′(u)` look sturmian: 1-balanced over the
/// scanned factor lengths, and not eventually periodic. A prefix is reported
/// periodic only when some `C(n) ≤ n` is confirmed by an actual period of its
/// second half; a prefix that is merely too short to show every factor is not.
pub fn theorem_a_certificate(
    u: &Word,
    options: CertificateOptions,
) -> Result<Certificate, TheoremError> {
    u.expect_alphabet(&Alphabet::ternary())?;
    if u.len() < options.min_length {
        return Err(TheoremError::TooShort {
            length: u.len(),
            minimum: options.min_length,
        });
    }
    let counts = u.counts();
    if let Some(missing) = (0..3).find(|&x| counts[x] == 0) {
        return Err(TheoremError::MissingLetter(
            Alphabet::ternary().letter(missing as u8),
        ));
    }
    let images = [
        (Image::Sigma, Morphism::sigma().apply(u)?),
        (Image::SigmaPrime, Morphism::sigma_prime().apply(u)?),
    ];
    let v_len = images[0].1.len();
    let balance_checked_up_to = options.max_factor_length.map_or(v_len, |n| n.min(v_len));
    let complexity_checked_up_to = (v_len / 4).min(APERIODICITY_MAX_N);
    let certificate = |verdict| Certificate {
        verdict,
        word_length: u.len(),
        balance_checked_up_to,
        complexity_checked_up_to,
    };
    for (image, v) in &images {
        if let Some(witness) = find_imbalance(v, 1, balance_checked_up_to) {
            let factors = witness.factors(v);
            return Ok(certificate(CertificateVerdict::Refuted {
                image: *image,
                witness,
                factors,
            }));
        }
    }
    for (image, v) in &images {
        let table = factor_counts(v.letters(), complexity_checked_up_to);
        let Some(n) = (1..=complexity_checked_up_to).find(|&n| table[n] < n + 1) else {
            continue;
        };
        if let Some(period) = tail_period(v.letters(), n) {
            return Ok(certificate(CertificateVerdict::Periodic {
                image: *image,
                length: n,
                complexity: table[n],
                period,
            }));
        }
    }
    Ok(certificate(CertificateVerdict::ConsistentWith3iet))
}
