use std::collections::HashMap;

use serde::Serialize;

use super::{AnalysisError, Word};

/// Factor counts `C(n)` for `0 ≤ n ≤ n_max` of a finite word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComplexityProfile {
    /// `counts[n]` is the number of distinct factors of length `n`.
    pub counts: Vec<usize>,
    /// Largest `n` such that every length up to `n` has the same count on the
    /// first half of the word as on the whole word.
    pub reliable_up_to: usize,
}

impl ComplexityProfile {
    pub fn count(&self, n: usize) -> usize {
        self.counts[n]
    }

    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Distinct-factor counts for every length up to `n_max`.
///
/// Factors of length `n + 1` are identified by the pair (class of the length-`n`
/// factor at the same position, next letter), so each length costs one linear pass.
pub fn factor_counts(letters: &[u8], n_max: usize) -> Vec<usize> {
    let len = letters.len();
    let mut counts = Vec::with_capacity(n_max + 1);
    counts.push(1);
    let mut class: Vec<u32> = vec![0; len + 1];
    let mut ids: HashMap<(u32, u8), u32> = HashMap::new();
    for n in 0..n_max.min(len) {
        ids.clear();
        // class[i] identifies letters[i..i+n]; extend to letters[i..i+n+1].
        let windows = len - n;
        let mut next = Vec::with_capacity(windows);
        for i in 0..windows {
            let key = (class[i], letters[i + n]);
            let fresh = ids.len() as u32;
            next.push(*ids.entry(key).or_insert(fresh));
        }
        counts.push(ids.len());
        class = next;
    }
    counts.resize(n_max + 1, 0);
    counts
}

pub fn complexity(w: &Word, n_max: usize) -> Result<ComplexityProfile, AnalysisError> {
    if n_max > w.len() {
        return Err(AnalysisError::WindowTooLong {
            requested: n_max,
            available: w.len(),
        });
    }
    let counts = factor_counts(w.letters(), n_max);
    let half = factor_counts(&w.letters()[..w.len() / 2], n_max);
    let reliable_up_to = counts
        .iter()
        .zip(&half)
        .position(|(a, b)| a != b)
        .map_or(n_max, |first_bad| first_bad - 1);
    Ok(ComplexityProfile {
        counts,
        reliable_up_to,
    })
}
