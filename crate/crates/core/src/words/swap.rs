//! Exchanging the pairs `01 → 10` at chosen positions of a binary word.

use serde::Serialize;

use crate::arith::QuadraticNumber;

use super::{height_f, Alphabet, AnalysisError, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SwapOutcome {
    pub word: Word,
    /// `f(V_{n_j}) > f(V_i)` for every chosen `n_j` and every other `i` in `0..=|v|`.
    pub criterion_holds: bool,
    /// Some other index attains `min_j f(V_{n_j})` exactly.
    pub equality_boundary: bool,
}

/// Replaces `v_{n−1} v_n = 01` by `10` for each `n` in `positions`.
pub fn swap_transform(
    v: &Word,
    positions: &[usize],
    epsilon: &QuadraticNumber,
) -> Result<SwapOutcome, AnalysisError> {
    v.expect_alphabet(&Alphabet::binary())?;
    let letters = v.letters();
    let mut previous: Option<usize> = None;
    for &n in positions {
        let violation = |reason| AnalysisError::Precondition {
            position: n,
            reason,
        };
        if previous.is_some_and(|p| n <= p + 1) {
            return Err(violation(
                "positions must be strictly increasing and non-adjacent",
            ));
        }
        if n == 0 || n >= letters.len() {
            return Err(violation("position must satisfy 1 ≤ n < |v|"));
        }
        if letters[n - 1] != 0 || letters[n] != 1 {
            return Err(violation("expected v[n−1] = 0 and v[n] = 1"));
        }
        previous = Some(n);
    }

    let mut swapped = letters.to_vec();
    for &n in positions {
        swapped.swap(n - 1, n);
    }

    let f = height_f(v, epsilon)?;
    let chosen: std::collections::HashSet<usize> = positions.iter().copied().collect();
    let (criterion_holds, equality_boundary) = match positions
        .iter()
        .map(|&n| &f.values[n])
        .reduce(|a, b| if b < a { b } else { a })
    {
        None => (true, false),
        Some(lowest) => {
            let others = || {
                (0..f.values.len())
                    .filter(|i| !chosen.contains(i))
                    .map(|i| &f.values[i])
            };
            (others().all(|x| x < lowest), others().any(|x| x == lowest))
        }
    };
    Ok(SwapOutcome {
        word: Word::from_indices_unchecked(Alphabet::binary(), swapped),
        criterion_holds,
        equality_boundary,
    })
}
