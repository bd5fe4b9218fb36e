use rayon::prelude::*;
use serde::Serialize;

use super::{AnalysisError, Word};

/// Two equal-length factors whose counts of `letter` differ by `imbalance`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ImbalanceWitness {
    pub letter: char,
    pub length: usize,
    /// Start positions of the two factors: most and fewest occurrences.
    pub positions: (usize, usize),
    pub counts: (usize, usize),
    pub imbalance: usize,
}

impl ImbalanceWitness {
    /// The two factors as strings.
    pub fn factors(&self, w: &Word) -> (String, String) {
        let slice = |start: usize| -> String {
            w.letters()[start..start + self.length]
                .iter()
                .map(|&l| w.alphabet().letter(l))
                .collect()
        };
        (slice(self.positions.0), slice(self.positions.1))
    }
}

/// Exhaustive per-letter imbalance over all factor pairs of each length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BalanceReport {
    pub n_max: usize,
    /// `per_letter[a][n]`: max over factor pairs of length `n` of `||w|_a − |ŵ|_a|`.
    pub per_letter: Vec<Vec<usize>>,
    pub letters: Vec<char>,
    /// Largest entry of the table.
    pub max_imbalance: usize,
    /// A factor pair attaining `max_imbalance` at the smallest length.
    pub witness: Option<ImbalanceWitness>,
}

impl BalanceReport {
    pub fn is_balanced(&self, k: usize) -> bool {
        self.max_imbalance <= k
    }
}

fn prefix_sums(w: &Word, letter: u8) -> Vec<u32> {
    let mut sums = Vec::with_capacity(w.len() + 1);
    let mut acc = 0u32;
    sums.push(0);
    for &l in w.letters() {
        acc += (l == letter) as u32;
        sums.push(acc);
    }
    sums
}

// (imbalance, (argmax, argmin), (max, min)) over windows of length n.
fn spread(sums: &[u32], n: usize) -> (usize, (usize, usize), (usize, usize)) {
    let windows = sums.len() - n;
    let (mut hi, mut lo) = (0u32, u32::MAX);
    let (mut hi_at, mut lo_at) = (0, 0);
    for i in 0..windows {
        let count = sums[i + n] - sums[i];
        if count > hi {
            hi = count;
            hi_at = i;
        }
        if count < lo {
            lo = count;
            lo_at = i;
        }
    }
    if hi < lo {
        // Fewer than one window; happens only when n = 0 and the word is empty.
        return (0, (0, 0), (0, 0));
    }
    (
        (hi - lo) as usize,
        (hi_at, lo_at),
        (hi as usize, lo as usize),
    )
}

pub fn balance(w: &Word, n_max: usize) -> Result<BalanceReport, AnalysisError> {
    if n_max > w.len() {
        return Err(AnalysisError::WindowTooLong {
            requested: n_max,
            available: w.len(),
        });
    }
    let alphabet = w.alphabet();
    let mut per_letter = Vec::with_capacity(alphabet.len());
    let mut witness: Option<ImbalanceWitness> = None;
    for letter in 0..alphabet.len() as u8 {
        let sums = prefix_sums(w, letter);
        let row: Vec<_> = (0..=n_max)
            .into_par_iter()
            .map(|n| spread(&sums, n))
            .collect();
        for (n, &(imbalance, positions, counts)) in row.iter().enumerate() {
            let better = match &witness {
                None => imbalance > 0,
                Some(best) => {
                    imbalance > best.imbalance || (imbalance == best.imbalance && n < best.length)
                }
            };
            if better {
                witness = Some(ImbalanceWitness {
                    letter: alphabet.letter(letter),
                    length: n,
                    positions,
                    counts,
                    imbalance,
                });
            }
        }
        per_letter.push(row.into_iter().map(|(imbalance, _, _)| imbalance).collect());
    }
    let max_imbalance = witness.as_ref().map_or(0, |w| w.imbalance);
    Ok(BalanceReport {
        n_max,
        per_letter,
        letters: alphabet.letters().to_vec(),
        max_imbalance,
        witness,
    })
}

/// First factor pair (shortest length, then first letter) with imbalance above `bound`,
/// scanning lengths up to `n_max`.
pub fn find_imbalance(w: &Word, bound: usize, n_max: usize) -> Option<ImbalanceWitness> {
    let n_max = n_max.min(w.len());
    let alphabet = w.alphabet();
    // Over a binary alphabet the two letters have identical imbalances.
    let letters = if alphabet.len() == 2 {
        1
    } else {
        alphabet.len()
    };
    let sums: Vec<_> = (0..letters as u8).map(|l| prefix_sums(w, l)).collect();
    (1..=n_max).into_par_iter().find_map_first(|n| {
        sums.iter().zip(0u8..).find_map(|(s, letter)| {
            let (imbalance, positions, counts) = spread(s, n);
            (imbalance > bound).then(|| ImbalanceWitness {
                letter: alphabet.letter(letter),
                length: n,
                positions,
                counts,
                imbalance,
            })
        })
    })
}
