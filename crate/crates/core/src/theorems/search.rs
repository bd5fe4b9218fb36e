use rayon::prelude::*;
use serde::Serialize;

use crate::subst::Morphism;
use crate::words::{find_imbalance, Alphabet};

use super::{theorem_b_audit, AuditReport, TheoremError};

/// Factor lengths scanned by the cheap balance prefilter.
const PREFILTER_FACTOR_LENGTH: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchBounds {
    pub max_image_length: usize,
    pub max_total_length: usize,
    pub prefix_length: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchReport {
    pub bounds: SearchBounds,
    pub enumerated: usize,
    pub primitive_with_fixed_point: usize,
    /// Audits of every candidate whose fixed point passes the 3iet certificate,
    /// sorted by morphism text.
    pub candidates: Vec<AuditReport>,
}

/// All substitutions on `{A,B,C}` with non-empty images within the bounds.
pub fn enumerate_substitutions(max_image_length: usize, max_total_length: usize) -> Vec<Morphism> {
    let mut out = Vec::new();
    let cap = max_image_length.min(max_total_length);
    for a in 1..=cap {
        for b in 1..=cap {
            for c in 1..=cap {
                if a + b + c > max_total_length {
                    continue;
                }
                let total = a + b + c;
                for code in 0..3usize.pow(total as u32) {
                    let mut digits = Vec::with_capacity(total);
                    let mut k = code;
                    for _ in 0..total {
                        digits.push((k % 3) as u8);
                        k /= 3;
                    }
                    let images = vec![
                        digits[..a].to_vec(),
                        digits[a..a + b].to_vec(),
                        digits[a + b..].to_vec(),
                    ];
                    out.push(
                        Morphism::new(Alphabet::ternary(), Alphabet::ternary(), images)
                            .expect("non-empty images"),
                    );
                }
            }
        }
    }
    out
}

// Cheap rejection before a full audit.
fn prefilter(m: &Morphism, prefix_length: usize) -> Option<bool> {
    if !m.incidence().is_primitive().ok()? {
        return None;
    }
    let u = m.fixed_point_prefix(None, prefix_length).ok()?;
    if u.counts().contains(&0) {
        return Some(false);
    }
    let v = Morphism::sigma().apply(&u).ok()?;
    let v_prime = Morphism::sigma_prime().apply(&u).ok()?;
    let balanced = [v, v_prime]
        .iter()
        .all(|w| find_imbalance(w, 1, PREFILTER_FACTOR_LENGTH).is_none());
    Some(balanced)
}

/// Exhaustive search for substitutions whose fixed point passes the 3iet
/// certificate, auditing each one.
pub fn search(bounds: SearchBounds) -> Result<SearchReport, TheoremError> {
    let all = enumerate_substitutions(bounds.max_image_length, bounds.max_total_length);
    let filtered: Vec<(Morphism, bool)> = all
        .par_iter()
        .filter_map(|m| prefilter(m, bounds.prefix_length).map(|keep| (m.clone(), keep)))
        .collect();
    let primitive_with_fixed_point = filtered.len();
    let mut candidates: Vec<AuditReport> = filtered
        .into_par_iter()
        .filter(|(_, keep)| *keep)
        .map(|(m, _)| theorem_b_audit(&m, bounds.prefix_length))
        .filter(|r| !matches!(r, Ok(report) if !report.fixed_point_consistent))
        .collect::<Result<_, _>>()?;
    candidates.sort_by(|a, b| a.morphism.cmp(&b.morphism));
    Ok(SearchReport {
        bounds,
        enumerated: all.len(),
        primitive_with_fixed_point,
        candidates,
    })
}
