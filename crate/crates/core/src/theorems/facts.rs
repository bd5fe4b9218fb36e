use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::arith::QuadraticNumber;
use crate::iet::{IetParameters, ThreeIet};
use crate::subst::Morphism;
use crate::words::{e_sets_within_intervals, g_values, Alphabet};

use super::TheoremError;

/// A violated fact with the offending block `(X, |w|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FactFinding {
    pub fact: u8,
    pub letter: char,
    pub prefix_length: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FactsReport {
    pub morphism: String,
    pub depth: usize,
    /// Number of sets `E_{φ(X)} + t_w`.
    pub block_count: usize,
    /// Orbit indices covered, `|φ(u_0⋯u_{depth−1})|`.
    pub orbit_points: usize,
    pub shift_equals_iterate: bool,
    pub pairwise_disjoint: bool,
    pub contained_in_e_sets: bool,
    pub union_is_orbit: bool,
    pub findings: Vec<FactFinding>,
}

impl FactsReport {
    pub fn all_hold(&self) -> bool {
        self.shift_equals_iterate
            && self.pairwise_disjoint
            && self.contained_in_e_sets
            && self.union_is_orbit
    }
}

/// Checks, on the orbit of 0 up to `|φ(u_0⋯u_{depth−1})|`, that the sets
/// `E_{φ(X)} + t_w` (`w` a proper prefix of `φ(X)`) are the iterates
/// `T^{|w|}(E_{φ(X)})`, are pairwise disjoint, lie in `E_Y` for
/// `Y = φ(X)_{|w|}`, and together exhaust the orbit points.
pub fn facts_check(
    m: &Morphism,
    params: &IetParameters,
    depth: usize,
) -> Result<FactsReport, TheoremError> {
    facts_check_with_translations(m, params, depth, &params.translations())
}

/// [`facts_check`] with the shifts `t_w` computed from `translations`
/// instead of the exchange's own translation vector.
pub fn facts_check_with_translations(
    m: &Morphism,
    params: &IetParameters,
    depth: usize,
    translations: &[QuadraticNumber; 3],
) -> Result<FactsReport, TheoremError> {
    if m.source() != &Alphabet::ternary() || !m.is_substitution() {
        return Err(TheoremError::NotTernarySubstitution);
    }
    let fixed = m.fixed_point(None, depth.max(1))?;
    let psi = m.power(fixed.power)?;
    let prefix = &fixed.prefix.letters()[..depth];
    let covered: usize = prefix.iter().map(|&x| psi.image(x).len()).sum();
    let u = psi.fixed_point_prefix(Some(fixed.seed), covered + 1)?;
    let letters = u.letters();
    let points = g_values(letters, params.epsilon());

    // Block starts: index |ψ(u_0⋯u_{i−1})| for each i < depth, tagged with u_i.
    let mut starts: Vec<(usize, u8)> = Vec::with_capacity(depth);
    let mut at = 0;
    for &x in prefix {
        starts.push((at, x));
        at += psi.image(x).len();
    }

    let mut e_sets: [Vec<QuadraticNumber>; 3] = Default::default();
    let mut e_lookup: HashMap<&QuadraticNumber, u8> = HashMap::new();
    for (point, &letter) in points.iter().zip(letters).take(covered) {
        e_sets[letter as usize].push(point.clone());
        e_lookup.insert(point, letter);
    }
    let t = ThreeIet::new(params.clone());
    let e_in_intervals = e_sets_within_intervals(&e_sets, &t);

    let mut findings = Vec::new();
    let mut finding = |fact: u8, letter: u8, prefix_length: usize, detail: String| {
        if findings.len() < 20 {
            findings.push(FactFinding {
                fact,
                letter: Alphabet::ternary().letter(letter),
                prefix_length,
                detail,
            });
        }
    };
    let (mut fact1, mut fact2, mut fact3) = (true, true, e_in_intervals);
    if !e_in_intervals {
        finding(3, 0, 0, "a sampled point of E_Y lies outside I_Y".into());
    }
    let mut seen: HashMap<QuadraticNumber, (u8, usize)> = HashMap::new();
    let mut block_count = 0;
    for x in 0..3u8 {
        let image = psi.image(x);
        let mut shift = QuadraticNumber::zero();
        for len in 0..image.len() {
            block_count += 1;
            let expected_letter = image[len];
            for &(start, _) in starts.iter().filter(|(_, y)| *y == x) {
                let point = &points[start] + &shift;
                if point != points[start + len] {
                    if fact1 {
                        finding(
                            1,
                            x,
                            len,
                            format!("shifted point differs from T^{len} at orbit index {start}"),
                        );
                    }
                    fact1 = false;
                }
                match e_lookup.get(&point) {
                    Some(&y) if y == expected_letter => {}
                    _ => {
                        if fact3 {
                            finding(
                                3,
                                x,
                                len,
                                format!(
                                    "shifted point from orbit index {start} is not in E_{}",
                                    Alphabet::ternary().letter(expected_letter)
                                ),
                            );
                        }
                        fact3 = false;
                    }
                }
                if let Some(&(other_x, other_len)) = seen.get(&point) {
                    if (other_x, other_len) != (x, len) {
                        if fact2 {
                            finding(
                                2,
                                x,
                                len,
                                format!(
                                    "meets the set for ({}, {other_len})",
                                    Alphabet::ternary().letter(other_x)
                                ),
                            );
                        }
                        fact2 = false;
                    }
                } else {
                    seen.insert(point, (x, len));
                }
            }
            shift = &shift + &translations[expected_letter as usize];
        }
    }
    let orbit: HashSet<&QuadraticNumber> = points[..covered].iter().collect();
    let union: HashSet<&QuadraticNumber> = seen.keys().collect();
    let union_is_orbit = orbit == union;
    if !union_is_orbit {
        finding(
            4,
            0,
            0,
            format!(
                "union has {} points, orbit has {}",
                union.len(),
                orbit.len()
            ),
        );
    }
    Ok(FactsReport {
        morphism: m.to_string(),
        depth,
        block_count,
        orbit_points: covered,
        shift_equals_iterate: fact1,
        pairwise_disjoint: fact2,
        contained_in_e_sets: fact3,
        union_is_orbit,
        findings,
    })
}
