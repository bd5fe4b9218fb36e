use serde::Serialize;

use crate::arith::{QuadraticNumber, Rational};

use super::{IncidenceMatrix, SubstError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Rational,
    QuadraticUnit,
    QuadraticNonunit,
    Cubic,
}

/// Exact spectral data of a 1×1, 2×2 or 3×3 integer matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectralClass {
    /// Monic characteristic polynomial, highest degree first.
    pub characteristic_polynomial: Vec<i128>,
    /// Integer roots with multiplicity, in decreasing order.
    pub rational_roots: Vec<i128>,
    pub classification: Classification,
    /// Largest real root `Λ` when it has degree at most 2.
    pub dominant: Option<QuadraticNumber>,
    /// Galois conjugate `Λ′` when `Λ` is quadratic.
    pub conjugate: Option<QuadraticNumber>,
    /// Minimal polynomial of `Λ`, highest degree first.
    pub minimal_polynomial: Vec<i128>,
    pub dominant_approx: f64,
}

/// `det(xI − M)`, highest degree first.
pub fn characteristic_polynomial(m: &IncidenceMatrix) -> Result<Vec<i128>, SubstError> {
    if !m.is_square() {
        return Err(SubstError::NotSquare {
            rows: m.row_count(),
            cols: m.col_count(),
        });
    }
    let a = |i: usize, j: usize| m.get(i, j) as i128;
    Ok(match m.row_count() {
        1 => vec![1, -a(0, 0)],
        2 => vec![
            1,
            -(a(0, 0) + a(1, 1)),
            a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0),
        ],
        3 => {
            let trace = a(0, 0) + a(1, 1) + a(2, 2);
            let minors = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0))
                + (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0))
                + (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
            vec![1, -trace, minors, -m.determinant()?]
        }
        n => return Err(SubstError::UnsupportedDimension(n)),
    })
}

fn eval(poly: &[i128], x: i128) -> i128 {
    poly.iter().fold(0, |acc, &c| acc * x + c)
}

fn eval_f64(poly: &[i128], x: f64) -> f64 {
    poly.iter().fold(0.0, |acc, &c| acc * x + c as f64)
}

/// Divides by `x − r`, assuming `r` is a root.
fn deflate(poly: &[i128], r: i128) -> Vec<i128> {
    let mut out = Vec::with_capacity(poly.len() - 1);
    let mut acc = 0;
    for &c in &poly[..poly.len() - 1] {
        acc = acc * r + c;
        out.push(acc);
    }
    out
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.unsigned_abs();
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as i128);
            out.push((n / d) as i128);
        }
        d += 1;
    }
    out
}

/// Integer roots of a monic integer polynomial, with multiplicity, and the
/// remaining factor without integer roots.
fn split_integer_roots(poly: &[i128]) -> (Vec<i128>, Vec<i128>) {
    let mut roots = Vec::new();
    let mut rest = poly.to_vec();
    'outer: while rest.len() > 1 {
        let constant = *rest.last().expect("non-empty");
        let candidates = if constant == 0 {
            vec![0]
        } else {
            divisors(constant)
                .into_iter()
                .flat_map(|d| [d, -d])
                .collect()
        };
        for r in candidates {
            if eval(&rest, r) == 0 {
                roots.push(r);
                rest = deflate(&rest, r);
                continue 'outer;
            }
        }
        break;
    }
    roots.sort_unstable_by(|a, b| b.cmp(a));
    (roots, rest)
}

/// Real roots of a polynomial of degree ≤ 3 in floating point, by bisection
/// between the critical points.
fn real_roots_f64(poly: &[i128]) -> Vec<f64> {
    let degree = poly.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    let bound = 1.0
        + poly[1..]
            .iter()
            .map(|&c| (c as f64).abs())
            .fold(0.0, f64::max);
    let derivative: Vec<i128> = poly[..degree]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (degree - i) as i128)
        .collect();
    let mut breaks = vec![-bound];
    let mut critical = real_roots_f64(&derivative);
    critical.sort_by(f64::total_cmp);
    breaks.extend(critical.into_iter().filter(|x| x.abs() < bound));
    breaks.push(bound);
    let mut roots = Vec::new();
    for w in breaks.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (eval_f64(poly, lo), eval_f64(poly, hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eval_f64(poly, mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    if eval_f64(poly, bound) == 0.0 {
        roots.push(bound);
    }
    roots
}

pub fn spectral_class(m: &IncidenceMatrix) -> Result<SpectralClass, SubstError> {
    let characteristic_polynomial = characteristic_polynomial(m)?;
    let (rational_roots, rest) = split_integer_roots(&characteristic_polynomial);
    let dominant_approx = real_roots_f64(&characteristic_polynomial)
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let int = |r: i128| QuadraticNumber::from_rational(Rational::from_integer(r.into()));
    let best_integer = rational_roots.first().copied();

    let class = match rest.len() - 1 {
        0 => None,
        2 => {
            let (p, s) = (rest[1], rest[2]);
            let disc = p * p - 4 * s;
            if disc < 0 {
                None
            } else {
                let root = QuadraticNumber::sqrt(disc as u64).map_err(|_| SubstError::Overflow)?;
                let half = Rational::new(1.into(), 2.into());
                let big = (int(-p) + &root).scale(&half);
                let small = (int(-p) - &root).scale(&half);
                Some((big, small, rest.clone(), s))
            }
        }
        3 => {
            return Ok(SpectralClass {
                minimal_polynomial: characteristic_polynomial.clone(),
                characteristic_polynomial,
                rational_roots,
                classification: Classification::Cubic,
                dominant: None,
                conjugate: None,
                dominant_approx,
            })
        }
        _ => unreachable!("degree at most 3"),
    };

    let integer_wins = |q: &QuadraticNumber| best_integer.is_some_and(|r| int(r) >= *q);
    let (classification, dominant, conjugate, minimal_polynomial) = match class {
        Some((big, small, minimal, s)) if !integer_wins(&big) => {
            let classification = if s.abs() == 1 {
                Classification::QuadraticUnit
            } else {
                Classification::QuadraticNonunit
            };
            (classification, big, Some(small), minimal)
        }
        _ => {
            let r = best_integer.ok_or(SubstError::NoRealEigenvalue)?;
            (Classification::Rational, int(r), None, vec![1, -r])
        }
    };
    Ok(SpectralClass {
        characteristic_polynomial,
        rational_roots,
        classification,
        dominant: Some(dominant),
        conjugate,
        minimal_polynomial,
        dominant_approx,
    })
}
