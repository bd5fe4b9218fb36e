mod common;

use bigdecimal::BigDecimal;
use common::approx50;
use proptest::prelude::*;
use threeiet::subst::{characteristic_polynomial, spectral_class, IncidenceMatrix, Morphism};
use threeiet::words::{Alphabet, Word};

fn image() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['A', 'B', 'C']), 1..5)
        .prop_map(|v| v.into_iter().collect())
}

fn morphism() -> impl Strategy<Value = Morphism> {
    (image(), image(), image())
        .prop_map(|(a, b, c)| Morphism::parse(&format!("A>{a};B>{b};C>{c}")).unwrap())
}

fn ternary_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..3, 0..60).prop_map(|l| Word::new(Alphabet::ternary(), l).unwrap())
}

fn matrix() -> impl Strategy<Value = IncidenceMatrix> {
    prop::collection::vec(prop::collection::vec(0i64..5, 3), 3)
        .prop_map(|rows| IncidenceMatrix::new(rows).unwrap())
}

fn row_times(counts: &[usize], m: &IncidenceMatrix) -> Vec<i64> {
    (0..m.col_count())
        .map(|j| {
            (0..counts.len())
                .map(|i| counts[i] as i64 * m.get(i, j))
                .sum()
        })
        .collect()
}

fn eval(coefficients: &[i128], x: &BigDecimal) -> BigDecimal {
    coefficients.iter().fold(BigDecimal::from(0), |acc, &a| {
        (acc * x + BigDecimal::from(a)).with_prec(60)
    })
}

fn derivative(coefficients: &[i128]) -> Vec<i128> {
    let degree = coefficients.len() - 1;
    coefficients[..degree]
        .iter()
        .enumerate()
        .map(|(i, &a)| a * (degree - i) as i128)
        .collect()
}

/// Largest real root by Newton's method from an upper bound on all roots, where the
/// iteration decreases monotonically.
fn largest_root(p: &[i128]) -> BigDecimal {
    let bound = 1 + p.iter().skip(1).map(|a| a.abs()).max().unwrap_or(0);
    let dp = derivative(p);
    let mut x = BigDecimal::from(bound);
    for _ in 0..400 {
        let step = (eval(p, &x) / eval(&dp, &x)).with_prec(60);
        x = (&x - &step).with_prec(60);
        if step.abs() < BigDecimal::new(1.into(), 55) {
            break;
        }
    }
    x
}

proptest! {
    #[test]
    fn abelianization_is_a_homomorphism(m in morphism(), w in ternary_word()) {
        let image = m.apply(&w).unwrap();
        let expected = row_times(&w.counts(), &m.incidence());
        let actual: Vec<i64> = image.counts().iter().map(|&c| c as i64).collect();
        prop_assert_eq!(actual, expected);
    }

    #[test]
    fn composition_multiplies_incidence_in_reverse(m1 in morphism(), m2 in morphism(), w in ternary_word()) {
        let composed = m1.compose(&m2).unwrap();
        prop_assert_eq!(composed.apply(&w).unwrap(), m1.apply(&m2.apply(&w).unwrap()).unwrap());
        prop_assert_eq!(composed.incidence(), m2.incidence().mul(&m1.incidence()).unwrap());
    }

    #[test]
    fn fixed_points_are_stable(m in morphism()) {
        if let Ok(fp) = m.fixed_point(None, 300) {
            let iterate = m.power(fp.power).unwrap();
            let image = iterate.apply(&fp.prefix).unwrap();
            prop_assert!(fp.prefix.is_prefix_of(&image));
            prop_assert_eq!(fp.prefix.letters()[0], fp.seed);
        }
    }

    #[test]
    fn perron_root_is_simple_and_dominant(m in matrix()) {
        prop_assume!(m.is_primitive().unwrap());
        let p = characteristic_polynomial(&m).unwrap();
        let lambda = largest_root(&p);
        let tiny = BigDecimal::new(1.into(), 30);
        prop_assert!(eval(&derivative(&p), &lambda) > tiny);
        // p(x) = (x − Λ)(x² + q1 x + q0).
        let q1 = (BigDecimal::from(p[1]) + &lambda).with_prec(60);
        let q0 = (BigDecimal::from(p[2]) + &lambda * &q1).with_prec(60);
        let disc = (&q1 * &q1 - BigDecimal::from(4) * &q0).with_prec(60);
        if disc.sign() == bigdecimal::num_bigint::Sign::Minus {
            prop_assert!(q0 < (&lambda * &lambda - &tiny));
        } else {
            let root = disc.sqrt().unwrap();
            let two = BigDecimal::from(2);
            for r in [(-&q1 + &root) / &two, (-&q1 - &root) / &two] {
                prop_assert!(r.abs() < (&lambda - &tiny));
            }
        }
        let class = spectral_class(&m).unwrap();
        match &class.dominant {
            Some(exact) => {
                let difference = (approx50(exact) - &lambda).abs();
                prop_assert!(difference < BigDecimal::new(1.into(), 40), "Λ = {} vs {}", exact, lambda);
            }
            None => prop_assert!((class.dominant_approx - lambda.to_string().parse::<f64>().unwrap()).abs() < 1e-9),
        }
    }
}
