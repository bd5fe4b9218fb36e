use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use threeiet::arith::{QuadraticNumber, Rational};

const RADICANDS: [u64; 8] = [2, 3, 5, 6, 7, 10, 13, 8];

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=40).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn in_field(d: u64) -> impl Strategy<Value = QuadraticNumber> {
    (rational(), rational()).prop_map(move |(a, b)| QuadraticNumber::new(a, b, d).unwrap())
}

fn same_field_pair() -> impl Strategy<Value = (QuadraticNumber, QuadraticNumber)> {
    prop::sample::select(&RADICANDS[..]).prop_flat_map(|d| (in_field(d), in_field(d)))
}

/// floor(x · 10^50) up to ±2, computed from integer square roots only.
fn scaled_approximation(x: &QuadraticNumber) -> BigInt {
    let scale = BigInt::from(10).pow(50);
    let a = x.rational_part();
    let a_scaled = (a.numer() * &scale).div_floor(a.denom());
    let Some(d) = x.radicand() else {
        return a_scaled;
    };
    let b = x.surd_part();
    let root = (BigInt::from(d) * &scale * &scale).sqrt();
    let b_scaled = (b.numer() * root).div_floor(b.denom());
    a_scaled + b_scaled
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sign_agrees_with_fifty_digit_oracle((x, y) in same_field_pair()) {
        let diff = &x - &y;
        let approx = scaled_approximation(&diff);
        let exact = diff.signum();
        if approx.abs() > BigInt::from(4) {
            prop_assert_eq!(exact as i32, if approx.is_positive() { 1 } else { -1 });
        } else {
            prop_assert_eq!(exact, 0);
        }
    }
}

proptest! {
    #[test]
    fn division_inverts_multiplication((x, y) in same_field_pair()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!((&x * &y) / &y, x);
    }

    #[test]
    fn floor_brackets_value((x, _y) in same_field_pair()) {
        let f = QuadraticNumber::from_rational(Rational::from_integer(x.floor()));
        prop_assert!(f <= x);
        prop_assert!(x < f + QuadraticNumber::one());
    }
}

#[test]
fn zero_difference_is_exact() {
    let x: QuadraticNumber = "(3-sqrt(7))/5".parse().unwrap();
    assert!((&x - &x).is_zero());
    assert!(scaled_approximation(&(&x - &x)).is_zero());
}
