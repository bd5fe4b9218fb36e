#![allow(dead_code)]

use bigdecimal::BigDecimal;
use proptest::prelude::*;
use threeiet::arith::{QuadraticNumber, Rational};
use threeiet::iet::{IetParameters, ThreeIet};
use threeiet::words::Word;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn golden() -> IetParameters {
    IetParameters::parse("(-1+sqrt(5))/2", "(1+sqrt(5))/4", "0").unwrap()
}

pub fn golden_word(n: usize) -> Word {
    ThreeIet::new(golden()).code_orbit(n).unwrap()
}

fn to_decimal(r: &Rational) -> BigDecimal {
    let num = BigDecimal::from(r.numer().clone());
    let den = BigDecimal::from(r.denom().clone());
    (num / den).with_prec(60)
}

/// 50-significant-digit approximation through decimal square roots.
pub fn approx50(x: &QuadraticNumber) -> BigDecimal {
    let rational = to_decimal(x.rational_part());
    let surd = match x.radicand() {
        Some(d) => to_decimal(x.surd_part()) * BigDecimal::from(d).with_prec(60).sqrt().unwrap(),
        None => BigDecimal::from(0),
    };
    (rational + surd).with_prec(50)
}

prop_compose! {
    /// Irrational slope `ε = frac(k√d/m)`, `l` strictly inside `(max(ε,1−ε), 1)`, `c ∈ (−l, 0]`.
    pub fn params()(
        d in prop::sample::select(vec![2u64, 3, 5, 6, 7, 11]),
        k in 1i64..40,
        m in 1i64..40,
        l_frac in 1i64..100,
        c_frac in 0i64..100,
    ) -> IetParameters {
        let x = QuadraticNumber::sqrt(d).unwrap().scale(&ratio(k, m));
        let eps = &x - &QuadraticNumber::from_rational(Rational::from_integer(x.floor()));
        let one = QuadraticNumber::one();
        let lower = if eps > &one - &eps { eps.clone() } else { &one - &eps };
        let l = &lower + &(&one - &lower).scale(&ratio(l_frac, 100));
        let c = -l.scale(&ratio(c_frac, 100));
        IetParameters::new(eps, l, c).unwrap()
    }
}
