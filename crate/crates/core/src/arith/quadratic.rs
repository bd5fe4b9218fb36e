//! Elements `a + b√d` of a real quadratic field with exact rational coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ArithError;

/// Exact rational number. Always reduced with a positive denominator.
pub type Rational = BigRational;

/// An element `rational + surd·√radicand` of `Q(√radicand)`.
///
/// The representation is canonical: the radicand is square-free and at least 2,
/// and it is only stored when the surd part is non-zero. Two numbers are
/// therefore equal exactly when their fields are structurally equal, which
/// lets the type derive `Eq` and `Hash`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    rational: Rational,
    surd: Rational,
    radicand: Option<u64>,
}

/// Splits `n` into `(k, m)` with `n = k²·m` and `m` square-free.
pub fn square_free_split(mut n: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let sq = p * p;
        while n.is_multiple_of(sq) {
            n /= sq;
            outside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, n)
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl QuadraticNumber {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadraticNumber {
            rational: r,
            surd: Rational::zero(),
            radicand: None,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds `rational + surd·√radicand`, normalizing the radicand to be square-free.
    pub fn new(rational: Rational, surd: Rational, radicand: u64) -> Result<Self, ArithError> {
        if radicand == 0 {
            return if surd.is_zero() {
                Ok(Self::from_rational(rational))
            } else {
                Err(ArithError::NonPositiveRadicand)
            };
        }
        let (outside, inside) = square_free_split(radicand);
        let surd = surd * Rational::from_integer(BigInt::from(outside));
        if inside == 1 {
            return Ok(Self::from_rational(rational + surd));
        }
        Ok(Self::canonical(rational, surd, inside))
    }

    /// `√n` for a positive integer `n`.
    pub fn sqrt(n: u64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::NonPositiveRadicand);
        }
        Self::new(Rational::zero(), Rational::one(), n)
    }

    // `radicand` must already be square-free and ≥ 2.
    fn canonical(rational: Rational, surd: Rational, radicand: u64) -> Self {
        if surd.is_zero() {
            Self::from_rational(rational)
        } else {
            QuadraticNumber {
                rational,
                surd,
                radicand: Some(radicand),
            }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    /// The square-free radicand, or `None` for rational values.
    pub fn radicand(&self) -> Option<u64> {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.radicand.is_none() && self.rational.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.rational.is_integer()
    }

    fn common_field(&self, other: &Self) -> Result<Option<u64>, ArithError> {
        match (self.radicand, other.radicand) {
            (Some(a), Some(b)) if a != b => Err(ArithError::FieldMismatch { left: a, right: b }),
            (a, b) => Ok(a.or(b)),
        }
    }

    /// Returns the common field of all given numbers, or an error if two differ.
    pub fn field_of<'a, I: IntoIterator<Item = &'a QuadraticNumber>>(
        items: I,
    ) -> Result<Option<u64>, ArithError> {
        let mut field: Option<u64> = None;
        for x in items {
            match (field, x.radicand) {
                (Some(a), Some(b)) if a != b => {
                    return Err(ArithError::FieldMismatch { left: a, right: b })
                }
                (None, Some(b)) => field = Some(b),
                _ => {}
            }
        }
        Ok(field)
    }

    fn assemble(rational: Rational, surd: Rational, field: Option<u64>) -> Self {
        match field {
            Some(d) => Self::canonical(rational, surd, d),
            None => Self::from_rational(rational),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        let field = self.common_field(other)?;
        Ok(Self::assemble(
            &self.rational + &other.rational,
            &self.surd + &other.surd,
            field,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        let field = self.common_field(other)?;
        Ok(Self::assemble(
            &self.rational - &other.rational,
            &self.surd - &other.surd,
            field,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let field = self.common_field(other)?;
        let d = Rational::from_integer(BigInt::from(field.unwrap_or(0)));
        let rational = &self.rational * &other.rational + &self.surd * &other.surd * d;
        let surd = &self.rational * &other.surd + &self.surd * &other.rational;
        Ok(Self::assemble(rational, surd, field))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.common_field(other)?;
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let norm = self.norm();
        Ok(Self::assemble(
            &self.rational / &norm,
            -(&self.surd / &norm),
            self.radicand,
        ))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::assemble(&self.rational * k, &self.surd * k, self.radicand)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    /// Galois conjugate `a − b√d`.
    pub fn conjugate(&self) -> Self {
        Self::assemble(self.rational.clone(), -self.surd.clone(), self.radicand)
    }

    /// Field norm `x·x′ = a² − d·b²`.
    pub fn norm(&self) -> Rational {
        let d = Rational::from_integer(BigInt::from(self.radicand.unwrap_or(0)));
        &self.rational * &self.rational - &self.surd * &self.surd * d
    }

    /// Field trace `x + x′ = 2a`.
    pub fn trace(&self) -> Rational {
        &self.rational * rat(2)
    }

    /// Exact sign, decided by comparing integer squares.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.rational);
        let sb = sign_of(&self.surd);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // a = p/q, b = r/s: compare p²s² with r²q²·d.
        let d = BigInt::from(self.radicand.expect("irrational value has a radicand"));
        let (p, q) = (self.rational.numer(), self.rational.denom());
        let (r, s) = (self.surd.numer(), self.surd.denom());
        let lhs = p * p * s * s;
        let rhs = r * r * q * q * d;
        if lhs > rhs {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact comparison; errors when the two values live in distinct fields.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, ArithError> {
        Ok(self.checked_sub(other)?.signum().cmp(&0))
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        let Some(d) = self.radicand else {
            return self.rational.floor().to_integer();
        };
        // x = (N + R√d)/D with integers N, R and D > 0.
        let (p, q) = (self.rational.numer(), self.rational.denom());
        let (r, s) = (self.surd.numer(), self.surd.denom());
        let n = p * s;
        let big_r = r * q;
        let den = q * s;
        let root = (&big_r * &big_r * BigInt::from(d)).sqrt();
        // R√d is irrational, so its floor is isqrt(R²d) or −isqrt(R²d) − 1.
        let floor_surd = if big_r.is_negative() { -root - 1 } else { root };
        (n + floor_surd).div_floor(&den)
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Double-precision approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let a = ratio_to_f64(&self.rational);
        let Some(d) = self.radicand else { return a };
        let b = ratio_to_f64(&self.surd);
        let root = (d as f64).sqrt();
        if (a >= 0.0) == (b >= 0.0) {
            a + b * root
        } else {
            // Avoid cancellation: a + b√d = norm / (a − b√d).
            ratio_to_f64(&self.norm()) / (a - b * root)
        }
    }

    fn write_canonical(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.radicand else {
            return write_rational(f, &self.rational);
        };
        let den = self.rational.denom().lcm(self.surd.denom());
        let p = self.rational.numer() * (&den / self.rational.denom());
        let r = self.surd.numer() * (&den / self.surd.denom());
        let parenthesize = !den.is_one();
        if parenthesize {
            write!(f, "(")?;
        }
        let mut leading = true;
        if !p.is_zero() {
            write!(f, "{p}")?;
            leading = false;
        }
        let magnitude = r.abs();
        if r.is_negative() {
            write!(f, "-")?;
        } else if !leading {
            write!(f, "+")?;
        }
        if magnitude.is_one() {
            write!(f, "sqrt({d})")?;
        } else {
            write!(f, "{magnitude}*sqrt({d})")?;
        }
        if parenthesize {
            write!(f, ")/{den}")?;
        }
        Ok(())
    }
}

fn sign_of(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub(crate) fn ratio_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_canonical(f)
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{self}]")
    }
}

/// Serialized as `{"exact": "<grammar>", "approx": <f64>}`; the float is for display only.
impl Serialize for QuadraticNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuadraticNumber", 2)?;
        s.serialize_field("exact", &self.to_string())?;
        s.serialize_field("approx", &self.to_f64())?;
        s.end()
    }
}

impl PartialOrd for QuadraticNumber {
    /// `None` when the operands live in distinct quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl From<Rational> for QuadraticNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for QuadraticNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a QuadraticNumber> for &'a QuadraticNumber {
            type Output = QuadraticNumber;
            /// Panics when the operands live in distinct fields; use the
            /// `checked_*` form for untrusted input.
            fn $method(self, rhs: &'a QuadraticNumber) -> QuadraticNumber {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &'a QuadraticNumber) -> QuadraticNumber {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<QuadraticNumber> for &'a QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::assemble(-self.rational.clone(), -self.surd.clone(), self.radicand)
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

impl std::iter::Sum for QuadraticNumber {
    fn sum<I: Iterator<Item = QuadraticNumber>>(iter: I) -> Self {
        iter.fold(QuadraticNumber::zero(), |acc, x| acc + x)
    }
}
