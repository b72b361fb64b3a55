//! Exact scalar fields: the rationals and the Gaussian rationals.
//!
//! Arithmetic goes through the [`Scalar`] trait so that linear algebra and
//! Lie-theoretic code is written once for both fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Q_i")]
    Gaussian,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Gaussian => write!(f, "Q_i"),
        }
    }
}

/// Exact field element.
pub trait Scalar:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_q(q: Q) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;
    fn conjugate(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_q(Q::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn divided(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inverse()?))
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.plus(&a.times(b));
    }
}

impl Scalar for Q {
    const KIND: FieldKind = FieldKind::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_q(q: Q) -> Self {
        q
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Qi {
    pub re: Q,
    pub im: Q,
}

impl Qi {
    pub fn new(re: Q, im: Q) -> Self {
        Qi { re, im }
    }

    pub fn i() -> Self {
        Qi::new(<Q as Zero>::zero(), <Q as One>::one())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Qi::new(Q::from_integer(re.into()), Q::from_integer(im.into()))
    }

    pub fn norm_sqr(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl Scalar for Qi {
    const KIND: FieldKind = FieldKind::Gaussian;

    fn zero() -> Self {
        Qi::default()
    }
    fn one() -> Self {
        Qi::new(<Q as One>::one(), <Q as Zero>::zero())
    }
    fn from_q(q: Q) -> Self {
        Qi::new(q, <Q as Zero>::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn plus(&self, o: &Self) -> Self {
        Qi::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn minus(&self, o: &Self) -> Self {
        Qi::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_real() && o.is_real() {
            return Qi::from_q(&self.re * &o.re);
        }
        Qi::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn negated(&self) -> Self {
        Qi::new(-&self.re, -&self.im)
    }
    fn inverse(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if Zero::is_zero(&n) {
            return Err(Error::DivisionByZero);
        }
        Ok(Qi::new(&self.re / &n, -&self.im / &n))
    }
    fn conjugate(&self) -> Self {
        Qi::new(self.re.clone(), -&self.im)
    }
}

impl Add for Qi {
    type Output = Qi;
    fn add(self, o: Qi) -> Qi {
        self.plus(&o)
    }
}

impl Sub for Qi {
    type Output = Qi;
    fn sub(self, o: Qi) -> Qi {
        self.minus(&o)
    }
}

impl Mul for Qi {
    type Output = Qi;
    fn mul(self, o: Qi) -> Qi {
        self.times(&o)
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        self.negated()
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -&self.im)
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

/// Integer shorthand for rationals.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::BadLiteral(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if Zero::is_zero(&d) {
        return Err(Error::DivisionByZero);
    }
    Ok(Q::new(n, d))
}

/// Canonical string form, `n` or `n/d`, accepted by [`parse_q`].
pub fn format_q(x: &Q) -> String {
    x.to_string()
}

pub fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_field_ops() {
        let a = Qi::from_ints(1, 2);
        let b = Qi::from_ints(3, -1);
        assert_eq!(a.times(&b), Qi::from_ints(5, 5));
        assert_eq!(a.times(&a.inverse().unwrap()), Qi::one());
        assert_eq!(Qi::i().times(&Qi::i()), Qi::from_int(-1));
        assert_eq!(a.conjugate(), Qi::from_ints(1, -2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q(0).inverse(), Err(Error::DivisionByZero));
        assert_eq!(Qi::zero().inverse(), Err(Error::DivisionByZero));
        assert_eq!(parse_q("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn literal_round_trip() {
        for s in ["0", "-3", "7/4", "-2/6"] {
            let x = parse_q(s).unwrap();
            assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
        }
        assert_eq!(parse_q("-2/6").unwrap(), qr(-1, 3));
        assert!(parse_q("1.5").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Qi::from_ints(0, -1).to_string(), "-1i");
        assert_eq!(Qi::new(qr(1, 2), q(-3)).to_string(), "1/2-3i");
    }
}
