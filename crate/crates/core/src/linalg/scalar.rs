//! Exact coefficients in Q(i), the coefficient ring of tensor inputs.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Gaussian rational `re + im * i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coeff {
    pub re: BigRational,
    pub im: BigRational,
}

impl Coeff {
    pub fn real(re: BigRational) -> Self {
        Coeff { re, im: BigRational::zero() }
    }

    pub fn from_i64(v: i64) -> Self {
        Coeff::real(rat_int(v))
    }

    pub fn imag_unit() -> Self {
        Coeff { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Coeff::real(BigRational::zero())
    }

    pub fn one() -> Self {
        Coeff::real(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Coeff { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Coeff { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Coeff { re: &self.re * q, im: &self.im * q }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        Coeff { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        Coeff { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        Coeff {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Div for &Coeff {
    type Output = Coeff;
    fn div(self, o: &Coeff) -> Coeff {
        self * &o.inv().expect("division by zero coefficient")
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl From<BigRational> for Coeff {
    fn from(q: BigRational) -> Self {
        Coeff::real(q)
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::from_i64(v)
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() { "i".to_string() } else { format!("{}i", fmt_rat(&im_abs)) };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_part}");
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "({}{sign}{im_part})", fmt_rat(&self.re))
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn fmt_rational(q: &BigRational) -> String {
    fmt_rat(q)
}

/// Serde adapter writing a rational as `"p/q"`.
pub mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::fmt_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic() {
        let a = Coeff { re: rat(1, 2), im: rat(3, 1) };
        let b = Coeff { re: rat(-2, 1), im: rat(1, 3) };
        let p = &a * &b;
        assert_eq!(p.re, rat(-1, 1) - rat(1, 1));
        assert_eq!(p.im, rat(1, 6) - rat(6, 1));
        let back = &p / &b;
        assert_eq!(back, a);
        assert_eq!(&Coeff::imag_unit() * &Coeff::imag_unit(), Coeff::from_i64(-1));
    }

    #[test]
    fn display() {
        assert_eq!(Coeff::from_i64(-3).to_string(), "-3");
        assert_eq!(Coeff::imag_unit().to_string(), "i");
        assert_eq!(Coeff { re: rat(1, 2), im: rat(-1, 2) }.to_string(), "(1/2-1/2i)");
    }
}
