//! The two coefficient fields: exact rationals and integers modulo a prime.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::matrix::{self, Matrix};
use super::scalar::Coeff;
use crate::error::{Error, Result};

pub trait Field: Clone + Send + Sync + Debug {
    type Elem: Clone + PartialEq + Send + Sync + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    fn from_coeff(&self, c: &Coeff) -> Result<Self::Elem>;
    /// Exact rational value when the field is Q.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;
    fn format(&self, a: &Self::Elem) -> String;
    /// `"rational"` or `"mod:<p>"`.
    fn name(&self) -> String;
    fn is_exact(&self) -> bool;

    fn rank(&self, m: &Matrix<Self::Elem>) -> usize {
        matrix::rank_gauss(self, m)
    }

    /// Coefficients of `det(tI - m)`, lowest degree first.
    fn char_poly(&self, m: &Matrix<Self::Elem>) -> Vec<Self::Elem> {
        matrix::hessenberg_char_poly(self, m)
    }
}

/// The rational numbers.
#[derive(Clone, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a.clone()
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn from_coeff(&self, c: &Coeff) -> Result<BigRational> {
        if c.is_real() {
            Ok(c.re.clone())
        } else {
            Err(Error::Unrepresentable { field: self.name(), value: c.to_string() })
        }
    }
    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn format(&self, a: &BigRational) -> String {
        super::scalar::fmt_rational(a)
    }
    fn name(&self) -> String {
        "rational".into()
    }
    fn is_exact(&self) -> bool {
        true
    }

    fn rank(&self, m: &Matrix<BigRational>) -> usize {
        matrix::bareiss_rank(&matrix::clear_row_denominators(m))
    }

    fn char_poly(&self, m: &Matrix<BigRational>) -> Vec<BigRational> {
        super::charpoly::rational_char_poly(m, &super::charpoly::CharPolyOptions::default())
            .expect("default char_poly options accept every dimension")
    }
}

/// Integers modulo a prime `p < 2^64`.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u64,
    /// floor(2^64 / p), used for Barrett reduction when p < 2^32.
    barrett: u64,
    small: bool,
    sqrt_minus_one: Option<u64>,
}

pub const DEFAULT_PRIME: u64 = 1_000_000_007;
/// A prime congruent to 1 mod 4, so that sqrt(-1) exists.
pub const GAUSSIAN_PRIME: u64 = 1_000_000_009;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let small = p < (1 << 32);
        let mut f = PrimeField { p, barrett: u64::MAX / p, small, sqrt_minus_one: None };
        f.sqrt_minus_one = f.find_sqrt_minus_one();
        Ok(f)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn sqrt_minus_one(&self) -> Option<u64> {
        self.sqrt_minus_one
    }

    fn find_sqrt_minus_one(&self) -> Option<u64> {
        if self.p == 2 {
            return Some(1);
        }
        if self.p % 4 != 1 {
            return None;
        }
        let e = (self.p - 1) / 4;
        (2..self.p).map(|z| self.pow(z, e)).find(|&r| self.mulmod(r, r) == self.p - 1)
    }

    #[inline(always)]
    pub fn reduce_wide(&self, x: u64) -> u64 {
        // x < p^2 when small
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p));
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline(always)]
    pub fn mulmod(&self, a: u64, b: u64) -> u64 {
        if self.small {
            self.reduce_wide(a * b)
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    #[inline(always)]
    pub fn addmod(&self, a: u64, b: u64) -> u64 {
        let (s, o) = a.overflowing_add(b);
        if o || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn submod(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a.wrapping_sub(b).wrapping_add(self.p)
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulmod(r, a);
            }
            a = self.mulmod(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inverse(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, (a % self.p) as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(s0.rem_euclid(self.p as i128) as u64)
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("reduced residue fits in u64")
    }

    /// Symmetric lift of a residue to (-p/2, p/2].
    pub fn lift(&self, a: u64) -> i128 {
        if a > self.p / 2 {
            a as i128 - self.p as i128
        } else {
            a as i128
        }
    }

    /// In-place elimination; returns the rank. Rows are updated in parallel once large.
    pub fn rank_in_place(&self, rows: usize, cols: usize, data: &mut [u64]) -> usize {
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
                continue;
            };
            if piv != rank {
                for c in col..cols {
                    data.swap(piv * cols + c, rank * cols + c);
                }
            }
            let inv = self.inverse(data[rank * cols + col]).unwrap();
            let (head, tail) = data.split_at_mut((rank + 1) * cols);
            let pivot = &head[rank * cols..];
            let width = cols - col;
            let update = |row: &mut [u64]| {
                let a = row[col];
                if a == 0 {
                    return;
                }
                let f = self.p - self.mulmod(a, inv);
                for c in col..cols {
                    if pivot[c] != 0 {
                        row[c] = self.addmod(row[c], self.mulmod(f, pivot[c]));
                    }
                }
            };
            let below = rows - rank - 1;
            if below * width > 1 << 16 {
                tail.par_chunks_mut(cols).for_each(update);
            } else {
                tail.chunks_mut(cols).for_each(update);
            }
            rank += 1;
        }
        rank
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline(always)]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.addmod(*a, *b)
    }
    #[inline(always)]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.submod(*a, *b)
    }
    #[inline(always)]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulmod(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        self.inverse(*a)
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let d = self.from_bigint(q.denom());
        let inv = self.inverse(d).ok_or_else(|| Error::Unrepresentable {
            field: self.name(),
            value: q.to_string(),
        })?;
        Ok(self.mulmod(self.from_bigint(q.numer()), inv))
    }
    fn from_coeff(&self, c: &Coeff) -> Result<u64> {
        let re = self.from_rational(&c.re)?;
        if c.im.is_zero() {
            return Ok(re);
        }
        let i = self.sqrt_minus_one.ok_or_else(|| Error::Unrepresentable {
            field: format!("{} (no square root of -1; use p = 1 mod 4)", self.name()),
            value: c.to_string(),
        })?;
        let im = self.from_rational(&c.im)?;
        Ok(self.addmod(re, self.mulmod(im, i)))
    }
    fn to_rational(&self, _a: &u64) -> Option<BigRational> {
        None
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("mod:{}", self.p)
    }
    fn is_exact(&self) -> bool {
        false
    }

    fn rank(&self, m: &Matrix<u64>) -> usize {
        let mut data = m.data().to_vec();
        self.rank_in_place(m.rows(), m.cols(), &mut data)
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `start`, descending.
pub fn primes_below(start: u64) -> impl Iterator<Item = u64> {
    (2..start).rev().filter(|&p| is_prime(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;

    #[test]
    fn primality() {
        assert!(is_prime(1_000_000_007));
        assert!(is_prime(10_000_000_019));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(1));
        assert!(PrimeField::new(10).is_err());
    }

    #[test]
    fn modular_arithmetic_matches_bigint() {
        for p in [7u64, 1_000_000_007, 10_000_000_019, 18_446_744_073_709_551_557] {
            let f = PrimeField::new(p).unwrap();
            let bp = BigInt::from(p);
            for (a, b) in [(3u64, 5u64), (p - 1, p - 1), (p / 2, p - 3), (12345 % p, 67890 % p)] {
                let prod = (BigInt::from(a) * BigInt::from(b)) % &bp;
                assert_eq!(BigInt::from(f.mulmod(a, b)), prod);
                assert_eq!(BigInt::from(f.addmod(a, b)), (BigInt::from(a) + BigInt::from(b)) % &bp);
                assert_eq!(f.mulmod(a, f.inverse(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn rationals_and_gaussians_reduce() {
        let f = PrimeField::new(GAUSSIAN_PRIME).unwrap();
        let i = f.sqrt_minus_one().unwrap();
        assert_eq!(f.mulmod(i, i), f.p() - 1);
        let half = f.from_rational(&rat(1, 2)).unwrap();
        assert_eq!(f.mulmod(half, 2), 1);
        let c = Coeff { re: rat(1, 2), im: rat(-3, 1) };
        let v = f.from_coeff(&c).unwrap();
        assert_eq!(v, f.submod(half, f.mulmod(3, i)));
        let f7 = PrimeField::new(DEFAULT_PRIME).unwrap();
        assert!(f7.from_coeff(&c).is_err());
        assert!(Rationals.from_coeff(&c).is_err());
    }

    #[test]
    fn modular_rank() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let m = Matrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(f.rank(&m), 1);
        let q = Matrix::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]]);
        assert_eq!(Rationals.rank(&q), 1);
    }
}
