//! Exact characteristic polynomials over Q: division-free (Berkowitz) for small
//! matrices, multi-modular reconstruction with a proven coefficient bound otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::field::{primes_below, Field, PrimeField};
use super::matrix::{self, Matrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharPolyMethod {
    /// Berkowitz up to dimension 48, multi-modular above.
    Auto,
    Berkowitz,
    MultiModular,
}

#[derive(Clone, Debug)]
pub struct CharPolyOptions {
    pub method: CharPolyMethod,
    /// Largest dimension accepted unless the method is `MultiModular`.
    pub rational_limit: usize,
}

impl Default for CharPolyOptions {
    fn default() -> Self {
        CharPolyOptions { method: CharPolyMethod::Auto, rational_limit: 600 }
    }
}

const BERKOWITZ_MAX: usize = 48;

/// `det(tI - m)` over Q, lowest degree first.
pub fn rational_char_poly(m: &Matrix<BigRational>, opts: &CharPolyOptions) -> Result<Vec<BigRational>> {
    assert!(m.is_square(), "char_poly of a non-square matrix");
    let d = m.rows();
    if d > opts.rational_limit && opts.method != CharPolyMethod::MultiModular {
        return Err(Error::RationalLimit { dim: d, limit: opts.rational_limit });
    }
    let (a, l) = matrix::clear_denominators(m);
    let integer = match opts.method {
        CharPolyMethod::Berkowitz => matrix::berkowitz(&a),
        CharPolyMethod::Auto if d <= BERKOWITZ_MAX => matrix::berkowitz(&a),
        _ => multimodular_char_poly(&a),
    };
    // chi_m(t) = L^{-d} chi_a(L t)
    let mut out = Vec::with_capacity(d + 1);
    let mut scale = BigInt::one();
    let mut scales = vec![BigInt::one(); d + 1];
    for j in (0..=d).rev() {
        scales[j] = scale.clone();
        scale *= &l;
    }
    for (j, c) in integer.into_iter().enumerate() {
        out.push(BigRational::new(c, scales[j].clone()));
    }
    Ok(out)
}

/// Bits needed to hold every coefficient of the characteristic polynomial in absolute value.
pub fn coefficient_bound_bits(a: &Matrix<BigInt>) -> u64 {
    let d = a.rows();
    let mut log_beta: f64 = 0.0;
    for r in 0..d {
        let sq: BigInt = a.row(r).iter().map(|x| x * x).sum();
        if !sq.is_zero() {
            log_beta = log_beta.max(bigint_log2(&sq) / 2.0);
        }
    }
    let mut best: f64 = 0.0;
    let mut log_binom = 0.0;
    for k in 1..=d {
        log_binom += ((d - k + 1) as f64).log2() - (k as f64).log2();
        best = best.max(log_binom + k as f64 * log_beta);
    }
    best.ceil() as u64 + 2
}

fn bigint_log2(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 60 {
        let f: f64 = v.to_string().parse().unwrap();
        return f.abs().log2();
    }
    let shifted: BigInt = v.abs() >> (bits - 53);
    let f: f64 = shifted.to_string().parse().unwrap();
    f.log2() + (bits - 53) as f64
}

fn char_poly_mod(a: &Matrix<BigInt>, p: u64) -> Vec<u64> {
    let f = PrimeField::new(p).expect("prime");
    let ap = a.map(|x| f.from_bigint(x));
    f.char_poly(&ap)
}

/// Characteristic polynomial of an integer matrix via Chinese remaindering.
pub fn multimodular_char_poly(a: &Matrix<BigInt>) -> Vec<BigInt> {
    let d = a.rows();
    let need = coefficient_bound_bits(a);
    let mut primes = Vec::new();
    let mut bits = 0.0;
    let mut it = primes_below(1 << 31).filter(|&p| p as usize > d);
    while bits < need as f64 + 1.0 {
        let p = it.next().expect("enough primes");
        bits += (p as f64).log2();
        primes.push(p);
    }
    let check_prime = it.next().unwrap();
    log::debug!("multi-modular char poly: dim {d}, bound {need} bits, {} primes", primes.len());
    let residues: Vec<Vec<u64>> = primes.par_iter().map(|&p| char_poly_mod(a, p)).collect();
    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); d + 1];
    for (p, res) in primes.iter().zip(&residues) {
        let pb = BigInt::from(*p);
        let f = PrimeField::new(*p).unwrap();
        let minv = f.inverse(f.from_bigint(&modulus)).unwrap();
        for (x, &r) in acc.iter_mut().zip(res) {
            let cur = f.from_bigint(x);
            let t = f.mulmod(f.submod(r, cur), minv);
            *x += &modulus * BigInt::from(t);
        }
        modulus *= pb;
    }
    let half = &modulus >> 1;
    for x in acc.iter_mut() {
        if *x > half {
            *x -= &modulus;
        }
    }
    let check = char_poly_mod(a, check_prime);
    let f = PrimeField::new(check_prime).unwrap();
    let agree = acc.iter().zip(&check).all(|(x, &r)| f.from_bigint(x) == r);
    assert!(agree, "multi-modular reconstruction failed its verification prime");
    acc
}
