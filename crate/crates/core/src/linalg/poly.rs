//! Univariate polynomials: field-generic coefficient-slice routines, and the
//! rational polynomial type used for characteristic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::field::{Field, Rationals};
use super::matrix::{self, Matrix};
use super::scalar::fmt_rational;
use crate::error::{Error, Result};

/// Coefficient-slice routines over any field; coefficients lowest degree first.
pub mod ops {
    use super::Field;

    pub fn trim<F: Field>(f: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
        while a.last().is_some_and(|x| f.is_zero(x)) {
            a.pop();
        }
        a
    }

    pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![f.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(x, y));
            }
        }
        trim(f, out)
    }

    pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let b = trim(f, b.to_vec());
        assert!(!b.is_empty(), "polynomial division by zero");
        let mut r = trim(f, a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv = f.inv(b.last().unwrap()).unwrap();
        let mut q = vec![f.zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = f.mul(r.last().unwrap(), &inv);
            for (j, y) in b.iter().enumerate() {
                r[shift + j] = f.sub(&r[shift + j], &f.mul(&c, y));
            }
            q[shift] = c;
            r.pop();
            r = trim(f, r);
        }
        (trim(f, q), r)
    }

    pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
        match a.last() {
            None => Vec::new(),
            Some(l) => {
                let inv = f.inv(l).unwrap();
                a.iter().map(|x| f.mul(x, &inv)).collect()
            }
        }
    }

    pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let mut x = trim(f, a.to_vec());
        let mut y = trim(f, b.to_vec());
        while !y.is_empty() {
            let (_, r) = divrem(f, &x, &y);
            x = y;
            y = r;
        }
        monic(f, &x)
    }

    pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
        let out = a.iter().enumerate().skip(1).map(|(i, x)| f.mul(&f.from_i64(i as i64), x)).collect();
        trim(f, out)
    }

    /// `a / gcd(a, a')`.
    pub fn squarefree_part<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
        let a = trim(f, a.to_vec());
        if a.len() <= 1 {
            return a;
        }
        let g = gcd(f, &a, &derivative(f, &a));
        let (q, _) = divrem(f, &a, &g);
        monic(f, &q)
    }
}

/// A polynomial with rational coefficients, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Poly(ops::trim(&Rationals, coeffs))
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly::from_i64s(&[1])
    }

    /// `c t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn t() -> Self {
        Poly::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        Poly(ops::mul(&Rationals, &self.0, &o.0))
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let (q, r) = ops::divrem(&Rationals, &self.0, &d.0);
        (Poly(q), Poly(r))
    }

    /// Quotient when `d` divides exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        Poly(ops::gcd(&Rationals, &self.0, &o.0))
    }

    pub fn derivative(&self) -> Poly {
        Poly(ops::derivative(&Rationals, &self.0))
    }

    pub fn monic(&self) -> Poly {
        Poly(ops::monic(&Rationals, &self.0))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `p(c t)`.
    pub fn scale_variable(&self, c: &BigRational) -> Poly {
        let mut pw = BigRational::one();
        let mut out = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            out.push(a * &pw);
            pw *= c;
        }
        Poly::new(out)
    }

    /// `p(t^m)`.
    pub fn inflate(&self, m: usize) -> Poly {
        let mut out = vec![BigRational::zero(); self.0.len().saturating_sub(1) * m + 1];
        for (i, c) in self.0.iter().enumerate() {
            out[i * m] = c.clone();
        }
        Poly::new(out)
    }

    /// `g` with `g(t^m) = p(t)`, when only exponents divisible by `m` occur.
    pub fn deflate(&self, m: usize) -> Option<Poly> {
        if self.0.iter().enumerate().any(|(i, c)| i % m != 0 && !c.is_zero()) {
            return None;
        }
        Some(Poly::new(self.0.iter().step_by(m).cloned().collect()))
    }

    /// Exponent of the largest power of `t` dividing `p`.
    pub fn zero_order(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn squarefree_part(&self) -> Poly {
        Poly(ops::squarefree_part(&Rationals, &self.0))
    }

    /// Yun's decomposition `p = c * prod a_i^i` with the `a_i` squarefree and
    /// pairwise coprime; returns the nonconstant `(a_i, i)`, each `a_i` monic.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.exact_div(&a0).expect("gcd divides");
        let mut c = d.exact_div(&a0).expect("gcd divides");
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let dd = c.sub(&b.derivative());
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = dd.exact_div(&a).expect("gcd divides");
            i += 1;
        }
        out
    }

    /// Content and the primitive integer polynomial with positive leading coefficient.
    pub fn primitive(&self) -> (BigRational, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRational::zero(), Vec::new());
        }
        let l = self.0.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|q| q.numer() * (&l / q.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|x| x / &g).collect();
        (BigRational::new(g, l), prim)
    }

    pub fn from_integers(v: &[BigInt]) -> Poly {
        Poly::new(v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn primitive_poly(&self) -> Poly {
        Poly::from_integers(&self.primitive().1)
    }

    pub fn to_matrix_value<F: Field>(&self, f: &F) -> Result<Vec<F::Elem>> {
        self.0.iter().map(|c| f.from_rational(c)).collect()
    }

    pub fn is_even(&self) -> bool {
        self.deflate(2).is_some()
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().enumerate().all(|(i, c)| i % 2 == 1 || c.is_zero())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(fmt_rational).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let c: std::result::Result<Vec<BigRational>, _> = v.iter().map(|s| s.parse()).collect();
        c.map(Poly::new).map_err(|_| serde::de::Error::custom("bad polynomial coefficient"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = if a.is_one() && k > 0 { String::new() } else { fmt_rational(&a) };
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}t")?,
                _ => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Res(a, b) = lead(a)^deg(b) * prod_{a(x)=0} b(x)`.
pub fn resultant(a: &Poly, b: &Poly) -> BigRational {
    if a.is_zero() || b.is_zero() {
        return BigRational::zero();
    }
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        return pow_rat(&b.lead(), da);
    }
    if da == 0 {
        return pow_rat(&a.lead(), db);
    }
    if db >= da {
        let (_, r) = b.divrem(a);
        if r.is_zero() {
            return BigRational::zero();
        }
        let dr = r.degree().unwrap();
        return pow_rat(&a.lead(), db - dr) * resultant(a, &r);
    }
    let s = if (da * db) % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    s * resultant(b, a)
}

fn pow_rat(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

/// `(-1)^{n(n-1)/2} Res(p, p') / lead(p)`.
pub fn discriminant(p: &Poly) -> Result<BigRational> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let r = resultant(p, &p.derivative());
    let s = if (n * (n - 1) / 2) % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    Ok(s * r / p.lead())
}

/// Horner evaluation of `p` at a square matrix.
pub fn eval_poly_at_matrix<F: Field>(f: &F, p: &[F::Elem], m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = m.rows();
    let mut acc = matrix::zeros(f, n, n);
    for c in p.iter().rev() {
        acc = matrix::mat_mul(f, &acc, m);
        for i in 0..n {
            let v = f.add(acc.get(i, i), c);
            acc.set(i, i, v);
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum RootClass {
    /// The factor `t`.
    Zero,
    /// A nonzero rational root.
    Real,
    /// Two real conjugate roots.
    RealPair,
    /// Only non-real roots.
    Complex,
    /// A binomial `t^4 - c` with `c > 0`: two real and two non-real roots.
    Mixed,
    Unclassified,
}

pub fn classify_factor(g: &Poly) -> RootClass {
    match g.degree() {
        Some(1) => {
            if g.coeff(0).is_zero() {
                RootClass::Zero
            } else {
                RootClass::Real
            }
        }
        Some(2) => {
            let disc = g.coeff(1) * g.coeff(1) - BigRational::from_integer(4.into()) * g.coeff(2) * g.coeff(0);
            if disc.is_positive() {
                RootClass::RealPair
            } else if disc.is_negative() {
                RootClass::Complex
            } else {
                RootClass::Unclassified
            }
        }
        Some(4) if (1..4).all(|k| g.coeff(k).is_zero()) => {
            let c = -g.coeff(0) / g.coeff(4);
            if c.is_positive() {
                RootClass::Mixed
            } else {
                RootClass::Complex
            }
        }
        _ => RootClass::Unclassified,
    }
}


#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    /// Primitive integer factors with positive leading coefficient.
    pub factors: Vec<(Poly, usize)>,
    /// Whatever could not be split, primitive (the constant 1 when everything factored).
    pub remainder: Poly,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let mut p = self.remainder.scale(&self.unit);
        for (g, m) in &self.factors {
            p = p.mul(&g.pow(*m));
        }
        p
    }
}

/// Splits off irreducible factors of degree at most 4 that are found by
/// rational roots in `t`, `t^2` and `t^4`; everything else stays in the remainder.
pub fn factor_small(p: &Poly) -> Factorization {
    assert!(!p.is_zero(), "factor_small of the zero polynomial");
    let (unit, prim) = p.primitive();
    let mut rest = Poly::from_integers(&prim);
    let mut s = rest.squarefree_part().primitive_poly();
    let mut irreducible: Vec<Poly> = Vec::new();

    if s.degree().unwrap_or(0) >= 1 && s.coeff(0).is_zero() {
        irreducible.push(Poly::t());
        s = s.exact_div(&Poly::t()).unwrap();
    }
    for r in rational_roots(&s) {
        let g = Poly::new(vec![BigRational::from_integer(-r.numer().clone()), BigRational::from_integer(r.denom().clone())]);
        s = s.exact_div(&g).unwrap().primitive_poly();
        irreducible.push(g.primitive_poly());
    }
    if let Some(g2) = s.deflate(2).filter(|_| s.degree().unwrap_or(0) >= 2) {
        for r in rational_roots(&g2) {
            // t^2 - r, irreducible because s has no rational roots left
            let g = Poly::new(vec![-BigRational::from_integer(r.numer().clone()), BigRational::zero(), BigRational::from_integer(r.denom().clone())]);
            s = s.exact_div(&g).unwrap().primitive_poly();
            irreducible.push(g);
        }
    }
    if let Some(g4) = s.deflate(4).filter(|_| s.degree().unwrap_or(0) >= 4) {
        for c in rational_roots(&g4) {
            let binom = Poly::new(vec![-c.clone(), BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::one()]);
            s = s.exact_div(&binom).unwrap().primitive_poly();
            match germain_split(&c) {
                Some((q1, q2)) => {
                    irreducible.push(q1);
                    irreducible.push(q2);
                }
                None => irreducible.push(binom.primitive_poly()),
            }
        }
    }
    if matches!(s.degree(), Some(2) | Some(3)) {
        irreducible.push(s.clone());
    }

    let mut factors = Vec::new();
    for g in irreducible {
        let mut m = 0;
        while let Some(q) = rest.exact_div(&g) {
            rest = q;
            m += 1;
        }
        debug_assert!(m > 0);
        factors.push((g, m));
    }
    let (c, remainder) = rest.primitive();
    Factorization { unit: unit * c, factors, remainder: Poly::from_integers(&remainder) }
}

/// `t^4 - c = (t^2 - 2dt + 2d^2)(t^2 + 2dt + 2d^2)` when `c = -4 d^4`.
fn germain_split(c: &BigRational) -> Option<(Poly, Poly)> {
    if !c.is_negative() {
        return None;
    }
    let q = -c / BigRational::from_integer(4.into());
    let d = rational_root_k(&q, 4)?;
    let two = BigRational::from_integer(2.into());
    let cst = &two * &d * &d;
    let q1 = Poly::new(vec![cst.clone(), -(&two * &d), BigRational::one()]).primitive_poly();
    let q2 = Poly::new(vec![cst, &two * &d, BigRational::one()]).primitive_poly();
    Some((q1, q2))
}

fn rational_root_k(q: &BigRational, k: u32) -> Option<BigRational> {
    let n = int_root(q.numer(), k)?;
    let d = int_root(q.denom(), k)?;
    Some(BigRational::new(n, d))
}

fn int_root(v: &BigInt, k: u32) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *v).then_some(r)
}

const TRIAL_LIMIT: u64 = 1 << 20;
const MAX_CANDIDATES: usize = 200_000;

/// Prime factorisation by trial division; an unfactored cofactor is kept as one "prime".
fn factor_integer(v: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = v.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d < TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

fn divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor_integer(v) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut x = d.clone();
            for _ in 0..=e {
                next.push(x.clone());
                x *= &p;
            }
        }
        divs = next;
        if divs.len() > MAX_CANDIDATES {
            return None;
        }
    }
    Some(divs)
}

/// Distinct rational roots of a polynomial with nonzero constant term.
pub fn rational_roots(p: &Poly) -> Vec<BigRational> {
    let Some(deg) = p.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let (_, ints) = p.primitive();
    let a0 = &ints[0];
    if a0.is_zero() {
        return Vec::new();
    }
    let an = &ints[deg];
    let (Some(num), Some(den)) = (divisors(a0), divisors(an)) else {
        log::warn!("rational root search skipped: too many candidates");
        return Vec::new();
    };
    if num.len().saturating_mul(den.len()) > MAX_CANDIDATES {
        log::warn!("rational root search skipped: too many candidates");
        return Vec::new();
    }
    let mut roots = Vec::new();
    for q in &den {
        for n in &num {
            if !n.gcd(q).is_one() {
                continue;
            }
            for s in [n.clone(), -n.clone()] {
                if eval_scaled(&ints, &s, q).is_zero() {
                    roots.push(BigRational::new(s, q.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// `q^deg * p(n/q)` in integers.
fn eval_scaled(c: &[BigInt], n: &BigInt, q: &BigInt) -> BigInt {
    let deg = c.len() - 1;
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    // Horner on homogenised form: sum c_i n^i q^(deg-i)
    let mut terms = vec![BigInt::zero(); deg + 1];
    for i in (0..=deg).rev() {
        terms[i] = qpow.clone();
        qpow *= q;
    }
    let mut npow = BigInt::one();
    for i in 0..=deg {
        acc += &c[i] * &npow * &terms[i];
        npow *= n;
    }
    acc
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}
