//! Root scaling between two normalizations of the bracket.
//!
//! Rescaling the bracket multiplies every eigenvalue of `ad_t` by one constant
//! `alpha`, so the monic characteristic polynomial changes as
//! `chi(t) -> alpha^D chi(t / alpha)`. For polynomials in `t^g` only
//! `beta = alpha^g` enters, and it is rational even when `alpha` is not.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Calibration {
    /// `alpha^period`.
    #[serde(with = "crate::linalg::scalar::rational_string")]
    pub beta: BigRational,
    pub period: usize,
}

fn exact_root(q: &BigRational, e: usize) -> Option<BigRational> {
    if e == 1 {
        return Some(q.clone());
    }
    if q.is_negative() && e % 2 == 0 {
        return None;
    }
    let root = |v: &BigInt| -> Option<BigInt> {
        let r = v.abs().nth_root(e as u32);
        (num_traits::pow(r.clone(), e) == v.abs()).then_some(if v.is_negative() { -r } else { r })
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

impl Calibration {
    pub fn identity(period: usize) -> Self {
        Calibration { beta: BigRational::one(), period }
    }

    /// Smallest `g` such that the polynomial is a polynomial in `t^g` (times a power of t).
    pub fn natural_period(p: &Poly) -> usize {
        let d = p.degree().unwrap_or(0);
        let gaps: Vec<usize> = (0..d).filter(|&k| !p.coeff(k).is_zero()).map(|k| d - k).collect();
        gaps.into_iter().fold(0, num_integer::gcd).max(1)
    }

    /// `beta` that carries `ours` onto `reference`; both are made monic first.
    pub fn fit(ours: &Poly, reference: &Poly, period: usize) -> Result<Self> {
        let (a, b) = (ours.monic(), reference.monic());
        let d = a.degree().unwrap_or(0);
        if b.degree() != Some(d) {
            return Err(Error::MissingCalibration("degrees differ".into()));
        }
        for j in 1..=d {
            let (ca, cb) = (a.coeff(d - j), b.coeff(d - j));
            if ca.is_zero() && cb.is_zero() {
                continue;
            }
            if ca.is_zero() || cb.is_zero() || j % period != 0 {
                return Err(Error::MissingCalibration(format!("coefficient of t^{} disagrees in support", d - j)));
            }
            let beta = exact_root(&(ca / cb), j / period)
                .ok_or_else(|| Error::MissingCalibration("ratio is not an exact power".into()))?;
            return Ok(Calibration { beta, period });
        }
        Ok(Calibration::identity(period))
    }

    /// `ours` rewritten in the reference normalization (monic).
    pub fn apply(&self, ours: &Poly) -> Result<Poly> {
        let a = ours.monic();
        let d = a.degree().unwrap_or(0);
        let mut out = vec![BigRational::zero(); d + 1];
        for j in 0..=d {
            let c = a.coeff(d - j);
            if c.is_zero() {
                continue;
            }
            if j % self.period != 0 {
                return Err(Error::MissingCalibration(format!("t^{} outside period {}", d - j, self.period)));
            }
            out[d - j] = c / num_traits::pow(self.beta.clone(), j / self.period);
        }
        Ok(Poly::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;

    #[test]
    fn recovers_scale() {
        // reference side (t^4 - 16/9)^2 t^3, ours with alpha^4 = 9/4
        let t4 = |c: BigRational| Poly::new(vec![-c, rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]);
        let reference = t4(rat(16, 9)).pow(2).mul(&Poly::t().pow(3));
        let ours = t4(rat(4, 1)).pow(2).mul(&Poly::t().pow(3));
        assert_eq!(Calibration::natural_period(&ours), 4);
        let cal = Calibration::fit(&ours, &reference, 4).unwrap();
        assert_eq!(cal.beta, rat(9, 4));
        assert_eq!(cal.apply(&ours).unwrap(), reference);
        assert_eq!(exact_root(&rat(-27, 8), 3), Some(rat(-3, 2)));
        assert_eq!(exact_root(&rat(2, 1), 2), None);
    }
}
