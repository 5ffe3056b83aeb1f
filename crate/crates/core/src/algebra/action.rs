//! SL(n) acting through products of transvections `I + s E_ij`.

use std::collections::BTreeMap;

use num_rational::BigRational;

use super::element::{AlgebraElement, BasisKey, LieBasis};
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Coeff, Field, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvection {
    pub i: usize,
    pub j: usize,
    pub s: BigRational,
}

impl Transvection {
    pub fn new(i: usize, j: usize, s: BigRational) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidGrading(format!("transvection needs i != j, got ({i}, {j})")));
        }
        Ok(Transvection { i, j, s })
    }

    pub fn inverse(&self) -> Self {
        Transvection { i: self.i, j: self.j, s: -self.s.clone() }
    }
}

/// Inverse of the product `g[0] g[1] ...`.
pub fn inverse(g: &[Transvection]) -> Vec<Transvection> {
    g.iter().rev().map(Transvection::inverse).collect()
}

type Dense = BTreeMap<(usize, usize), Coeff>;

fn lie_to_matrix(terms: &[(LieBasis, Coeff)]) -> Dense {
    let mut m = Dense::new();
    let mut add = |k: (usize, usize), c: &Coeff| {
        let e = m.entry(k).or_insert_with(Coeff::zero);
        *e = &*e + c;
    };
    for (b, c) in terms {
        match *b {
            LieBasis::Offdiag(i, j) => add((i, j), c),
            LieBasis::Cartan(i) => {
                add((i, i), c);
                add((i + 1, i + 1), &-c);
            }
        }
    }
    m
}

fn matrix_to_lie(n: usize, m: &Dense) -> Vec<(BasisKey, Coeff)> {
    let mut out = Vec::new();
    let mut partial = Coeff::zero();
    let mut diag = vec![Coeff::zero(); n];
    for (&(i, j), c) in m {
        if i == j {
            diag[i] = &diag[i] + c;
        } else if !c.is_zero() {
            out.push((BasisKey::Lie(LieBasis::Offdiag(i, j)), c.clone()));
        }
    }
    for (i, d) in diag.iter().enumerate().take(n - 1) {
        partial = &partial + d;
        out.push((BasisKey::Lie(LieBasis::Cartan(i)), partial.clone()));
    }
    out
}

fn apply_one(n: usize, g: &Transvection, t: &AlgebraElement) -> Result<AlgebraElement> {
    if g.i >= n || g.j >= n {
        return Err(Error::IndexOutOfRange { index: g.i.max(g.j), n });
    }
    let s = Coeff::real(g.s.clone());
    let mut out = AlgebraElement::zero(n);
    let mut lie = Vec::new();
    for (k, c) in t.terms() {
        match *k {
            BasisKey::Lie(b) => lie.push((b, c.clone())),
            BasisKey::Wedge(m) => {
                out.add_term(*k, c.clone());
                // (I + s E_ij) acts on Lambda^k as I + s rho(E_ij)
                if m.contains(g.j) && !m.contains(g.i) {
                    let sign = if m.count_between(g.i, g.j) % 2 == 0 { 1 } else { -1 };
                    let moved = m.without(g.j).with(g.i);
                    out.add_term(BasisKey::Wedge(moved), (&s * c).scale(&BigRational::from_integer(sign.into())));
                }
            }
        }
    }
    if !lie.is_empty() {
        // g X g^-1 = X + s (E_ij X - X E_ij) - s^2 X_ji E_ij
        let x = lie_to_matrix(&lie);
        let mut y = x.clone();
        let mut add = |k: (usize, usize), c: Coeff| {
            let e = y.entry(k).or_insert_with(Coeff::zero);
            *e = &*e + &c;
        };
        for (&(r, c), v) in &x {
            if r == g.j {
                add((g.i, c), &s * v);
            }
            if c == g.i {
                add((r, g.j), -&(&s * v));
            }
        }
        if let Some(xji) = x.get(&(g.j, g.i)) {
            add((g.i, g.j), -&(&(&s * &s) * xji));
        }
        for (k, c) in matrix_to_lie(n, &y) {
            out.add_term(k, c);
        }
    }
    Ok(out)
}

/// `g . t` for `g = g[0] g[1] ... g[m-1]`.
pub fn act(g: &[Transvection], t: &AlgebraElement) -> Result<AlgebraElement> {
    let mut cur = t.clone();
    for tv in g.iter().rev() {
        cur = apply_one(t.n(), tv, &cur)?;
    }
    Ok(cur)
}

/// Matrix of `x -> g . x` on the basis of `alg`.
pub fn action_matrix<F: Field>(f: &F, alg: &Algebra, g: &[Transvection]) -> Result<Matrix<F::Elem>> {
    let d = alg.dim();
    let mut m = Matrix::filled(d, d, f.zero());
    for (c, key) in alg.basis().iter().enumerate() {
        let image = act(g, &AlgebraElement::basis(alg.n(), *key))?;
        for (r, v) in alg.to_vector(f, &image)?.into_iter().enumerate() {
            if !f.is_zero(&v) {
                m.set(r, c, v);
            }
        }
    }
    Ok(m)
}
