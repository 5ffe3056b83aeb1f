use std::collections::BTreeMap;
use std::fmt;

use crate::exterior::MultiIndex;
use crate::linalg::Coeff;

/// Basis of sl(n): off-diagonal units and Cartan elements `h_i = E_ii - E_{i+1,i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieBasis {
    /// `E_ij`, `i != j`.
    Offdiag(usize, usize),
    /// `h_i`, `0 <= i <= n - 2`.
    Cartan(usize),
}

/// A basis vector of the algebra, independent of the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKey {
    Lie(LieBasis),
    Wedge(MultiIndex),
}

impl BasisKey {
    /// Exterior degree; Lie elements sit in degree 0.
    pub fn degree(&self) -> usize {
        match self {
            BasisKey::Lie(_) => 0,
            BasisKey::Wedge(m) => m.degree(),
        }
    }

    pub fn in_range(&self, n: usize) -> bool {
        match *self {
            BasisKey::Lie(LieBasis::Offdiag(i, j)) => i < n && j < n && i != j,
            BasisKey::Lie(LieBasis::Cartan(i)) => i + 1 < n,
            BasisKey::Wedge(m) => m.span() <= n && m.degree() >= 1 && m.degree() < n,
        }
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::Lie(LieBasis::Offdiag(i, j)) => write!(f, "E{i},{j}"),
            BasisKey::Lie(LieBasis::Cartan(i)) => write!(f, "h{i}"),
            BasisKey::Wedge(m) => write!(f, "{m}"),
        }
    }
}

/// A sparse vector of the algebra with coefficients in Q(i).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<BasisKey, Coeff>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn basis(n: usize, key: BasisKey) -> Self {
        let mut e = AlgebraElement::zero(n);
        e.add_term(key, Coeff::one());
        e
    }

    pub fn wedge(n: usize, indices: &[usize]) -> crate::Result<Self> {
        let s = MultiIndex::from_unsorted(indices, n)?;
        let mut e = AlgebraElement::zero(n);
        e.add_term(BasisKey::Wedge(s.index), Coeff::from_i64(s.sign()));
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, key: BasisKey, c: Coeff) {
        assert!(key.in_range(self.n), "basis key {key} out of range for n = {}", self.n);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Coeff::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &BasisKey) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|k| k.degree()).collect();
        d.sort();
        d.dedup();
        d
    }

    /// The single degree of a homogeneous nonzero element.
    pub fn pure_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = AlgebraElement::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "elements over different n");
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Coeff::from_i64(-1)))
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Coeff::is_real)
    }

    /// Relabels wedge indices by a permutation of `[n]`, with the sorting sign.
    pub fn permute(&self, perm: &[usize]) -> crate::Result<Self> {
        let mut out = AlgebraElement::zero(self.n);
        for (k, v) in &self.terms {
            match k {
                BasisKey::Wedge(m) => {
                    let idx: Vec<usize> = m.indices().map(|i| perm[i]).collect();
                    let s = MultiIndex::from_unsorted(&idx, self.n)?;
                    out.add_term(BasisKey::Wedge(s.index), v.scale(&crate::linalg::scalar::rat_int(s.sign())));
                }
                BasisKey::Lie(_) => {
                    return Err(crate::Error::AlgebraMismatch("permute applies to tensors only".into()))
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_real() && c.re < num_rational::BigRational::from_integer(0.into()) {
                (true, Coeff::real(-c.re.clone()))
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mag == Coeff::one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{mag}*{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
