//! Tensor sources: parsers, multipartite embeddings, generators and named fixtures.

pub mod fixtures;
pub mod generate;
pub mod input;
pub mod parse;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use fixtures::{fixture, fixture_names, AlgebraSpec, Fixture, FIXTURE_VERSION};
pub use generate::{embed_multipartite, matmul_tensor, random_tensor, Shape};
pub use input::{parse_input_file, parse_input_str, InputFile};
pub use parse::{parse_element, parse_expr, parse_ket, parse_ket_with_notes, parse_vinberg, parse_wedge, DigitRuns, ParseOptions, TensorExpr};

use crate::algebra::{AlgebraElement, BasisKey};
use crate::error::{Error, Result};
use crate::linalg::scalar::rat_int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Notation {
    Wedge,
    Ket,
    Vinberg,
}

impl FromStr for Notation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "wedge" => Ok(Notation::Wedge),
            "ket" => Ok(Notation::Ket),
            "vinberg" => Ok(Notation::Vinberg),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown notation {s:?}") }),
        }
    }
}

/// Where local basis vector `b` of part `i` lands in `C^n`.
///
/// `Contiguous`: part `i` owns the range starting at `d_0 + ... + d_{i-1}`, so for
/// qubits digit `b` of qubit `i` is `e_{2i+b}`. `Strided` (equal parts only): `e_{i + b k}`
/// for `k` parts, the grouping `{e_i, e_{i+k}}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Contiguous,
    Strided,
}

impl FromStr for Convention {
    type Err = Error;
    /// Qubit names are accepted too: `interleaved` pairs `(e_{2i}, e_{2i+1})` and
    /// `blocked` pairs `(e_i, e_{i+k})`.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "contiguous" | "interleaved" => Ok(Convention::Contiguous),
            "strided" | "blocked" => Ok(Convention::Strided),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown convention {s:?}") }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuditLayout {
    parts: Vec<usize>,
    convention: Convention,
}

impl QuditLayout {
    pub fn new(parts: Vec<usize>, convention: Convention) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Dimension(format!("bad part sizes {parts:?}")));
        }
        if convention == Convention::Strided && parts.iter().any(|&d| d != parts[0]) {
            return Err(Error::Dimension("strided layout needs equal parts".into()));
        }
        Ok(QuditLayout { parts, convention })
    }

    pub fn qubits(k: usize, convention: Convention) -> Self {
        QuditLayout::new(vec![2; k], convention).expect("qubit layout")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn global(&self, part: usize, b: usize) -> Result<usize> {
        let d = *self.parts.get(part).ok_or_else(|| Error::Dimension(format!("no part {part}")))?;
        if b >= d {
            return Err(Error::IndexOutOfRange { index: b, n: d });
        }
        Ok(match self.convention {
            Convention::Contiguous => self.parts[..part].iter().sum::<usize>() + b,
            Convention::Strided => part + b * self.parts.len(),
        })
    }

    /// Global indices of the ket `|digits>`, in part order.
    pub fn ket_indices(&self, digits: &[usize]) -> Result<Vec<usize>> {
        if digits.len() != self.parts.len() {
            return Err(Error::Dimension(format!("ket of length {} for {} parts", digits.len(), self.parts.len())));
        }
        digits.iter().enumerate().map(|(i, &b)| self.global(i, b)).collect()
    }

    /// Permutation carrying this layout's indices to the contiguous one.
    pub fn to_contiguous_perm(&self) -> Vec<usize> {
        let contiguous = QuditLayout { parts: self.parts.clone(), convention: Convention::Contiguous };
        let mut perm = vec![0; self.n()];
        for (i, &d) in self.parts.iter().enumerate() {
            for b in 0..d {
                perm[self.global(i, b).unwrap()] = contiguous.global(i, b).unwrap();
            }
        }
        perm
    }

    /// Moves `t` to the contiguous layout by an element of SL(n): the index
    /// permutation, composed with `e_0 -> -e_0` when the permutation is odd.
    pub fn to_contiguous(&self, t: &AlgebraElement) -> Result<AlgebraElement> {
        let perm = self.to_contiguous_perm();
        let moved = t.permute(&perm)?;
        if permutation_is_even(&perm) {
            return Ok(moved);
        }
        let mut out = AlgebraElement::zero(t.n());
        for (k, c) in moved.terms() {
            let flip = matches!(k, BasisKey::Wedge(m) if m.contains(0));
            out.add_term(*k, if flip { c.scale(&rat_int(-1)) } else { c.clone() });
        }
        Ok(out)
    }
}

fn permutation_is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for s in 0..perm.len() {
        let mut j = s;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        transpositions += len.max(1) - 1;
    }
    transpositions % 2 == 0
}

impl fmt::Display for QuditLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|d| d.to_string()).collect();
        write!(f, "{} ({:?})", p.join("x"), self.convention)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layouts() {
        let q = QuditLayout::qubits(5, Convention::Contiguous);
        assert_eq!(q.ket_indices(&[0, 1, 0, 1, 1]).unwrap(), vec![0, 3, 4, 7, 9]);
        let s = QuditLayout::qubits(5, Convention::Strided);
        assert_eq!(s.ket_indices(&[0, 1, 0, 1, 1]).unwrap(), vec![0, 6, 2, 8, 9]);
        assert!(QuditLayout::new(vec![2, 3], Convention::Strided).is_err());
        assert_eq!("blocked".parse::<Convention>().unwrap(), Convention::Strided);
        assert!(permutation_is_even(&[1, 2, 0]));
        assert!(!permutation_is_even(&[1, 0, 2]));
        let t = parse_ket("|00000>+|11111>", &s).unwrap();
        let c = s.to_contiguous(&t).unwrap();
        let direct = parse_ket("|00000>+|11111>", &q).unwrap();
        // same monomials up to the sign on terms through e_0
        assert_eq!(c.len(), direct.len());
        for (k, v) in c.terms() {
            assert_eq!(v.norm(), direct.coeff(k).norm());
        }
    }
}
