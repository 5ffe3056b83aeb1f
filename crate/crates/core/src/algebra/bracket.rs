//! Structure constants on basis pairs (normalization "v1").
//!
//! * sl x sl: commutator.
//! * sl x wedge: derivation action; wedge x sl is its negative.
//! * wedge x wedge, degrees p + q < n: exterior product.
//! * p + q = n: traceless part of `X_ij = vol((E_ji T) ^ S)`.
//! * p + q > n: `star^-1(star T ^ star S)`.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::element::{BasisKey, LieBasis};
use crate::exterior::{star, star_inv, wedge, MultiIndex};

pub type Q64 = Ratio<i64>;

pub const NORMALIZATION: &str = "v1";

type Entries = Vec<(usize, usize, Q64)>;

fn lie_entries(x: LieBasis) -> Entries {
    match x {
        LieBasis::Offdiag(i, j) => vec![(i, j, Q64::one())],
        LieBasis::Cartan(i) => vec![(i, i, Q64::one()), (i + 1, i + 1, -Q64::one())],
    }
}

/// Basis coordinates of an n x n matrix after projecting away its trace.
pub fn matrix_to_lie(n: usize, m: &BTreeMap<(usize, usize), Q64>) -> Vec<(BasisKey, Q64)> {
    let mut out = Vec::new();
    let mut diag = vec![Q64::zero(); n];
    for (&(i, j), &v) in m {
        if v.is_zero() {
            continue;
        }
        if i == j {
            diag[i] += v;
        } else {
            out.push((BasisKey::Lie(LieBasis::Offdiag(i, j)), v));
        }
    }
    let trace: Q64 = diag.iter().sum();
    let mean = trace / Q64::from_integer(n as i64);
    let mut partial = Q64::zero();
    for (i, d) in diag.iter().enumerate().take(n.saturating_sub(1)) {
        partial += d - mean;
        if !partial.is_zero() {
            out.push((BasisKey::Lie(LieBasis::Cartan(i)), partial));
        }
    }
    out
}

fn commutator(n: usize, x: LieBasis, y: LieBasis) -> Vec<(BasisKey, Q64)> {
    let (a, b) = (lie_entries(x), lie_entries(y));
    let mut m: BTreeMap<(usize, usize), Q64> = BTreeMap::new();
    for &(i, j, u) in &a {
        for &(k, l, v) in &b {
            if j == k {
                *m.entry((i, l)).or_insert_with(Q64::zero) += u * v;
            }
            if l == i {
                *m.entry((k, j)).or_insert_with(Q64::zero) -= u * v;
            }
        }
    }
    matrix_to_lie(n, &m)
}

/// `E_ab e_S`, or `None` when it vanishes.
fn unit_on_monomial(a: usize, b: usize, s: MultiIndex) -> Option<(MultiIndex, i64)> {
    if !s.contains(b) {
        return None;
    }
    if a == b {
        return Some((s, 1));
    }
    if s.contains(a) {
        return None;
    }
    let sign = if s.count_between(a, b) % 2 == 0 { 1 } else { -1 };
    Some((s.without(b).with(a), sign))
}

fn derivation(x: LieBasis, s: MultiIndex) -> Vec<(BasisKey, Q64)> {
    let mut out: BTreeMap<MultiIndex, Q64> = BTreeMap::new();
    for (a, b, v) in lie_entries(x) {
        if let Some((m, sign)) = unit_on_monomial(a, b, s) {
            *out.entry(m).or_insert_with(Q64::zero) += v * sign;
        }
    }
    out.into_iter().filter(|(_, v)| !v.is_zero()).map(|(m, v)| (BasisKey::Wedge(m), v)).collect()
}

fn contraction(n: usize, a: MultiIndex, b: MultiIndex) -> Vec<(BasisKey, Q64)> {
    let common = a.intersection(b);
    match common.degree() {
        0 => {
            // X = vol(e_a ^ e_b) diag(1_a)
            let sigma = wedge(a, b).expect("disjoint").sign();
            let m: BTreeMap<(usize, usize), Q64> =
                a.indices().map(|i| ((i, i), Q64::from_integer(sigma))).collect();
            matrix_to_lie(n, &m)
        }
        1 => {
            let i = common.indices().next().unwrap();
            let missing = a.union(b).complement(n);
            let j = missing.indices().next().unwrap();
            // E_ji e_a replaces i by j
            let (moved, s1) = unit_on_monomial(j, i, a).expect("i in a, j not in a");
            let s2 = wedge(moved, b).expect("complementary").sign();
            vec![(BasisKey::Lie(LieBasis::Offdiag(i, j)), Q64::from_integer(s1 * s2))]
        }
        _ => Vec::new(),
    }
}

fn double_star(n: usize, a: MultiIndex, b: MultiIndex) -> Vec<(BasisKey, Q64)> {
    let (sa, sb) = (star(a, n), star(b, n));
    let Some(w) = wedge(sa.index, sb.index) else {
        return Vec::new();
    };
    let back = star_inv(w.index, n);
    let sign = sa.sign() * sb.sign() * w.sign() * back.sign();
    vec![(BasisKey::Wedge(back.index), Q64::from_integer(sign))]
}

/// `[x, y]` for basis vectors of the extension of sl(n).
pub fn bracket_basis(n: usize, x: BasisKey, y: BasisKey) -> Vec<(BasisKey, Q64)> {
    match (x, y) {
        (BasisKey::Lie(a), BasisKey::Lie(b)) => commutator(n, a, b),
        (BasisKey::Lie(a), BasisKey::Wedge(s)) => derivation(a, s),
        (BasisKey::Wedge(s), BasisKey::Lie(a)) => {
            derivation(a, s).into_iter().map(|(k, v)| (k, -v)).collect()
        }
        (BasisKey::Wedge(a), BasisKey::Wedge(b)) => {
            let (p, q) = (a.degree(), b.degree());
            if p + q < n {
                match wedge(a, b) {
                    Some(w) => vec![(BasisKey::Wedge(w.index), Q64::from_integer(w.sign()))],
                    None => Vec::new(),
                }
            } else if p + q == n {
                contraction(n, a, b)
            } else {
                double_star(n, a, b)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> BasisKey {
        BasisKey::Wedge(MultiIndex::new(v, 16).unwrap())
    }

    fn q(a: i64, b: i64) -> Q64 {
        Q64::new(a, b)
    }

    #[test]
    fn lie_examples() {
        let e01 = BasisKey::Lie(LieBasis::Offdiag(0, 1));
        let e10 = BasisKey::Lie(LieBasis::Offdiag(1, 0));
        assert_eq!(bracket_basis(4, e01, e10), vec![(BasisKey::Lie(LieBasis::Cartan(0)), q(1, 1))]);
        assert_eq!(bracket_basis(4, e01, w(&[1, 2])), vec![(w(&[0, 2]), q(1, 1))]);
        assert_eq!(bracket_basis(4, w(&[1, 2]), e01), vec![(w(&[0, 2]), q(-1, 1))]);
        // h_0 on e_0 e_2: weight 1
        let h0 = BasisKey::Lie(LieBasis::Cartan(0));
        assert_eq!(bracket_basis(4, h0, w(&[0, 2])), vec![(w(&[0, 2]), q(1, 1))]);
        assert!(bracket_basis(4, h0, w(&[0, 1])).is_empty());
    }

    #[test]
    fn contraction_of_complementary_monomials() {
        let out = bracket_basis(6, w(&[0, 1, 2]), w(&[3, 4, 5]));
        let h = |i| BasisKey::Lie(LieBasis::Cartan(i));
        assert_eq!(
            out,
            vec![(h(0), q(1, 2)), (h(1), q(1, 1)), (h(2), q(3, 2)), (h(3), q(1, 1)), (h(4), q(1, 2))]
        );
    }

    /// Oracle: evaluate X_ij = vol((E_ji T) ^ S) by brute force over all (i, j), then project.
    fn contraction_oracle(n: usize, a: MultiIndex, b: MultiIndex) -> Vec<(BasisKey, Q64)> {
        let mut m = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if let Some((moved, s1)) = unit_on_monomial(j, i, a) {
                    if let Some(wd) = wedge(moved, b) {
                        let seq: Vec<usize> = moved.indices().chain(b.indices()).collect();
                        let mut inv = 0;
                        for x in 0..seq.len() {
                            for y in x + 1..seq.len() {
                                if seq[x] > seq[y] {
                                    inv += 1;
                                }
                            }
                        }
                        let s2 = if inv % 2 == 0 { 1 } else { -1 };
                        assert_eq!(s2, wd.sign());
                        *m.entry((i, j)).or_insert_with(Q64::zero) += Q64::from_integer(s1 * s2);
                    }
                }
            }
        }
        matrix_to_lie(n, &m)
    }

    #[test]
    fn contraction_matches_brute_force() {
        for n in [4usize, 5, 6] {
            for p in 1..n {
                for a in crate::exterior::subsets(n, p) {
                    for b in crate::exterior::subsets(n, n - p) {
                        let mut got = contraction(n, a, b);
                        let mut want = contraction_oracle(n, a, b);
                        got.sort();
                        want.sort();
                        assert_eq!(got, want, "n={n} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn grading_of_outputs() {
        let n = 6;
        for p in 1..n {
            for q2 in 1..n {
                for a in crate::exterior::subsets(n, p).take(5) {
                    for b in crate::exterior::subsets(n, q2).step_by(3) {
                        for (k, _) in bracket_basis(n, BasisKey::Wedge(a), BasisKey::Wedge(b)) {
                            assert_eq!(k.degree(), (p + q2) % n);
                        }
                    }
                }
            }
        }
    }
}
