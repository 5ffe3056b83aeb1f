//! Wedge-monomial bases of the exterior powers of C^n.
//!
//! A monomial `e_{i1} ^ ... ^ e_{ik}` with `i1 < ... < ik` is stored as a bitmask.
//! Within each degree the monomials are listed in colexicographic order, so the
//! rank of a monomial is `sum_p C(i_p, p + 1)` over 0-based positions `p`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient dimension a bitmask can hold.
pub const MAX_N: usize = 64;

/// A strictly increasing set of basis indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(u64);

/// A monomial together with a sign, the result of sign-producing operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signed {
    pub negative: bool,
    pub index: MultiIndex,
}

impl Signed {
    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn from_bits(bits: u64) -> Self {
        MultiIndex(bits)
    }

    /// Builds a monomial from strictly increasing indices.
    pub fn new(indices: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u64;
        let mut last = None;
        for &i in indices {
            if i >= n || i >= MAX_N {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            if bits & (1 << i) != 0 {
                return Err(Error::RepeatedIndex(i));
            }
            if let Some(l) = last {
                if i < l {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: "indices must be increasing; use from_unsorted".into(),
                    });
                }
            }
            last = Some(i);
            bits |= 1 << i;
        }
        Ok(MultiIndex(bits))
    }

    /// Sorts `indices` and returns the monomial with the sign of the sorting permutation.
    pub fn from_unsorted(indices: &[usize], n: usize) -> Result<Signed> {
        let mut acc = Signed { negative: false, index: MultiIndex::EMPTY };
        for &i in indices {
            if i >= n || i >= MAX_N {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            match wedge(acc.index, MultiIndex(1 << i)) {
                Some(s) => acc = Signed { negative: acc.negative ^ s.negative, index: s.index },
                None => return Err(Error::RepeatedIndex(i)),
            }
        }
        Ok(acc)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_N && self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.indices().collect()
    }

    pub fn complement(self, n: usize) -> MultiIndex {
        MultiIndex(!self.0 & full_mask(n))
    }

    pub fn is_disjoint(self, other: MultiIndex) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: MultiIndex) -> MultiIndex {
        MultiIndex(self.0 | other.0)
    }

    pub fn intersection(self, other: MultiIndex) -> MultiIndex {
        MultiIndex(self.0 & other.0)
    }

    pub fn without(self, i: usize) -> MultiIndex {
        MultiIndex(self.0 & !(1 << i))
    }

    pub fn with(self, i: usize) -> MultiIndex {
        MultiIndex(self.0 | (1 << i))
    }

    /// Number of indices strictly between `a` and `b`.
    pub fn count_between(self, a: usize, b: usize) -> u32 {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hi <= lo + 1 {
            return 0;
        }
        let mask = ((1u64 << hi) - 1) & !((1u64 << (lo + 1)) - 1);
        (self.0 & mask).count_ones()
    }

    /// Largest index + 1 (0 for the empty monomial).
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Parity of the merge of two sorted index lists: the number of pairs `(x, y)`
/// with `x` in `a`, `y` in `b` and `x > y`.
fn merge_inversions(a: MultiIndex, b: MultiIndex) -> u32 {
    let mut count = 0;
    for y in b.indices() {
        let above = if y + 1 >= 64 { 0 } else { a.0 >> (y + 1) };
        count += above.count_ones();
    }
    count
}

/// `e_a ^ e_b`, or `None` when the monomials share an index.
pub fn wedge(a: MultiIndex, b: MultiIndex) -> Option<Signed> {
    if !a.is_disjoint(b) {
        return None;
    }
    Some(Signed { negative: merge_inversions(a, b) % 2 == 1, index: a.union(b) })
}

/// Checked wedge over a fixed ambient dimension.
pub fn wedge_in(a: MultiIndex, b: MultiIndex, n: usize) -> Result<Option<Signed>> {
    for m in [a, b] {
        if m.span() > n {
            return Err(Error::IndexOutOfRange { index: m.span() - 1, n });
        }
    }
    Ok(wedge(a, b))
}

/// Volume-form complement: `(s, a^c)` with `e_a ^ (s e_{a^c}) = e_0 ^ ... ^ e_{n-1}`.
pub fn star(a: MultiIndex, n: usize) -> Signed {
    let c = a.complement(n);
    Signed { negative: merge_inversions(a, c) % 2 == 1, index: c }
}

/// Inverse of [`star`]: `star(star_inv(b)) = e_b`.
pub fn star_inv(b: MultiIndex, n: usize) -> Signed {
    let c = b.complement(n);
    let s = star(c, n);
    Signed { negative: s.negative, index: c }
}

/// Binomial coefficients up to `C(64, k)`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

/// Colexicographic rank within the degree of `a`.
pub fn colex_rank(a: MultiIndex) -> usize {
    a.indices().enumerate().map(|(p, i)| binomial(i, p + 1) as usize).sum()
}

/// Inverse of [`colex_rank`] for degree `k`.
pub fn colex_unrank(mut rank: usize, k: usize) -> MultiIndex {
    let mut bits = 0u64;
    for p in (1..=k).rev() {
        let mut i = p - 1;
        while binomial(i + 1, p) as usize <= rank {
            i += 1;
        }
        rank -= binomial(i, p) as usize;
        bits |= 1 << i;
    }
    MultiIndex(bits)
}

/// All monomials of each degree of `Λ C^n` in colex order.
#[derive(Clone, Debug)]
pub struct BasisEnumeration {
    n: usize,
    by_degree: Vec<Vec<MultiIndex>>,
}

impl BasisEnumeration {
    /// Enumerates every degree. Memory grows like `2^n`, so `n` is capped at 24.
    pub fn new(n: usize) -> Result<Self> {
        if n > 24 {
            return Err(Error::TooLarge(format!("basis enumeration for n = {n}")));
        }
        let mut by_degree: Vec<Vec<MultiIndex>> = (0..=n)
            .map(|k| Vec::with_capacity(binomial(n, k) as usize))
            .collect();
        // colex order within a degree is numeric order of the bitmask
        for bits in 0..(1u64 << n) {
            by_degree[bits.count_ones() as usize].push(MultiIndex(bits));
        }
        Ok(BasisEnumeration { n, by_degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, k: usize) -> &[MultiIndex] {
        &self.by_degree[k]
    }

    pub fn rank(&self, a: MultiIndex) -> usize {
        colex_rank(a)
    }

    pub fn unrank(&self, k: usize, r: usize) -> MultiIndex {
        self.by_degree[k][r]
    }
}

/// Iterator over all `k`-subsets of `[n]` in colex order, without storing them.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = MultiIndex> {
    let total = binomial(n, k);
    let mut cur: Option<u64> = if k <= n && k < 64 { Some((1u64 << k) - 1) } else { None };
    let mut left = total;
    std::iter::from_fn(move || {
        if left == 0 {
            return None;
        }
        let v = cur?;
        left -= 1;
        if left > 0 {
            // Gosper's hack gives the next bitmask with the same popcount
            let c = v & v.wrapping_neg();
            let r = v + c;
            cur = Some((((r ^ v) >> 2) / c) | r);
        }
        Some(MultiIndex(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[usize]) -> MultiIndex {
        MultiIndex::new(v, 16).unwrap()
    }

    fn brute_sign(seq: &[usize]) -> i64 {
        let mut inv = 0;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] > seq[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn wedge_examples() {
        let w = wedge(mi(&[0, 1]), mi(&[2])).unwrap();
        assert_eq!((w.sign(), w.index), (1, mi(&[0, 1, 2])));
        let w = wedge(mi(&[1]), mi(&[0])).unwrap();
        assert_eq!((w.sign(), w.index), (-1, mi(&[0, 1])));
        assert!(wedge(mi(&[0, 1]), mi(&[1, 2])).is_none());
    }

    #[test]
    fn star_examples() {
        let s = star(mi(&[0, 1, 2]), 6);
        assert_eq!((s.sign(), s.index), (1, mi(&[3, 4, 5])));
        let s = star(mi(&[1, 3, 5]), 6);
        assert_eq!(s.index, mi(&[0, 2, 4]));
        assert_eq!(s.sign(), brute_sign(&[1, 3, 5, 0, 2, 4]));
        assert_eq!(s.sign(), 1);
    }

    #[test]
    fn wedge_sign_matches_permutation_sign() {
        let n = 8;
        for a in 0..(1u64 << n) {
            for b in 0..(1u64 << n) {
                let (a, b) = (MultiIndex(a), MultiIndex(b));
                match wedge(a, b) {
                    None => assert!(!a.is_disjoint(b)),
                    Some(w) => {
                        let seq: Vec<usize> = a.indices().chain(b.indices()).collect();
                        assert_eq!(w.sign(), brute_sign(&seq));
                        let r = wedge(b, a).unwrap();
                        let gc = if (a.degree() * b.degree()) % 2 == 0 { 1 } else { -1 };
                        assert_eq!(w.sign(), gc * r.sign());
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_is_associative() {
        let n = 7;
        for a in 0..(1u64 << n) {
            for b in [0b1u64, 0b1010, 0b100100, 0b11] {
                for c in [0b1000000u64, 0b10000, 0b100] {
                    let (a, b, c) = (MultiIndex(a), MultiIndex(b), MultiIndex(c));
                    let left = wedge(a, b).and_then(|ab| {
                        wedge(ab.index, c).map(|r| r.sign() * ab.sign())
                    });
                    let right = wedge(b, c).and_then(|bc| {
                        wedge(a, bc.index).map(|r| r.sign() * bc.sign())
                    });
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn star_gives_volume() {
        for n in 0..=10 {
            for a in 0..(1u64 << n) {
                let a = MultiIndex(a);
                let s = star(a, n);
                let w = wedge(a, s.index).unwrap();
                assert_eq!(w.index.bits(), full_mask(n));
                assert_eq!(w.sign() * s.sign(), 1);
                let ss = star(s.index, n);
                let k = a.degree();
                let expect = if (k * (n - k)) % 2 == 0 { 1 } else { -1 };
                assert_eq!(ss.index, a);
                assert_eq!(ss.sign() * s.sign(), expect);
                let back = star_inv(s.index, n);
                assert_eq!(back.index, a);
                assert_eq!(back.sign() * s.sign(), 1);
            }
        }
    }

    #[test]
    fn colex_round_trip() {
        for n in 0..=16 {
            for k in 0..=n {
                let mut count = 0;
                for (r, m) in subsets(n, k).enumerate() {
                    assert_eq!(colex_rank(m), r);
                    assert_eq!(colex_unrank(r, k), m);
                    count += 1;
                }
                assert_eq!(count as u64, binomial(n, k));
            }
        }
        let b = BasisEnumeration::new(10).unwrap();
        for k in 0..=10 {
            assert_eq!(b.degree(k).len() as u64, binomial(10, k));
            for (r, &m) in b.degree(k).iter().enumerate() {
                assert_eq!(b.rank(m), r);
                assert_eq!(b.unrank(k, r), m);
            }
        }
    }

    #[test]
    fn unsorted_input_is_signed() {
        let s = MultiIndex::from_unsorted(&[1, 0], 6).unwrap();
        assert_eq!((s.sign(), s.index), (-1, mi(&[0, 1])));
        assert!(MultiIndex::from_unsorted(&[2, 2], 6).is_err());
        assert!(MultiIndex::from_unsorted(&[6], 6).is_err());
    }

    #[test]
    fn between_counts() {
        let s = mi(&[0, 2, 3, 5, 7]);
        assert_eq!(s.count_between(0, 7), 3);
        assert_eq!(s.count_between(7, 0), 3);
        assert_eq!(s.count_between(2, 3), 0);
        assert_eq!(s.count_between(1, 6), 3);
    }
}
