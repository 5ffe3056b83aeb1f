//! Multipartite embeddings, the matrix multiplication tensor and seeded random tensors.

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::QuditLayout;
use crate::algebra::{AlgebraElement, BasisKey};
use crate::error::{Error, Result};
use crate::exterior::{subsets, MultiIndex};
use crate::linalg::scalar::rat_int;
use crate::linalg::Coeff;

/// Where random tensors live.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `Lambda^k C^n`; rank-one terms are `v_1 ^ ... ^ v_k`.
    Exterior { n: usize, k: usize },
    /// `C^{d_1} (x) ... (x) C^{d_k}` placed by the layout; rank-one terms are pure tensors.
    Multipartite(QuditLayout),
}

impl Shape {
    pub fn n(&self) -> usize {
        match self {
            Shape::Exterior { n, .. } => *n,
            Shape::Multipartite(l) => l.n(),
        }
    }
}

/// `sum c * (e_{a_1} (x) ... (x) e_{a_k})` sent to `sum c * e_{g(1, a_1)} ^ ... ^ e_{g(k, a_k)}`.
pub fn embed_multipartite(terms: &[(Coeff, Vec<usize>)], layout: &QuditLayout) -> Result<AlgebraElement> {
    let n = layout.n();
    let mut out = AlgebraElement::zero(n);
    for (c, local) in terms {
        if local.len() != layout.parts().len() {
            return Err(Error::Dimension(format!("term with {} factors for {} parts", local.len(), layout.parts().len())));
        }
        let idx = local.iter().enumerate().map(|(i, &a)| layout.global(i, a)).collect::<Result<Vec<_>>>()?;
        let s = MultiIndex::from_unsorted(&idx, n)?;
        out.add_term(BasisKey::Wedge(s.index), c.scale(&rat_int(s.sign())));
    }
    Ok(out)
}

/// `sum_{i,j,l} a_{ij} (x) b_{jl} (x) c_{il}` in `C^{pq} (x) C^{qr} (x) C^{pr}`, contiguous parts.
/// Double indices are flattened with the first index fastest: `a_{ij} -> i + p j`,
/// `b_{jl} -> j + q l`, `c_{il} -> i + p l`.
pub fn matmul_tensor(p: usize, q: usize, r: usize) -> AlgebraElement {
    assert!(p >= 1 && q >= 1 && r >= 1, "matrix sizes must be positive");
    let layout = QuditLayout::new(vec![p * q, q * r, p * r], super::Convention::Contiguous).expect("layout");
    let mut terms = Vec::with_capacity(p * q * r);
    for i in 0..p {
        for j in 0..q {
            for l in 0..r {
                terms.push((Coeff::one(), vec![i + p * j, j + q * l, i + p * l]));
            }
        }
    }
    embed_multipartite(&terms, &layout).expect("matmul indices in range")
}

fn random_entry(rng: &mut ChaCha8Rng) -> i64 {
    let v = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// `v_1 ^ ... ^ v_k` expanded by maximal minors.
pub fn wedge_of_vectors(vectors: &[Vec<BigRational>], n: usize) -> Result<AlgebraElement> {
    let k = vectors.len();
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::Dimension("vector length differs from n".into()));
    }
    let mut out = AlgebraElement::zero(n);
    for s in subsets(n, k) {
        let cols: Vec<usize> = s.indices().collect();
        let m: Vec<Vec<BigRational>> = vectors.iter().map(|v| cols.iter().map(|&c| v[c].clone()).collect()).collect();
        out.add_term(BasisKey::Wedge(s), Coeff::real(det(m)));
    }
    Ok(out)
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    use num_traits::{One, Zero};
    let k = m.len();
    let mut d = BigRational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c].clone();
        for r in c + 1..k {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[c][c];
            for cc in c..k {
                let t = &f * &m[c][cc];
                m[r][cc] -= t;
            }
        }
    }
    d
}

/// One random rank-one term of `shape`, entries nonzero integers in `[-5, 5]`.
pub fn random_rank_one(shape: &Shape, rng: &mut ChaCha8Rng) -> Result<AlgebraElement> {
    match shape {
        Shape::Exterior { n, k } => {
            let vs: Vec<Vec<BigRational>> =
                (0..*k).map(|_| (0..*n).map(|_| rat_int(random_entry(rng))).collect()).collect();
            wedge_of_vectors(&vs, *n)
        }
        Shape::Multipartite(layout) => {
            let vs: Vec<Vec<i64>> = layout.parts().iter().map(|&d| (0..d).map(|_| random_entry(rng)).collect()).collect();
            let mut terms = vec![(Coeff::one(), Vec::new())];
            for v in &vs {
                terms = terms
                    .into_iter()
                    .flat_map(|(c, w)| {
                        v.iter().enumerate().map(move |(a, &x)| {
                            let mut w = w.clone();
                            w.push(a);
                            (c.scale(&rat_int(x)), w)
                        })
                    })
                    .collect();
            }
            embed_multipartite(&terms, layout)
        }
    }
}

/// Sum of `r` random rank-one terms; the same seed gives the same tensor.
pub fn random_tensor(r: usize, shape: &Shape, seed: u64) -> Result<AlgebraElement> {
    if r == 0 {
        return Err(Error::Dimension("rank must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = AlgebraElement::zero(shape.n());
    for _ in 0..r {
        out = out.add(&random_rank_one(shape, &mut rng)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor_io::{parse_wedge, Convention, ParseOptions};

    fn cube(d: usize) -> QuditLayout {
        QuditLayout::new(vec![d; 3], Convention::Contiguous).unwrap()
    }

    #[test]
    fn embeddings() {
        let one = |v: Vec<usize>| (Coeff::one(), v);
        let t = embed_multipartite(&[one(vec![0, 0, 0])], &cube(4)).unwrap();
        assert_eq!(t, AlgebraElement::wedge(12, &[0, 4, 8]).unwrap());
        let t = embed_multipartite(&[one(vec![3, 3, 3])], &cube(4)).unwrap();
        assert_eq!(t, AlgebraElement::wedge(12, &[3, 7, 11]).unwrap());
        let diag: Vec<_> = (0..4).map(|i| one(vec![i, i, i])).collect();
        let want = parse_wedge("e0e4e8+e1e5e9+e2e6e10+e3e7e11", 12, ParseOptions::explicit()).unwrap();
        assert_eq!(embed_multipartite(&diag, &cube(4)).unwrap(), want);
        assert!(embed_multipartite(&[one(vec![4, 0, 0])], &cube(4)).is_err());
    }

    #[test]
    fn matmul() {
        let want = parse_wedge(
            "e0e4e8+e2e5e8+e1e4e9+e3e5e9+e0e6e10+e2e7e10+e1e6e11+e3e7e11",
            12,
            ParseOptions::explicit(),
        )
        .unwrap();
        assert_eq!(matmul_tensor(2, 2, 2), want);
        // 1x1 times 1x2: parts of sizes 1, 2, 2
        let want = parse_wedge("e0e1e3+e0e2e4", 5, ParseOptions::default()).unwrap();
        assert_eq!(matmul_tensor(1, 1, 2), want);
        assert_eq!(matmul_tensor(2, 3, 4).len(), 24);
    }

    #[test]
    fn random_is_deterministic() {
        let s = Shape::Exterior { n: 9, k: 3 };
        assert_eq!(random_tensor(3, &s, 7).unwrap(), random_tensor(3, &s, 7).unwrap());
        assert_ne!(random_tensor(3, &s, 7).unwrap(), random_tensor(3, &s, 8).unwrap());
        let m = Shape::Multipartite(cube(4));
        let t = random_tensor(1, &m, 1).unwrap();
        assert_eq!(t.len(), 64);
        assert!(t.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn minors() {
        let v = |x: &[i64]| x.iter().map(|&a| rat_int(a)).collect::<Vec<_>>();
        let t = wedge_of_vectors(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        assert_eq!(t, AlgebraElement::wedge(3, &[0, 1]).unwrap());
        let t = wedge_of_vectors(&[v(&[1, 2, 0]), v(&[3, 4, 0])], 3).unwrap();
        assert_eq!(t, AlgebraElement::wedge(3, &[0, 1]).unwrap().scale(&Coeff::from_i64(-2)));
    }
}
