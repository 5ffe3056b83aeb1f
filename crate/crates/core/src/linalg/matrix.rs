//! Dense row-major matrices and the field-generic kernels on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Matrix { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [T] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Self {
        let mut data = Vec::with_capacity(nr * nc);
        for r in r0..r0 + nr {
            data.extend_from_slice(&self.row(r)[c0..c0 + nc]);
        }
        Matrix { rows: nr, cols: nc, data }
    }

    /// Rows and columns picked by index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c].clone()));
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn map<U, G: Fn(&T) -> U>(&self, g: G) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(g).collect() }
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zeros(f, n, n);
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

pub fn is_zero_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    m.data.iter().all(|x| f.is_zero(x))
}

pub fn mat_add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let data = a.data.iter().zip(&b.data).map(|(x, y)| f.add(x, y)).collect();
    Matrix { rows: a.rows, cols: a.cols, data }
}

pub fn mat_sub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let data = a.data.iter().zip(&b.data).map(|(x, y)| f.sub(x, y)).collect();
    Matrix { rows: a.rows, cols: a.cols, data }
}

pub fn mat_scale<F: Field>(f: &F, s: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    a.map(|x| f.mul(s, x))
}

/// `a - lambda I`.
pub fn shift<F: Field>(f: &F, a: &Matrix<F::Elem>, lambda: &F::Elem) -> Matrix<F::Elem> {
    let mut m = a.clone();
    for i in 0..a.rows.min(a.cols) {
        let v = f.sub(m.get(i, i), lambda);
        m.set(i, i, v);
    }
    m
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    use rayon::prelude::*;
    assert_eq!(a.cols, b.rows, "matmul dimensions");
    let mut out = zeros(f, a.rows, b.cols);
    if b.cols == 0 {
        return out;
    }
    out.data.par_chunks_mut(b.cols).enumerate().for_each(|(r, orow)| {
        for (k, av) in a.row(r).iter().enumerate() {
            if f.is_zero(av) {
                continue;
            }
            for (o, bv) in orow.iter_mut().zip(b.row(k)) {
                if !f.is_zero(bv) {
                    *o = f.add(o, &f.mul(av, bv));
                }
            }
        }
    });
    out
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|r| {
            a.row(r).iter().zip(v).fold(f.zero(), |acc, (x, y)| {
                if f.is_zero(x) || f.is_zero(y) {
                    acc
                } else {
                    f.add(&acc, &f.mul(x, y))
                }
            })
        })
        .collect()
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        for j in 0..cols {
            a.data.swap(p * cols + j, r * cols + j);
        }
        let inv = f.inv(a.get(r, c)).unwrap();
        for j in c..cols {
            let v = f.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || f.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..cols {
                if f.is_zero(a.get(r, j)) {
                    continue;
                }
                let v = f.sub(a.get(i, j), &f.mul(&factor, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank_gauss<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref(f, m).1.len()
}

/// Basis of the right null space `{v : m v = 0}`.
pub fn kernel_basis<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, m);
    let cols = m.cols;
    let mut is_pivot = vec![None; cols];
    for (i, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(i);
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(r.get(i, free));
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial by reduction to upper Hessenberg form.
pub fn hessenberg_char_poly<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    assert!(m.is_square(), "char_poly of a non-square matrix");
    let n = m.rows;
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| !f.is_zero(h.get(i, j))) else {
            continue;
        };
        if i != j + 1 {
            for c in 0..n {
                h.data.swap(i * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                h.data.swap(r * n + i, r * n + j + 1);
            }
        }
        let inv = f.inv(h.get(j + 1, j)).unwrap();
        for k in j + 2..n {
            if f.is_zero(h.get(k, j)) {
                continue;
            }
            let u = f.mul(h.get(k, j), &inv);
            for c in 0..n {
                let v = f.sub(h.get(k, c), &f.mul(&u, h.get(j + 1, c)));
                h.set(k, c, v);
            }
            for r in 0..n {
                let v = f.add(h.get(r, j + 1), &f.mul(&u, h.get(r, k)));
                h.set(r, j + 1, v);
            }
        }
    }
    // p[m] = det(tI - H[..m, ..m])
    let mut p: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
    for mm in 1..=n {
        let d = mm - 1;
        // (t - h_dd) p[mm-1]
        let prev = &p[mm - 1];
        let mut next = vec![f.zero(); mm + 1];
        for (k, c) in prev.iter().enumerate() {
            next[k + 1] = f.add(&next[k + 1], c);
            next[k] = f.sub(&next[k], &f.mul(h.get(d, d), c));
        }
        let mut prod = f.one();
        for i in 1..mm {
            // subdiagonal product h[d][d-1] ... h[d-i+1][d-i]
            prod = f.mul(&prod, h.get(d - i + 1, d - i));
            if f.is_zero(&prod) {
                break;
            }
            let coef = f.mul(&prod, h.get(d - i, d));
            if f.is_zero(&coef) {
                continue;
            }
            for (k, c) in p[mm - i - 1].iter().enumerate() {
                next[k] = f.sub(&next[k], &f.mul(&coef, c));
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Multiplies each row by the lcm of its denominators.
pub fn clear_row_denominators(m: &Matrix<BigRational>) -> Matrix<BigInt> {
    let mut data = Vec::with_capacity(m.data.len());
    for r in 0..m.rows {
        let row = m.row(r);
        let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        data.extend(row.iter().map(|q| q.numer() * (&l / q.denom())));
    }
    Matrix { rows: m.rows, cols: m.cols, data }
}

/// Scales the whole matrix by the lcm `L` of all denominators.
pub fn clear_denominators(m: &Matrix<BigRational>) -> (Matrix<BigInt>, BigInt) {
    let l = m.data.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    (m.map(|q| q.numer() * (&l / q.denom())), l)
}

/// Rank by fraction-free elimination.
pub fn bareiss_rank(m: &Matrix<BigInt>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        for j in 0..cols {
            a.data.swap(p * cols + j, r * cols + j);
        }
        let piv = a.get(r, c).clone();
        for i in r + 1..rows {
            let lead = a.get(i, c).clone();
            for j in c + 1..cols {
                let v = (&piv * a.get(i, j) - &lead * a.get(r, j)) / &prev;
                a.set(i, j, v);
            }
            a.set(i, c, BigInt::zero());
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Division-free characteristic polynomial of an integer matrix, lowest degree first.
pub fn berkowitz(m: &Matrix<BigInt>) -> Vec<BigInt> {
    assert!(m.is_square());
    let n = m.rows;
    if n == 0 {
        return vec![BigInt::one()];
    }
    // v holds coefficients from the highest degree down
    let mut v = vec![BigInt::one(), -m.get(0, 0).clone()];
    for r in 1..n {
        // column C = m[0..r][r], row R = m[r][0..r], a = m[r][r]
        let mut q = Vec::with_capacity(r + 1);
        q.push(BigInt::one());
        q.push(-m.get(r, r).clone());
        let mut w: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let dot: BigInt = (0..r).map(|j| m.get(r, j) * &w[j]).sum();
            q.push(-dot);
            if q.len() == r + 2 {
                break;
            }
            w = (0..r)
                .map(|i| (0..r).map(|j| m.get(i, j) * &w[j]).sum())
                .collect();
        }
        // Toeplitz product: new[k] = sum_{j<=k} q[k-j] v[j]
        let mut next = vec![BigInt::zero(); r + 2];
        for (k, slot) in next.iter_mut().enumerate() {
            for j in 0..v.len().min(k + 1) {
                if k - j < q.len() {
                    *slot += &q[k - j] * &v[j];
                }
            }
        }
        v = next;
    }
    v.reverse();
    v
}
