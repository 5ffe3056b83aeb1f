//! Square matrices partitioned into grade blocks, stored block by block.
//!
//! Zero blocks are not stored. Powers of an adjoint operator of a pure-grade
//! element have at most one nonzero block per block row and column, which the
//! rank and power routines exploit.

use std::sync::Arc;

use rayon::prelude::*;

use super::field::Field;
use super::matrix::{self, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    labels: Vec<usize>,
    sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl BlockLayout {
    /// `labels[i]` names block `i` (the grade); `sizes[i]` is its dimension.
    pub fn new(labels: Vec<usize>, sizes: Vec<usize>) -> Self {
        assert_eq!(labels.len(), sizes.len());
        let mut offsets = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 0;
        for &s in &sizes {
            offsets.push(acc);
            acc += s;
        }
        offsets.push(acc);
        BlockLayout { labels, sizes, offsets }
    }

    pub fn single(dim: usize) -> Self {
        BlockLayout::new(vec![0], vec![dim])
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn offset(&self, b: usize) -> usize {
        self.offsets[b]
    }

    pub fn size(&self, b: usize) -> usize {
        self.sizes[b]
    }

    /// Block containing global index `i` and the local index inside it.
    pub fn locate(&self, i: usize) -> (usize, usize) {
        let b = self.offsets.partition_point(|&o| o <= i) - 1;
        (b, i - self.offsets[b])
    }
}

#[derive(Clone, Debug)]
pub struct BlockMatrix<T> {
    layout: Arc<BlockLayout>,
    blocks: Vec<Option<Matrix<T>>>,
}

impl<T: Clone + Send + Sync> BlockMatrix<T> {
    pub fn zero(layout: Arc<BlockLayout>) -> Self {
        let nb = layout.count();
        BlockMatrix { layout, blocks: vec![None; nb * nb] }
    }

    pub fn layout(&self) -> &Arc<BlockLayout> {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.layout.dim()
    }

    pub fn block(&self, r: usize, c: usize) -> Option<&Matrix<T>> {
        self.blocks[r * self.layout.count() + c].as_ref()
    }

    pub fn set_block(&mut self, r: usize, c: usize, m: Option<Matrix<T>>) {
        if let Some(m) = &m {
            assert_eq!((m.rows(), m.cols()), (self.layout.size(r), self.layout.size(c)));
        }
        let nb = self.layout.count();
        self.blocks[r * nb + c] = m;
    }

    /// Block coordinates of nonzero blocks.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let nb = self.layout.count();
        (0..nb * nb).filter(|i| self.blocks[*i].is_some()).map(|i| (i / nb, i % nb)).collect()
    }

    /// True when every block row and block column holds at most one stored block.
    pub fn is_block_monomial(&self) -> bool {
        let nb = self.layout.count();
        let mut row_used = vec![false; nb];
        let mut col_used = vec![false; nb];
        for (r, c) in self.support() {
            if row_used[r] || col_used[c] {
                return false;
            }
            row_used[r] = true;
            col_used[c] = true;
        }
        true
    }
}

impl<T: Clone + Send + Sync> BlockMatrix<T> {
    pub fn from_dense<F: Field<Elem = T>>(f: &F, layout: Arc<BlockLayout>, m: &Matrix<T>) -> Self {
        assert_eq!(m.rows(), layout.dim());
        assert_eq!(m.cols(), layout.dim());
        let nb = layout.count();
        let mut out = BlockMatrix::zero(layout.clone());
        for r in 0..nb {
            for c in 0..nb {
                let b = m.submatrix(layout.offset(r), layout.size(r), layout.offset(c), layout.size(c));
                if !matrix::is_zero_matrix(f, &b) {
                    out.blocks[r * nb + c] = Some(b);
                }
            }
        }
        out
    }

    pub fn to_dense<F: Field<Elem = T>>(&self, f: &F) -> Matrix<T> {
        let d = self.dim();
        let mut m = matrix::zeros(f, d, d);
        for (r, c) in self.support() {
            let b = self.block(r, c).unwrap();
            let (r0, c0) = (self.layout.offset(r), self.layout.offset(c));
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
        }
        m
    }

    /// Drops stored blocks that are identically zero.
    pub fn prune<F: Field<Elem = T>>(&mut self, f: &F) {
        for b in self.blocks.iter_mut() {
            if b.as_ref().is_some_and(|m| matrix::is_zero_matrix(f, m)) {
                *b = None;
            }
        }
    }

    /// Ranks of all blocks in row-major (row grade, column grade) order.
    pub fn block_ranks<F: Field<Elem = T>>(&self, f: &F) -> Vec<usize> {
        self.blocks
            .par_iter()
            .map(|b| b.as_ref().map_or(0, |m| f.rank(m)))
            .collect()
    }

    /// Total rank; block ranks are passed in when already known.
    pub fn rank_with<F: Field<Elem = T>>(&self, f: &F, block_ranks: &[usize]) -> usize {
        if self.is_block_monomial() {
            block_ranks.iter().sum()
        } else {
            f.rank(&self.to_dense(f))
        }
    }

    pub fn rank<F: Field<Elem = T>>(&self, f: &F) -> usize {
        if self.is_block_monomial() {
            self.block_ranks(f).iter().sum()
        } else {
            f.rank(&self.to_dense(f))
        }
    }

    pub fn trace<F: Field<Elem = T>>(&self, f: &F) -> T {
        let mut t = f.zero();
        for b in 0..self.layout.count() {
            if let Some(m) = self.block(b, b) {
                for i in 0..m.rows() {
                    t = f.add(&t, m.get(i, i));
                }
            }
        }
        t
    }

    pub fn matmul<F: Field<Elem = T>>(f: &F, a: &Self, b: &Self) -> Self {
        assert_eq!(a.layout, b.layout, "block layouts differ");
        let nb = a.layout.count();
        let blocks = (0..nb * nb)
            .into_par_iter()
            .map(|idx| {
                let (r, c) = (idx / nb, idx % nb);
                let mut acc: Option<Matrix<T>> = None;
                for k in 0..nb {
                    if let (Some(x), Some(y)) = (a.block(r, k), b.block(k, c)) {
                        let p = matrix::mat_mul(f, x, y);
                        acc = Some(match acc {
                            None => p,
                            Some(s) => matrix::mat_add(f, &s, &p),
                        });
                    }
                }
                acc.filter(|m| !matrix::is_zero_matrix(f, m))
            })
            .collect();
        BlockMatrix { layout: a.layout.clone(), blocks }
    }
}

/// Block matrix with sparse rows, used as the fixed left factor of a power sweep.
#[derive(Clone, Debug)]
pub struct SparseBlockMatrix<T> {
    layout: Arc<BlockLayout>,
    /// per block: per local row, (local column, value)
    blocks: Vec<Option<Vec<Vec<(u32, T)>>>>,
}

impl<T: Clone + Send + Sync> SparseBlockMatrix<T> {
    pub fn from_block<F: Field<Elem = T>>(f: &F, m: &BlockMatrix<T>) -> Self {
        let blocks = m
            .blocks
            .iter()
            .map(|b| {
                b.as_ref().map(|mat| {
                    (0..mat.rows())
                        .map(|r| {
                            mat.row(r)
                                .iter()
                                .enumerate()
                                .filter(|(_, v)| !f.is_zero(v))
                                .map(|(c, v)| (c as u32, v.clone()))
                                .collect()
                        })
                        .collect()
                })
            })
            .collect();
        SparseBlockMatrix { layout: m.layout.clone(), blocks }
    }

    pub fn nnz(&self) -> usize {
        self.blocks.iter().flatten().map(|rows| rows.iter().map(Vec::len).sum::<usize>()).sum()
    }

    /// `self * p`.
    pub fn mul_dense<F: Field<Elem = T>>(&self, f: &F, p: &BlockMatrix<T>) -> BlockMatrix<T> {
        assert_eq!(*self.layout, *p.layout, "block layouts differ");
        let nb = self.layout.count();
        let blocks = (0..nb * nb)
            .into_par_iter()
            .map(|idx| {
                let (r, c) = (idx / nb, idx % nb);
                let width = self.layout.size(c);
                let mut out: Option<Vec<T>> = None;
                for k in 0..nb {
                    let (Some(a), Some(b)) = (&self.blocks[r * nb + k], p.block(k, c)) else {
                        continue;
                    };
                    let buf = out.get_or_insert_with(|| vec![f.zero(); self.layout.size(r) * width]);
                    if width == 0 {
                        continue;
                    }
                    buf.par_chunks_mut(width).zip(a.par_iter()).for_each(|(orow, arow)| {
                        for (col, v) in arow {
                            let brow = b.row(*col as usize);
                            for (o, x) in orow.iter_mut().zip(brow) {
                                *o = f.add(o, &f.mul(v, x));
                            }
                        }
                    });
                }
                out.map(|d| Matrix::from_vec(self.layout.size(r), width, d))
                    .filter(|m| !matrix::is_zero_matrix(f, m))
            })
            .collect();
        BlockMatrix { layout: self.layout.clone(), blocks }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Terminal {
    ReachedZero,
    Stabilized,
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRow {
    /// Block ranks in row-major (row grade, column grade) order.
    pub blocks: Vec<usize>,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSweep {
    pub rows: Vec<PowerRow>,
    pub terminal: Terminal,
}

/// Ranks of `m, m^2, ...` until the total rank repeats, reaches zero, or `limit`
/// powers have been taken; `extra` further powers are appended after stabilization.
pub fn pow_ranks<F: Field>(f: &F, m: &BlockMatrix<F::Elem>, limit: usize, extra: usize) -> PowerSweep {
    let base = SparseBlockMatrix::from_block(f, m);
    let mut power = m.clone();
    let mut rows: Vec<PowerRow> = Vec::new();
    let mut terminal = Terminal::Truncated;
    let mut remaining_extra = extra;
    let mut k = 1;
    while k <= limit {
        let t0 = std::time::Instant::now();
        let blocks = power.block_ranks(f);
        let total = power.rank_with(f, &blocks);
        log::info!("power {k}: total rank {total} ({:.2?})", t0.elapsed());
        let repeat = rows.last().is_some_and(|r| r.total == total);
        rows.push(PowerRow { blocks, total });
        if terminal == Terminal::Truncated {
            if total == 0 {
                terminal = Terminal::ReachedZero;
                break;
            }
            if repeat {
                terminal = Terminal::Stabilized;
            }
        }
        if terminal == Terminal::Stabilized {
            if remaining_extra == 0 {
                break;
            }
            remaining_extra -= 1;
        }
        k += 1;
        if k <= limit {
            power = base.mul_dense(f, &power);
        }
    }
    PowerSweep { rows, terminal }
}

/// `tr(m^k)` for `k = 1..=k_max`.
pub fn trace_powers<F: Field>(f: &F, m: &BlockMatrix<F::Elem>, k_max: usize) -> Vec<F::Elem> {
    let base = SparseBlockMatrix::from_block(f, m);
    let mut power = m.clone();
    let mut out = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        out.push(power.trace(f));
        if k < k_max {
            power = base.mul_dense(f, &power);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals, DEFAULT_PRIME};
    use crate::linalg::scalar::rat_int;

    fn dense(rows: Vec<Vec<i64>>) -> Matrix<u64> {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        Matrix::from_rows(rows).map(|&v| f.from_i64(v))
    }

    fn totals(s: &PowerSweep) -> Vec<usize> {
        s.rows.iter().map(|r| r.total).collect()
    }

    #[test]
    fn pow_rank_examples() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let j3 = dense(vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let m = BlockMatrix::from_dense(&f, Arc::new(BlockLayout::single(3)), &j3);
        let s = pow_ranks(&f, &m, 10, 0);
        assert_eq!(totals(&s), vec![2, 1, 0]);
        assert_eq!(s.terminal, Terminal::ReachedZero);

        let id = matrix::identity(&f, 4);
        let m = BlockMatrix::from_dense(&f, Arc::new(BlockLayout::new(vec![0, 1], vec![2, 2])), &id);
        let s = pow_ranks(&f, &m, 10, 0);
        assert_eq!(totals(&s), vec![4, 4]);
        assert_eq!(s.terminal, Terminal::Stabilized);
        assert_eq!(s.rows[0].blocks, vec![2, 0, 0, 2]);

        // diag(1, 0) + J2(0)
        let d = dense(vec![vec![1, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 0]]);
        let m = BlockMatrix::from_dense(&f, Arc::new(BlockLayout::single(4)), &d);
        let s = pow_ranks(&f, &m, 10, 0);
        assert_eq!(totals(&s), vec![2, 1, 1]);

        let s = pow_ranks(&f, &m, 1, 0);
        assert_eq!(s.terminal, Terminal::Truncated);
        let s = pow_ranks(&f, &m, 10, 2);
        assert_eq!(totals(&s), vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn block_product_matches_dense() {
        use rand::{Rng, SeedableRng};
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let layout = Arc::new(BlockLayout::new(vec![0, 1, 2], vec![2, 3, 1]));
        for _ in 0..20 {
            let mut gen = || {
                let rows = (0..6).map(|_| (0..6).map(|_| if rng.gen_bool(0.5) { rng.gen_range(-3..=3) } else { 0 }).collect()).collect();
                dense(rows)
            };
            let (a, b) = (gen(), gen());
            let ba = BlockMatrix::from_dense(&f, layout.clone(), &a);
            let bb = BlockMatrix::from_dense(&f, layout.clone(), &b);
            let prod = matrix::mat_mul(&f, &a, &b);
            assert_eq!(BlockMatrix::matmul(&f, &ba, &bb).to_dense(&f), prod);
            let sa = SparseBlockMatrix::from_block(&f, &ba);
            assert_eq!(sa.mul_dense(&f, &bb).to_dense(&f), prod);
            assert_eq!(ba.rank(&f), f.rank(&a));
        }
    }

    #[test]
    fn traces() {
        let m = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]).map(|&v| rat_int(v));
        let bm = BlockMatrix::from_dense(&Rationals, Arc::new(BlockLayout::single(2)), &m);
        let t = trace_powers(&Rationals, &bm, 3);
        assert_eq!(t, vec![rat_int(5), rat_int(29), rat_int(155)]);
    }
}
