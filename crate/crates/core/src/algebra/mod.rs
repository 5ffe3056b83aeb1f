//! The graded algebra `sl(n) + sum_k Lambda^k C^n`, its structure constants and
//! adjoint operators.

pub mod action;
pub mod bracket;
pub mod element;
pub mod structure;

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use action::{action_matrix, act, Transvection};
pub use bracket::{bracket_basis, Q64, NORMALIZATION};
pub use element::{AlgebraElement, BasisKey, LieBasis};
pub use structure::ClassTable;

use crate::error::{Error, Result};
use crate::exterior::{binomial, subsets, MultiIndex};
use crate::linalg::{BlockLayout, BlockMatrix, Coeff, Field, Matrix};

/// Default ceiling on the algebra dimension.
pub const DEFAULT_MAX_DIM: usize = 20_000;

/// Grade set `{0, d, 2d, ..., n - d}` of an extension of `sl(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    n: usize,
    d: usize,
}

impl Grading {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n < 2 || n > 24 {
            return Err(Error::InvalidGrading(format!("n = {n} outside 2..=24")));
        }
        if d == 0 || n % d != 0 {
            return Err(Error::InvalidGrading(format!("step {d} does not divide n = {n}")));
        }
        if d == n {
            return Err(Error::InvalidGrading(format!("step {d} = n leaves no tensor grades")));
        }
        Ok(Grading { n, d })
    }

    /// Accepts a step (`"3"`), `full`, `Z2` or `Z3`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let d = match s.to_ascii_lowercase().as_str() {
            "full" => 1,
            "z2" if n % 2 == 0 => n / 2,
            "z3" if n % 3 == 0 => n / 3,
            other => other
                .parse()
                .map_err(|_| Error::InvalidGrading(format!("unknown grading {s:?} for n = {n}")))?,
        };
        Grading::new(n, d)
    }

    pub fn z2(n: usize) -> Result<Self> {
        Grading::parse(n, "z2")
    }

    pub fn z3(n: usize) -> Result<Self> {
        Grading::parse(n, "z3")
    }

    pub fn full(n: usize) -> Result<Self> {
        Grading::new(n, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> usize {
        self.d
    }

    /// Nonzero exterior degrees.
    pub fn tensor_degrees(&self) -> Vec<usize> {
        (1..self.n / self.d).map(|m| m * self.d).collect()
    }

    pub fn dim(&self) -> usize {
        self.n * self.n - 1 + self.tensor_degrees().iter().map(|&k| binomial(self.n, k) as usize).sum::<usize>()
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "n={} full", self.n)
        } else {
            write!(f, "n={} d={}", self.n, self.d)
        }
    }
}

/// Which algebra a basis spans.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Full { grading: Grading },
    /// `sum sl(d_i) + sum_m (tensor of Lambda^m C^{d_i})` inside `n = sum d_i`,
    /// parts occupying consecutive index ranges.
    Multipartite { parts: Vec<usize>, levels: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct AlgebraOptions {
    pub max_dim: usize,
    /// Directory of structure-constant cache files (full algebras only).
    pub cache_dir: Option<PathBuf>,
}

impl Default for AlgebraOptions {
    fn default() -> Self {
        AlgebraOptions { max_dim: DEFAULT_MAX_DIM, cache_dir: None }
    }
}

/// Serializable summary used in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraLabel {
    pub n: usize,
    pub grades: Vec<usize>,
    pub dim: usize,
    pub normalization: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parts: Option<Vec<usize>>,
}

pub struct Algebra {
    n: usize,
    kind: AlgebraKind,
    basis: Vec<BasisKey>,
    index: HashMap<BasisKey, usize>,
    layout: Arc<BlockLayout>,
    classes: Mutex<HashMap<(usize, usize), Arc<ClassTable>>>,
    cache_file: Option<PathBuf>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("n", &self.n).field("kind", &self.kind).field("dim", &self.dim()).finish()
    }
}

fn lie_basis_full(n: usize) -> Vec<BasisKey> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(BasisKey::Lie(LieBasis::Offdiag(i, j)));
            }
        }
    }
    out.extend((0..n - 1).map(|i| BasisKey::Lie(LieBasis::Cartan(i))));
    out
}

impl Algebra {
    pub fn full(grading: Grading) -> Result<Self> {
        Algebra::full_with(grading, &AlgebraOptions::default())
    }

    pub fn full_with(grading: Grading, opts: &AlgebraOptions) -> Result<Self> {
        let n = grading.n();
        let dim = grading.dim();
        if dim > opts.max_dim {
            return Err(Error::TooLarge(format!(
                "algebra for {grading} has dimension {dim}, above the limit {}",
                opts.max_dim
            )));
        }
        let mut blocks = vec![(0, lie_basis_full(n))];
        for k in grading.tensor_degrees() {
            blocks.push((k, subsets(n, k).map(BasisKey::Wedge).collect()));
        }
        let cache_file = opts.cache_dir.as_ref().map(|d| d.join(structure::cache_file_name(grading)));
        let alg = Algebra::assemble(n, AlgebraKind::Full { grading }, blocks, cache_file);
        if let Some(path) = &alg.cache_file {
            if path.exists() {
                match structure::load(path, &alg) {
                    Ok(classes) => {
                        log::info!("loaded {} constant classes from {}", classes.len(), path.display());
                        alg.classes.lock().unwrap().extend(classes);
                    }
                    Err(e) => log::warn!("ignoring unreadable cache {}: {e}", path.display()),
                }
            }
        }
        Ok(alg)
    }

    /// Subalgebra for contiguous parts of sizes `parts`; tensor levels `1..min(parts)` when
    /// `all_levels`, else level 1 only. Every bracket of basis pairs is checked to stay inside.
    pub fn multipartite(parts: &[usize], all_levels: bool) -> Result<Self> {
        if parts.len() < 2 || parts.iter().any(|&d| d < 2) {
            return Err(Error::InvalidGrading(format!("need at least two parts of size >= 2, got {parts:?}")));
        }
        let n: usize = parts.iter().sum();
        if n > 24 {
            return Err(Error::TooLarge(format!("parts sum to {n} > 24")));
        }
        let k = parts.len();
        let offsets: Vec<usize> = parts.iter().scan(0, |acc, &d| { let o = *acc; *acc += d; Some(o) }).collect();
        let mut lie = Vec::new();
        for (&o, &d) in offsets.iter().zip(parts) {
            for i in o..o + d {
                for j in o..o + d {
                    if i != j {
                        lie.push(BasisKey::Lie(LieBasis::Offdiag(i, j)));
                    }
                }
            }
        }
        for (&o, &d) in offsets.iter().zip(parts) {
            lie.extend((o..o + d - 1).map(|i| BasisKey::Lie(LieBasis::Cartan(i))));
        }
        let top = *parts.iter().min().unwrap();
        let levels: Vec<usize> = if all_levels { (1..top).collect() } else { vec![1] };
        let mut blocks = vec![(0, lie)];
        for &m in &levels {
            let mut keys: Vec<u64> = vec![0];
            for (&o, &d) in offsets.iter().zip(parts) {
                let local: Vec<u64> = subsets(d, m).map(|s| s.bits() << o).collect();
                keys = keys.iter().flat_map(|&a| local.iter().map(move |&b| a | b)).collect();
            }
            keys.sort_unstable();
            blocks.push((m * k, keys.into_iter().map(|b| BasisKey::Wedge(MultiIndex::from_bits(b))).collect()));
        }
        let alg = Algebra::assemble(n, AlgebraKind::Multipartite { parts: parts.to_vec(), levels }, blocks, None);
        let nb = alg.layout.count();
        for a in 0..nb {
            for b in 0..nb {
                alg.class(a, b)?;
            }
        }
        Ok(alg)
    }

    fn assemble(
        n: usize,
        kind: AlgebraKind,
        blocks: Vec<(usize, Vec<BasisKey>)>,
        cache_file: Option<PathBuf>,
    ) -> Self {
        let labels = blocks.iter().map(|(l, _)| *l).collect();
        let sizes = blocks.iter().map(|(_, v)| v.len()).collect();
        let basis: Vec<BasisKey> = blocks.into_iter().flat_map(|(_, v)| v).collect();
        let index = basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        Algebra {
            n,
            kind,
            basis,
            index,
            layout: Arc::new(BlockLayout::new(labels, sizes)),
            classes: Mutex::new(HashMap::new()),
            cache_file,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn grading(&self) -> Option<Grading> {
        match &self.kind {
            AlgebraKind::Full { grading } => Some(*grading),
            AlgebraKind::Multipartite { .. } => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisKey] {
        &self.basis
    }

    pub fn layout(&self) -> &Arc<BlockLayout> {
        &self.layout
    }

    /// Block labels: the exterior degree of each block.
    pub fn grades(&self) -> &[usize] {
        self.layout.labels()
    }

    pub fn index_of(&self, key: &BasisKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Block index holding exterior degree `deg`.
    pub fn block_of_degree(&self, deg: usize) -> Option<usize> {
        self.layout.labels().iter().position(|&l| l == deg)
    }

    pub fn label(&self) -> AlgebraLabel {
        AlgebraLabel {
            n: self.n,
            grades: self.grades().to_vec(),
            dim: self.dim(),
            normalization: NORMALIZATION.to_string(),
            parts: match &self.kind {
                AlgebraKind::Multipartite { parts, .. } => Some(parts.clone()),
                AlgebraKind::Full { .. } => None,
            },
        }
    }

    pub fn description(&self) -> String {
        match &self.kind {
            AlgebraKind::Full { grading } => grading.to_string(),
            AlgebraKind::Multipartite { parts, levels } => {
                let p: Vec<String> = parts.iter().map(|d| d.to_string()).collect();
                let l: Vec<String> = levels.iter().map(|d| d.to_string()).collect();
                format!("parts={} levels={}", p.join(","), l.join(","))
            }
        }
    }

    pub fn cache_file(&self) -> Option<&PathBuf> {
        self.cache_file.as_ref()
    }

    /// Checks every key of `t` belongs to this algebra.
    pub fn check_element(&self, t: &AlgebraElement) -> Result<()> {
        if t.n() != self.n {
            return Err(Error::AlgebraMismatch(format!("element over n = {}, algebra over n = {}", t.n(), self.n)));
        }
        for (k, _) in t.terms() {
            if !self.index.contains_key(k) {
                return Err(Error::AlgebraMismatch(format!("{k} is not a basis vector of {}", self.description())));
            }
        }
        Ok(())
    }

    /// Structure constants for (left block, right block), computed on first use.
    pub fn class(&self, left: usize, right: usize) -> Result<Arc<ClassTable>> {
        if let Some(c) = self.classes.lock().unwrap().get(&(left, right)) {
            return Ok(c.clone());
        }
        let table = Arc::new(self.compute_class(left, right)?);
        self.classes.lock().unwrap().insert((left, right), table.clone());
        Ok(table)
    }

    pub fn computed_classes(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.classes.lock().unwrap().keys().copied().collect();
        v.sort_unstable();
        v
    }

    pub(crate) fn class_snapshot(&self) -> Vec<((usize, usize), Arc<ClassTable>)> {
        let mut v: Vec<_> = self.classes.lock().unwrap().iter().map(|(k, t)| (*k, t.clone())).collect();
        v.sort_unstable_by_key(|(k, _)| *k);
        v
    }

    pub(crate) fn compute_class(&self, left: usize, right: usize) -> Result<ClassTable> {
        let (lo, ls) = (self.layout.offset(left), self.layout.size(left));
        let (ro, rs) = (self.layout.offset(right), self.layout.size(right));
        let rows: Vec<Result<Vec<(u32, u32, Q64)>>> = (0..ls)
            .into_par_iter()
            .map(|a| {
                let x = self.basis[lo + a];
                let mut row = Vec::new();
                for b in 0..rs {
                    let y = self.basis[ro + b];
                    for (key, v) in bracket_basis(self.n, x, y) {
                        let k = self.index.get(&key).ok_or_else(|| Error::ClosureViolation {
                            left: x.to_string(),
                            right: y.to_string(),
                            term: key.to_string(),
                        })?;
                        row.push((b as u32, *k as u32, v));
                    }
                }
                Ok(row)
            })
            .collect();
        let mut table = ClassTable::with_capacity(ls);
        for r in rows {
            table.push_row(r?);
        }
        Ok(table)
    }

    /// Writes every computed class to the cache file, if one is configured.
    pub fn persist(&self) -> Result<()> {
        if let Some(path) = &self.cache_file {
            structure::save(path, self)?;
        }
        Ok(())
    }

    /// `[x, y]`.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = AlgebraElement::zero(self.n);
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let c = ca * cb;
                for (k, v) in bracket_basis(self.n, *a, *b) {
                    if !self.index.contains_key(&k) {
                        return Err(Error::ClosureViolation { left: a.to_string(), right: b.to_string(), term: k.to_string() });
                    }
                    out.add_term(k, c.scale(&q64_to_big(v)));
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of `t` over `f`.
    pub fn to_vector<F: Field>(&self, f: &F, t: &AlgebraElement) -> Result<Vec<F::Elem>> {
        self.check_element(t)?;
        let mut v = vec![f.zero(); self.dim()];
        for (k, c) in t.terms() {
            v[self.index[k]] = f.from_coeff(c)?;
        }
        Ok(v)
    }

    /// Element with rational coordinates `v`.
    pub fn from_vector(&self, v: &[num_rational::BigRational]) -> AlgebraElement {
        let mut e = AlgebraElement::zero(self.n);
        for (k, c) in self.basis.iter().zip(v) {
            e.add_term(*k, Coeff::real(c.clone()));
        }
        e
    }

    /// `ad_t = [t, .]` as a block matrix over `f`.
    pub fn adjoint_matrix<F: Field>(&self, f: &F, t: &AlgebraElement) -> Result<BlockMatrix<F::Elem>> {
        self.check_element(t)?;
        let nb = self.layout.count();
        // terms grouped by block
        let mut by_block: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); nb];
        for (k, c) in t.terms() {
            let (b, local) = self.layout.locate(self.index[k]);
            by_block[b].push((local, f.from_coeff(c)?));
        }
        let mut tables = HashMap::new();
        for (b, terms) in by_block.iter().enumerate() {
            if terms.is_empty() {
                continue;
            }
            for c in 0..nb {
                tables.insert((b, c), self.class(b, c)?);
            }
        }
        let columns: Vec<Vec<(usize, Matrix<F::Elem>)>> = (0..nb)
            .into_par_iter()
            .map(|c| {
                let width = self.layout.size(c);
                let mut out: HashMap<usize, Matrix<F::Elem>> = HashMap::new();
                for (b, terms) in by_block.iter().enumerate() {
                    if terms.is_empty() {
                        continue;
                    }
                    let table = &tables[&(b, c)];
                    for (local, coeff) in terms {
                        for &(j, k, q) in table.row(*local) {
                            let (r, row) = self.layout.locate(k as usize);
                            let m = out.entry(r).or_insert_with(|| {
                                Matrix::filled(self.layout.size(r), width, f.zero())
                            });
                            let v = f.mul(coeff, &q64_to_field(f, q));
                            let cur = m.get(row, j as usize).clone();
                            m.set(row, j as usize, f.add(&cur, &v));
                        }
                    }
                }
                let mut v: Vec<_> = out.into_iter().collect();
                v.sort_unstable_by_key(|(r, _)| *r);
                v
            })
            .collect();
        let mut m = BlockMatrix::zero(self.layout.clone());
        for (c, blocks) in columns.into_iter().enumerate() {
            for (r, block) in blocks {
                m.set_block(r, c, Some(block));
            }
        }
        m.prune(f);
        Ok(m)
    }
}

pub(crate) fn q64_to_big(q: Q64) -> num_rational::BigRational {
    num_rational::BigRational::new((*q.numer()).into(), (*q.denom()).into())
}

pub(crate) fn q64_to_field<F: Field>(f: &F, q: Q64) -> F::Elem {
    let num = f.from_i64(*q.numer());
    if *q.denom() == 1 {
        num
    } else {
        f.mul(&num, &f.inv(&f.from_i64(*q.denom())).expect("denominator invertible"))
    }
}
