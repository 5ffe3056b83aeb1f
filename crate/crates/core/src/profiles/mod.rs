//! Orbit invariants of a tensor read off its adjoint operator.

pub mod bounds;
pub mod calibrate;
pub mod report;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use bounds::{comparison_bound, compare, division_bound, ComparisonBound, DivisionBound, Verdict};
pub use calibrate::Calibration;
pub use report::ProfileReport;

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::linalg::charpoly::{rational_char_poly, CharPolyOptions};
use crate::linalg::matrix::{self, Matrix};
use crate::linalg::poly::{classify_factor, eval_poly_at_matrix};
use crate::linalg::{block, factor_small, BlockMatrix, Field, Poly, PowerRow, RootClass, Terminal};

/// Block ranks of `ad_t, ad_t^2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    /// Grade label of each block row and column.
    pub grades: Vec<usize>,
    /// Per power: block ranks in row-major (row grade, column grade) order, then the total.
    pub rows: Vec<Vec<usize>>,
    pub terminal: Terminal,
}

impl RankProfile {
    fn from_rows(grades: Vec<usize>, rows: Vec<PowerRow>, terminal: Terminal) -> Self {
        let rows = rows
            .into_iter()
            .map(|r| {
                let mut v = r.blocks;
                v.push(r.total);
                v
            })
            .collect();
        RankProfile { grades, rows, terminal }
    }

    pub fn totals(&self) -> Vec<usize> {
        self.rows.iter().map(|r| *r.last().unwrap()).collect()
    }

    pub fn blocks(&self, power: usize) -> &[usize] {
        let r = &self.rows[power - 1];
        &r[..r.len() - 1]
    }

    /// Rank of block (row grade, column grade) of the `power`-th power.
    pub fn block(&self, power: usize, row_grade: usize, col_grade: usize) -> Option<usize> {
        let a = self.grades.iter().position(|&g| g == row_grade)?;
        let b = self.grades.iter().position(|&g| g == col_grade)?;
        self.rows.get(power - 1).map(|r| r[a * self.grades.len() + b])
    }

    /// Column names in row order: `B{row}_{col}` then `total`.
    pub fn column_names(&self) -> Vec<String> {
        let mut v = Vec::new();
        for a in &self.grades {
            for b in &self.grades {
                v.push(format!("B{a}_{b}"));
            }
        }
        v.push("total".into());
        v
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("power,{}\n", self.column_names().join(","));
        for (k, r) in self.rows.iter().enumerate() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("{},{}\n", k + 1, cells.join(",")));
        }
        s
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.column_names();
        let width = names.iter().map(String::len).max().unwrap_or(5).max(5);
        write!(f, "{:>5}", "k")?;
        for c in &names {
            write!(f, " {c:>width$}")?;
        }
        writeln!(f)?;
        for (k, r) in self.rows.iter().enumerate() {
            write!(f, "{:>5}", k + 1)?;
            for v in r {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        write!(f, "({})", terminal_name(self.terminal))
    }
}

pub fn terminal_name(t: Terminal) -> &'static str {
    match t {
        Terminal::ReachedZero => "reached zero",
        Terminal::Stabilized => "stabilized",
        Terminal::Truncated => "truncated",
    }
}

/// Ranks of powers of `ad_t`; `power_limit` defaults to `2 D`.
pub fn rank_profile<F: Field>(f: &F, alg: &Algebra, t: &AlgebraElement, power_limit: Option<usize>) -> Result<RankProfile> {
    rank_profile_extra(f, alg, t, power_limit, 0)
}

/// As [`rank_profile`], continuing `extra` powers past stabilization.
pub fn rank_profile_extra<F: Field>(
    f: &F,
    alg: &Algebra,
    t: &AlgebraElement,
    power_limit: Option<usize>,
    extra: usize,
) -> Result<RankProfile> {
    let t0 = std::time::Instant::now();
    let ad = alg.adjoint_matrix(f, t)?;
    log::info!("adjoint matrix of dimension {} built in {:.2?}", alg.dim(), t0.elapsed());
    Ok(profile_of_matrix(f, &ad, power_limit.unwrap_or(2 * alg.dim()), extra))
}

pub fn profile_of_matrix<F: Field>(f: &F, ad: &BlockMatrix<F::Elem>, limit: usize, extra: usize) -> RankProfile {
    let sweep = block::pow_ranks(f, ad, limit.max(1), extra);
    RankProfile::from_rows(ad.layout().labels().to_vec(), sweep.rows, sweep.terminal)
}

/// `tr(ad_t^k)` for `k = 1..=k_max`.
pub fn trace_powers<F: Field>(f: &F, alg: &Algebra, t: &AlgebraElement, k_max: usize) -> Result<Vec<F::Elem>> {
    assert!(k_max >= 1, "k_max must be positive");
    let ad = alg.adjoint_matrix(f, t)?;
    Ok(block::trace_powers(f, &ad, k_max))
}

pub fn rational_adjoint(alg: &Algebra, t: &AlgebraElement) -> Result<Matrix<BigRational>> {
    let f = crate::linalg::Rationals;
    Ok(alg.adjoint_matrix(&f, t)?.to_dense(&f))
}

/// `det(t I - ad_t)` over Q.
pub fn char_poly(alg: &Algebra, t: &AlgebraElement, opts: &CharPolyOptions) -> Result<Poly> {
    let m = rational_adjoint(alg, t)?;
    Ok(Poly::new(rational_char_poly(&m, opts)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootFactor {
    pub factor: Poly,
    pub multiplicity: usize,
    pub class: RootClass,
}

/// Irreducible factors of the characteristic polynomial with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootProfile {
    pub factors: Vec<RootFactor>,
    /// Unsplit part, primitive; the constant 1 when everything factored.
    pub remainder: Poly,
}

impl RootProfile {
    pub fn of(chi: &Poly) -> Self {
        let fac = factor_small(chi);
        let factors = fac
            .factors
            .into_iter()
            .map(|(g, m)| RootFactor { class: classify_factor(&g), factor: g, multiplicity: m })
            .collect();
        RootProfile { factors, remainder: fac.remainder }
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity * f.factor.degree().unwrap_or(0)).sum::<usize>()
            + self.remainder.degree().unwrap_or(0)
    }

    pub fn zero_multiplicity(&self) -> usize {
        self.factors.iter().filter(|f| f.class == RootClass::Zero).map(|f| f.multiplicity).sum()
    }

    /// Roots counted as (kind, multiplicity) -> how many distinct roots; kind is
    /// `0`, `R` (real) or `C` (non-real). Unclassified factors count as `?`.
    pub fn root_counts(&self) -> BTreeMap<(char, usize), usize> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            let deg = f.factor.degree().unwrap_or(0);
            let parts: Vec<(char, usize)> = match f.class {
                RootClass::Zero => vec![('0', 1)],
                RootClass::Real => vec![('R', 1)],
                RootClass::RealPair => vec![('R', 2)],
                RootClass::Complex => vec![('C', deg)],
                RootClass::Mixed => vec![('R', 2), ('C', 2)],
                RootClass::Unclassified => vec![('?', deg)],
            };
            for (kind, count) in parts {
                *out.entry((kind, f.multiplicity)).or_insert(0) += count;
            }
        }
        for (a, m) in self.remainder.squarefree_decomposition() {
            *out.entry(('?', m)).or_insert(0) += a.degree().unwrap_or(0);
        }
        out
    }

    /// Short form such as `(19_0, (9_C)^2, (9_R)^2)`.
    pub fn notation(&self) -> String {
        let counts = self.root_counts();
        let mut items: Vec<((char, usize), usize)> = counts.into_iter().collect();
        // zero first, then by decreasing multiplicity
        items.sort_by(|a, b| (a.0 .0 != '0').cmp(&(b.0 .0 != '0')).then(b.0 .1.cmp(&a.0 .1)).then(a.0 .0.cmp(&b.0 .0)));
        let parts: Vec<String> = items
            .into_iter()
            .map(|((kind, mult), count)| {
                let base = format!("{mult}_{kind}");
                if count == 1 || kind == '0' {
                    base
                } else {
                    format!("({base})^{count}")
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }

    /// Factored form, e.g. `(t)^19 (3t^2 - 4)^9`.
    pub fn factored(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| format!("({})^{}", f.factor, f.multiplicity)).collect();
        if self.remainder.degree().is_some_and(|d| d > 0) {
            parts.push(format!("[{}]", self.remainder));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

pub fn char_and_root_profile(alg: &Algebra, t: &AlgebraElement, opts: &CharPolyOptions) -> Result<(Poly, RootProfile)> {
    let chi = char_poly(alg, t, opts)?;
    let rp = RootProfile::of(&chi);
    Ok((chi, rp))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Nilpotent,
    Semisimple,
    Mixed,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Nilpotent => "nilpotent",
            Kind::Semisimple => "semisimple",
            Kind::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Kind,
    /// False when the verdict rests on arithmetic modulo a prime.
    pub definitive: bool,
    pub rank_totals: Vec<usize>,
    /// Degree of the squarefree part of the characteristic polynomial, when it was needed.
    pub squarefree_degree: Option<usize>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if !self.definitive {
            write!(f, " (probable)")?;
        }
        Ok(())
    }
}

/// Nilpotent when the power ranks reach zero, semisimple when the squarefree part of
/// the characteristic polynomial annihilates `ad_t`, mixed otherwise.
pub fn classify<F: Field>(f: &F, alg: &Algebra, t: &AlgebraElement, opts: &CharPolyOptions) -> Result<Classification> {
    let ad = alg.adjoint_matrix(f, t)?;
    let prof = profile_of_matrix(f, &ad, 2 * alg.dim(), 0);
    let rank_totals = prof.totals();
    if prof.terminal == Terminal::ReachedZero {
        return Ok(Classification { kind: Kind::Nilpotent, definitive: f.is_exact(), rank_totals, squarefree_degree: None });
    }
    let chi = char_poly(alg, t, opts)?;
    let m = chi.squarefree_part();
    let value = eval_poly_at_matrix(f, &m.to_matrix_value(f)?, &ad.to_dense(f));
    let kind = if matrix::is_zero_matrix(f, &value) { Kind::Semisimple } else { Kind::Mixed };
    Ok(Classification { kind, definitive: f.is_exact(), rank_totals, squarefree_degree: m.degree() })
}

fn shifted_dense<F: Field>(f: &F, ad: &BlockMatrix<F::Elem>, lambda: &BigRational) -> Result<Matrix<F::Elem>> {
    let dense = ad.to_dense(f);
    Ok(matrix::shift(f, &dense, &f.from_rational(lambda)?))
}

/// Kernel dimensions of `(A - lambda I)^k` for `k = 1, 2, ...` until they stop growing.
pub fn kernel_dims<F: Field>(f: &F, ad: &BlockMatrix<F::Elem>, lambda: &BigRational) -> Result<Vec<usize>> {
    let d = ad.dim();
    let n = shifted_dense(f, ad, lambda)?;
    let mut power = n.clone();
    let mut dims: Vec<usize> = Vec::new();
    loop {
        let k = d - f.rank(&power);
        if dims.last() == Some(&k) {
            break;
        }
        dims.push(k);
        if k == 0 || k == d {
            break;
        }
        power = matrix::mat_mul(f, &n, &power);
    }
    if dims.last() == Some(&0) {
        dims.clear();
    }
    Ok(dims)
}

/// Jordan block sizes (descending) from kernel dimensions `d_1, d_2, ...`.
pub fn partition_from_kernel_dims(dims: &[usize]) -> Vec<usize> {
    let mut at_least: Vec<usize> = Vec::new();
    let mut prev = 0;
    for &d in dims {
        at_least.push(d - prev);
        prev = d;
    }
    let mut parts = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k + 1).take(c - next));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Inverse of [`partition_from_kernel_dims`].
pub fn kernel_dims_from_partition(parts: &[usize]) -> Vec<usize> {
    let top = parts.iter().copied().max().unwrap_or(0);
    (1..=top).map(|k| parts.iter().map(|&p| p.min(k)).sum()).collect()
}

/// `[3, 1^16]` style.
pub fn partition_notation(parts: &[usize]) -> String {
    let mut items = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        items.push(if j == 1 { parts[i].to_string() } else { format!("{}^{}", parts[i], j) });
        i += j;
    }
    format!("[{}]", items.join(","))
}

pub fn jordan_type_at<F: Field>(f: &F, alg: &Algebra, t: &AlgebraElement, lambda: &BigRational) -> Result<Vec<usize>> {
    let ad = alg.adjoint_matrix(f, t)?;
    Ok(partition_from_kernel_dims(&kernel_dims(f, &ad, lambda)?))
}

/// `v_1, ..., v_length` with `(A - lambda) v_i = v_{i+1}` and `v_length` a nonzero eigenvector.
pub fn jordan_chain<F: Field>(
    f: &F,
    alg: &Algebra,
    t: &AlgebraElement,
    lambda: &BigRational,
    length: usize,
) -> Result<Vec<Vec<F::Elem>>> {
    let no_chain = || Error::NoChain { length, lambda: lambda.to_string() };
    if length == 0 {
        return Err(no_chain());
    }
    let ad = alg.adjoint_matrix(f, t)?;
    let n = shifted_dense(f, &ad, lambda)?;
    let mut power = matrix::identity(f, n.rows());
    for _ in 0..length - 1 {
        power = matrix::mat_mul(f, &n, &power);
    }
    let top = matrix::mat_mul(f, &n, &power);
    for v in matrix::kernel_basis(f, &top) {
        let image = matrix::mat_vec(f, &power, &v);
        if image.iter().all(|x| f.is_zero(x)) {
            continue;
        }
        let mut chain = vec![v];
        for _ in 1..length {
            let next = matrix::mat_vec(f, &n, chain.last().unwrap());
            chain.push(next);
        }
        return Ok(chain);
    }
    Err(no_chain())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenspaceDims {
    /// Number of independent eigenvectors per root of the factor.
    pub geometric: usize,
    pub algebraic: usize,
}

/// Dimensions attached to the roots of an irreducible `factor` of `chi`, without
/// adjoining those roots: `dim ker factor(A) / deg factor`.
pub fn eigenspace_dims<F: Field>(f: &F, ad: &BlockMatrix<F::Elem>, chi: &Poly, factor: &Poly) -> Result<EigenspaceDims> {
    let deg = factor.degree().filter(|&d| d > 0).ok_or(Error::NotAFactor)?;
    let mut rest = chi.clone();
    let mut algebraic = 0;
    while let Some(q) = rest.exact_div(factor) {
        rest = q;
        algebraic += 1;
    }
    if algebraic == 0 {
        return Err(Error::NotAFactor);
    }
    let value = eval_poly_at_matrix(f, &factor.to_matrix_value(f)?, &ad.to_dense(f));
    let kernel = ad.dim() - f.rank(&value);
    Ok(EigenspaceDims { geometric: kernel / deg, algebraic })
}

/// Rank of the block of `ad_t` from grade 0 into the grade of `t`: the dimension of
/// the tangent space `[g, t]`, which is the orbit dimension of a conical orbit.
pub fn conical_dimension<F: Field>(f: &F, alg: &Algebra, t: &AlgebraElement) -> Result<usize> {
    let deg = t.pure_degree().ok_or_else(|| Error::AlgebraMismatch("conical dimension needs a pure-grade element".into()))?;
    let b = alg.block_of_degree(deg).ok_or_else(|| Error::AlgebraMismatch(format!("no grade {deg}")))?;
    let ad = alg.adjoint_matrix(f, t)?;
    Ok(ad.block(b, 0).map(|m| f.rank(m)).unwrap_or(0))
}

/// Discriminant of `chi / t^{n0}`; `n0` must be the exact zero-root order.
pub fn adjoint_discriminant(chi: &Poly, n0: usize) -> Result<BigRational> {
    let actual = chi.zero_order();
    if actual != n0 {
        return Err(Error::ZeroOrder { n0, actual });
    }
    let q = chi.exact_div(&Poly::monomial(BigRational::from_integer(1.into()), n0)).expect("t^n0 divides");
    if q.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    crate::linalg::discriminant(&q)
}

/// Values of `tr(ad^k)` as rationals when exact.
pub fn trace_powers_rational(alg: &Algebra, t: &AlgebraElement, k_max: usize) -> Result<Vec<BigRational>> {
    trace_powers(&crate::linalg::Rationals, alg, t, k_max)
}
