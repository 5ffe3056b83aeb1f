//! Rank lower bounds and orbit separation from rank profiles.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Classification, RankProfile, RootProfile};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionBound {
    /// Total rank of `ad` of a rank-one element.
    pub unit_total: usize,
    pub total: usize,
    /// `ceil(block / unit block)` for each block where the unit block is nonzero.
    pub per_block: Vec<Option<usize>>,
    /// Lower bound on the rank: the largest of the ratios.
    pub bound: usize,
}

/// Subadditivity: `rank(ad_T) <= r * rank(ad_unit)` when T is a sum of r rank-one terms,
/// and likewise block by block.
pub fn division_bound(t: &RankProfile, unit: &RankProfile) -> Result<DivisionBound> {
    let (Some(tr), Some(ur)) = (t.rows.first(), unit.rows.first()) else {
        return Err(Error::MissingCalibration("empty rank profile".into()));
    };
    if tr.len() != ur.len() {
        return Err(Error::MissingCalibration("calibration profile is from another algebra".into()));
    }
    let unit_total = *ur.last().unwrap();
    if unit_total == 0 {
        return Err(Error::MissingCalibration("calibration element has zero adjoint".into()));
    }
    let total = *tr.last().unwrap();
    let per_block: Vec<Option<usize>> =
        tr[..tr.len() - 1].iter().zip(&ur[..ur.len() - 1]).map(|(&a, &b)| (b > 0).then(|| a.div_ceil(b))).collect();
    let bound = per_block.iter().flatten().copied().chain([total.div_ceil(unit_total)]).max().unwrap_or(0);
    Ok(DivisionBound { unit_total, total, per_block, bound })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonBound {
    /// Border rank is at least this (1 when nothing is exceeded).
    pub border_rank_at_least: usize,
    /// Where the largest exceeded generic profile was beaten.
    pub witness: Option<String>,
}

/// Semicontinuity: ranks of every block of every power can only drop on the closure of
/// the rank-r locus, so exceeding a generic rank-r value anywhere puts T outside it.
/// `generic` lists (r, profile of a generic rank-r element).
pub fn comparison_bound(t: &RankProfile, generic: &[(usize, RankProfile)]) -> ComparisonBound {
    let mut best = ComparisonBound { border_rank_at_least: 1, witness: None };
    for (r, g) in generic {
        if r + 1 <= best.border_rank_at_least {
            continue;
        }
        'rows: for (k, (a, b)) in t.rows.iter().zip(&g.rows).enumerate() {
            let names = t.column_names();
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                if x > y {
                    best = ComparisonBound {
                        border_rank_at_least: r + 1,
                        witness: Some(format!("power {} {}: {x} > {y} (generic rank {r})", k + 1, names[i])),
                    };
                    break 'rows;
                }
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Verdict {
    Separated { invariant: String, detail: String, power: Option<usize> },
    /// Equal on every invariant compared; this never asserts equivalence.
    IndistinguishableByTheseInvariants,
}

impl Verdict {
    pub fn is_separated(&self) -> bool {
        matches!(self, Verdict::Separated { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Separated { invariant, detail, .. } => write!(f, "separated by {invariant}: {detail}"),
            Verdict::IndistinguishableByTheseInvariants => write!(f, "indistinguishable by these invariants"),
        }
    }
}

/// Invariants gathered for one tensor; root profile and classification are optional.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub rank_profile: RankProfile,
    pub roots: Option<RootProfile>,
    pub classification: Option<Classification>,
}

/// Rank profiles first (earliest power, then earliest block), then root
/// multiplicity patterns, then classification.
pub fn compare(a: &Invariants, b: &Invariants) -> Result<Verdict> {
    let (p, q) = (&a.rank_profile, &b.rank_profile);
    if p.grades != q.grades {
        return Err(Error::AlgebraMismatch("profiles come from different algebras".into()));
    }
    let names = p.column_names();
    let rows = p.rows.len().max(q.rows.len());
    for k in 0..rows {
        let (x, y) = (row_at(p, k), row_at(q, k));
        if let (Some(x), Some(y)) = (&x, &y) {
            if let Some(i) = (0..x.len()).find(|&i| x[i] != y[i]) {
                return Ok(Verdict::Separated {
                    invariant: "rank profile".into(),
                    detail: format!("power {} {}: {} vs {}", k + 1, names[i], x[i], y[i]),
                    power: Some(k + 1),
                });
            }
        }
    }
    if let (Some(r), Some(s)) = (&a.roots, &b.roots) {
        let (x, y) = (r.root_counts(), s.root_counts());
        if x != y {
            return Ok(Verdict::Separated {
                invariant: "root profile".into(),
                detail: format!("{} vs {}", r.notation(), s.notation()),
                power: None,
            });
        }
    }
    if let (Some(c), Some(d)) = (&a.classification, &b.classification) {
        if c.kind != d.kind && c.definitive && d.definitive {
            return Ok(Verdict::Separated {
                invariant: "classification".into(),
                detail: format!("{} vs {}", c.kind, d.kind),
                power: None,
            });
        }
    }
    Ok(Verdict::IndistinguishableByTheseInvariants)
}

/// Row `k` (0-based), extended past the end: zero rows after reaching zero, the
/// last row after stabilization is unknown block-wise so only its total is kept.
fn row_at(p: &RankProfile, k: usize) -> Option<Vec<usize>> {
    if let Some(r) = p.rows.get(k) {
        return Some(r.clone());
    }
    match p.terminal {
        crate::linalg::Terminal::ReachedZero => Some(vec![0; p.rows[0].len()]),
        _ => None,
    }
}
