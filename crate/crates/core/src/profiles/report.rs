//! Stable JSON shape of a profile run.

use serde::{Deserialize, Serialize};

use super::{Classification, RankProfile, RootProfile};
use crate::algebra::AlgebraLabel;
use crate::linalg::scalar::fmt_rational;
use crate::linalg::Terminal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyReport {
    /// Each factor as coefficient strings, lowest degree first, with its multiplicity.
    pub factors: Vec<(Vec<String>, usize)>,
    pub remainder: Vec<String>,
}

impl CharPolyReport {
    pub fn from_roots(r: &RootProfile) -> Self {
        let coeffs = |p: &crate::linalg::Poly| p.coeffs().iter().map(fmt_rational).collect::<Vec<_>>();
        CharPolyReport {
            factors: r.factors.iter().map(|f| (coeffs(&f.factor), f.multiplicity)).collect(),
            remainder: coeffs(&r.remainder),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub division: Option<usize>,
    pub comparison: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub algebra: AlgebraLabel,
    pub field: String,
    pub tensor: String,
    pub rank_profile: Vec<Vec<usize>>,
    pub terminal: Terminal,
    pub trace_powers: Option<Vec<String>>,
    pub char_poly: Option<CharPolyReport>,
    pub classification: Option<String>,
    pub conical_dimension: Option<usize>,
    pub bounds: Option<BoundsReport>,
}

impl ProfileReport {
    pub fn new(algebra: AlgebraLabel, field: String, tensor: String, profile: &RankProfile) -> Self {
        ProfileReport {
            algebra,
            field,
            tensor,
            rank_profile: profile.rows.clone(),
            terminal: profile.terminal,
            trace_powers: None,
            char_poly: None,
            classification: None,
            conical_dimension: None,
            bounds: None,
        }
    }

    pub fn with_roots(mut self, r: &RootProfile) -> Self {
        self.char_poly = Some(CharPolyReport::from_roots(r));
        self
    }

    pub fn with_classification(mut self, c: &Classification) -> Self {
        self.classification = Some(c.to_string());
        self
    }
}
