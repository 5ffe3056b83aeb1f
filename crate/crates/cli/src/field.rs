use std::str::FromStr;

use adjprof_core::algebra::AlgebraElement;
use adjprof_core::linalg::{PrimeField, Rationals, GAUSSIAN_PRIME};

/// Rational arithmetic is used automatically up to this dimension.
const AUTO_RATIONAL_MAX: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Auto,
    Rational,
    Prime(u64),
    /// Rational result, cross-checked modulo the default prime.
    Verify,
}

impl FromStr for FieldChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(FieldChoice::Auto),
            "rational" | "q" | "Q" => Ok(FieldChoice::Rational),
            "verify" => Ok(FieldChoice::Verify),
            _ => {
                let p = s.strip_prefix("mod:").ok_or_else(|| format!("unknown field {s:?}"))?;
                let p: u64 = p.parse().map_err(|_| format!("bad prime {p:?}"))?;
                PrimeField::new(p).map_err(|e| e.to_string())?;
                Ok(FieldChoice::Prime(p))
            }
        }
    }
}

pub enum Concrete {
    Rational(Rationals),
    Prime(PrimeField),
}

impl FieldChoice {
    /// The field for one run; `None` for verify, which the caller runs twice.
    pub fn resolve(&self, dim: usize, tensors: &[&AlgebraElement]) -> Option<Concrete> {
        let real = tensors.iter().all(|t| t.is_real());
        match self {
            FieldChoice::Rational => Some(Concrete::Rational(Rationals)),
            FieldChoice::Prime(p) => Some(Concrete::Prime(PrimeField::new(*p).expect("checked when parsed"))),
            FieldChoice::Auto if real && dim <= AUTO_RATIONAL_MAX => Some(Concrete::Rational(Rationals)),
            FieldChoice::Auto => Some(Concrete::Prime(PrimeField::new(GAUSSIAN_PRIME).expect("prime"))),
            FieldChoice::Verify => None,
        }
    }
}

/// Runs `$body` with `$f` bound to the concrete field.
macro_rules! with_field {
    ($c:expr, $f:ident => $body:expr) => {
        match $c {
            $crate::field::Concrete::Rational(ref r) => {
                let $f = r;
                $body
            }
            $crate::field::Concrete::Prime(ref p) => {
                let $f = p;
                $body
            }
        }
    };
}
pub(crate) use with_field;
