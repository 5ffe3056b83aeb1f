//! Tensor files: one header line fixing the algebra and notation, then one
//! tensor per line.
//!
//! ```text
//! # algebra n=9 grading=3 notation=wedge
//! p1 := e012 + e345 + e678
//! # comment
//! e036 + e147 + e258
//! ```
//!
//! Header keys: `n`, `grading` (`full`, `z2`, `z3` or a step), `notation`
//! (`wedge`, `ket`, `vinberg`), `parts` (comma separated, makes the algebra
//! multipartite), `convention` for kets, `base` (0 or 1) and `levels` (`all` or `one`).
//! Unnamed lines are called `t1`, `t2`, ...

use std::path::Path;

use super::fixtures::AlgebraSpec;
use super::parse::{parse_element, parse_ket_with_notes, parse_vinberg, ParseOptions};
use super::{Convention, Notation, QuditLayout};
use crate::algebra::{AlgebraElement, Grading};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct InputFile {
    pub algebra: AlgebraSpec,
    pub notation: Notation,
    pub layout: Option<QuditLayout>,
    pub tensors: Vec<(String, AlgebraElement)>,
    pub notes: Vec<String>,
}

fn header_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos: line, msg: format!("line {line}: {}", msg.into()) }
}

fn parse_num(line: usize, key: &str, v: &str) -> Result<usize> {
    v.parse().map_err(|_| header_err(line, format!("{key} must be a number, got {v:?}")))
}

pub fn parse_input_str(src: &str) -> Result<InputFile> {
    let mut lines = src.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| header_err(1, "empty input"))?;
    let rest = header
        .strip_prefix('#')
        .map(str::trim_start)
        .and_then(|h| h.strip_prefix("algebra"))
        .ok_or_else(|| header_err(hl, "first line must be `# algebra key=value ...`"))?;

    let mut n = None;
    let mut grading = "full".to_string();
    let mut notation = Notation::Wedge;
    let mut parts: Option<Vec<usize>> = None;
    let mut convention = Convention::Contiguous;
    let mut base = 0;
    let mut all_levels = false;
    for kv in rest.split_whitespace() {
        let (k, v) = kv.split_once('=').ok_or_else(|| header_err(hl, format!("expected key=value, got {kv:?}")))?;
        match k {
            "n" => n = Some(parse_num(hl, k, v)?),
            "grading" => grading = v.to_string(),
            "notation" => notation = v.parse()?,
            "parts" => parts = Some(v.split(',').map(|p| parse_num(hl, k, p)).collect::<Result<_>>()?),
            "convention" => convention = v.parse()?,
            "base" => base = parse_num(hl, k, v)?,
            "levels" => {
                all_levels = match v {
                    "all" => true,
                    "one" => false,
                    _ => return Err(header_err(hl, format!("levels must be all or one, got {v:?}"))),
                }
            }
            _ => return Err(header_err(hl, format!("unknown key {k:?}"))),
        }
    }
    if base > 1 {
        return Err(header_err(hl, "base must be 0 or 1"));
    }

    let layout = match &parts {
        Some(p) => Some(QuditLayout::new(p.clone(), convention)?),
        None if notation == Notation::Ket => {
            return Err(header_err(hl, "ket notation needs parts="));
        }
        None => None,
    };
    let algebra = match (&layout, n) {
        (Some(l), n) => {
            if n.is_some_and(|n| n != l.n()) {
                return Err(header_err(hl, format!("n={} but parts sum to {}", n.unwrap(), l.n())));
            }
            if grading != "full" {
                let g = Grading::parse(l.n(), &grading)?;
                AlgebraSpec::Graded { n: g.n(), step: g.step() }
            } else {
                AlgebraSpec::Multipartite { parts: l.parts().to_vec(), all_levels }
            }
        }
        (None, Some(n)) => {
            let g = Grading::parse(n, &grading)?;
            AlgebraSpec::Graded { n: g.n(), step: g.step() }
        }
        (None, None) => return Err(header_err(hl, "missing n=")),
    };
    let n = algebra.n();
    let opts = ParseOptions { base, ..ParseOptions::default() };

    let mut tensors = Vec::new();
    let mut notes = Vec::new();
    for (ln, line) in lines {
        if line.starts_with('#') {
            continue;
        }
        let (name, expr) = match line.split_once(":=") {
            Some((a, b)) => (a.trim().to_string(), b.trim()),
            None => (format!("t{}", tensors.len() + 1), line),
        };
        let located = |e: Error| match e {
            Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("line {ln}: {msg}") },
            e => e,
        };
        let t = match notation {
            Notation::Wedge => parse_element(expr, n, opts).map_err(located)?,
            Notation::Vinberg => parse_vinberg(expr, n).map_err(located)?,
            Notation::Ket => {
                let l = layout.as_ref().expect("checked above");
                let (t, extra) = parse_ket_with_notes(expr, l).map_err(located)?;
                notes.extend(extra.into_iter().map(|s| format!("{name}: {s}")));
                // the algebra is built on contiguous parts
                l.to_contiguous(&t)?
            }
        };
        tensors.push((name, t));
    }
    if tensors.is_empty() {
        return Err(header_err(hl, "no tensors after the header"));
    }
    Ok(InputFile { algebra, notation, layout, tensors, notes })
}

pub fn parse_input_file(path: &Path) -> Result<InputFile> {
    parse_input_str(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor_io::{fixture, parse_wedge};

    #[test]
    fn wedge_file() {
        let f = parse_input_str("# algebra n=9 grading=3\np1 := e012+e345+e678\n\n# skip\ne036 + e147 + e258\n").unwrap();
        assert_eq!(f.algebra, AlgebraSpec::Graded { n: 9, step: 3 });
        assert_eq!(f.tensors.len(), 2);
        assert_eq!(f.tensors[0].0, "p1");
        assert_eq!(f.tensors[1].0, "t2");
        assert_eq!(f.tensors[0].1, fixture("w3c9/p1").unwrap().element);
    }

    #[test]
    fn ket_file() {
        let f = parse_input_str("# algebra grading=z2 notation=ket parts=2,2,2,2,2\npsi := |00000>+|11111>").unwrap();
        assert_eq!(f.algebra, AlgebraSpec::Graded { n: 10, step: 5 });
        let want = parse_wedge("e02468+e13579", 10, ParseOptions::default()).unwrap();
        assert_eq!(f.tensors[0].1, want);
        let f = parse_input_str("# algebra notation=ket parts=2,2,2,2 convention=blocked\n|0000>").unwrap();
        assert_eq!(f.algebra, AlgebraSpec::Multipartite { parts: vec![2; 4], all_levels: false });
        assert_eq!(f.tensors[0].1.degrees(), vec![4]);
    }

    #[test]
    fn vinberg_and_errors() {
        let f = parse_input_str("# algebra n=9 grading=z3 notation=vinberg base=1\n129 138 237 456").unwrap();
        assert_eq!(f.tensors[0].1, fixture("w3c9/79").unwrap().element);
        assert!(parse_input_str("n=9\ne012").is_err());
        assert!(parse_input_str("# algebra grading=3\ne012").is_err());
        assert!(parse_input_str("# algebra n=9 colour=red\ne012").is_err());
        assert!(parse_input_str("# algebra n=9\n").is_err());
        let e = parse_input_str("# algebra n=6 grading=z2\ne012\ne01x").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
    }
}
