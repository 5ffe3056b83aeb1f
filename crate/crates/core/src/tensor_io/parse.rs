//! Expression parsers for wedge sums, Lie elements, Vinberg index strings and kets.
//!
//! One grammar covers all of them: a sum of products whose factors are
//! coefficients (`3`, `-2/5`, `i`, `3/2i`, parenthesized sums), basis tokens and
//! parenthesized sub-sums. A product of basis tokens concatenates their index
//! lists, so `e1e0` is the list `[1, 0]` and `|0>(|01>+|10>)` yields kets of length 3.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Notation, QuditLayout};
use crate::algebra::{AlgebraElement, BasisKey, LieBasis};
use crate::error::{Error, Result};
use crate::exterior::MultiIndex;
use crate::linalg::scalar::rat_int;
use crate::linalg::Coeff;

/// How `e012` and bare digit strings are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigitRuns {
    /// `e012` is the single index 12.
    Off,
    /// Every digit after `e`, and every bare digit string, is its own index.
    On,
    /// `On` exactly when every admissible index is a single digit.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    /// Index of the first basis vector in the source (0 or 1).
    pub base: usize,
    pub digit_runs: DigitRuns,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { base: 0, digit_runs: DigitRuns::Auto }
    }
}

impl ParseOptions {
    pub fn explicit() -> Self {
        ParseOptions { base: 0, digit_runs: DigitRuns::Off }
    }

    fn runs_for(&self, n: usize) -> bool {
        match self.digit_runs {
            DigitRuns::On => true,
            DigitRuns::Off => false,
            DigitRuns::Auto => n + self.base <= 10,
        }
    }
}

/// A parsed sum of index words with coefficients, before it is placed in an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExpr {
    /// Sorted by word and merged; zero coefficients dropped.
    pub terms: Vec<(Coeff, Vec<usize>)>,
    pub notation: Notation,
    pub base: usize,
    /// Scale factors that were dropped, e.g. `1/sqrt(2)`.
    pub notes: Vec<String>,
}

impl TensorExpr {
    fn new(words: Vec<(Coeff, Word)>, notation: Notation, base: usize, notes: Vec<String>) -> Result<Self> {
        let mut terms: Vec<(Coeff, Vec<usize>)> = Vec::new();
        for (c, w) in words {
            match w {
                Word::Seq(v) if !v.is_empty() => terms.push((c, v)),
                Word::Seq(_) => return Err(parse_err(0, "scalar term without a basis factor")),
                Word::Lie(_) => return Err(parse_err(0, "Lie basis element in a tensor expression")),
            }
        }
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut merged: Vec<(Coeff, Vec<usize>)> = Vec::new();
        for (c, w) in terms {
            match merged.last_mut() {
                Some(last) if last.1 == w => last.0 = &last.0 + &c,
                _ => merged.push((c, w)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Ok(TensorExpr { terms: merged, notation, base, notes })
    }

    /// Wedge reading: each word is a list of (based) vector indices.
    pub fn to_wedge(&self, n: usize) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(n);
        for (c, w) in &self.terms {
            let idx = w
                .iter()
                .map(|&i| i.checked_sub(self.base).ok_or(Error::IndexOutOfRange { index: i, n }))
                .collect::<Result<Vec<_>>>()?;
            if idx.len() >= n {
                return Err(Error::AlgebraMismatch(format!("degree {} term in n = {n}", idx.len())));
            }
            let s = MultiIndex::from_unsorted(&idx, n)?;
            out.add_term(BasisKey::Wedge(s.index), c.scale(&rat_int(s.sign())));
        }
        Ok(out)
    }

    /// Ket reading: each word is the digit string of one basis ket.
    pub fn to_ket(&self, layout: &QuditLayout) -> Result<AlgebraElement> {
        let n = layout.n();
        let mut out = AlgebraElement::zero(n);
        for (c, w) in &self.terms {
            let idx = layout.ket_indices(w)?;
            let s = MultiIndex::from_unsorted(&idx, n)?;
            out.add_term(BasisKey::Wedge(s.index), c.scale(&rat_int(s.sign())));
        }
        Ok(out)
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Word {
    Seq(Vec<usize>),
    Lie(LieBasis),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    /// `p` or `p/q`, optionally times `i`.
    Num { value: BigRational, imag: bool },
    /// A bare digit string, kept for digit-run reading.
    Digits(String),
    Sqrt(u64),
    E(Vec<usize>),
    Ket(Vec<usize>),
    H(usize),
    Lie(usize, usize),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    runs: bool,
}

fn is_space(b: u8) -> bool {
    b.is_ascii_whitespace() || b == b','
}

impl<'a> Lexer<'a> {
    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn number(&self, s: &str, at: usize) -> Result<usize> {
        s.parse().map_err(|_| parse_err(at, format!("index {s} too large")))
    }

    /// Optional `_`, then `{digits}` or digits.
    fn subscript(&mut self) -> Result<(String, bool)> {
        let at = self.pos;
        if self.peek() == Some(b'_') {
            self.pos += 1;
        }
        if self.peek() == Some(b'{') {
            self.pos += 1;
            let d = self.digits().ok_or_else(|| parse_err(self.pos, "expected digits"))?;
            if self.peek() == Some(b',') {
                self.pos += 1;
                let d2 = self.digits().ok_or_else(|| parse_err(self.pos, "expected digits"))?;
                self.expect(b'}')?;
                return Ok((format!("{d},{d2}"), true));
            }
            self.expect(b'}')?;
            return Ok((d, true));
        }
        let d = self.digits().ok_or_else(|| parse_err(at, "expected an index"))?;
        Ok((d, false))
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_err(self.pos, format!("expected `{}`", b as char)))
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok, bool)>> {
        let mut out = Vec::new();
        loop {
            let mut spaced = false;
            while self.peek().is_some_and(is_space) {
                self.pos += 1;
                spaced = true;
            }
            let at = self.pos;
            let Some(b) = self.peek() else { break };
            let tok = match b {
                b'+' => {
                    self.pos += 1;
                    Tok::Plus
                }
                b'-' => {
                    self.pos += 1;
                    Tok::Minus
                }
                b'*' => {
                    self.pos += 1;
                    Tok::Star
                }
                b'/' => {
                    self.pos += 1;
                    Tok::Slash
                }
                b'(' => {
                    self.pos += 1;
                    Tok::LParen
                }
                b')' => {
                    self.pos += 1;
                    Tok::RParen
                }
                b'0'..=b'9' => {
                    let d = self.digits().unwrap();
                    let den = if self.peek() == Some(b'/') && self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit) {
                        self.pos += 1;
                        self.digits()
                    } else {
                        None
                    };
                    let imag = self.peek() == Some(b'i') && !self.src.get(self.pos + 1).is_some_and(u8::is_ascii_alphabetic);
                    if imag {
                        self.pos += 1;
                    }
                    if den.is_none() && !imag {
                        Tok::Digits(d)
                    } else {
                        let num: num_bigint::BigInt = d.parse().unwrap();
                        let den: num_bigint::BigInt = den.map(|s| s.parse().unwrap()).unwrap_or_else(num_bigint::BigInt::one);
                        if den.is_zero() {
                            return Err(parse_err(at, "zero denominator"));
                        }
                        Tok::Num { value: BigRational::new(num, den), imag }
                    }
                }
                b'i' => {
                    self.pos += 1;
                    Tok::Num { value: BigRational::one(), imag: true }
                }
                b's' if self.src[self.pos..].starts_with(b"sqrt") => {
                    self.pos += 4;
                    self.expect(b'(')?;
                    let d = self.digits().ok_or_else(|| parse_err(self.pos, "expected an integer under sqrt"))?;
                    self.expect(b')')?;
                    Tok::Sqrt(d.parse().map_err(|_| parse_err(at, "radicand too large"))?)
                }
                b'e' => {
                    self.pos += 1;
                    let (d, braced) = self.subscript()?;
                    if self.runs && !braced {
                        Tok::E(d.bytes().map(|c| (c - b'0') as usize).collect())
                    } else {
                        Tok::E(vec![self.number(&d, at)?])
                    }
                }
                b'h' => {
                    self.pos += 1;
                    let (d, _) = self.subscript()?;
                    Tok::H(self.number(&d, at)?)
                }
                b'E' => {
                    self.pos += 1;
                    let (d, braced) = self.subscript()?;
                    let (a, b) = if braced && d.contains(',') {
                        let (a, b) = d.split_once(',').unwrap();
                        (a.to_string(), b.to_string())
                    } else {
                        self.expect(b',')?;
                        (d, self.digits().ok_or_else(|| parse_err(self.pos, "expected column index"))?)
                    };
                    Tok::Lie(self.number(&a, at)?, self.number(&b, at)?)
                }
                b'|' => {
                    self.pos += 1;
                    let d = self.digits().ok_or_else(|| parse_err(self.pos, "empty ket"))?;
                    if self.peek() == Some(b'>') {
                        self.pos += 1;
                    } else if self.src[self.pos..].starts_with("⟩".as_bytes()) {
                        self.pos += "⟩".len();
                    } else {
                        return Err(parse_err(self.pos, "unterminated ket"));
                    }
                    Tok::Ket(d.bytes().map(|c| (c - b'0') as usize).collect())
                }
                _ if self.src[self.pos..].starts_with("⊗".as_bytes()) => {
                    self.pos += "⊗".len();
                    Tok::Star
                }
                _ if self.src[self.pos..].starts_with("−".as_bytes()) => {
                    self.pos += "−".len();
                    Tok::Minus
                }
                _ => {
                    let ch = String::from_utf8_lossy(&self.src[self.pos..]).chars().next().unwrap_or('?');
                    return Err(parse_err(at, format!("unexpected character `{ch}`")));
                }
            };
            out.push((at, tok, spaced));
        }
        Ok(out)
    }
}

type Lin = Vec<(Coeff, Word)>;

fn scalar(c: Coeff) -> Lin {
    vec![(c, Word::Seq(Vec::new()))]
}

fn mul(a: &Lin, b: &Lin, at: usize) -> Result<Lin> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (x, u) in a {
        for (y, v) in b {
            let w = match (u, v) {
                (Word::Seq(p), Word::Seq(q)) => Word::Seq(p.iter().chain(q).copied().collect()),
                (Word::Lie(l), Word::Seq(q)) | (Word::Seq(q), Word::Lie(l)) if q.is_empty() => Word::Lie(*l),
                _ => return Err(parse_err(at, "product of a Lie element with another basis element")),
            };
            out.push((x * y, w));
        }
    }
    Ok(out)
}

fn as_scalar(a: &Lin) -> Option<Coeff> {
    let mut c = Coeff::zero();
    for (x, w) in a {
        if *w != Word::Seq(Vec::new()) {
            return None;
        }
        c = &c + x;
    }
    Some(c)
}

struct Parser {
    toks: Vec<(usize, Tok, bool)>,
    pos: usize,
    runs: bool,
    /// Square roots met at the outermost product, dropped with a note.
    dropped: Vec<String>,
    depth: usize,
    top_terms: usize,
    /// Byte length of the source, reported for errors at the end.
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn sum(&mut self) -> Result<Lin> {
        let mut out = Lin::new();
        let mut first = true;
        let mut terms = 0;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                // whitespace-separated digit words are implicit sums
                Some(Tok::Digits(_)) if !first && self.runs && self.depth == 0 => false,
                _ if first => false,
                _ => break,
            };
            first = false;
            terms += 1;
            if self.depth == 0 {
                self.top_terms = terms;
            }
            let mut t = self.product()?;
            if neg {
                for (c, _) in t.iter_mut() {
                    *c = -&*c;
                }
            }
            out.extend(t);
        }
        Ok(out)
    }

    fn product(&mut self) -> Result<Lin> {
        let start = self.at();
        let mut acc = self.item()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.item()?;
                    acc = mul(&acc, &rhs, start)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.at();
                    let rhs = self.item()?;
                    let c = as_scalar(&rhs).ok_or_else(|| parse_err(at, "division by a non-scalar"))?;
                    let inv = c.inv().ok_or_else(|| parse_err(at, "division by zero"))?;
                    acc = mul(&acc, &scalar(inv), start)?;
                }
                Some(Tok::Digits(_)) if self.runs && self.toks[self.pos].2 && self.has_basis(&acc) => break,
                Some(Tok::Num { .. } | Tok::Digits(_) | Tok::Sqrt(_) | Tok::E(_) | Tok::Ket(_) | Tok::H(_) | Tok::Lie(..) | Tok::LParen) => {
                    let rhs = self.item()?;
                    acc = mul(&acc, &rhs, start)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn has_basis(&self, a: &Lin) -> bool {
        a.iter().any(|(_, w)| *w != Word::Seq(Vec::new()))
    }

    fn item(&mut self) -> Result<Lin> {
        let at = self.at();
        let Some((_, tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(parse_err(at, "unexpected end of input"));
        };
        self.pos += 1;
        Ok(match tok {
            Tok::Num { value, imag } => {
                scalar(if imag { Coeff { re: BigRational::zero(), im: value } } else { Coeff::real(value) })
            }
            Tok::Digits(d) => {
                // a bare number is a coefficient when a factor follows it or inside parentheses
                let next_is_factor = self.depth > 0
                    || matches!(
                        self.peek(),
                        Some(Tok::Star | Tok::Slash | Tok::E(_) | Tok::Ket(_) | Tok::H(_) | Tok::Lie(..) | Tok::LParen | Tok::Sqrt(_))
                    );
                if self.runs && !next_is_factor {
                    vec![(Coeff::one(), Word::Seq(d.bytes().map(|c| (c - b'0') as usize).collect()))]
                } else {
                    let v: num_bigint::BigInt = d.parse().unwrap();
                    scalar(Coeff::real(BigRational::from_integer(v)))
                }
            }
            Tok::Sqrt(k) => {
                let r = num_integer::Roots::sqrt(&k);
                if r * r == k {
                    scalar(Coeff::from_i64(r as i64))
                } else if self.depth == 0 && self.top_terms <= 1 {
                    self.dropped.push(format!("sqrt({k})"));
                    scalar(Coeff::one())
                } else {
                    return Err(Error::Unrepresentable { field: "Q(i)".into(), value: format!("sqrt({k})") });
                }
            }
            Tok::E(v) | Tok::Ket(v) => vec![(Coeff::one(), Word::Seq(v))],
            Tok::H(i) => vec![(Coeff::one(), Word::Lie(LieBasis::Cartan(i)))],
            Tok::Lie(i, j) => vec![(Coeff::one(), Word::Lie(LieBasis::Offdiag(i, j)))],
            Tok::LParen => {
                self.depth += 1;
                let inner = self.sum()?;
                self.depth -= 1;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(parse_err(self.at(), "expected `)`"));
                }
                self.pos += 1;
                inner
            }
            Tok::Minus => {
                let mut t = self.item()?;
                for (c, _) in t.iter_mut() {
                    *c = -&*c;
                }
                t
            }
            other => return Err(parse_err(at, format!("unexpected {other:?}"))),
        })
    }
}

fn parse_lin(src: &str, runs: bool) -> Result<(Lin, Vec<String>)> {
    let toks = Lexer { src: src.as_bytes(), pos: 0, runs }.tokens()?;
    if toks.is_empty() {
        return Err(parse_err(0, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0, runs, dropped: Vec::new(), depth: 0, top_terms: 0, end: src.len() };
    let lin = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(p.at(), "trailing input"));
    }
    if !p.dropped.is_empty() && p.top_terms > 1 {
        return Err(Error::Unrepresentable { field: "Q(i)".into(), value: p.dropped.join(", ") });
    }
    let notes = p.dropped.iter().map(|s| format!("dropped global factor {s}")).collect();
    Ok((lin, notes))
}

/// Parses a wedge expression and checks it lies in a single exterior degree.
pub fn parse_wedge(src: &str, n: usize, opts: ParseOptions) -> Result<AlgebraElement> {
    let expr = parse_expr(src, n, opts)?;
    let t = expr.to_wedge(n)?;
    if t.degrees().len() > 1 {
        return Err(Error::AlgebraMismatch(format!("mixed exterior degrees {:?}", t.degrees())));
    }
    Ok(t)
}

/// The sum of words behind a wedge or Vinberg expression.
pub fn parse_expr(src: &str, n: usize, opts: ParseOptions) -> Result<TensorExpr> {
    if src.contains('|') {
        return Err(parse_err(src.find('|').unwrap(), "ket in a wedge expression"));
    }
    let (lin, notes) = parse_lin(src, opts.runs_for(n))?;
    TensorExpr::new(lin, Notation::Wedge, opts.base, notes)
}

/// Vinberg-style strings such as `129 138 237 456`: 1-based digit words, one per term.
pub fn parse_vinberg(src: &str, n: usize) -> Result<AlgebraElement> {
    let (lin, notes) = parse_lin(src, true)?;
    let t = TensorExpr::new(lin, Notation::Vinberg, 1, notes)?.to_wedge(n)?;
    if t.degrees().len() > 1 {
        return Err(Error::AlgebraMismatch(format!("mixed exterior degrees {:?}", t.degrees())));
    }
    Ok(t)
}

/// Elements with Lie parts: `h<i>`, `E<i>,<j>` and wedge monomials, any mix of degrees.
pub fn parse_element(src: &str, n: usize, opts: ParseOptions) -> Result<AlgebraElement> {
    let (lin, _) = parse_lin(src, opts.runs_for(n))?;
    let mut out = AlgebraElement::zero(n);
    let mut wedge = Vec::new();
    for (c, w) in lin {
        match w {
            Word::Lie(l) => {
                let key = BasisKey::Lie(match l {
                    LieBasis::Cartan(i) => LieBasis::Cartan(i.checked_sub(opts.base).ok_or(Error::IndexOutOfRange { index: i, n })?),
                    LieBasis::Offdiag(i, j) => LieBasis::Offdiag(
                        i.checked_sub(opts.base).ok_or(Error::IndexOutOfRange { index: i, n })?,
                        j.checked_sub(opts.base).ok_or(Error::IndexOutOfRange { index: j, n })?,
                    ),
                });
                if !key.in_range(n) {
                    return Err(Error::AlgebraMismatch(format!("{key} is not a basis element of sl({n})")));
                }
                out.add_term(key, c);
            }
            w => wedge.push((c, w)),
        }
    }
    if !wedge.is_empty() {
        out = out.add(&TensorExpr::new(wedge, Notation::Wedge, opts.base, Vec::new())?.to_wedge(n)?);
    }
    Ok(out)
}

/// Parses a ket expression and places it through `layout`. Returns the notes about
/// dropped normalizations alongside the element.
pub fn parse_ket_with_notes(src: &str, layout: &QuditLayout) -> Result<(AlgebraElement, Vec<String>)> {
    let (lin, notes) = parse_lin(src, false)?;
    if lin.iter().any(|(_, w)| matches!(w, Word::Seq(v) if v.is_empty())) {
        return Err(parse_err(0, "scalar term without a ket"));
    }
    let expr = TensorExpr::new(lin, Notation::Ket, 0, notes)?;
    for note in &expr.notes {
        log::info!("ket input: {note}");
    }
    Ok((expr.to_ket(layout)?, expr.notes))
}

pub fn parse_ket(src: &str, layout: &QuditLayout) -> Result<AlgebraElement> {
    parse_ket_with_notes(src, layout).map(|(t, _)| t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;
    use crate::tensor_io::Convention;

    fn w(n: usize, idx: &[usize]) -> AlgebraElement {
        AlgebraElement::wedge(n, idx).unwrap()
    }

    #[test]
    fn wedge_sums() {
        let t = parse_wedge("e0e1e2 + e3e4e5", 6, ParseOptions::default()).unwrap();
        assert_eq!(t, w(6, &[0, 1, 2]).add(&w(6, &[3, 4, 5])));
        assert_eq!(parse_wedge("e1e0", 6, ParseOptions::default()).unwrap(), w(6, &[0, 1]).scale(&Coeff::from_i64(-1)));
        let t = parse_wedge("e012 - 3/2*e345", 6, ParseOptions::default()).unwrap();
        assert_eq!(t.coeff(&BasisKey::Wedge(MultiIndex::new(&[3, 4, 5], 6).unwrap())), Coeff::real(rat(-3, 2)));
        let t = parse_wedge("e_{0}e_{4}e_{10}+e_{1}e_{5}e_{11}", 12, ParseOptions::default()).unwrap();
        assert_eq!(t, w(12, &[0, 4, 10]).add(&w(12, &[1, 5, 11])));
        assert_eq!(parse_wedge("e0e4e10", 12, ParseOptions::explicit()).unwrap(), w(12, &[0, 4, 10]));
        let t = parse_wedge("2i*e01 + (1-i)e23", 6, ParseOptions::default()).unwrap();
        assert!(!t.is_real());
    }

    #[test]
    fn wedge_errors() {
        let o = ParseOptions::default();
        assert!(matches!(parse_wedge("e0e0e1", 6, o), Err(Error::RepeatedIndex(0))));
        assert!(matches!(parse_wedge("e012 + e34", 6, o), Err(Error::AlgebraMismatch(_))));
        assert!(matches!(parse_wedge("e016", 6, o), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse_wedge("e0 +", 6, o), Err(Error::Parse { .. })));
        assert!(matches!(parse_wedge("sqrt(2)*e01 + e23", 6, o), Err(Error::Unrepresentable { .. })));
    }

    #[test]
    fn vinberg_strings() {
        let t = parse_vinberg("129 138 237 456", 9).unwrap();
        let s = [[0, 1, 8], [0, 2, 7], [1, 2, 6], [3, 4, 5]];
        let want = s.iter().fold(AlgebraElement::zero(9), |acc, i| acc.add(&w(9, i)));
        assert_eq!(t, want);
        let opts = ParseOptions { base: 1, digit_runs: DigitRuns::On };
        assert_eq!(parse_wedge("129 + 138 + 237 + 456", 9, opts).unwrap(), want);
        assert!(parse_vinberg("120", 9).is_err());
    }

    #[test]
    fn lie_elements() {
        let t = parse_element("h2 + e3e4e5 - 2*E0,1", 6, ParseOptions::default()).unwrap();
        assert_eq!(t.degrees(), vec![0, 3]);
        assert_eq!(t.coeff(&BasisKey::Lie(LieBasis::Offdiag(0, 1))), Coeff::from_i64(-2));
        assert!(parse_element("h5", 6, ParseOptions::default()).is_err());
        assert!(parse_element("h1*e01", 6, ParseOptions::default()).is_err());
    }

    #[test]
    fn kets() {
        let q5 = QuditLayout::qubits(5, Convention::Contiguous);
        let (t, notes) = parse_ket_with_notes("1/sqrt(2)*(|00000>+|11111>)", &q5).unwrap();
        assert_eq!(t, w(10, &[0, 2, 4, 6, 8]).add(&w(10, &[1, 3, 5, 7, 9])));
        assert_eq!(notes.len(), 1);
        let blocked = QuditLayout::qubits(5, Convention::Strided);
        assert_eq!(parse_ket("|00000>+|11111>", &blocked).unwrap(), w(10, &[0, 1, 2, 3, 4]).add(&w(10, &[5, 6, 7, 8, 9])));
        let q1 = QuditLayout::qubits(1, Convention::Contiguous);
        assert_eq!(parse_ket("|0>", &q1).unwrap(), w(2, &[0]));
        let q2 = QuditLayout::qubits(2, Convention::Contiguous);
        assert!(matches!(parse_ket("|21>", &q2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse_ket("|010>", &q2), Err(Error::Dimension(_))));
        let q4 = QuditLayout::qubits(4, Convention::Contiguous);
        let a = parse_ket("1/2*(|0>+|1>)⊗(|000>+i(|001>-|110>))", &q4).unwrap();
        let b = parse_ket("1/2*(|0000>+|1000>) + i/2*(|0001>+|1001>-|0110>-|1110>)", &q4).unwrap();
        assert_eq!(a, b);
    }
}
