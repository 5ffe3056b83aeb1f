//! Named tensors with the algebra they are meant to be studied in.
//!
//! Random members use fixed seeds, so every fixture is reproducible. Names are
//! `family/member`; `fixture_names` lists them in registry order.

use serde::{Deserialize, Serialize};

use super::generate::{random_rank_one, random_tensor, Shape};
use super::parse::{parse_element, parse_ket_with_notes, parse_vinberg, parse_wedge, DigitRuns, ParseOptions};
use super::{matmul_tensor, Convention, Notation, QuditLayout};
use crate::algebra::{Algebra, AlgebraElement, AlgebraOptions, Grading};
use crate::error::{Error, Result};

/// Bumped whenever a fixture is added, removed or changed.
pub const FIXTURE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum AlgebraSpec {
    /// `sl(n)` plus the exterior powers of degree divisible by `step`.
    Graded { n: usize, step: usize },
    /// Contiguous parts; all tensor levels or level one only.
    Multipartite { parts: Vec<usize>, all_levels: bool },
}

impl AlgebraSpec {
    pub fn n(&self) -> usize {
        match self {
            AlgebraSpec::Graded { n, .. } => *n,
            AlgebraSpec::Multipartite { parts, .. } => parts.iter().sum(),
        }
    }

    pub fn build(&self, opts: &AlgebraOptions) -> Result<Algebra> {
        match self {
            AlgebraSpec::Graded { n, step } => Algebra::full_with(Grading::new(*n, *step)?, opts),
            AlgebraSpec::Multipartite { parts, all_levels } => Algebra::multipartite(parts, *all_levels),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub algebra: AlgebraSpec,
    /// A smaller algebra that also contains the tensor, when one is of interest.
    pub restricted: Option<AlgebraSpec>,
    pub notation: Notation,
    /// Source text, or the printed element for generated fixtures.
    pub source: String,
    pub element: AlgebraElement,
    pub notes: Vec<String>,
}

enum Src {
    /// Digit-run wedge notation, 0-based.
    Runs(&'static str),
    /// Explicit `e<int>` tokens.
    Explicit(&'static str),
    Vinberg(&'static str),
    /// Ket over qubits, contiguous layout.
    Ket(&'static str, usize),
    Element(&'static str),
    Gen(fn() -> Result<AlgebraElement>),
}

struct Def {
    name: &'static str,
    alg: AlgebraSpec,
    restricted: Option<AlgebraSpec>,
    src: Src,
    note: Option<&'static str>,
}

fn graded(n: usize, step: usize) -> AlgebraSpec {
    AlgebraSpec::Graded { n, step }
}

fn parts(p: &[usize], all_levels: bool) -> Option<AlgebraSpec> {
    Some(AlgebraSpec::Multipartite { parts: p.to_vec(), all_levels })
}

fn def(name: &'static str, alg: AlgebraSpec, src: Src) -> Def {
    Def { name, alg, restricted: None, src, note: None }
}

fn cube4() -> QuditLayout {
    QuditLayout::new(vec![4, 4, 4], Convention::Contiguous).expect("layout")
}

const DIAG4: &str = "e0e4e8+e1e5e9+e2e6e10+e3e7e11";

fn diag(r: usize) -> Result<AlgebraElement> {
    let terms: Vec<&str> = DIAG4.split('+').take(r).collect();
    parse_wedge(&terms.join("+"), 12, ParseOptions::explicit())
}

/// Diagonal rank four plus `extra` seeded random pure tensors.
fn diag_plus(extra: usize) -> Result<AlgebraElement> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(444);
    let shape = Shape::Multipartite(cube4());
    let mut t = diag(4)?;
    for _ in 0..extra {
        t = t.add(&random_rank_one(&shape, &mut rng)?);
    }
    Ok(t)
}

fn m_rank1() -> Result<AlgebraElement> {
    diag(1)
}
fn m_rank2() -> Result<AlgebraElement> {
    diag(2)
}
fn m_rank3() -> Result<AlgebraElement> {
    diag(3)
}
fn m_rank4() -> Result<AlgebraElement> {
    diag(4)
}
fn m_rank5() -> Result<AlgebraElement> {
    diag_plus(1)
}
fn m_rank6() -> Result<AlgebraElement> {
    diag_plus(2)
}
fn m_rank7() -> Result<AlgebraElement> {
    diag_plus(3)
}
fn m_mmult() -> Result<AlgebraElement> {
    Ok(matmul_tensor(2, 2, 2))
}

fn w39(r: usize) -> Result<AlgebraElement> {
    random_tensor(r, &Shape::Exterior { n: 9, k: 3 }, 9000 + r as u64)
}
fn w39_r4() -> Result<AlgebraElement> {
    w39(4)
}
fn w39_r5() -> Result<AlgebraElement> {
    w39(5)
}
fn w39_r6() -> Result<AlgebraElement> {
    w39(6)
}
fn w310(r: usize) -> Result<AlgebraElement> {
    random_tensor(r, &Shape::Exterior { n: 10, k: 3 }, 10_000 + r as u64)
}
fn w310_r4() -> Result<AlgebraElement> {
    w310(4)
}
fn w310_r5() -> Result<AlgebraElement> {
    w310(5)
}
fn q5(r: usize) -> Result<AlgebraElement> {
    random_tensor(r, &Shape::Multipartite(QuditLayout::qubits(5, Convention::Contiguous)), 500 + r as u64)
}
fn q5_r2() -> Result<AlgebraElement> {
    q5(2)
}
fn q5_r3() -> Result<AlgebraElement> {
    q5(3)
}
fn q5_r4() -> Result<AlgebraElement> {
    q5(4)
}
fn q5_r5() -> Result<AlgebraElement> {
    q5(5)
}

const P1: &str = "e0e1e2+e3e4e5+e6e7e8";
const P2: &str = "e0e3e6+e1e4e7+e2e5e8";
const P3: &str = "e1e5e6+e2e3e7+e0e4e8";
const P4: &str = "e2e4e6+e0e5e7+e1e3e8";

fn family_one() -> Result<AlgebraElement> {
    let o = ParseOptions::default();
    let src = format!("({P1}) + 2*({P2}) - 3*({P3}) + 5*({P4})");
    parse_wedge(&src, 9, o)
}

fn defs() -> Vec<Def> {
    use Src::*;
    let z2_6 = graded(6, 3);
    let e7 = graded(8, 4);
    let z3_9 = graded(9, 3);
    let c12 = graded(12, 3);
    let full12 = graded(12, 1);
    let full10 = graded(10, 1);
    let z2_10 = graded(10, 5);
    let q4 = graded(8, 4);
    let q4r = parts(&[2; 4], false);
    let q5r = parts(&[2; 5], false);
    let m444 = parts(&[4, 4, 4], true);

    let mut v = vec![
        def("w3c6/grassmannian", z2_6.clone(), Runs("e012")),
        def("w3c6/restricted-chordal", z2_6.clone(), Runs("e012+e034")),
        def("w3c6/tangential", z2_6.clone(), Runs("e012+e034+e135")),
        def("w3c6/secant", z2_6.clone(), Runs("e012+e345")),
        def("w3c6/semisimple-mixed", z2_6.clone(), Element("h2 + e3e4e5")),
        def("e7/83", e7.clone(), Runs("e1345+e1246+e0356+e1237+e0247+e0257+e0167")),
        def("e7/86", e7.clone(), Runs("e1245+e1346+e0256+e1237+e0347+e0157+e0167")),
        def("e7/88", e7.clone(), Runs("e2345+e1346+e1256+e0356+e1237+e0247+e0157")),
        def("e7/65", e7.clone(), Runs("e2345+e0246+e1356+e0237+e1237+e0147+e0157")),
        def("e7/67", e7.clone(), Runs("e1345+e1246+e0346+e0256+e1237+e0247+e0167")),
        def("e7/69", e7.clone(), Runs("e1345+e1246+e0356+e1237+e0247+e0157")),
        def("w3c9/rank1", z3_9.clone(), Runs("e012")),
        def("w3c9/rank2", z3_9.clone(), Runs("e012+e345")),
        def("w3c9/rank3", z3_9.clone(), Runs("e012+e345+e678")),
        def("w3c9/rank4", z3_9.clone(), Gen(w39_r4)),
        def("w3c9/rank5", z3_9.clone(), Gen(w39_r5)),
        def("w3c9/rank6", z3_9.clone(), Gen(w39_r6)),
        def("w3c9/79", z3_9.clone(), Vinberg("129 138 237 456")),
        def("w3c9/79-variant", z3_9.clone(), Vinberg("129 138 237 458")),
        def("w3c9/87", z3_9.clone(), Runs("e123+e045+e067+e018")),
        def("w3c9/9a", z3_9.clone(), Runs("e345+e036+e146+e256+e137+e247+e057+e128")),
        def("w3c9/9b", z3_9.clone(), Runs("e345+e036+e146+e246+e237+e047+e157+e028")),
        def("w3c9/96", z3_9.clone(), Runs("e012+e345")),
        def("w3c9/100", z3_9.clone(), Runs("e012+e034")),
        def("w3c9/101", z3_9.clone(), Runs("e012")),
        def("w3c9/family1", z3_9.clone(), Gen(family_one)),
        def("w3c9/p1", z3_9.clone(), Runs(P1)),
        def("w3c9/p2", z3_9.clone(), Runs(P2)),
        def("w3c9/p3", z3_9.clone(), Runs(P3)),
        def("w3c9/p4", z3_9.clone(), Runs(P4)),
    ];
    let m_gens: [(&str, fn() -> Result<AlgebraElement>); 8] = [
        ("mmult", m_mmult),
        ("rank1", m_rank1),
        ("rank2", m_rank2),
        ("rank3", m_rank3),
        ("rank4", m_rank4),
        ("rank5", m_rank5),
        ("rank6", m_rank6),
        ("rank7", m_rank7),
    ];
    const M_NAMES: [&str; 8] = [
        "mmult444/mmult",
        "mmult444/rank1",
        "mmult444/rank2",
        "mmult444/rank3",
        "mmult444/rank4",
        "mmult444/rank5",
        "mmult444/rank6",
        "mmult444/rank7",
    ];
    const F_NAMES: [&str; 8] = [
        "fullC12/mmult",
        "fullC12/rank1",
        "fullC12/rank2",
        "fullC12/rank3",
        "fullC12/rank4",
        "fullC12/rank5",
        "fullC12/rank6",
        "fullC12/rank7",
    ];
    for (i, (_, g)) in m_gens.iter().enumerate() {
        v.push(Def { name: M_NAMES[i], alg: c12.clone(), restricted: m444.clone(), src: Gen(*g), note: None });
    }
    for (name, src) in [
        ("mmult444/p1", "e0e4e8+e1e5e9+e2e6e10+e3e7e11"),
        ("mmult444/p2", "e0e5e10+e1e4e11+e2e7e8+e3e6e9"),
        ("mmult444/p3", "e0e6e11+e1e7e10+e2e4e9+e3e5e8"),
        ("mmult444/p4", "e0e7e9+e1e6e8+e2e5e11+e3e4e10"),
    ] {
        v.push(Def { name, alg: c12.clone(), restricted: m444.clone(), src: Explicit(src), note: None });
    }
    for (i, (_, g)) in m_gens.iter().enumerate() {
        v.push(def(F_NAMES[i], full12.clone(), Gen(*g)));
    }
    v.extend([
        def("w3c10/rank1", full10.clone(), Runs("e012")),
        def("w3c10/rank2", full10.clone(), Runs("e012+e345")),
        def("w3c10/rank3", full10.clone(), Runs("e012+e345+e678")),
        def("w3c10/rank4", full10.clone(), Gen(w310_r4)),
        def("w3c10/rank5", full10.clone(), Gen(w310_r5)),
    ]);
    // four qubits, a = 1, b = 2, c = 8/5, d = 1/2
    for (name, src) in [
        (
            "qi4/family1",
            "3/4*(|0000>+|1111>) + 1/4*(|0011>+|1100>) + 9/5*(|0101>+|1010>) + 1/5*(|0110>+|1001>)",
        ),
        (
            "qi4/family2",
            "(1+8/5-i)/2*(|0000>+|1111>) + (1-8/5+i)/2*(|0011>+|1100>) + (2+8/5+i)/2*(|0101>+|1010>) \
             + (2-8/5-i)/2*(|0110>+|1001>) \
             + i/2*(|0001>+|0111>+|1000>+|1110>-|0010>-|0100>-|1011>-|1101>)",
        ),
        (
            "qi4/family3",
            "1/2*(|0000>+|1111>+|0011>+|1100>) + (2+1)/2*(|0101>+|1010>) + (2-1)/2*(|0110>+|1001>) \
             + 1/2*(|1101>+|0010>-|0001>-|1110>)",
        ),
        (
            "qi4/family6",
            "(1+2)/2*(|0000>+|1111>) + 2*(|0101>+|1010>) + i*(|1001>-|0110>) + (1-2)/2*(|0011>+|1100>) \
             + 1/2*(|0010>+|0100>+|1011>+|1101>-|0001>-|0111>-|1000>-|1110>)",
        ),
        ("qi4/family9", "(|0000>+|0101>+|1010>+|1111>) - 2i*(|0100>-|1001>-|1110>)"),
        (
            "qi4/family10",
            "(1+i)/2*(|0000>+|1111>+|0011>+|1100>) + (1-i+1)/2*(|0101>+|1010>) + (1-i-1)/2*(|0110>+|1001>) \
             + (i+1)/2*(|1101>+|0010>) + (i-1)/2*(|0001>+|1110>) - i/2*(|0100>+|0111>+|1000>+|1011>)",
        ),
        (
            "qi4/family12",
            "(|0101>-|0110>+|1100>+|1111>) + (i+1)*(|1001>+|1010>) - i*(|0100>+|0111>+|1101>-|1110>)",
        ),
        (
            "qi4/family14",
            "(i+1)/2*(|0000>+|1111>-|0010>-|1101>) + (i-1)/2*(|0001>+|1110>-|0011>-|1100>) \
             + 1/2*(|0100>+|1001>+|1010>+|0111>) + (1-2i)/2*(|1000>+|0101>+|0110>+|1011>)",
        ),
        ("qi4/family16", "1/2*(|0>+|1>)⊗(|000>+|011>+|100>+|111>+i*(|001>+|010>-|101>-|110>))"),
    ] {
        v.push(Def { name, alg: q4.clone(), restricted: q4r.clone(), src: Ket(src, 4), note: None });
    }
    // a = 1, b = 3, c = 9, d = 27: the values +-x_i +-x_j are pairwise distinct
    v.push(Def {
        name: "qi4/family1-generic",
        alg: q4.clone(),
        restricted: q4r.clone(),
        src: Ket("14*(|0000>+|1111>) - 13*(|0011>+|1100>) + 6*(|0101>+|1010>) - 3*(|0110>+|1001>)", 4),
        note: Some("at a = 1, b = 2, c = 8/5, d = 1/2 two eigenvalues coincide (a + d = b - d)"),
    });
    let q5 = |name: &'static str, src: Src, note: Option<&'static str>| Def {
        name,
        alg: z2_10.clone(),
        restricted: q5r.clone(),
        src,
        note,
    };
    let rescaled = Some("the irrational coefficient is removed by a real diagonal element of SL(2)^5 and an overall scale");
    v.extend([
        q5("qi5/psi2", Ket("1/sqrt(2)*(|00000>+|11111>)", 5), None),
        q5("qi5/psi4", Ket("1/2*(|11111>+|11100>+|00010>+|00001>)", 5), None),
        q5("qi5/psi5", Ket("|11111>+|11000>+|00100>+|00010>+|00001>", 5), rescaled),
        q5("qi5/psi6", Ket("|11111>+|10000>+|01000>+|00100>+|00010>+|00001>", 5), rescaled),
        q5("qi5/p0+", Runs("e12468+e03579"), None),
        q5("qi5/p0-", Runs("e12468-e03579"), None),
        q5("qi5/p1+", Runs("e03468+e12579"), None),
        q5("qi5/p1-", Runs("e03468-e12579"), None),
        q5("qi5/p2+", Runs("e02568+e13479"), None),
        q5("qi5/p2-", Runs("e02568-e13479"), None),
        q5("qi5/p3+", Runs("e02478+e13569"), None),
        q5("qi5/p3-", Runs("e02478-e13569"), None),
        q5("qi5/p4+", Runs("e13578+e02469"), None),
        q5("qi5/p4-", Runs("e13578-e02469"), None),
        q5("qi5/ss1", Runs("e12468+e02568+e13479+e03579"), None),
        q5("qi5/ss2", Runs("e12468+e03578+e12469+e03579"), None),
        q5("qi5/ss3", Runs("2*e12468"), None),
        q5("qi5/ss4", Runs("e12468+e03468-e12579+e03579"), None),
        q5("qi5/ss5", Runs("e12468+e02478-e13569+e03579"), None),
        q5("qi5/ss6", Runs("e12468+e12478-e03569+e03579"), None),
        q5("qi5/rank1", Ket("|00000>", 5), None),
        q5("qi5/rank2", Gen(q5_r2), None),
        q5("qi5/rank3", Gen(q5_r3), None),
        q5("qi5/rank4", Gen(q5_r4), None),
        q5("qi5/rank5", Gen(q5_r5), None),
    ]);
    v
}

/// All fixture names in registry order.
pub fn fixture_names() -> Vec<&'static str> {
    defs().iter().map(|d| d.name).collect()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let Some(d) = defs().into_iter().find(|d| d.name == name) else {
        return Err(Error::UnknownFixture { name: name.to_string(), available: fixture_names().join(", ") });
    };
    let n = d.alg.n();
    let mut notes: Vec<String> = d.note.map(|s| vec![s.to_string()]).unwrap_or_default();
    let (notation, source, element) = match d.src {
        Src::Runs(s) => {
            let o = ParseOptions { base: 0, digit_runs: DigitRuns::On };
            (Notation::Wedge, s.to_string(), parse_wedge(s, n, o)?)
        }
        Src::Explicit(s) => (Notation::Wedge, s.to_string(), parse_wedge(s, n, ParseOptions::explicit())?),
        Src::Vinberg(s) => (Notation::Vinberg, s.to_string(), parse_vinberg(s, n)?),
        Src::Ket(s, k) => {
            let (t, extra) = parse_ket_with_notes(s, &QuditLayout::qubits(k, Convention::Contiguous))?;
            notes.extend(extra);
            (Notation::Ket, s.to_string(), t)
        }
        Src::Element(s) => (Notation::Wedge, s.to_string(), parse_element(s, n, ParseOptions::default())?),
        Src::Gen(g) => {
            let t = g()?;
            (Notation::Wedge, t.to_string(), t)
        }
    };
    Ok(Fixture { name: d.name.to_string(), algebra: d.alg, restricted: d.restricted, notation, source, element, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor_io::parse_element;

    #[test]
    fn documented_examples() {
        let t = fixture("w3c6/tangential").unwrap();
        assert_eq!(t.algebra, AlgebraSpec::Graded { n: 6, step: 3 });
        let want = parse_wedge("e0e1e2+e0e3e4+e1e3e5", 6, ParseOptions::default()).unwrap();
        assert_eq!(t.element, want);
        let p = fixture("qi5/psi4").unwrap();
        let want = parse_wedge("e1e3e5e6e8+e0e2e4e7e8+e0e2e4e6e9+e1e3e5e7e9", 10, ParseOptions::default()).unwrap();
        // the ket source carries the factor 1/2
        assert_eq!(p.element, want.scale(&crate::linalg::Coeff::real(crate::linalg::scalar::rat(1, 2))));
        assert_eq!(p.algebra, AlgebraSpec::Graded { n: 10, step: 5 });
        let psi2 = fixture("qi5/psi2").unwrap();
        assert_eq!(psi2.notes.len(), 1);
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture { .. })));
    }

    #[test]
    fn every_fixture_loads_and_round_trips() {
        let names = fixture_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate fixture names");
        for name in names {
            let f = fixture(name).unwrap();
            let n = f.algebra.n();
            assert!(!f.element.is_zero(), "{name}");
            if name != "w3c6/semisimple-mixed" {
                assert_eq!(f.element.degrees().len(), 1, "{name}");
                let k = f.element.degrees()[0];
                let step = match &f.algebra {
                    AlgebraSpec::Graded { step, .. } => *step,
                    AlgebraSpec::Multipartite { parts, .. } => parts.len(),
                };
                assert_eq!(k % step, 0, "{name} has degree {k}");
            }
            let printed = f.element.to_string();
            let back = parse_element(&printed, n, ParseOptions::explicit()).unwrap();
            assert_eq!(back, f.element, "{name}: {printed}");
        }
    }

    #[test]
    fn generated_fixtures_are_stable() {
        assert_eq!(fixture("mmult444/rank5").unwrap().element, fixture("fullC12/rank5").unwrap().element);
        assert_eq!(fixture("mmult444/mmult").unwrap().element.len(), 8);
        assert_eq!(fixture("mmult444/p1").unwrap().element, fixture("mmult444/rank4").unwrap().element);
    }
}
