//! Turns command-line flags into an algebra and a list of tensors.

use anyhow::{bail, Context, Result};

use adjprof_core::algebra::{Algebra, AlgebraElement, AlgebraOptions, Grading};
use adjprof_core::tensor_io::{
    fixture, parse_element, parse_input_file, parse_ket_with_notes, parse_vinberg, random_tensor, AlgebraSpec,
    Convention, DigitRuns, Notation, ParseOptions, QuditLayout, Shape,
};

use crate::{AlgebraArgs, RunArgs};

pub struct Tensor {
    pub name: String,
    pub element: AlgebraElement,
}

pub struct Resolved {
    pub spec: AlgebraSpec,
    pub tensors: Vec<Tensor>,
    /// Parts of the multipartite shape, when the tensors have one.
    pub parts: Option<Vec<usize>>,
}

/// The algebra named by flags alone, if they name one.
pub fn spec_from_flags(a: &AlgebraArgs) -> Result<Option<AlgebraSpec>> {
    let all_levels = match a.levels.as_str() {
        "all" => true,
        "one" => false,
        other => bail!("--levels must be all or one, got {other:?}"),
    };
    Ok(match (&a.parts, a.n, &a.grading) {
        (Some(p), n, g) => {
            let sum: usize = p.iter().sum();
            if n.is_some_and(|n| n != sum) {
                bail!("--n {} but the parts sum to {sum}", n.unwrap());
            }
            match g {
                Some(g) => {
                    let g = Grading::parse(sum, g)?;
                    Some(AlgebraSpec::Graded { n: sum, step: g.step() })
                }
                None => Some(AlgebraSpec::Multipartite { parts: p.clone(), all_levels }),
            }
        }
        (None, Some(n), g) => {
            let g = Grading::parse(n, g.as_deref().unwrap_or("full"))?;
            Some(AlgebraSpec::Graded { n, step: g.step() })
        }
        (None, None, Some(_)) => bail!("--grading needs --n or --parts"),
        (None, None, None) => None,
    })
}

pub fn build(spec: &AlgebraSpec, cache_dir: Option<&std::path::Path>) -> Result<Algebra> {
    let opts = AlgebraOptions { cache_dir: cache_dir.map(Into::into), ..AlgebraOptions::default() };
    if let Some(d) = cache_dir {
        std::fs::create_dir_all(d).with_context(|| format!("creating cache directory {}", d.display()))?;
    }
    Ok(spec.build(&opts)?)
}

pub fn resolve(r: &RunArgs) -> Result<Resolved> {
    let flags = spec_from_flags(&r.algebra)?;
    let mut spec = flags.clone();
    let mut parts = r.algebra.parts.clone();
    let mut tensors = Vec::new();

    for name in &r.fixture {
        let f = fixture(name)?;
        for note in &f.notes {
            log::info!("{name}: {note}");
        }
        let own = if r.algebra.restricted {
            f.restricted.clone().with_context(|| format!("{name} declares no restricted algebra"))?
        } else {
            f.algebra.clone()
        };
        if parts.is_none() {
            parts = [&f.restricted, &Some(f.algebra.clone())].into_iter().flatten().find_map(|s| match s {
                AlgebraSpec::Multipartite { parts, .. } => Some(parts.clone()),
                AlgebraSpec::Graded { .. } => None,
            });
        }
        match &spec {
            None => spec = Some(own),
            Some(s) if flags.is_none() && *s != own => {
                log::warn!("{name} is declared in another algebra; using the first one");
            }
            _ => {}
        }
        tensors.push(Tensor { name: name.clone(), element: f.element });
    }

    if let Some(path) = &r.input {
        let file = parse_input_file(path).with_context(|| format!("reading {}", path.display()))?;
        for note in &file.notes {
            log::info!("{note}");
        }
        if spec.is_none() {
            spec = Some(file.algebra.clone());
        }
        if parts.is_none() {
            parts = file.layout.as_ref().map(|l| l.parts().to_vec());
        }
        tensors.extend(file.tensors.into_iter().map(|(name, element)| Tensor { name, element }));
    }

    let needs_n = !r.exprs.is_empty() || r.random.is_some();
    let n = match &spec {
        Some(s) => s.n(),
        None if needs_n => bail!("no algebra given: use --n and --grading, --parts, or a fixture"),
        None => bail!("no tensor given: pass an expression, --fixture, --input or --random"),
    };

    let notation: Notation = r.notation.parse()?;
    let convention: Convention = r.convention.parse()?;
    for src in &r.exprs {
        let element = match notation {
            Notation::Wedge => {
                let opts = ParseOptions { base: r.base, digit_runs: DigitRuns::Auto };
                parse_element(src, n, opts)?
            }
            Notation::Vinberg => parse_vinberg(src, n)?,
            Notation::Ket => {
                let layout = match &parts {
                    Some(p) => QuditLayout::new(p.clone(), convention)?,
                    None if n % 2 == 0 => QuditLayout::qubits(n / 2, convention),
                    None => bail!("kets need --parts when n is odd"),
                };
                let (t, notes) = parse_ket_with_notes(src, &layout)?;
                for note in notes {
                    log::info!("{src}: {note}");
                }
                layout.to_contiguous(&t)?
            }
        };
        tensors.push(Tensor { name: src.clone(), element });
    }

    if let Some(rank) = r.random {
        let shape = match &parts {
            Some(p) => Shape::Multipartite(QuditLayout::new(p.clone(), Convention::Contiguous)?),
            None => Shape::Exterior { n, k: r.k },
        };
        let element = random_tensor(rank, &shape, r.seed)?;
        tensors.push(Tensor { name: format!("random rank {rank} seed {}", r.seed), element });
    }

    if tensors.is_empty() {
        bail!("no tensor given: pass an expression, --fixture, --input or --random");
    }
    Ok(Resolved { spec: spec.expect("set above"), tensors, parts })
}
