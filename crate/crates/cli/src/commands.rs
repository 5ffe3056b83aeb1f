use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use num_rational::BigRational;
use serde_json::json;

use adjprof_core::algebra::structure::{self, cache_file_name};
use adjprof_core::algebra::Algebra;
use adjprof_core::linalg::charpoly::{CharPolyMethod, CharPolyOptions};
use adjprof_core::linalg::{Field, PrimeField, Rationals, GAUSSIAN_PRIME};
use adjprof_core::profiles::{
    char_and_root_profile, classify, compare, comparison_bound, division_bound, rank_profile, trace_powers,
    Calibration, ProfileReport, RankProfile,
};
use adjprof_core::profiles::bounds::Invariants;
use adjprof_core::tensor_io::{fixture, fixture_names, random_tensor, AlgebraSpec, Convention, QuditLayout, Shape};

use crate::field::{with_field, Concrete};

use crate::source::{self, Resolved};
use crate::{AlgebraArgs, CacheAction, Cli, Command, Format, RunArgs};

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let cache = cli.cache_dir.as_deref();
    match &cli.command {
        Command::AlgebraInfo(a) => algebra_info(a, cache),
        Command::Profile(r) => profile(r, cache),
        Command::Tracepowers { run, k_max } => tracepowers(run, *k_max, cache),
        Command::Charpoly { run, beta, period } => charpoly(run, beta.as_deref(), *period, cache),
        Command::Classify(r) => classify_cmd(r, cache),
        Command::Compare { run, roots } => compare_cmd(run, *roots, cache),
        Command::Bound { run, calibrate, max_rank } => bound(run, calibrate.as_deref(), *max_rank, cache),
        Command::Cache { action } => cache_cmd(action, cache),
        Command::Fixtures { format } => list_fixtures(*format),
    }
}

fn spec_label(s: &AlgebraSpec) -> String {
    match s {
        AlgebraSpec::Graded { n, step: 1 } => format!("n={n} full"),
        AlgebraSpec::Graded { n, step } => format!("n={n} d={step}"),
        AlgebraSpec::Multipartite { parts, all_levels } => {
            let p: Vec<String> = parts.iter().map(|d| d.to_string()).collect();
            format!("parts={} levels={}", p.join(","), if *all_levels { "all" } else { "one" })
        }
    }
}

fn char_opts(dim: usize) -> CharPolyOptions {
    let mut o = CharPolyOptions::default();
    if dim > o.rational_limit {
        o.method = CharPolyMethod::MultiModular;
    }
    o
}

struct Session {
    res: Resolved,
    alg: Algebra,
}

fn session(r: &RunArgs, cache: Option<&std::path::Path>) -> Result<Session> {
    let res = source::resolve(r)?;
    let t0 = Instant::now();
    let alg = source::build(&res.spec, cache)?;
    log::info!("algebra {} of dimension {} ready in {:.2?}", spec_label(&res.spec), alg.dim(), t0.elapsed());
    for t in &res.tensors {
        alg.check_element(&t.element).with_context(|| format!("tensor {}", t.name))?;
    }
    Ok(Session { res, alg })
}

impl Session {
    fn field(&self, r: &RunArgs) -> Option<Concrete> {
        let ts: Vec<_> = self.res.tensors.iter().map(|t| &t.element).collect();
        r.field.resolve(self.alg.dim(), &ts)
    }

    fn persist(&self) {
        if let Err(e) = self.alg.persist() {
            log::warn!("cache not written: {e}");
        }
    }
}

fn profile_in<F: Field>(f: &F, s: &Session, i: usize, limit: Option<usize>) -> Result<RankProfile> {
    let t0 = Instant::now();
    let p = rank_profile(f, &s.alg, &s.res.tensors[i].element, limit)?;
    log::info!("{}: {} powers over {} in {:.2?}", s.res.tensors[i].name, p.rows.len(), f.name(), t0.elapsed());
    Ok(p)
}

/// Profile in the requested field; `verify` runs Q and a prime and insists they agree.
fn profile_any(r: &RunArgs, s: &Session, i: usize) -> Result<(RankProfile, String)> {
    match s.field(r) {
        Some(c) => with_field!(c, f => Ok((profile_in(f, s, i, r.power_limit)?, f.name()))),
        None => {
            let q = profile_in(&Rationals, s, i, r.power_limit)?;
            let p = PrimeField::new(GAUSSIAN_PRIME)?;
            let m = profile_in(&p, s, i, r.power_limit)?;
            if q != m {
                bail!("{}: rational and mod {} profiles differ", s.res.tensors[i].name, p.p());
            }
            Ok((q, format!("rational (verified mod {})", p.p())))
        }
    }
}

fn algebra_info(a: &AlgebraArgs, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    let spec = source::spec_from_flags(a)?.context("algebra-info needs --n (and --grading) or --parts")?;
    let alg = source::build(&spec, cache)?;
    let layout = alg.layout();
    let grades: Vec<(usize, usize)> = layout.labels().iter().copied().zip(layout.sizes().iter().copied()).collect();
    let sum: usize = grades.iter().map(|g| g.1).sum();
    let cache_status = match alg.cache_file() {
        None if cache.is_none() => "disabled".to_string(),
        None => "not cached (multipartite)".to_string(),
        Some(p) if p.exists() => format!("{} ({} classes loaded)", p.display(), alg.computed_classes().len()),
        Some(p) => format!("{} (absent)", p.display()),
    };
    match a.format {
        Format::Json => {
            let v = json!({
                "algebra": alg.label(),
                "description": spec_label(&spec),
                "grades": grades.iter().map(|(g, s)| json!({"grade": g, "size": s})).collect::<Vec<_>>(),
                "dim": alg.dim(),
                "cache": cache_status,
            });
            out!("{}", serde_json::to_string(&v)?);
        }
        Format::Csv => {
            out!("grade,size");
            for (g, s) in &grades {
                out!("{g},{s}");
            }
        }
        Format::Text => {
            out!("algebra {}", spec_label(&spec));
            out!("dimension {}", alg.dim());
            for (g, s) in &grades {
                out!("  grade {g:>2}: {s}");
            }
            let terms: Vec<String> = grades.iter().map(|g| g.1.to_string()).collect();
            out!("dimension audit: {} = {sum}", terms.join(" + "));
            if let AlgebraSpec::Graded { n, step: 1 } = spec {
                let closed = (n * n - 1) + (1usize << n) - 2;
                out!("  full grading: (n^2 - 1) + (2^n - 2) = {closed}");
            }
            out!("bracket normalization {}", alg.label().normalization);
            out!("blocks {}", layout.count());
            out!("cache {cache_status}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn profile(r: &RunArgs, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    let s = session(r, cache)?;
    let fmt = r.algebra.format;
    let mut csv_header = false;
    for (i, t) in s.res.tensors.iter().enumerate() {
        let (p, field) = profile_any(r, &s, i)?;
        match fmt {
            Format::Json => {
                let rep = ProfileReport::new(s.alg.label(), field, t.element.to_string(), &p);
                out!("{}", serde_json::to_string(&rep)?);
            }
            Format::Csv => {
                if !csv_header {
                    out!("tensor,power,{}", p.column_names().join(","));
                    csv_header = true;
                }
                for line in p.to_csv().lines().skip(1) {
                    out!("\"{}\",{line}", t.name);
                }
            }
            Format::Text => {
                out!("# {} in {} (dim {}, {field})", t.name, spec_label(&s.res.spec), s.alg.dim());
                out!("{p}");
            }
        }
    }
    s.persist();
    Ok(ExitCode::SUCCESS)
}

fn tracepowers(r: &RunArgs, k_max: usize, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    if k_max == 0 {
        bail!("--k-max must be at least 1");
    }
    let s = session(r, cache)?;
    let c = s.field(r).unwrap_or(Concrete::Rational(Rationals));
    for t in &s.res.tensors {
        let (vals, name) = with_field!(c, f => {
            let v = trace_powers(f, &s.alg, &t.element, k_max)?;
            (v.iter().map(|x| f.format(x)).collect::<Vec<_>>(), f.name())
        });
        match r.algebra.format {
            Format::Json => out!("{}", serde_json::to_string(&json!({"tensor": t.name, "field": name, "trace_powers": vals}))?),
            Format::Csv => {
                for (k, v) in vals.iter().enumerate() {
                    out!("\"{}\",{},{v}", t.name, k + 1);
                }
            }
            Format::Text => {
                out!("# {} ({name})", t.name);
                for (k, v) in vals.iter().enumerate() {
                    out!("f{} = {v}", k + 1);
                }
            }
        }
    }
    s.persist();
    Ok(ExitCode::SUCCESS)
}

fn charpoly(r: &RunArgs, beta: Option<&str>, period: Option<usize>, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    let s = session(r, cache)?;
    let opts = char_opts(s.alg.dim());
    let beta: Option<BigRational> = beta.map(|b| b.parse().map_err(|_| anyhow::anyhow!("bad --beta {b:?}"))).transpose()?;
    for t in &s.res.tensors {
        let t0 = Instant::now();
        let (chi, roots) = char_and_root_profile(&s.alg, &t.element, &opts)?;
        log::info!("{}: characteristic polynomial in {:.2?}", t.name, t0.elapsed());
        let calibrated = match &beta {
            Some(b) => {
                let period = period.unwrap_or_else(|| Calibration::natural_period(&chi));
                let cal = Calibration { beta: b.clone(), period };
                Some(adjprof_core::profiles::RootProfile::of(&cal.apply(&chi)?))
            }
            None => None,
        };
        match r.algebra.format {
            Format::Json => {
                let v = json!({
                    "tensor": t.name,
                    "degree": roots.degree(),
                    "zero_multiplicity": roots.zero_multiplicity(),
                    "roots": roots.notation(),
                    "factored": roots.factored(),
                    "char_poly": adjprof_core::profiles::report::CharPolyReport::from_roots(&roots),
                    "calibrated": calibrated.as_ref().map(|c| c.factored()),
                });
                out!("{}", serde_json::to_string(&v)?);
            }
            Format::Csv | Format::Text => {
                out!("# {}", t.name);
                out!("chi = {}", roots.factored());
                out!("roots {}", roots.notation());
                if let Some(c) = calibrated {
                    out!("calibrated chi = {}", c.factored());
                }
            }
        }
    }
    s.persist();
    Ok(ExitCode::SUCCESS)
}

fn classify_cmd(r: &RunArgs, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    let s = session(r, cache)?;
    let opts = char_opts(s.alg.dim());
    let c = s.field(r).unwrap_or(Concrete::Rational(Rationals));
    for t in &s.res.tensors {
        let cl = with_field!(c, f => classify(f, &s.alg, &t.element, &opts)?);
        match r.algebra.format {
            Format::Json => out!("{}", serde_json::to_string(&json!({"tensor": t.name, "classification": cl}))?),
            Format::Csv => out!("\"{}\",{}", t.name, cl.kind),
            Format::Text => out!("{}: {cl}", t.name),
        }
    }
    s.persist();
    Ok(ExitCode::SUCCESS)
}

fn compare_cmd(r: &RunArgs, roots: bool, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    let s = session(r, cache)?;
    if s.res.tensors.len() != 2 {
        bail!("compare needs exactly two tensors, got {}", s.res.tensors.len());
    }
    let opts = char_opts(s.alg.dim());
    let mut inv = Vec::new();
    for i in 0..2 {
        let (p, _) = profile_any(r, &s, i)?;
        let rp = if roots { Some(char_and_root_profile(&s.alg, &s.res.tensors[i].element, &opts)?.1) } else { None };
        inv.push(Invariants { rank_profile: p, roots: rp, classification: None });
    }
    let v = compare(&inv[0], &inv[1])?;
    let (a, b) = (&s.res.tensors[0].name, &s.res.tensors[1].name);
    match r.algebra.format {
        Format::Json => out!("{}", serde_json::to_string(&json!({"a": a, "b": b, "result": v}))?),
        Format::Csv => out!("\"{a}\",\"{b}\",{}", v.is_separated()),
        Format::Text => out!("{a} vs {b}: {v}"),
    }
    s.persist();
    Ok(if v.is_separated() { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn bound(r: &RunArgs, calibrate: Option<&str>, max_rank: usize, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    let s = session(r, cache)?;
    let c = s.field(r).unwrap_or(Concrete::Prime(PrimeField::new(GAUSSIAN_PRIME)?));
    let unit = match calibrate {
        Some(name) => {
            let f = fixture(name)?;
            s.alg.check_element(&f.element).with_context(|| format!("calibration fixture {name}"))?;
            Some(with_field!(c, fld => rank_profile(fld, &s.alg, &f.element, r.power_limit)?))
        }
        None => None,
    };
    for (i, t) in s.res.tensors.iter().enumerate() {
        let p = with_field!(c, f => profile_in(f, &s, i, r.power_limit)?);
        let shape = match &s.res.parts {
            Some(parts) => Shape::Multipartite(QuditLayout::new(parts.clone(), Convention::Contiguous)?),
            None => {
                let k = t.element.pure_degree().context("bounds need a pure-grade tensor")?;
                Shape::Exterior { n: s.alg.n(), k }
            }
        };
        let mut generic = Vec::new();
        for rank in 1..=max_rank {
            let g = random_tensor(rank, &shape, r.seed.wrapping_add(rank as u64))?;
            let gp = with_field!(c, f => rank_profile(f, &s.alg, &g, Some(p.rows.len()))?);
            generic.push((rank, gp));
        }
        let cmp = comparison_bound(&p, &generic);
        let div = unit.as_ref().map(|u| division_bound(&p, u)).transpose()?;
        match r.algebra.format {
            Format::Json => {
                out!("{}", serde_json::to_string(&json!({"tensor": t.name, "comparison": cmp, "division": div}))?)
            }
            Format::Csv => out!(
                "\"{}\",{},{}",
                t.name,
                cmp.border_rank_at_least,
                div.as_ref().map(|d| d.bound.to_string()).unwrap_or_default()
            ),
            Format::Text => {
                out!("# {}", t.name);
                out_raw!("border rank >= {}", cmp.border_rank_at_least);
                match &cmp.witness {
                    Some(w) => out!(" ({w})"),
                    None => out!(""),
                }
                if let Some(d) = div {
                    out!("rank >= {} (total {} against unit {})", d.bound, d.total, d.unit_total);
                }
            }
        }
    }
    s.persist();
    Ok(ExitCode::SUCCESS)
}

fn cache_cmd(action: &CacheAction, cache: Option<&std::path::Path>) -> Result<ExitCode> {
    let dir = cache.context("no cache directory: set ADJPROF_CACHE_DIR or --cache-dir")?;
    let args = match action {
        CacheAction::Build(a) | CacheAction::Clear(a) => a,
        CacheAction::Verify { algebra, .. } => algebra,
    };
    let spec = source::spec_from_flags(args)?.context("cache commands need --n and --grading")?;
    let AlgebraSpec::Graded { n, step } = spec else {
        bail!("only full graded algebras are cached");
    };
    let path = dir.join(cache_file_name(adjprof_core::algebra::Grading::new(n, step)?));
    match action {
        CacheAction::Build(_) => {
            let t0 = Instant::now();
            let alg = source::build(&spec, Some(dir))?;
            fill(&alg)?;
            alg.persist()?;
            out!("built {} ({} classes) in {:.2?}", path.display(), alg.computed_classes().len(), t0.elapsed());
        }
        CacheAction::Clear(_) => {
            if path.exists() {
                std::fs::remove_file(&path).with_context(|| format!("removing {}", path.display()))?;
                out!("removed {}", path.display());
            } else {
                out!("nothing to remove at {}", path.display());
            }
        }
        CacheAction::Verify { fraction, seed, .. } => {
            if !path.exists() {
                bail!("no cache at {}", path.display());
            }
            let alg = source::build(&spec, None)?;
            let report = structure::verify(&path, &alg, *fraction, *seed);
            match report {
                Ok(rep) if rep.ok() => {
                    out!("OK {}: {} classes, {} records, {} pairs checked", path.display(), rep.classes, rep.records, rep.pairs_checked);
                }
                other => {
                    match other {
                        Ok(rep) => eprintln!("corrupt cache {}: {}", path.display(), rep.mismatches.join("; ")),
                        Err(e) => eprintln!("corrupt cache {}: {e}", path.display()),
                    }
                    std::fs::remove_file(&path)?;
                    let fresh = source::build(&spec, Some(dir))?;
                    fill(&fresh)?;
                    fresh.persist()?;
                    eprintln!("rebuilt {}", path.display());
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Computes every constant class of `alg`.
fn fill(alg: &Algebra) -> Result<()> {
    let nb = alg.layout().count();
    for a in 0..nb {
        for b in 0..nb {
            alg.class(a, b)?;
        }
    }
    Ok(())
}

fn list_fixtures(format: Format) -> Result<ExitCode> {
    let mut rows = Vec::new();
    for name in fixture_names() {
        let f = fixture(name)?;
        rows.push((f.name, spec_label(&f.algebra), f.restricted.as_ref().map(spec_label), f.source));
    }
    match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(n, a, r, s)| json!({"name": n, "algebra": a, "restricted": r, "source": s}))
                .collect();
            out!("{}", serde_json::to_string(&json!({"version": adjprof_core::tensor_io::FIXTURE_VERSION, "fixtures": v}))?);
        }
        Format::Csv => {
            out!("name,algebra,restricted");
            for (n, a, r, _) in &rows {
                out!("{n},{a},{}", r.clone().unwrap_or_default());
            }
        }
        Format::Text => {
            for (n, a, r, _) in &rows {
                match r {
                    Some(r) => out!("{n:26} {a:14} restricted {r}"),
                    None => out!("{n:26} {a}"),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
