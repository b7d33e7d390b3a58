//! The commands, as functions returning a text and a structured report.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use braidmon::covers::{boundary_loop_quotient, rs_presentation, BoundaryQuotient, RsResult, SubtreePolicy};
use braidmon::factorization::{apply_regeneration, Bmf, Census, Doubling};
use braidmon::halftwist::{BandRule, ConjugationRule, Conventions, Label, LabelMap};
use braidmon::mcg::{lift_factorization, Lift, LiftStep, Mat2, Seeds};
use braidmon::vankampen::{presentation_affine, presentation_projective, tietze_simplify, LoggedMove, TietzePolicy};
use braidmon::{AbelianGroup, Presentation};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::fixtures;
use crate::formats::{parse_monodromy, parse_seeds, MonodromyFile};
use crate::grammar::{parse_bmf, print_bmf};

/// A factorization together with where it came from.
#[derive(Clone, Debug)]
pub struct Source {
    /// Fixture name or file path.
    pub name: String,
    /// The factorization.
    pub bmf: Bmf,
    /// Conventions from the calibration record.
    pub conventions: Conventions,
    /// Path without extension, for `.monodromy` and `.seeds` companions.
    pub stem: PathBuf,
}

/// Loads exactly one of `--input` and `--fixture`.
pub fn load(input: Option<&Path>, fixture: Option<&str>) -> Result<Source, CliError> {
    let conventions = fixtures::conventions()?;
    let (name, text, stem) = match (input, fixture) {
        (Some(p), None) => (p.display().to_string(), fixtures::read(p)?, p.with_extension("")),
        (None, Some(f)) => (f.to_string(), fixtures::bmf_text(f)?, fixtures::dir().join(f)),
        _ => return Err(CliError::Usage("give exactly one of --input FILE or --fixture NAME".into())),
    };
    let bmf = parse_bmf(&text).map_err(|source| CliError::Parse { path: name.clone(), source })?;
    Ok(Source { name, bmf, conventions, stem })
}

/// Loads a named fixture.
pub fn fixture(name: &str) -> Result<Source, CliError> {
    load(None, Some(name))
}

/// A command result.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    /// 0 when every check passed, 1 otherwise.
    pub status: i32,
    /// Human-readable form.
    pub text: String,
    /// Structured form.
    pub json: Value,
}

impl Report {
    fn new(ok: bool, text: String, json: Value) -> Self {
        Report { status: if ok { 0 } else { 1 }, text, json }
    }
}

fn conventions_json(c: Conventions) -> Value {
    json!({
        "conjugation": match c.conjugation {
            ConjugationRule::Successive => "successive",
            ConjugationRule::Product => "product",
        },
        "band": match c.band {
            BandRule::Standard => "standard",
            BandRule::Swapped => "swapped",
        },
    })
}

fn census_json(c: &Census) -> Value {
    json!({
        "branch": c.branch, "node": c.node, "cusp": c.cusp, "tangency": c.tangency,
        "multiple": c.multiple, "other": c.other, "total": c.total,
    })
}

fn census_text(c: &Census) -> String {
    format!(
        "branch {}, node {}, cusp {}, tangency {}, multiple {}, total {}",
        c.branch, c.node, c.cusp, c.tangency, c.multiple, c.total
    )
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Full-twist check, census and forgetting degrees.
pub fn validate(src: &Source) -> Result<Report, CliError> {
    let b = &src.bmf;
    let conv = src.conventions;
    let delta = b.is_delta_squared(conv)?;
    let census = b.census()?;
    let n = b.strands() as i64;
    let degrees = b.forgetting_degrees(conv)?;
    let degrees_ok = degrees.iter().all(|&(_, d)| d == 2);
    let total_ok = census.total == n * (n - 1);
    let others: Vec<Value> = Conventions::ALL
        .iter()
        .map(|&c| Ok(json!({"conventions": conventions_json(c), "delta_squared": b.is_delta_squared(c)?})))
        .collect::<Result<_, braidmon::Error>>()?;
    let ok = delta && degrees_ok && total_ok;
    let mut t = String::new();
    writeln!(t, "source: {}", src.name).unwrap();
    writeln!(t, "strands: {}, factors: {}", n, b.factors.len()).unwrap();
    writeln!(t, "delta-squared: {}", yes(delta)).unwrap();
    writeln!(t, "census: {} (expected total {})", census_text(&census), n * (n - 1)).unwrap();
    let ds: Vec<String> = degrees.iter().map(|(i, d)| format!("{i}:{d}")).collect();
    writeln!(t, "forgetting degrees: {}", if ds.is_empty() { "none".into() } else { ds.join(" ") }).unwrap();
    writeln!(t, "status: {}", if ok { "pass" } else { "fail" }).unwrap();
    let json = json!({
        "source": src.name,
        "strands": n,
        "factors": b.factors.len(),
        "conventions": conventions_json(conv),
        "delta_squared": delta,
        "delta_squared_by_convention": others,
        "census": census_json(&census),
        "forgetting_degrees": degrees.iter().map(|(i, d)| json!({"pair": i, "degree": d})).collect::<Vec<_>>(),
        "pass": ok,
    });
    Ok(Report::new(ok, t, json))
}

/// Singularity counts.
pub fn census(src: &Source) -> Result<Report, CliError> {
    let c = src.bmf.census()?;
    Ok(Report::new(true, format!("{}\n", census_text(&c)), census_json(&c)))
}

/// Forgetting degree of one pair, or of all.
pub fn forget(src: &Source, pair: Option<u32>) -> Result<Report, CliError> {
    let all = src.bmf.forgetting_degrees(src.conventions)?;
    let rows: Vec<(u32, i64)> = match pair {
        Some(i) => vec![(i, src.bmf.forgetting_degree(i, src.conventions)?)],
        None => all,
    };
    let text: String = rows.iter().map(|(i, d)| format!("f{i}: {d}\n")).collect();
    let json = json!(rows.iter().map(|(i, d)| json!({"pair": i, "degree": d})).collect::<Vec<_>>());
    Ok(Report::new(true, text, json))
}

fn insert_partners(map: &LabelMap, fs: &[braidmon::Factor]) -> Result<LabelMap, braidmon::Error> {
    let mut labels = map.labels().to_vec();
    let mut wanted: Vec<Label> = Vec::new();
    for f in fs {
        wanted.extend(f.base_labels());
        for c in &f.conjugators {
            wanted.extend(c.base_labels());
        }
    }
    for l in wanted {
        if !labels.contains(&l) {
            let at = labels.iter().position(|&x| x == l.partner()).map_or(labels.len(), |i| i + usize::from(l.primed));
            labels.insert(at, l);
        }
    }
    LabelMap::new(labels)
}

/// Replaces one factor by its regeneration; new labels go next to their partners.
pub fn regenerate(src: &Source, factor: usize, rule: u8, doubling: Doubling) -> Result<Report, CliError> {
    let b = &src.bmf;
    let f = factor
        .checked_sub(1)
        .and_then(|i| b.factors.get(i))
        .ok_or_else(|| CliError::Usage(format!("no factor {factor}; there are {}", b.factors.len())))?;
    let out = apply_regeneration(f, rule, doubling)?;
    let labels = insert_partners(&b.labels, &out)?;
    let mut factors = b.factors.clone();
    factors.splice(factor - 1..factor, out.iter().cloned());
    let nb = Bmf::new(labels, factors);
    let text = print_bmf(&nb);
    let json = json!({
        "replaced": factor,
        "rule": rule,
        "factors": out.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "bmf": text,
    });
    Ok(Report::new(true, text, json))
}

/// Appends the missing branch points.
pub fn complete(src: &Source) -> Result<Report, CliError> {
    let done = src.bmf.complete_branch_points(src.conventions)?;
    let added = done.factors.len() - src.bmf.factors.len();
    let text = print_bmf(&done);
    let json = json!({"added": added, "bmf": text, "delta_squared": done.is_delta_squared(src.conventions)?});
    Ok(Report::new(true, text, json))
}

/// The affine presentation of the curve complement.
pub fn affine(src: &Source) -> Result<Presentation, CliError> {
    Ok(presentation_affine(&src.bmf, src.conventions)?)
}

/// The affine presentation plus the relation at infinity.
pub fn projective(src: &Source) -> Result<Presentation, CliError> {
    let p = affine(src)?;
    let order = p.generators().to_vec();
    Ok(presentation_projective(&p, &order)?)
}

fn presentation_json(p: &Presentation) -> Value {
    json!({
        "generators": p.generators(),
        "relators": p.relators().iter().map(|r| p.render(r)).collect::<Vec<_>>(),
    })
}

fn moves_json(moves: &[LoggedMove]) -> Value {
    json!(moves.iter().map(|m| m.step.to_string()).collect::<Vec<_>>())
}

/// The curve complement group, optionally simplified and abelianized.
pub fn pi1(src: &Source, projective_: bool, simplify: bool, abelianize: bool) -> Result<Report, CliError> {
    let p = if projective_ { projective(src)? } else { affine(src)? };
    let (p, moves) = if simplify { tietze_simplify(&p, TietzePolicy::default()) } else { (p, Vec::new()) };
    let mut t = p.to_string();
    for m in &moves {
        writeln!(t, "move: {}", m.step).unwrap();
    }
    let mut json = presentation_json(&p);
    json["moves"] = moves_json(&moves);
    if abelianize {
        let a = p.abelianization()?;
        writeln!(t, "abelianization: {a}").unwrap();
        json["abelianization"] = json!(a.to_string());
    }
    Ok(Report::new(true, t, json))
}

fn companion(src: &Source, explicit: Option<&Path>, ext: &str) -> Result<String, CliError> {
    let p = match explicit {
        Some(p) => p.to_path_buf(),
        None => src.stem.with_extension(ext),
    };
    if explicit.is_none() && !p.is_file() {
        return Err(CliError::Usage(format!("no .{ext} file next to {}; pass one explicitly", src.name)));
    }
    fixtures::read(&p)
}

/// Reads the monodromy file for a source.
pub fn monodromy_for(src: &Source, explicit: Option<&Path>) -> Result<MonodromyFile, CliError> {
    let text = companion(src, explicit, "monodromy")?;
    parse_monodromy(&text).map_err(|source| CliError::Parse { path: format!("{} monodromy", src.name), source })
}

/// Reads the seed file for a source.
pub fn seeds_for(src: &Source, explicit: Option<&Path>) -> Result<Seeds, CliError> {
    let text = companion(src, explicit, "seeds")?;
    parse_seeds(&text).map_err(|source| CliError::Parse { path: format!("{} seeds", src.name), source })
}

/// Everything computed by the Reidemeister–Schreier route.
#[derive(Clone, Debug)]
pub struct RsOutcome {
    /// Simplified projective presentation fed to the rewriting.
    pub base: Presentation,
    /// The rewriting.
    pub rs: RsResult,
    /// The boundary quotient.
    pub quotient: BoundaryQuotient,
    /// Its abelianization.
    pub group: AbelianGroup,
}

/// Simplified projective presentation, then rewriting and boundary quotient.
pub fn run_rs(src: &Source, m: &MonodromyFile) -> Result<RsOutcome, CliError> {
    let (base, _) = tietze_simplify(&projective(src)?, TietzePolicy::default());
    let map = m.resolve(&base)?;
    let rs = rs_presentation(&base, &map, SubtreePolicy::default(), 1)?;
    let quotient = boundary_loop_quotient(&rs)?;
    let group = quotient.simplified.abelianization()?;
    Ok(RsOutcome { base, rs, quotient, group })
}

/// Everything computed by the mapping class group route.
#[derive(Clone, Debug)]
pub struct McgOutcome {
    /// The lift.
    pub lift: Lift,
    /// Composite matrix of the lift.
    pub product: Mat2,
    /// Cokernel of the relation lattice.
    pub group: AbelianGroup,
    /// Every column of `M − I` has even `β` coefficient.
    pub in_alpha_two_beta: bool,
}

/// Lifts and computes the cokernel.
pub fn run_mcg(src: &Source, seeds: &Seeds) -> Result<McgOutcome, CliError> {
    let lift = lift_factorization(&src.bmf, seeds, src.conventions)?;
    let product = lift.factorization.matrix()?;
    let group = lift.factorization.cokernel()?;
    let rel = lift.factorization.relation_matrix()?;
    let in_alpha_two_beta = (0..rel.cols()).all(|j| rel.get(1, j) % 2 == 0);
    Ok(McgOutcome { lift, product, group, in_alpha_two_beta })
}

fn rs_report(o: &RsOutcome) -> Report {
    let rs = &o.rs;
    let mut t = String::new();
    writeln!(t, "method: reidemeister-schreier").unwrap();
    writeln!(t, "input:").unwrap();
    t.push_str(&o.base.to_string());
    let tree: Vec<String> = rs.transversal.tree.iter().map(|k| format!("γ{k}")).collect();
    writeln!(t, "subtree: {}", tree.join(" ")).unwrap();
    let src_names: Vec<String> = o.base.generators().to_vec();
    let reps: Vec<String> =
        rs.transversal.reps.iter().map(|w| if w.is_empty() { "Id".into() } else { w.render(&src_names) }).collect();
    writeln!(t, "schreier set: {}", reps.join(", ")).unwrap();
    let mut etas = Vec::new();
    for e in &rs.etas {
        let w = if e.is_identity() { "Id".to_string() } else { e.word.render(&src_names) };
        writeln!(t, "{} = {}", e.name(), w).unwrap();
        etas.push(json!({"name": e.name(), "word": w, "identity": e.is_identity()}));
    }
    writeln!(t, "generators: {}", rs.presentation.rank()).unwrap();
    writeln!(t, "killed: {}", o.quotient.killed.join(" ")).unwrap();
    for p in &o.quotient.products {
        writeln!(t, "adjoined: {p}").unwrap();
    }
    writeln!(t, "quotient:").unwrap();
    t.push_str(&o.quotient.simplified.to_string());
    writeln!(t, "group: {}", o.group).unwrap();
    let json = json!({
        "method": "rs",
        "input": presentation_json(&o.base),
        "subtree": rs.transversal.tree,
        "schreier_set": reps,
        "etas": etas,
        "subgroup": presentation_json(&rs.presentation),
        "killed": o.quotient.killed,
        "adjoined": o.quotient.products,
        "quotient": presentation_json(&o.quotient.simplified),
        "moves": moves_json(&o.quotient.moves),
        "group": o.group.to_string(),
    });
    Report::new(true, t, json)
}

fn mcg_report(o: &McgOutcome) -> Report {
    let mut t = String::new();
    writeln!(t, "method: mapping-class-group").unwrap();
    let mut steps = Vec::new();
    for (i, s) in o.lift.steps.iter().enumerate() {
        let (line, v) = match s {
            LiftStep::Dropped => ("cusp, dropped".to_string(), json!({"factor": i + 1, "kind": "dropped"})),
            LiftStep::Seeded(tw) => (
                format!("{tw} (seed)"),
                json!({"factor": i + 1, "kind": "seed", "twist": tw.to_string(), "matrix": tw.matrix().ok().map(|m| m.m)}),
            ),
            LiftStep::Conjugated { twist, base, by } => (
                format!("{twist} (conjugate of factor {base}, moved by {by})"),
                json!({"factor": i + 1, "kind": "conjugate", "base": base, "by": by.m, "twist": twist.to_string(), "matrix": twist.matrix().ok().map(|m| m.m)}),
            ),
        };
        writeln!(t, "factor {}: {line}", i + 1).unwrap();
        steps.push(v);
    }
    let seq: Vec<String> = o.lift.factorization.twists.iter().map(|t| t.to_string()).collect();
    writeln!(t, "sequence: {}", seq.join(" · ")).unwrap();
    let identity = o.product == Mat2::IDENTITY;
    writeln!(t, "product: {} (identity: {})", o.product, yes(identity)).unwrap();
    writeln!(t, "images of M - I in span(α, 2β): {}", yes(o.in_alpha_two_beta)).unwrap();
    writeln!(t, "group: {}", o.group).unwrap();
    let json = json!({
        "method": "mcg",
        "steps": steps,
        "sequence": seq,
        "product": o.product.m,
        "identity": identity,
        "in_alpha_two_beta": o.in_alpha_two_beta,
        "group": o.group.to_string(),
    });
    Report::new(identity, t, json)
}

/// Which route `surface-pi1` takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Reidemeister–Schreier on the triple cover.
    Rs,
    /// Lift to the torus mapping class group.
    Mcg,
}

/// The fundamental group of the surface minus its singular points.
pub fn surface_pi1(
    src: &Source,
    method: Method,
    monodromy: Option<&Path>,
    seeds: Option<&Path>,
) -> Result<Report, CliError> {
    match method {
        Method::Rs => Ok(rs_report(&run_rs(src, &monodromy_for(src, monodromy)?)?)),
        Method::Mcg => Ok(mcg_report(&run_mcg(src, &seeds_for(src, seeds)?)?)),
    }
}

/// The lift alone.
pub fn lift(src: &Source, seeds: Option<&Path>) -> Result<Report, CliError> {
    Ok(mcg_report(&run_mcg(src, &seeds_for(src, seeds)?)?))
}

/// Lists fixture names.
pub fn fixtures_list() -> Result<Report, CliError> {
    let names = fixtures::list()?;
    let text = names.iter().map(|n| format!("{n}\n")).collect();
    Ok(Report::new(true, text, json!({"directory": fixtures::dir().display().to_string(), "fixtures": names})))
}
