//! Command-line front end: root data, path systems, point sets, oracle
//! checks, fixtures and sweeps, with JSON, CSV or text output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use demazure_pbw::demchar::{character_record, demazure_character, verify_against_points};
use demazure_pbw::fixtures::{fixtures_check, run_fixture, Status};
use demazure_pbw::ideal::{complement_min_generators, default_box, theorem_generators, upset_equality};
use demazure_pbw::pathgen::{paths_for_word, PathRecord};
use demazure_pbw::polytope::{
    build_system, enumerate_points, face_embedding_check, membership, minkowski_check, minkowski_decompose, normality_check,
    PointSet, System, SystemOptions,
};
use demazure_pbw::rootsys::{inversion_set, Family, LieType, ReflectionWord, RootSystem, Weight, WordVariant};
use demazure_pbw::sweep::{rows_to_csv, run_sweep, SweepConfig};
use demazure_pbw::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    A,
    B,
    C,
    D,
}

impl From<TypeArg> for Family {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::A => Family::A,
            TypeArg::B => Family::B,
            TypeArg::C => Family::C,
            TypeArg::D => Family::D,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum WordArg {
    Hatted,
    Full,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "demazure-pbw", version, about = "Polytopes, point sets and Demazure character checks for reflection words")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Lie type family.
    #[arg(long = "type", value_enum, global = true, ignore_case = true)]
    lie_type: Option<TypeArg>,

    #[arg(long, global = true)]
    rank: Option<usize>,

    /// Start index of the reflection word.
    #[arg(long, global = true, default_value_t = 1)]
    start: usize,

    /// Dominant weight `m1,...,mn`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    weight: Option<String>,

    /// Type D word variant.
    #[arg(long, value_enum, global = true)]
    word: Option<WordArg>,

    /// Keep inequalities implied by others.
    #[arg(long, global = true)]
    include_redundant: bool,

    /// Drop the coefficient inequalities.
    #[arg(long, global = true)]
    exclude_coefficient: bool,

    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[arg(long, global = true)]
    max_points: Option<usize>,

    /// Second weight for `minkowski`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Option<String>,

    /// Largest dilation for `normality`.
    #[arg(long, global = true, default_value_t = 3)]
    kmax: u32,

    /// Exponent vector in chain order, for `decompose` and `membership`.
    #[arg(long, global = true)]
    point: Option<String>,

    /// First letter of the suffix word for `face-check`.
    #[arg(long, global = true)]
    substart: Option<usize>,

    /// Type A hook end `k` for the word of `α_{start,k}`.
    #[arg(long, global = true)]
    hook_end: Option<usize>,

    /// Comparison box for the ideal commands, `b1,...,bd`.
    #[arg(long = "box", global = true)]
    bbox: Option<String>,

    /// Fixture identifier; all fixtures when omitted.
    #[arg(long, global = true)]
    fixture: Option<String>,

    /// Sweep families, e.g. `A,C`.
    #[arg(long, global = true)]
    types: Option<String>,

    /// Sweep ranks, e.g. `2,3,4` or `2-4`.
    #[arg(long, global = true)]
    ranks: Option<String>,

    /// Sweep weights with coordinate sum up to this value.
    #[arg(long, global = true, default_value_t = 2)]
    sum_max: i64,

    /// Add Minkowski checks to the sweep.
    #[arg(long, global = true)]
    minkowski: bool,

    /// Add normality checks to the sweep.
    #[arg(long, global = true)]
    normality: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Subcommand)]
enum Command {
    /// Positive roots with simple-root and weight coordinates.
    Roots,
    /// Inversion set of the word with its cover relations.
    Poset,
    /// Letters of the reflection word.
    Word,
    /// Path families with coefficients and bounds.
    Paths,
    /// Inequalities over the inversion-set coordinates.
    Inequalities,
    /// Lattice points at the weight.
    Points,
    /// Number of lattice points at the weight.
    Count,
    /// Membership of `--point`, listing violated inequalities.
    Membership,
    /// Demazure character at the weight.
    Character,
    /// Point count against the Demazure dimension.
    DimCheck,
    /// Point weights against the Demazure character.
    WeightCheck,
    /// `S(λ) + S(μ)` against `S(λ + μ)`.
    Minkowski,
    /// `S(kλ)` against the k-fold sum of `S(λ)`.
    Normality,
    /// Splits `--point` into fundamental summands.
    Decompose,
    /// Generators read off the paths.
    IdealGens,
    /// Minimal generators of the complement of the point set.
    IdealMinGens,
    /// Compares the two generator sets.
    IdealCheck,
    /// Suffix-word polytope against the face of the ambient polytope.
    FaceCheck,
    /// Regenerates the reference fixtures.
    Fixtures,
    /// Batched oracle checks over types, ranks and weights.
    Sweep,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

type CliResult<T> = Result<T, CliError>;

struct Outcome {
    body: String,
    pass: bool,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<T>().map_err(|_| input(format!("bad {what} entry {p:?}"))))
        .collect()
}

fn parse_ranks(s: &str) -> CliResult<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| input(format!("bad rank range {part:?}")))?;
                let b: usize = b.trim().parse().map_err(|_| input(format!("bad rank range {part:?}")))?;
                out.extend(a..=b);
            }
            None => out.push(part.trim().parse().map_err(|_| input(format!("bad rank {part:?}")))?),
        }
    }
    Ok(out)
}

impl Cli {
    fn lie_type(&self) -> CliResult<LieType> {
        let family = self.lie_type.ok_or_else(|| input("--type is required"))?;
        let rank = self.rank.ok_or_else(|| input("--rank is required"))?;
        Ok(LieType::new(family.into(), rank)?)
    }

    fn reflection_word(&self) -> CliResult<ReflectionWord> {
        let ty = self.lie_type()?;
        let variant = match (ty.family(), self.word) {
            (Family::D, Some(WordArg::Full)) => WordVariant::Full,
            (Family::D, _) => WordVariant::Hatted,
            (_, None) => WordVariant::Standard,
            (_, Some(w)) => {
                return Err(Error::VariantMismatch { lie_type: ty.to_string(), variant: format!("{w:?}").to_lowercase() }.into())
            }
        };
        let word = match self.hook_end {
            Some(k) => ReflectionWord::hook(ty, self.start, k)?,
            None => ReflectionWord::reflection(ty, self.start, variant)?,
        };
        Ok(word)
    }

    fn weight_arg(&self, raw: Option<&String>, name: &str) -> CliResult<Weight> {
        let ty = self.lie_type()?;
        let raw = raw.ok_or_else(|| input(format!("--{name} is required")))?;
        let w: Weight = raw.parse()?;
        if w.rank() != ty.rank() {
            return Err(Error::LengthMismatch { expected: ty.rank(), actual: w.rank() }.into());
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()).into());
        }
        Ok(w)
    }

    fn weight(&self) -> CliResult<Weight> {
        self.weight_arg(self.weight.as_ref(), "weight")
    }

    fn options(&self) -> SystemOptions {
        SystemOptions { include_redundant: self.include_redundant, exclude_coefficient: self.exclude_coefficient }
    }

    fn system(&self) -> CliResult<System> {
        Ok(build_system(&self.reflection_word()?, &self.options())?)
    }

    fn point(&self, dim: usize) -> CliResult<Vec<u32>> {
        let raw = self.point.as_ref().ok_or_else(|| input("--point is required"))?;
        let p: Vec<u32> = parse_list(raw, "point")?;
        if p.len() != dim {
            return Err(Error::LengthMismatch { expected: dim, actual: p.len() }.into());
        }
        Ok(p)
    }

    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

fn json<T: Serialize>(v: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn no_csv(cmd: &str) -> CliError {
    input(format!("csv output is not available for {cmd}"))
}

fn points_body(cli: &Cli, ps: &PointSet) -> CliResult<String> {
    Ok(match cli.format(Format::Json) {
        Format::Json => json(ps)?,
        Format::Csv => {
            let mut s = ps.order.join(",") + "\n";
            for p in &ps.points {
                s += &p.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut s = format!("# lambda {} order {}\n", Weight(ps.lambda.clone()), ps.order.join(" "));
            for p in &ps.points {
                s += &format!("{p:?}\n");
            }
            s + &format!("# count {}\n", ps.count)
        }
    })
}

#[derive(Serialize)]
struct RootRow {
    label: String,
    coeffs: Vec<i64>,
    weight: Vec<i64>,
}

#[derive(Serialize)]
struct PosetOut {
    lie_type: String,
    word: Vec<usize>,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

#[derive(Serialize)]
struct WordOut {
    lie_type: String,
    start: usize,
    end: usize,
    variant: String,
    suffix_from: Option<usize>,
    letters: Vec<usize>,
    length: usize,
    reduced: bool,
}

#[derive(Serialize)]
struct InequalityOut {
    id: String,
    kind: String,
    order: Vec<String>,
    coeffs: Vec<u32>,
    bound: Vec<u32>,
    text: String,
}

#[derive(Serialize)]
struct CountOut {
    lambda: Vec<i64>,
    count: usize,
}

#[derive(Serialize)]
struct DimOut {
    lambda: Vec<i64>,
    points: usize,
    dim: i64,
    pass: bool,
}

#[derive(Serialize)]
struct MinGensOut {
    lambda: Vec<i64>,
    order: Vec<String>,
    #[serde(rename = "box")]
    bbox: Vec<u32>,
    generators: Vec<Vec<u32>>,
    count: usize,
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let ok = |body: String| Ok(Outcome { body, pass: true });
    match cli.command {
        Command::Roots => {
            let rs = RootSystem::new(cli.lie_type()?);
            let rows: Vec<RootRow> = rs
                .positive_roots()
                .iter()
                .map(|r| RootRow { label: r.label(), coeffs: r.coeffs.clone(), weight: rs.root_to_weight(&r.coeffs).0 })
                .collect();
            match cli.format(Format::Json) {
                Format::Json => ok(json(&rows)?),
                Format::Csv => {
                    let mut s = String::from("label,coeffs,weight\n");
                    for r in &rows {
                        s += &format!("{},\"{}\",\"{}\"\n", r.label, Weight(r.coeffs.clone()), Weight(r.weight.clone()));
                    }
                    ok(s)
                }
                Format::Text => ok(rows.iter().map(|r| format!("{} {:?}\n", r.label, r.coeffs)).collect()),
            }
        }
        Command::Poset => {
            let word = cli.reflection_word()?;
            let p = inversion_set(&word)?;
            let labels = p.labels();
            let out = PosetOut {
                lie_type: word.lie_type().to_string(),
                word: word.letters().to_vec(),
                covers: p.covers().iter().map(|&(a, b)| (labels[a].clone(), labels[b].clone())).collect(),
                elements: labels,
            };
            match cli.format(Format::Json) {
                Format::Json => ok(json(&out)?),
                Format::Csv => Err(no_csv("poset")),
                Format::Text => ok(out.covers.iter().map(|(a, b)| format!("{a} -> {b}\n")).collect::<String>()),
            }
        }
        Command::Word => {
            let word = cli.reflection_word()?;
            let reduced = inversion_set(&word).is_ok();
            let out = WordOut {
                lie_type: word.lie_type().to_string(),
                start: word.start(),
                end: word.end(),
                variant: word.variant().to_string(),
                suffix_from: word.suffix_from(),
                letters: word.letters().to_vec(),
                length: word.len(),
                reduced,
            };
            match cli.format(Format::Json) {
                Format::Json => ok(json(&out)?),
                Format::Csv => Err(no_csv("word")),
                Format::Text => ok(out.letters.iter().map(|l| format!("s{l}")).collect::<Vec<_>>().join(" ") + "\n"),
            }
        }
        Command::Paths => {
            let paths = paths_for_word(&cli.reflection_word()?, cli.include_redundant)?;
            let records: Vec<PathRecord> = paths.iter().map(|p| p.record()).collect();
            match cli.format(Format::Json) {
                Format::Json => ok(json(&records)?),
                Format::Csv => Err(no_csv("paths")),
                Format::Text => ok(paths.iter().map(|p| format!("{}: {}\n", p.id, p.render())).collect()),
            }
        }
        Command::Inequalities => {
            let system = cli.system()?;
            let order = system.order();
            let rows: Vec<InequalityOut> = system
                .inequalities()
                .iter()
                .map(|q| InequalityOut {
                    id: q.path.id.clone(),
                    kind: q.path.kind.to_string(),
                    order: order.clone(),
                    coeffs: q.coeffs.clone(),
                    bound: q.path.bound.0.clone(),
                    text: q.path.render(),
                })
                .collect();
            match cli.format(Format::Json) {
                Format::Json => ok(json(&rows)?),
                Format::Csv => {
                    let n = system.word().lie_type().rank();
                    let mut s = order.join(",");
                    for l in 1..=n {
                        s += &format!(",m{l}");
                    }
                    s += ",id\n";
                    for r in &rows {
                        let cells: Vec<String> = r.coeffs.iter().chain(&r.bound).map(u32::to_string).collect();
                        s += &format!("{},{}\n", cells.join(","), r.id);
                    }
                    ok(s)
                }
                Format::Text => ok(rows.iter().map(|r| r.text.clone() + "\n").collect()),
            }
        }
        Command::Points => {
            let ps = enumerate_points(&cli.system()?, &cli.weight()?, cli.max_points)?;
            ok(points_body(cli, &ps)?)
        }
        Command::Count => {
            let ps = enumerate_points(&cli.system()?, &cli.weight()?, cli.max_points)?;
            let out = CountOut { lambda: ps.lambda, count: ps.count };
            match cli.format(Format::Json) {
                Format::Json => ok(json(&out)?),
                Format::Csv => ok(format!("lambda,count\n\"{}\",{}\n", Weight(out.lambda), out.count)),
                Format::Text => ok(format!("{}\n", out.count)),
            }
        }
        Command::Membership => {
            let system = cli.system()?;
            let m = membership(&system, &cli.weight()?, &cli.point(system.dim())?)?;
            let pass = m.inside;
            let body = match cli.format(Format::Json) {
                Format::Json => json(&m)?,
                Format::Csv => return Err(no_csv("membership")),
                Format::Text => {
                    let mut s = format!("inside: {}\n", m.inside);
                    for v in &m.violated {
                        s += &format!("{}: {} > {} (slack {})\n", v.path, v.lhs, v.rhs, v.slack);
                    }
                    s
                }
            };
            Ok(Outcome { body, pass })
        }
        Command::Character => {
            let word = cli.reflection_word()?;
            let lam = cli.weight()?;
            let rec = character_record(&word, &lam, &demazure_character(&word, &lam)?);
            match cli.format(Format::Json) {
                Format::Json => ok(json(&rec)?),
                Format::Csv => {
                    let mut s = String::from("weight,mult\n");
                    for t in &rec.terms {
                        s += &format!("\"{}\",{}\n", Weight(t.weight.clone()), t.mult);
                    }
                    ok(s)
                }
                Format::Text => ok(format!("dim {}\n", rec.dim)),
            }
        }
        Command::DimCheck | Command::WeightCheck => {
            let word = cli.reflection_word()?;
            let lam = cli.weight()?;
            let ps = enumerate_points(&cli.system()?, &lam, cli.max_points)?;
            let report = verify_against_points(&word, &lam, &ps)?;
            let (pass, body) = if cli.command == Command::DimCheck {
                let out = DimOut { lambda: lam.0.clone(), points: report.points, dim: report.dim, pass: report.dim_match };
                let body = match cli.format(Format::Json) {
                    Format::Json => json(&out)?,
                    Format::Csv => format!("lambda,points,dim,pass\n\"{lam}\",{},{},{}\n", out.points, out.dim, out.pass),
                    Format::Text => format!("{}: points {} dim {}\n", if out.pass { "pass" } else { "fail" }, out.points, out.dim),
                };
                (out.pass, body)
            } else {
                let body = match cli.format(Format::Json) {
                    Format::Json => json(&report)?,
                    Format::Csv => return Err(no_csv("weight-check")),
                    Format::Text => format!(
                        "{}: points {} dim {} first mismatch {:?}\n",
                        if report.pass() { "pass" } else { "fail" },
                        report.points,
                        report.dim,
                        report.first_mismatch
                    ),
                };
                (report.pass(), body)
            };
            Ok(Outcome { body, pass })
        }
        Command::Minkowski => {
            let mu = cli.weight_arg(cli.mu.as_ref(), "mu")?;
            let r = minkowski_check(&cli.system()?, &cli.weight()?, &mu, cli.max_points)?;
            let body = match cli.format(Format::Json) {
                Format::Json => json(&r)?,
                Format::Csv => return Err(no_csv("minkowski")),
                Format::Text => format!("equal {} contained {} sum {} target {}\n", r.equal, r.contained, r.sum_count, r.target_count),
            };
            Ok(Outcome { body, pass: r.equal })
        }
        Command::Normality => {
            let rows = normality_check(&cli.system()?, &cli.weight()?, cli.kmax.max(1), cli.max_points)?;
            let pass = rows.iter().all(|r| r.equal);
            let body = match cli.format(Format::Json) {
                Format::Json => json(&rows)?,
                Format::Csv => {
                    let mut s = String::from("k,dilate,sum,equal\n");
                    for r in &rows {
                        s += &format!("{},{},{},{}\n", r.k, r.dilate_count, r.sum_count, r.equal);
                    }
                    s
                }
                Format::Text => rows.iter().map(|r| format!("k={} equal {}\n", r.k, r.equal)).collect(),
            };
            Ok(Outcome { body, pass })
        }
        Command::Decompose => {
            let system = cli.system()?;
            let parts = minkowski_decompose(&system, &cli.weight()?, &cli.point(system.dim())?)?;
            match cli.format(Format::Json) {
                Format::Json => ok(json(&parts)?),
                Format::Csv => Err(no_csv("decompose")),
                Format::Text => ok(parts.iter().map(|p| format!("omega_{}: {:?}\n", p.index, p.point)).collect()),
            }
        }
        Command::IdealGens => {
            let g = theorem_generators(&cli.system()?, &cli.weight()?)?;
            match cli.format(Format::Json) {
                Format::Json => ok(json(&g)?),
                Format::Csv => {
                    let mut s = g.order.join(",") + ",path,kind,weighted_sum\n";
                    for x in &g.generators {
                        let cells: Vec<String> = x.point.iter().map(u32::to_string).collect();
                        s += &format!("{},{},{},{}\n", cells.join(","), x.provenance.path, x.provenance.kind, x.provenance.weighted_sum);
                    }
                    ok(s)
                }
                Format::Text => ok(g.generators.iter().map(|x| format!("{:?} from {}\n", x.point, x.provenance.path)).collect()),
            }
        }
        Command::IdealMinGens => {
            let system = cli.system()?;
            let lam = cli.weight()?;
            let bbox = match &cli.bbox {
                Some(b) => parse_list(b, "box")?,
                None => default_box(&enumerate_points(&system, &lam, cli.max_points)?, system.dim()),
            };
            let gens = complement_min_generators(&system, &lam, &bbox)?;
            let out = MinGensOut { lambda: lam.0, order: system.order(), count: gens.len(), bbox, generators: gens.into_iter().collect() };
            match cli.format(Format::Json) {
                Format::Json => ok(json(&out)?),
                Format::Csv => {
                    let mut s = out.order.join(",") + "\n";
                    for g in &out.generators {
                        s += &g.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                        s.push('\n');
                    }
                    ok(s)
                }
                Format::Text => ok(out.generators.iter().map(|g| format!("{g:?}\n")).collect()),
            }
        }
        Command::IdealCheck => {
            let bbox: Option<Vec<u32>> = cli.bbox.as_ref().map(|b| parse_list(b, "box")).transpose()?;
            let r = upset_equality(&cli.system()?, &cli.weight()?, bbox.as_deref())?;
            let body = match cli.format(Format::Json) {
                Format::Json => json(&r)?,
                Format::Csv => return Err(no_csv("ideal-check")),
                Format::Text => format!("equal {} unsound {} uncovered {}\n", r.equal, r.unsound.len(), r.uncovered.len()),
            };
            Ok(Outcome { body, pass: r.equal })
        }
        Command::FaceCheck => {
            let k = cli.substart.ok_or_else(|| input("--substart is required"))?;
            let r = face_embedding_check(&cli.reflection_word()?, k, &cli.weight()?, &cli.options())?;
            let body = match cli.format(Format::Json) {
                Format::Json => json(&r)?,
                Format::Csv => return Err(no_csv("face-check")),
                Format::Text => format!("equal {} sub {} slice {}\n", r.equal, r.sub_count, r.slice_count),
            };
            Ok(Outcome { body, pass: r.equal })
        }
        Command::Fixtures => {
            let reports = match &cli.fixture {
                Some(id) => vec![run_fixture(id)?],
                None => fixtures_check()?,
            };
            let pass = reports.iter().all(|r| r.ok());
            let body = match cli.format(Format::Text) {
                Format::Json => json(&reports)?,
                Format::Csv => {
                    let mut s = String::from("fixture,item,status,detail\n");
                    for r in &reports {
                        for l in &r.lines {
                            s += &format!("{},\"{}\",{:?},\"{}\"\n", r.id, l.item, l.status, l.detail.replace('"', "'"));
                        }
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        s += &format!("{:<20} {:?} ({})\n", r.id, r.status, r.mode);
                        for l in r.lines.iter().filter(|l| l.status != Status::Pass) {
                            s += &format!("    {:?} {}: {}\n", l.status, l.item, l.detail);
                        }
                    }
                    s
                }
            };
            Ok(Outcome { body, pass })
        }
        Command::Sweep => {
            let families: Vec<Family> = match &cli.types {
                Some(t) => parse_list(t, "type")?,
                None => match cli.lie_type {
                    Some(t) => vec![t.into()],
                    None => vec![Family::A, Family::C],
                },
            };
            let ranks = match (&cli.ranks, cli.rank) {
                (Some(r), _) => parse_ranks(r)?,
                (None, Some(r)) => vec![r],
                (None, None) => vec![2, 3, 4],
            };
            let cfg = SweepConfig {
                families,
                ranks,
                start: None,
                sum_max: cli.sum_max,
                include_zero: false,
                minkowski: cli.minkowski,
                normality: cli.normality,
                options: cli.options(),
                max_points: cli.max_points.or(Some(2_000_000)),
            };
            let rows = run_sweep(&cfg);
            let limit_hit = rows.iter().any(|r| r.error.as_deref().is_some_and(|e| e.starts_with("resource limit")));
            let pass = rows.iter().all(|r| r.pass() || !r.hard_gate);
            let body = match cli.format(Format::Csv) {
                Format::Csv => rows_to_csv(&rows),
                Format::Json => json(&rows)?,
                Format::Text => {
                    let fails = rows.iter().filter(|r| !r.pass()).count();
                    format!("{} rows, {} failing\n", rows.len(), fails)
                }
            };
            if limit_hit {
                emit(cli, &body)?;
                return Err(input("resource limit exceeded in at least one sweep cell"));
            }
            Ok(Outcome { body, pass })
        }
    }
}

fn emit(cli: &Cli, body: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global().is_err() {
            eprintln!("error: could not configure {j} worker threads");
            return ExitCode::from(2);
        }
    }
    match run(&cli).and_then(|o| emit(&cli, &o.body).map(|_| o.pass)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
