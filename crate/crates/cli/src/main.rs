mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxcat::arrangement::{build, Family, FamilySpec};
use coxcat::charpoly::{bounded_from_chi, char_poly, regions_from_chi};
use coxcat::movelab::{canonical, class_of, classes, is_canonical, universe, MoveSystem};
use coxcat::regionlab::{enumerate_regions, is_bounded_region};
use coxcat::sketch::parse_sketch;
use coxcat::statlab::{distribution, region_objects};
use coxcat::verify::{seed_rows, verify};
use coxcat::Error;
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::fmt::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "coxcat",
    version,
    about = "Regions, sketches and compartment statistics of Catalan-type arrangements"
)]
struct Cli {
    #[command(subcommand)]
    verb: Option<Verb>,
    /// Output format; each verb has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Raise the size limit on expensive commands to this n.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Run the four-way check on a fixed set of small instances.
    #[arg(long)]
    seed_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    Arc,
    Path,
}

#[derive(Args)]
struct Target {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<u32>,
}

impl Target {
    fn spec(&self) -> FamilySpec {
        FamilySpec { family: self.family, n: self.n, m: self.m }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Characteristic polynomial.
    Chi(Target),
    /// Regions with witness points.
    Regions(Target),
    /// Bounded regions.
    Bounded(Target),
    /// Sketches indexing the regions.
    Sketches(Target),
    /// Move classes of sketches.
    Classes(Target),
    /// Canonical representative of a sketch's move class.
    Canonical {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        sketch: String,
    },
    /// Compartment distribution compared with the characteristic polynomial.
    Stats(Target),
    /// Closed formula, characteristic polynomial, enumeration and sketches.
    Verify(Target),
    /// Draw a sketch as an arc diagram or a lattice path.
    Render {
        #[arg(long, value_enum)]
        kind: RenderKind,
        #[arg(long, allow_hyphen_values = true)]
        sketch: String,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidFamily(_)
            | Error::Unsupported(_)
            | Error::Parse(_)
            | Error::InvalidSketch(_)
            | Error::KindMismatch(_)
            | Error::NotBallot => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

struct Output {
    body: String,
    pass: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, pass: true }
    }

    fn json(v: Value) -> Self {
        Output::ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("json")))
    }
}

fn int_json(b: &BigInt) -> Value {
    i64::try_from(b).map_or_else(|_| Value::String(b.to_string()), Value::from)
}

fn head(spec: FamilySpec) -> Value {
    json!({ "family": spec.family, "n": spec.n, "m": spec.m })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(a), Value::Object(b)) = (a.as_object_mut(), b) {
        a.extend(b);
    }
    a
}

fn guard(n: usize, limit: usize, max_n: Option<usize>) -> Result<(), Failure> {
    if n > max_n.unwrap_or(limit) {
        return Err(Failure::Usage(format!("n = {n} exceeds the limit {limit}; pass --max-n {n} to run anyway")));
    }
    Ok(())
}

fn only(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if !allowed.contains(&format) {
        return Err(Failure::Usage("format not available for this command".into()));
    }
    Ok(())
}

fn move_system(f: Family) -> Result<MoveSystem, Failure> {
    MoveSystem::for_family(f).ok_or_else(|| Failure::Usage(format!("{f} has no move system")))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if cli.seed_check {
        return seed_check();
    }
    let Some(verb) = &cli.verb else {
        return Err(Failure::Usage("no command given; see --help".into()));
    };
    let fmt = |default| cli.format.unwrap_or(default);
    match verb {
        Verb::Chi(t) => {
            let f = fmt(Format::Text);
            only(f, &[Format::Text, Format::Json])?;
            guard(t.n, 4, cli.max_n)?;
            let spec = t.spec();
            spec.validate()?;
            let a = build(spec)?;
            let c = char_poly(&a)?;
            if f == Format::Text {
                return Ok(Output::ok(format!("{}\n", c.poly)));
            }
            let coeffs: Vec<Value> = c.poly.coeffs().iter().map(int_json).collect();
            Ok(Output::json(merge(
                head(spec),
                json!({
                    "chi": c.poly.to_string(),
                    "coefficients": coeffs,
                    "regions": int_json(&regions_from_chi(&c)),
                    "bounded": int_json(&bounded_from_chi(&c, a.rank())),
                }),
            )))
        }
        Verb::Regions(t) | Verb::Bounded(t) => {
            let f = fmt(Format::Text);
            only(f, &[Format::Text, Format::Json])?;
            guard(t.n, 5, cli.max_n)?;
            let spec = t.spec();
            spec.validate()?;
            let a = build(spec)?;
            let mut regions = enumerate_regions(&a);
            if matches!(verb, Verb::Bounded(_)) {
                let mut keep = Vec::new();
                for r in regions {
                    if is_bounded_region(&a, &r.signs)? {
                        keep.push(r);
                    }
                }
                regions = keep;
            }
            if f == Format::Text {
                return Ok(Output::ok(format!("{}\n", regions.len())));
            }
            let list: Vec<Value> = regions
                .iter()
                .map(|r| {
                    let w: Vec<String> = r.witness.iter().map(|x| x.to_string()).collect();
                    json!({ "signs": r.signs.to_string(), "witness": w })
                })
                .collect();
            Ok(Output::json(merge(head(spec), json!({ "count": regions.len(), "regions": list }))))
        }
        Verb::Sketches(t) => {
            let f = fmt(Format::Text);
            only(f, &[Format::Text, Format::Json])?;
            guard(t.n, 5, cli.max_n)?;
            let spec = t.spec();
            let objects = region_objects(spec)?;
            let lines: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
            if f == Format::Text {
                return Ok(Output::ok(lines.iter().map(|l| format!("{l}\n")).collect()));
            }
            Ok(Output::json(merge(head(spec), json!({ "count": lines.len(), "sketches": lines }))))
        }
        Verb::Classes(t) => {
            let f = fmt(Format::Text);
            only(f, &[Format::Text, Format::Json])?;
            guard(t.n, 5, cli.max_n)?;
            let spec = t.spec();
            spec.validate()?;
            let sys = move_system(t.family)?;
            let cls = classes(sys, &universe(sys, t.n))?;
            let rows: Vec<(String, Vec<String>)> = cls
                .iter()
                .map(|c| {
                    let rep = c.iter().find(|s| is_canonical(sys, s)).map_or_else(String::new, |s| s.to_string());
                    (rep, c.iter().map(|s| s.to_string()).collect())
                })
                .collect();
            if f == Format::Text {
                let mut s = String::new();
                for (rep, members) in &rows {
                    let _ = writeln!(s, "{rep}  [{}]", members.len());
                }
                return Ok(Output::ok(s));
            }
            let list: Vec<Value> =
                rows.into_iter().map(|(rep, members)| json!({ "canonical": rep, "members": members })).collect();
            Ok(Output::json(merge(head(spec), json!({ "count": list.len(), "classes": list }))))
        }
        Verb::Canonical { family, sketch } => {
            let f = fmt(Format::Text);
            only(f, &[Format::Text, Format::Json])?;
            let sys = move_system(*family)?;
            let sk = parse_sketch(sketch)?;
            if sk.kind != sys.kind() {
                return Err(Failure::Usage(format!("{family} moves act on a different kind of sketch")));
            }
            let c = canonical(sys, &sk)?;
            if f == Format::Text {
                return Ok(Output::ok(format!("{c}\n")));
            }
            let size = class_of(sys, &sk)?.len();
            Ok(Output::json(json!({
                "family": family,
                "sketch": sk.to_string(),
                "canonical": c.to_string(),
                "class_size": size,
            })))
        }
        Verb::Stats(t) => {
            let f = fmt(Format::Text);
            only(f, &[Format::Text, Format::Json])?;
            guard(t.n, 5, cli.max_n)?;
            let spec = t.spec();
            let dist = distribution(spec)?;
            let chi = char_poly(&build(spec)?)?.abs_coeffs();
            let pass = dist.as_bigints() == chi;
            let body = if f == Format::Text {
                let mut s = String::new();
                for (j, c) in dist.counts.iter().enumerate() {
                    let _ = writeln!(s, "{j} {c}");
                }
                s
            } else {
                let chi: Vec<Value> = chi.iter().map(int_json).collect();
                let v = merge(
                    head(spec),
                    json!({ "distribution": dist.counts, "chi_abs": chi, "total": dist.total(), "pass": pass }),
                );
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            };
            Ok(Output { body, pass })
        }
        Verb::Verify(t) => {
            let f = fmt(Format::Json);
            only(f, &[Format::Text, Format::Json])?;
            guard(t.n, 5, cli.max_n)?;
            let s = verify(t.spec())?;
            let body = if f == Format::Json {
                format!("{}\n", serde_json::to_string_pretty(&s).expect("json"))
            } else {
                summary_line(&s)
            };
            Ok(Output { body, pass: s.pass })
        }
        Verb::Render { kind, sketch } => {
            let f = fmt(Format::Svg);
            only(f, &[Format::Text, Format::Svg])?;
            let sk = parse_sketch(sketch)?;
            let body = match (kind, f) {
                (RenderKind::Arc, Format::Svg) => render::arc_svg(&sk)?,
                (RenderKind::Path, Format::Svg) => render::path_svg(&sk)?,
                (RenderKind::Arc, _) => render::arc_text(&sk)?,
                (RenderKind::Path, _) => render::path_text(&sk)?,
            };
            Ok(Output::ok(body))
        }
    }
}

fn summary_line(s: &coxcat::verify::VerifySummary) -> String {
    let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
    let m = s.m.map_or_else(String::new, |m| format!(" m={m}"));
    format!(
        "{} {} n={}{m} regions={} formula={} chi={} classes={} bounded={} bounded_formula={} chi_one={}\n",
        if s.pass { "PASS" } else { "FAIL" },
        s.family,
        s.n,
        s.regions,
        opt(s.formula),
        s.chi_minus1,
        opt(s.classes),
        s.bounded,
        opt(s.bounded_formula),
        s.chi_one,
    )
}

fn seed_check() -> Result<Output, Failure> {
    let mut body = String::new();
    let mut pass = true;
    for spec in seed_rows() {
        let s = verify(spec)?;
        pass &= s.pass;
        body.push_str(&summary_line(&s));
    }
    Ok(Output { body, pass })
}

fn set_threads() {
    if let Some(k) = std::env::var("COXCAT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_threads();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.body),
                None => {
                    print!("{}", out.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
