//! Command-line driver. Exit codes: 0 success, 1 usage or parse error,
//! 2 mathematical negative (not birational, unmatched).

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::birational::{is_birational, RationalPlaneMap, Verdict};
use crate::curves::{classify_type, reduce_to_type_i, CurveType, ParamCurve};
use crate::families::{build_family, verify_classification, Classification, FamilySpec};
use crate::germs::{delta_closed, delta_recursive, enumerate_genus_solutions, solutions_csv};
use crate::patches::{patch_csv, tau_csv, ControlNet, LatticePatch};
use crate::poly::Poly;
use crate::toric::toric_polar_system;
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "toric-cremona", version, about = "Toric polar Cremona transformations and toric patches")]
pub struct Cli {
    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Fiber-count trials for birationality checks
    #[arg(long, global = true, default_value_t = 5)]
    pub trials: usize,
    /// Structured JSON output
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Toric polar system of a form and a birationality verdict
    Check { form: String },
    /// Form and patch data of a family: tensor:a,b | trapezoid:a,b,d | quadric:d
    Family { spec: String },
    /// Classify a factored form; factors are POLY or POLY:MULT
    Classify {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Cremona reduction of a monomial curve to type I, e.g. "VII:d=3" or "[s^2 : t^2 : l^2]"
    Reduce {
        curve: String,
        #[arg(long, default_value_t = 20)]
        max_steps: usize,
    },
    /// Integer solutions of the genus equation in degree d
    Enumerate { d: i64 },
    /// Sample a patch on a grid and write CSV; spec also accepts triangle:d
    PatchSample {
        spec: String,
        #[arg(long, default_value_t = 11)]
        grid: usize,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<String>,
        /// Sample the tautological map instead of the lifted control net
        #[arg(long)]
        tau: bool,
    },
    /// delta-invariant of the germ x^a - y^b
    Delta { a: u64, b: u64 },
}

/// What a command produced: its echo, the seed, text or JSON payload, and
/// the exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub command: String,
    pub seed: u64,
    pub payload: Value,
    pub text: String,
    pub status: i32,
}

fn fail(e: Error) -> (i32, String) {
    (1, format!("error: {e}\n"))
}

fn poly_json(p: &Poly) -> Value {
    Value::String(p.to_string())
}

fn parse_factor(text: &str) -> Result<(Poly, u32), Error> {
    let (body, mult) = match text.rsplit_once(':') {
        Some((b, m)) => (
            b,
            m.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidFactors(format!("bad multiplicity in '{text}'")))?,
        ),
        None => (text, 1),
    };
    Ok((body.parse()?, mult))
}

fn cmd_check(cli: &Cli, form: &str) -> Result<(Value, String, i32), Error> {
    let f: Poly = form.parse()?;
    let sys = toric_polar_system(&f)?;
    let map = RationalPlaneMap::from_system(&sys);
    let report = is_birational(&map, cli.trials.max(1), cli.seed)?;
    let mut text = String::new();
    writeln!(text, "form: {}", sys.source).unwrap();
    for (name, c) in ["xF_x", "yF_y", "zF_z"].iter().zip(&sys.components) {
        writeln!(text, "{name}: {c}").unwrap();
    }
    writeln!(text, "removed factor: {}", sys.removed_factor).unwrap();
    for (k, c) in sys.reduced.iter().enumerate() {
        writeln!(text, "reduced[{k}]: {c}").unwrap();
    }
    for (k, t) in report.trials.iter().enumerate() {
        let pt: Vec<String> = t.source.iter().map(|c| c.to_string()).collect();
        writeln!(text, "trial {}: source [{}] fiber {}", k + 1, pt.join(" : "), t.count).unwrap();
    }
    writeln!(text, "verdict: {}", report.verdict).unwrap();
    let payload = json!({
        "form": poly_json(&sys.source),
        "components": sys.components.iter().map(poly_json).collect::<Vec<_>>(),
        "removed_factor": poly_json(&sys.removed_factor),
        "reduced": sys.reduced.iter().map(poly_json).collect::<Vec<_>>(),
        "report": report.to_json(),
    });
    let status = if report.verdict == Verdict::Birational { 0 } else { 2 };
    Ok((payload, text, status))
}

fn cmd_family(spec: &str) -> Result<(Value, String, i32), Error> {
    let spec: FamilySpec = spec.parse()?;
    let form = build_family(&spec)?;
    let mut text = String::new();
    writeln!(text, "family: {spec}").unwrap();
    writeln!(text, "form: {form}").unwrap();
    writeln!(text, "degree: {}", spec.degree()).unwrap();
    let mut payload = json!({
        "family": spec.to_string(),
        "form": poly_json(&form),
        "degree": spec.degree(),
        "positive_representative": spec.has_positive_representative(),
    });
    match LatticePatch::from_family(&spec) {
        Ok(patch) => {
            writeln!(text, "points and weights:").unwrap();
            for (p, w) in patch.points.iter().zip(&patch.weights) {
                writeln!(text, "  ({}, {}) {}", p.0, p.1, w).unwrap();
            }
            let facets: Vec<String> = patch.facets.iter().map(|f| f.poly().to_string()).collect();
            writeln!(text, "facets: {}", facets.join(", ")).unwrap();
            payload["points"] = json!(patch.points.iter().map(|p| [p.0, p.1]).collect::<Vec<_>>());
            payload["weights"] = json!(patch.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>());
            payload["facets"] = json!(facets);
        }
        Err(_) => {
            writeln!(text, "no positive representative: no toric patch").unwrap();
        }
    }
    Ok((payload, text, 0))
}

fn cmd_classify(factors: &[String]) -> Result<(Value, String, i32), Error> {
    let parsed: Vec<(Poly, u32)> = factors.iter().map(|f| parse_factor(f)).collect::<Result<_, _>>()?;
    let c = verify_classification(&parsed)?;
    let mut text = String::new();
    let (payload, status) = match &c {
        Classification::MatchedFamily { spec, moves, note } => {
            writeln!(text, "matched: {spec}").unwrap();
            for m in moves {
                writeln!(text, "  move: {m}").unwrap();
            }
            if let Some(n) = note {
                writeln!(text, "note: {n}").unwrap();
            }
            (
                json!({
                    "matched": spec.to_string(),
                    "moves": moves.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "note": note,
                }),
                0,
            )
        }
        Classification::Unmatched(reason) => {
            writeln!(text, "unmatched: {reason}").unwrap();
            (json!({ "unmatched": reason }), 2)
        }
    };
    Ok((payload, text, status))
}

fn cmd_reduce(curve: &str, max_steps: usize) -> Result<(Value, String, i32), Error> {
    let curve: ParamCurve = curve.parse()?;
    let cls = classify_type(&curve);
    let mut text = String::new();
    writeln!(text, "curve: {curve} (type {})", cls.ty).unwrap();
    let red = if cls.ty == CurveType::I {
        reduce_to_type_i(&curve, 0)?
    } else {
        reduce_to_type_i(&curve, max_steps)?
    };
    for (k, st) in red.steps.iter().enumerate() {
        writeln!(text, "step {}: {st}", k + 1).unwrap();
    }
    writeln!(text, "result: {} (type {})", red.result, classify_type(&red.result).ty).unwrap();
    let payload = json!({
        "curve": curve.to_string(),
        "type": cls.ty.to_string(),
        "steps": red.steps.iter().map(|s| json!({
            "map": s.map.to_string(),
            "input": s.input.to_string(),
            "removed": s.removed,
            "output": s.output.to_string(),
        })).collect::<Vec<_>>(),
        "result": red.result.to_string(),
    });
    Ok((payload, text, 0))
}

fn cmd_enumerate(d: i64) -> Result<(Value, String, i32), Error> {
    if d < 2 {
        return Err(Error::InvalidSpec("degree must be at least 2".into()));
    }
    let sols = enumerate_genus_solutions(d);
    let payload = json!(sols
        .iter()
        .map(|s| json!({"d": s.d, "a": s.abc.0, "b": s.abc.1, "c": s.abc.2, "region": s.region.to_string()}))
        .collect::<Vec<_>>());
    Ok((payload, solutions_csv(&sols), 0))
}

fn cmd_patch_sample(spec: &str, grid: usize, out: Option<&str>, tau: bool) -> Result<(Value, String, i32), Error> {
    if grid < 2 {
        return Err(Error::InvalidSpec("grid needs at least 2 samples".into()));
    }
    let patch: LatticePatch = spec.parse()?;
    let csv = if tau {
        tau_csv(&patch, grid)?
    } else {
        patch_csv(&patch, &ControlNet::lift(&patch), grid)?
    };
    let rows = csv.lines().count() - 1;
    match out {
        Some(path) => {
            std::fs::write(path, &csv).map_err(|e| Error::InvalidSpec(format!("cannot write {path}: {e}")))?;
            let text = format!("wrote {rows} rows to {path}\n");
            Ok((json!({"rows": rows, "path": path}), text, 0))
        }
        None => Ok((json!({"rows": rows, "csv": csv}), csv, 0)),
    }
}

fn cmd_delta(a: u64, b: u64) -> Result<(Value, String, i32), Error> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidSpec("germ exponents must be positive".into()));
    }
    let closed = delta_closed(a, b);
    let rec = delta_recursive(a, b);
    let text = format!("delta({a},{b}) = {closed}\nrecursive: {rec}\n");
    Ok((json!({"a": a, "b": b, "delta": closed, "recursive": rec}), text, 0))
}

pub fn execute(cli: &Cli, echo: &str) -> CommandResult {
    let result = match &cli.command {
        Command::Check { form } => cmd_check(cli, form),
        Command::Family { spec } => cmd_family(spec),
        Command::Classify { factors } => cmd_classify(factors),
        Command::Reduce { curve, max_steps } => cmd_reduce(curve, *max_steps),
        Command::Enumerate { d } => cmd_enumerate(*d),
        Command::PatchSample { spec, grid, out, tau } => cmd_patch_sample(spec, *grid, out.as_deref(), *tau),
        Command::Delta { a, b } => cmd_delta(*a, *b),
    };
    let (payload, text, status) = match result {
        Ok(r) => r,
        Err(e) => {
            let (status, text) = fail(e.clone());
            (json!({ "error": e.to_string() }), text, status)
        }
    };
    CommandResult {
        command: echo.to_string(),
        seed: cli.seed,
        payload,
        text,
        status,
    }
}

/// Parses `args` (program name first), runs, and writes to `out`/`err`.
/// Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let echo = args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let res = execute(&cli, &echo);
    if cli.json {
        let doc = json!({
            "command": res.command,
            "seed": res.seed,
            "status": res.status,
            "result": res.payload,
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
    } else if res.status == 1 {
        let _ = write!(err, "{}", res.text);
    } else {
        let _ = write!(out, "{}", res.text);
    }
    res.status
}
