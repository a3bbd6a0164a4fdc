//! Command-line front end. Every command reads a JSON payload and writes a
//! JSON document; [`run`] maps errors to exit codes.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::Scalar;
use crate::configurations::{self as conf, Param, Subfamily};
use crate::eigenscheme::{self, ConicFamily, Cubic, EigKind};
use crate::error::{Error, Redirect, Result};
use crate::geometry::{Line, ProjPoint};
use crate::numsolve::{self, SolveOptions};
use crate::{sample, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_REDIRECT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "eigenpoints", version, about = "Eigenpoints of ternary cubics and their alignments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON payload: a file path, `-` for stdin, or inline JSON.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Compact single-line JSON instead of pretty output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Residual tolerance of the numeric solver.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Newton restarts of the pencil experiment.
    #[arg(long, global = true)]
    pub restarts: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenscheme of a cubic: minors, components and eigenpoints.
    Eigen,
    /// Build a configuration of eigenpoints.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
    },
    /// Aligned triples of seven points and their configuration.
    Classify,
    /// Rank of the conditions imposed by a list of points.
    Rank,
    /// Members of a pencil with three aligned eigenpoints.
    PencilDegree,
    /// Randomized check suites.
    VerifyPaper {
        /// `all` or one section.
        #[arg(default_value = "all")]
        section: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    C2,
    C3,
    C5,
    C8,
    Rank8a,
    Rank8b,
    D2six,
    Odeco,
    Eigenline,
    Eigenconic,
    #[value(name = "f_of_r", alias = "f-of-r")]
    FOfR,
}

/// Payload of `eigen`: a bare coefficient list or `{"cubic": [...]}`.
fn cubic_payload(v: &Value) -> Result<Cubic> {
    match v.get("cubic") {
        Some(c) => parse(c),
        None => parse(v),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsPayload {
    points: Vec<ProjPoint>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PencilPayload {
    f: Cubic,
    g: Cubic,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct BuildPayload {
    p1: Option<ProjPoint>,
    p2: Option<ProjPoint>,
    p4: Option<ProjPoint>,
    t3: Option<Param>,
    t4: Option<Param>,
    t5: Option<Param>,
    subfamily: Option<Subfamily>,
    lambda: Option<Vec<Scalar>>,
    mu: Option<Scalar>,
    t: Option<Line>,
    ell: Option<Line>,
    r: Option<Line>,
    r0: Option<Line>,
    conic: Option<String>,
}

fn need<T: Clone>(v: &Option<T>, name: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::Parse(format!("missing field '{name}'")))
}

fn parse<T: for<'de> Deserialize<'de>>(payload: &Value) -> Result<T> {
    Ok(T::deserialize(payload)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// `eigen`: minors, positive-dimensional analysis and, for a finite
/// eigenscheme, the numeric eigenpoints with their configuration.
pub fn cmd_eigen(payload: &Value, opts: &SolveOptions) -> Result<Value> {
    let f = cubic_payload(payload)?;
    let generators: Vec<String> = eigenscheme::eig_generators(&f).iter().map(|g| g.to_string()).collect();
    let dec = eigenscheme::positive_dim_analysis(&f)?;
    let mut out = json!({
        "cubic": f,
        "generators": generators,
        "decomposition": dec,
    });
    if dec.kind == EigKind::RegularCandidate {
        let e = numsolve::eigenpoints_numeric(&f, opts)?;
        let report = (e.points.len() == 7)
            .then(|| crate::configurations::classify_numeric(&e.points, 1e3 * opts.tol_cluster))
            .transpose()?;
        out["points"] = to_value(&e.points);
        out["residuals"] = to_value(&e.residuals);
        out["regular"] = json!(e.regular);
        out["report"] = to_value(&report);
        if let Some(exact) = numsolve::lift_exact(&f, &e.points, 10_000) {
            out["exact_points"] = to_value(&exact);
            if exact.len() == 7 {
                out["exact_report"] = to_value(&conf::classify(&exact)?);
            }
        }
    }
    Ok(out)
}

/// `construct <kind>`: runs a builder and classifies its seven points.
pub fn cmd_construct(kind: Kind, payload: &Value) -> Result<Value> {
    let p: BuildPayload = parse(payload)?;
    let c = match kind {
        Kind::C2 => conf::build_c2(&need(&p.p1, "p1")?, &need(&p.p2, "p2")?, &need(&p.t4, "t4")?, &need(&p.t3, "t3")?, &need(&p.t5, "t5")?)?,
        Kind::C3 => conf::build_c3(&need(&p.p1, "p1")?, &need(&p.p2, "p2")?, &need(&p.p4, "p4")?, &need(&p.t5, "t5")?)?,
        Kind::C5 => conf::build_c5(&need(&p.p2, "p2")?, &need(&p.p4, "p4")?, &need(&p.t3, "t3")?, &need(&p.t5, "t5")?)?,
        Kind::C8 => conf::build_c8(&need(&p.p1, "p1")?, &need(&p.p2, "p2")?, &need(&p.p4, "p4")?)?,
        Kind::Rank8a => conf::build_rank8_case1(&need(&p.p1, "p1")?, &need(&p.p2, "p2")?, &need(&p.t4, "t4")?)?,
        Kind::Rank8b => conf::build_rank8_case2(&need(&p.p1, "p1")?, &need(&p.t3, "t3")?, &need(&p.t5, "t5")?, p.subfamily)?,
        Kind::D2six => conf::build_d2_6align(&need(&p.p1, "p1")?, &need(&p.p2, "p2")?, &need(&p.t4, "t4")?)?,
        Kind::Odeco => {
            let l = need(&p.lambda, "lambda")?;
            if l.len() != 3 {
                return Err(Error::Parse("lambda needs three scalars".into()));
            }
            conf::build_odeco([&l[0], &l[1], &l[2]])?
        }
        Kind::Eigenline => {
            let lambda = p.lambda.as_ref().and_then(|l| l.first().cloned());
            let extra = match (&lambda, &p.r0) {
                (Some(l), Some(r0)) => Some((l, r0)),
                _ => None,
            };
            let f = eigenscheme::build_eigenline_family(&need(&p.t, "t")?, &need(&p.ell, "ell")?, extra)?;
            return Ok(json!({ "cubic": f, "decomposition": eigenscheme::positive_dim_analysis(&f)? }));
        }
        Kind::Eigenconic => {
            let family = match need(&p.conic, "conic")?.as_str() {
                "iso-line" => ConicFamily::IsoLine { ell: need(&p.ell, "ell")? },
                "bitangent" => {
                    let lambda = need(&p.lambda, "lambda")?
                        .first()
                        .cloned()
                        .ok_or_else(|| Error::Parse("lambda needs a scalar".into()))?;
                    ConicFamily::Bitangent { lambda, mu: need(&p.mu, "mu")?, r: need(&p.r, "r")? }
                }
                "hyperosculating" => ConicFamily::Hyperosculating { r: need(&p.r, "r")? },
                other => return Err(Error::Parse(format!("unknown conic family '{other}'"))),
            };
            let (f, gamma) = eigenscheme::build_eigenconic_family(&family)?;
            return Ok(json!({
                "cubic": f,
                "conic": gamma.coeffs(),
                "decomposition": eigenscheme::positive_dim_analysis(&f)?,
            }));
        }
        Kind::FOfR => {
            let f = eigenscheme::build_f_of_r(&need(&p.r, "r")?)?;
            return Ok(json!({ "cubic": f, "decomposition": eigenscheme::positive_dim_analysis(&f)? }));
        }
    };
    let mut out = to_value(&c);
    if c.points.len() == 7 {
        out["report"] = to_value(&conf::classify(&c.points)?);
    }
    Ok(out)
}

pub fn cmd_classify(payload: &Value) -> Result<Value> {
    let p: PointsPayload = parse(payload)?;
    Ok(to_value(&conf::classify(&p.points)?))
}

/// `rank`: rank of the conditions, and the V-configuration certificate for
/// five points in that position.
pub fn cmd_rank(payload: &Value) -> Result<Value> {
    let p: PointsPayload = parse(payload)?;
    let rank = eigenscheme::condition_rank(&p.points)?;
    let mut out = json!({ "points": p.points.len(), "rank": rank });
    if let Ok(five) = <[ProjPoint; 5]>::try_from(p.points.clone()) {
        if let Ok(v) = conf::VConfig::new(five) {
            out["v_configuration"] = to_value(&conf::rank_v(&v)?);
        }
    }
    Ok(out)
}

/// `pencil-degree`: the pencil from the payload, or a random integer
/// pencil drawn from `seed` when there is no payload.
pub fn cmd_pencil_degree(payload: Option<&Value>, seed: Option<u64>, opts: &SolveOptions) -> Result<Value> {
    let (f, g) = match payload {
        Some(v) => {
            let p: PencilPayload = parse(v)?;
            (p.f, p.g)
        }
        None => {
            let seed = seed.ok_or_else(|| Error::Parse("a random pencil needs --seed".into()))?;
            verify::random_pencil(&mut sample::sampler(seed))
        }
    };
    let rep = numsolve::pencil_alignment_parameters(&f, &g, opts)?;
    Ok(json!({ "f": f, "g": g, "count": rep.t_values.len(), "report": rep }))
}

pub fn cmd_verify_paper(section: &str, seed: Option<u64>, opts: &SolveOptions) -> Result<(bool, Value)> {
    let seed = seed.ok_or_else(|| Error::Parse("verify-paper needs --seed".into()))?;
    let checks = verify::run(section, seed, opts)?;
    let ok = checks.iter().all(|c| c.ok());
    Ok((ok, json!({ "seed": seed, "section": section, "passed": ok, "checks": checks })))
}

fn read_payload(input: Option<&str>) -> Result<Option<Value>> {
    let text = match input {
        None => return Ok(None),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(s) if s.trim_start().starts_with(['{', '[']) => s.to_string(),
        Some(path) => std::fs::read_to_string(path)?,
    };
    Ok(Some(serde_json::from_str(&text)?))
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Precondition(_) | Error::Io(_) | Error::Json(_) => EXIT_INPUT,
        Error::Numeric(_) | Error::Verification(_) => EXIT_NUMERIC,
        Error::Degenerate { .. } => EXIT_REDIRECT,
    }
}

fn error_json(e: &Error) -> Value {
    let kind = match e {
        Error::Parse(_) | Error::Json(_) => "parse",
        Error::Precondition(_) => "precondition",
        Error::Io(_) => "io",
        Error::Numeric(_) => "numeric",
        Error::Verification(_) => "verification",
        Error::Degenerate { .. } => "degenerate",
    };
    let mut v = json!({ "error": kind, "message": e.to_string() });
    if let Error::Degenerate { redirect, .. } = e {
        v["redirect"] = to_value(redirect);
        let builder = match redirect {
            Redirect::C5 => Some("c5"),
            Redirect::Rank8Case1 => Some("rank8a"),
            Redirect::Rank8Case2 => Some("rank8b"),
            Redirect::Eigenline => Some("eigenline"),
            Redirect::None => None,
        };
        v["use"] = json!(builder);
    }
    v
}

fn options(cli: &Cli) -> SolveOptions {
    let mut o = SolveOptions::default();
    if let Some(t) = cli.tol {
        o.tol_residual = t;
    }
    if let Some(r) = cli.restarts {
        o.newton_restarts = r;
    }
    if let Some(s) = cli.seed {
        o.seed = s;
    }
    o
}

/// Runs a parsed command; returns the output document and the exit code.
pub fn execute(cli: &Cli) -> (Value, i32) {
    let opts = options(cli);
    let result = (|| -> Result<(Value, i32)> {
        let payload = read_payload(cli.input.as_deref())?;
        let required = || payload.clone().ok_or_else(|| Error::Parse("missing --input".into()));
        Ok(match &cli.command {
            Command::Eigen => (cmd_eigen(&required()?, &opts)?, EXIT_OK),
            Command::Construct { kind } => (cmd_construct(*kind, &required()?)?, EXIT_OK),
            Command::Classify => (cmd_classify(&required()?)?, EXIT_OK),
            Command::Rank => (cmd_rank(&required()?)?, EXIT_OK),
            Command::PencilDegree => (cmd_pencil_degree(payload.as_ref(), cli.seed, &opts)?, EXIT_OK),
            Command::VerifyPaper { section } => {
                let (ok, v) = cmd_verify_paper(section, cli.seed, &opts)?;
                (v, if ok { EXIT_OK } else { EXIT_NUMERIC })
            }
        })
    })();
    match result {
        Ok(r) => r,
        Err(e) => (error_json(&e), exit_code(&e)),
    }
}

/// Parses `args`, executes, writes the output and returns the exit code.
pub fn run<I: IntoIterator<Item = T>, T: Into<OsString> + Clone>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let (value, code) = execute(&cli);
    let text = if cli.json {
        serde_json::to_string(&value)
    } else {
        serde_json::to_string_pretty(&value)
    }
    .expect("serializable");
    if code != EXIT_OK && value.get("error").is_some() {
        eprintln!("{text}");
        return code;
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("{}", error_json(&Error::Io(e)));
                return EXIT_INPUT;
            }
        }
        None => {
            use std::io::Write;
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    code
}
