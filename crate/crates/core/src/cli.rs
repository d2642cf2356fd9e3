//! The `gln-boundary` command line: every subcommand reads JSON, runs one
//! pipeline stage and writes JSON (or a text rendering of that JSON).

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks;
use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;
use crate::exterior::{lambda_m, lambda_relation};
use crate::hinge::{glue, weak_product, GluedFamily, Hinge, WeakHinge};
use crate::merofam::{default_precision, exponents, factorize, limit_glued, limit_hinge, LaurentMatrix};
use crate::relations::LinearRelation;
use crate::reps::{build_rep, rep_limit, rho_group, rho_semigroup, Signature};
use crate::urchin::{curve_limit, project, sample_specs_or, separate, CompactificationSpec, UrchinPoint};
use crate::wire::{from_json_value, to_json, Projection, Wire};

#[derive(Debug, Parser)]
#[command(name = "gln-boundary", version, about = "Exact boundary limits of matrix curves in GL_n")]
pub struct Cli {
    /// Output format; text is rendered from the JSON result.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Jet precision for `factor` (defaults to a bound computed from the input).
    #[arg(long, env = "HINGE_PRECISION", global = true)]
    pub precision: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Input file; stdin when omitted or `-`.
    #[arg(short = 'i', long = "input")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exponents m, distinct values k and multiplicities α of a Laurent matrix.
    Exponents(Input),
    /// Jets a(z), b(z) with γ = a · diag(z^-m) · b.
    Factor(Input),
    /// The limit hinge of a Laurent matrix.
    LimitHinge(Input),
    /// The glued family ℒ of the limit, computed from exterior powers of γ.
    LimitGlued(Input),
    /// Validates a hinge and reports its orbit label.
    HingeCheck(Input),
    /// Product of two hinges (completed first) or weak hinges.
    HingeMul { left: PathBuf, right: PathBuf },
    /// λ(P) of a linear relation, or λ^m(P) for P in Γ(V).
    Lambda {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// ρ_ν of a group element, hinge or glued family; `--info` only builds H_ν.
    Rep {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        signature: Signature,
        #[arg(long)]
        info: bool,
    },
    /// lim z^{Σ m_i ν_i} ρ_ν(γ(z)).
    RepLimit {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        signature: Signature,
    },
    /// The point of the sea urchin reached by a Laurent matrix.
    Urchin(Input),
    /// Projection of a curve limit (or of an urchin point) to [GL_n]_ζ.
    Project {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 1.., required = true)]
        signatures: Vec<Signature>,
    },
    /// Whether listed compactifications separate the limits of two curves.
    Separate {
        left: PathBuf,
        right: PathBuf,
        /// A compactification as space- or semicolon-separated signatures,
        /// e.g. "1,0 1,1"; repeatable. Defaults to a built-in sample.
        #[arg(long = "spec")]
        specs: Vec<String>,
    },
    /// Runs the randomized property suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        scale: usize,
    },
}

/// Exit status and streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::HingeAxiom { .. } => 3,
        Error::PrecisionExhausted { .. } => 4,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({ "error": e.kind(), "message": e.to_string() });
    match e {
        Error::HingeAxiom { axiom, index } => {
            v["axiom"] = json!(axiom.name());
            v["statement"] = json!(axiom.statement());
            v["index"] = json!(index);
        }
        Error::PrecisionExhausted { given, required } => {
            v["given"] = json!(given);
            v["required"] = json!(required);
        }
        _ => {}
    }
    v
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match execute(cli, stdin) {
        Ok((value, code)) => Outcome { code, stdout: render(&value, cli.format), stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("{}\n", error_json(&e)) },
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{value}\n"),
        Format::Text => {
            let mut out = String::new();
            render_text(value, 0, &mut out);
            out
        }
    }
}

fn read_value(input: &Input, stdin: &mut dyn Read) -> Result<Value> {
    let text = match input.input.as_deref() {
        Some(p) if p != Path::new("-") => read_path(p)?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn read_path(p: &Path) -> Result<String> {
    fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
}

fn read_file_value(p: &Path) -> Result<Value> {
    serde_json::from_str(&read_path(p)?).map_err(|e| Error::Parse(e.to_string()))
}

fn read<T: Wire>(input: &Input, stdin: &mut dyn Read) -> Result<T> {
    from_json_value(read_value(input, stdin)?)
}

/// A hinge (which is completed) or, failing the hinge axioms, a weak hinge.
fn read_weak(p: &Path) -> Result<WeakHinge> {
    let v = read_file_value(p)?;
    match from_json_value::<Hinge>(v.clone()) {
        Ok(h) => Ok(h.completed_weak()),
        Err(Error::HingeAxiom { .. }) => from_json_value(v),
        Err(e) => Err(e),
    }
}

fn urchin_input(v: Value) -> Result<UrchinPoint> {
    if v.get("type").is_some() {
        from_json_value(v)
    } else {
        curve_limit(&from_json_value::<LaurentMatrix>(v)?)
    }
}

fn parse_spec(s: &str) -> Result<CompactificationSpec> {
    let sigs = s
        .split(|c: char| c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Signature>>>()?;
    CompactificationSpec::new(sigs)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(Value, u8)> {
    let value = match &cli.command {
        Command::Exponents(input) => to_json(&exponents(&read(input, stdin)?)?),
        Command::Factor(input) => {
            let gamma: LaurentMatrix = read(input, stdin)?;
            let precision = match cli.precision {
                Some(p) => p,
                None => default_precision(&gamma)?,
            };
            to_json(&factorize(&gamma, precision)?)
        }
        Command::LimitHinge(input) => to_json(&limit_hinge(&read(input, stdin)?)?.1),
        Command::LimitGlued(input) => to_json(&limit_glued(&read(input, stdin)?)?),
        Command::HingeCheck(input) => {
            let h: Hinge = read(input, stdin)?;
            json!({ "valid": true, "n": h.n(), "orbit_label": h.orbit_label().parts() })
        }
        Command::HingeMul { left, right } => to_json(&weak_product(&read_weak(left)?, &read_weak(right)?)?),
        Command::Lambda { input, degree } => {
            let p: LinearRelation = read(input, stdin)?;
            match degree {
                Some(m) => to_json(&lambda_m(&p, *m)?),
                None => to_json(&lambda_relation(&p)),
            }
        }
        Command::Rep { input, signature, info } => {
            let rep = build_rep(signature)?;
            if *info {
                json!({ "signature": signature.to_string(), "dim": rep.dim(), "ambient_dim": rep.ambient_dim() })
            } else {
                let v = read_value(input, stdin)?;
                let op = if v.is_array() {
                    rho_group(&rep, &from_json_value::<RationalMatrix>(v)?)?
                } else if v.get("terms").is_some() {
                    rho_semigroup(&rep, &glue(&from_json_value::<Hinge>(v)?))?
                } else {
                    rho_semigroup(&rep, &from_json_value::<GluedFamily>(v)?)?
                };
                to_json(&op)
            }
        }
        Command::RepLimit { input, signature } => {
            let gamma: LaurentMatrix = read(input, stdin)?;
            to_json(&rep_limit(&build_rep(signature)?, &gamma)?)
        }
        Command::Urchin(input) => to_json(&urchin_input(read_value(input, stdin)?)?),
        Command::Project { input, signatures } => {
            let point = urchin_input(read_value(input, stdin)?)?;
            let spec = CompactificationSpec::new(signatures.clone())?;
            let operator = project(&point, &spec)?;
            to_json(&Projection { spec, operator })
        }
        Command::Separate { left, right, specs } => {
            let g1: LaurentMatrix = from_json_value(read_file_value(left)?)?;
            let g2: LaurentMatrix = from_json_value(read_file_value(right)?)?;
            let specs = specs.iter().map(|s| parse_spec(s)).collect::<Result<Vec<_>>>()?;
            let specs = sample_specs_or(specs, g1.rows());
            let mut by = Value::Null;
            for spec in &specs {
                if separate(&g1, &g2, std::slice::from_ref(spec))? {
                    by = to_json(spec);
                    break;
                }
            }
            json!({ "separated": !by.is_null(), "by": by, "checked": specs.len() })
        }
        Command::Selftest { seed, scale } => {
            let reports = checks::full_suite(*seed, (*scale).max(1));
            let passed = reports.iter().all(checks::CheckReport::passed);
            let list: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "passed": r.passed(),
                        "cases": r.cases,
                        "nontrivial": r.nontrivial,
                        "failures": r.failures,
                    })
                })
                .collect();
            return Ok((json!({ "seed": seed, "passed": passed, "checks": list }), if passed { 0 } else { 1 }));
        }
    };
    Ok((value, 0))
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(items) if items.iter().all(|x| matches!(x, Value::Number(_) | Value::Bool(_))) => {
            Some(format!("[{}]", items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn as_matrix(v: &Value) -> Option<Vec<Vec<&str>>> {
    let rows = v.as_array()?;
    if rows.is_empty() {
        return None;
    }
    rows.iter().map(|r| r.as_array()?.iter().map(Value::as_str).collect::<Option<Vec<_>>>()).collect()
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    if let Some(rows) = as_matrix(v) {
        let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            out.push_str(&format!("{pad}[ {} ]\n", cells.join("  ")));
        }
        return;
    }
    if let Some(s) = scalar_text(v) {
        out.push_str(&format!("{pad}{s}\n"));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar_text(x) {
                    Some(s) if as_matrix(x).is_none() => out.push_str(&format!("{pad}{k}: {s}\n")),
                    _ => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                out.push_str(&format!("{pad}[{i}]\n"));
                render_text(x, indent + 1, out);
            }
        }
        _ => unreachable!("scalars are handled above"),
    }
}
