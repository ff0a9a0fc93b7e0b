//! Command-line front end: session files, subcommands and JSON output records.

pub mod parse;
pub mod session;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::multiplicity::{
    all_mixed_multiplicities, euler_characteristic_complement, hom_ideal_polytope_to, m_mixed_volume,
    milnor_number_local, mixed_ehrhart_leading_coeff, mixed_multiplicity_with, rees_algebra_multiplicity,
    sec_milnor_numbers, PolytopeInput,
};
use crate::poly::{MonomialOrder, Polynomial, RingContext};
use crate::polytope::{mixed_volume_geometric, LatticePolytope};
use crate::rees::{multi_rees_ideal, rees_ideal_by_elimination, ReesResult, ReesSpec};
pub use session::{Entity, Session};

#[derive(Parser, Debug)]
#[command(
    name = "mixedmult",
    version,
    about = "Rees algebras, mixed multiplicities and mixed volumes over Q"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Defining ideal of the multi-Rees algebra, by saturation
    Rees(Opts),
    /// Defining ideal of the multi-Rees algebra, by elimination
    ReesElim(Opts),
    /// One mixed multiplicity e_a(I_0 | I_1, ..., I_r)
    MixedMult(Opts),
    /// Homogeneous monomial ideal of a lattice polytope
    HomIdeal(Opts),
    /// Mixed volume of n polytopes in R^n
    MixedVolume(Opts),
    /// Sectional Milnor numbers of a polynomial with m-primary Jacobian
    SecMilnor(Opts),
    /// Milnor number at the origin
    Milnor(Opts),
    /// Euler characteristic of the complement of a projective hypersurface
    Euler(Opts),
    /// Multiplicity of the multi-Rees algebra
    ReesMult(Opts),
    /// Leading coefficient of the mixed Ehrhart polynomial
    EhrhartLead(Opts),
    /// Reduced Groebner basis
    Gb(Opts),
    /// Saturation I : J^inf
    Saturate(Opts),
    /// Colon ideal I : J
    Colon(Opts),
    /// Krull dimension of R/I
    Dim(Opts),
    /// Vector-space dimension of R/I
    Kdim(Opts),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Opts {
    /// Session file declaring the ring and named objects
    #[arg(short = 'f', long = "file")]
    pub file: Option<PathBuf>,
    /// Comma-separated ideal names or expressions
    #[arg(long)]
    pub ideals: Option<String>,
    /// Comma-separated mixed-multiplicity index
    #[arg(long, allow_hyphen_values = true)]
    pub index: Option<String>,
    /// Comma-separated nonzerodivisors, one per ideal
    #[arg(long)]
    pub nzd: Option<String>,
    /// Polytopes as inline JSON, a JSON file, or session polytope names
    #[arg(long)]
    pub polytopes: Option<String>,
    /// Polynomial expression or session name
    #[arg(long)]
    pub poly: Option<String>,
    /// Ring variables when no session file is given
    #[arg(long)]
    pub vars: Option<String>,
    /// Homogenization degree for hom-ideal (default: the largest point degree)
    #[arg(long)]
    pub degree: Option<u64>,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Route for mixed-volume
    #[arg(long, value_enum, default_value_t = Method::Algebraic)]
    pub method: Method,
    /// Emit a JSON record (default)
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Emit plain text
    #[arg(long)]
    pub text: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum OrderArg {
    #[default]
    Grevlex,
    Lex,
}

#[derive(ValueEnum, Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Algebraic,
    Geometric,
    Both,
}

/// One invocation's result.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

/// What the binary prints and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let echo = echo(&args[1.min(args.len())..]);
    let opts = cli.command.opts().clone();
    let (record, code) = match execute(&cli.command) {
        Ok(value) => (
            OutputRecord {
                command: echo,
                status: "ok".into(),
                value: Some(value),
                message: None,
            },
            0,
        ),
        Err(e) => (
            OutputRecord {
                command: echo,
                status: e.code().into(),
                value: None,
                message: Some(e.to_string()),
            },
            e.class().exit_code(),
        ),
    };
    let stderr = record
        .message
        .as_ref()
        .map(|m| format!("error: {m}\n"))
        .unwrap_or_default();
    let stdout = if opts.text {
        match &record.value {
            Some(v) => render_text(v),
            None => String::new(),
        }
    } else {
        serde_json::to_string(&record).expect("records serialize") + "\n"
    };
    Outcome { code, stdout, stderr }
}

fn echo(args: &[OsString]) -> String {
    args.iter()
        .map(|a| {
            let s = a.to_string_lossy();
            if s.is_empty() || s.contains(char::is_whitespace) {
                format!("\"{s}\"")
            } else {
                s.into_owned()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl Command {
    pub fn opts(&self) -> &Opts {
        use Command::*;
        match self {
            Rees(o) | ReesElim(o) | MixedMult(o) | HomIdeal(o) | MixedVolume(o) | SecMilnor(o) | Milnor(o)
            | Euler(o) | ReesMult(o) | EhrhartLead(o) | Gb(o) | Saturate(o) | Colon(o) | Dim(o) | Kdim(o) => o,
        }
    }
}

/// Runs one command and returns its JSON payload.
pub fn execute(cmd: &Command) -> Result<Value> {
    let o = cmd.opts();
    match cmd {
        Command::Rees(_) | Command::ReesElim(_) => {
            let s = load_session(o)?;
            let ideals = ideals_arg(&s, o)?;
            let spec = match nzd_arg(&s, o)? {
                Some(n) => ReesSpec::with_nzds(ideals, n),
                None => ReesSpec::new(ideals),
            };
            let res = if matches!(cmd, Command::Rees(_)) {
                multi_rees_ideal(&spec)?
            } else {
                rees_ideal_by_elimination(&spec)?
            };
            Ok(rees_value(&res))
        }
        Command::MixedMult(_) => {
            let s = load_session(o)?;
            let ideals = ideals_arg(&s, o)?;
            let index = index_arg(o)?;
            let e = mixed_multiplicity_with(&ideals, &index, nzd_arg(&s, o)?)?;
            Ok(big(&e))
        }
        Command::HomIdeal(_) => {
            let polys = polytopes_arg(o)?;
            let mut out = Vec::new();
            for p in &polys {
                let i = hom_ideal_polytope_to(p, o.degree)?;
                out.push(json!({ "ring": i.ctx().names(), "generators": i.sorted_strings() }));
            }
            Ok(if out.len() == 1 {
                out.remove(0)
            } else {
                Value::Array(out)
            })
        }
        Command::MixedVolume(_) => {
            let inputs: Vec<PolytopeInput> = if o.polytopes.is_some() {
                polytopes_arg(o)?.into_iter().map(PolytopeInput::Points).collect()
            } else {
                let s = load_session(o)?;
                ideals_arg(&s, o)?.into_iter().map(PolytopeInput::Ideal).collect()
            };
            let geometric = || -> Result<BigInt> {
                let pts: Result<Vec<LatticePolytope>> = inputs
                    .iter()
                    .map(|i| match i {
                        PolytopeInput::Points(p) => Ok(p.clone()),
                        PolytopeInput::Ideal(_) => {
                            Err(Error::InvalidArgument("the geometric route needs point sets".into()))
                        }
                    })
                    .collect();
                mixed_volume_geometric(&pts?)
            };
            match o.method {
                Method::Algebraic => Ok(big(&m_mixed_volume(&inputs)?)),
                Method::Geometric => Ok(big(&geometric()?)),
                Method::Both => {
                    let (a, g) = (m_mixed_volume(&inputs)?, geometric()?);
                    if a != g {
                        return Err(Error::Internal(format!("algebraic {a} and geometric {g} disagree")));
                    }
                    Ok(json!({ "algebraic": a.to_string(), "geometric": g.to_string() }))
                }
            }
        }
        Command::SecMilnor(_) => {
            let (ring, f) = poly_arg(o)?;
            let map = sec_milnor_numbers(&ring, &f)?;
            Ok(Value::Object(
                map.iter().map(|(k, v)| (k.to_string(), big(v))).collect(),
            ))
        }
        Command::Milnor(_) => {
            let (ring, f) = poly_arg(o)?;
            Ok(big(&milnor_number_local(&ring, &f)?))
        }
        Command::Euler(_) => {
            let (ring, f) = poly_arg(o)?;
            Ok(big(&euler_characteristic_complement(&ring, &f)?))
        }
        Command::ReesMult(_) => {
            let s = load_session(o)?;
            Ok(big(&rees_algebra_multiplicity(&ideals_arg(&s, o)?)?))
        }
        Command::EhrhartLead(_) => Ok(big(&mixed_ehrhart_leading_coeff(&polytopes_arg(o)?)?)),
        Command::Gb(_) => {
            let s = load_session(o)?;
            let i = single_ideal(&s, o)?;
            let order = match o.order {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let gb = i.groebner_basis(&order)?;
            let strings: Vec<String> = gb.polys().iter().map(|p| i.ctx().show(p)).collect();
            Ok(json!(strings))
        }
        Command::Saturate(_) | Command::Colon(_) => {
            let s = load_session(o)?;
            let ideals = ideals_arg(&s, o)?;
            let [a, b] = ideals.as_slice() else {
                return Err(Error::InvalidArgument("exactly two ideals are required".into()));
            };
            let r = if matches!(cmd, Command::Saturate(_)) {
                a.saturate(b)?
            } else {
                a.colon(b)?
            };
            Ok(json!(r.sorted_strings()))
        }
        Command::Dim(_) => {
            let s = load_session(o)?;
            Ok(json!(single_ideal(&s, o)?.krull_dimension()?.to_string()))
        }
        Command::Kdim(_) => {
            let s = load_session(o)?;
            Ok(json!(single_ideal(&s, o)?.k_dimension()?.to_string()))
        }
    }
}

/// Every mixed multiplicity of the ideals, keyed by the index written as `a,b,...`.
pub fn all_mixed_value(ideals: &[Ideal]) -> Result<Value> {
    let all = all_mixed_multiplicities(ideals)?;
    let map: BTreeMap<String, String> = all
        .iter()
        .map(|(k, v)| {
            (
                k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                v.to_string(),
            )
        })
        .collect();
    Ok(json!(map))
}

fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn rees_value(res: &ReesResult) -> Value {
    let mut pairs: Vec<(String, Vec<u64>)> = res
        .flat_strings()
        .into_iter()
        .zip(res.degrees().into_iter().map(|d| d.0))
        .collect();
    pairs.sort();
    let variables: Vec<Value> = res
        .flat_indices()
        .into_iter()
        .enumerate()
        .map(|(k, (i, j))| {
            json!({
                "name": format!("X_{k}"),
                "ideal": i,
                "generator": res.base().show(&res.generators()[i][j]),
            })
        })
        .collect();
    json!({
        "ring": res.base().names(),
        "variables": variables,
        "generators": pairs.iter().map(|p| p.0.clone()).collect::<Vec<_>>(),
        "degrees": pairs.iter().map(|p| p.1.clone()).collect::<Vec<_>>(),
    })
}

fn load_session(o: &Opts) -> Result<Session> {
    if let Some(path) = &o.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        let s = Session::parse(&text)?;
        if o.vars.is_some() {
            return Err(Error::InvalidArgument("--vars conflicts with a session file".into()));
        }
        return Ok(s);
    }
    let names = match &o.vars {
        Some(v) => split_top_level(v).into_iter().map(|s| s.trim().to_string()).collect(),
        None => {
            let mut names = Vec::new();
            for text in [&o.ideals, &o.poly, &o.nzd].into_iter().flatten() {
                for id in parse::collect_identifiers(text)? {
                    if id != "vars" && id != "jacobian" && !names.contains(&id) {
                        names.push(id);
                    }
                }
            }
            names
        }
    };
    if names.is_empty() {
        return Err(Error::InvalidArgument(
            "give a session file with -f or the ring variables with --vars".into(),
        ));
    }
    Ok(Session::with_ring(RingContext::new(&names)?))
}

/// Splits at commas outside parentheses and brackets.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

fn ideals_arg(s: &Session, o: &Opts) -> Result<Vec<Ideal>> {
    let text = o
        .ideals
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--ideals is required".into()))?;
    split_top_level(text).into_iter().map(|t| s.eval_ideal(t)).collect()
}

fn single_ideal(s: &Session, o: &Opts) -> Result<Ideal> {
    let mut v = ideals_arg(s, o)?;
    if v.len() != 1 {
        return Err(Error::InvalidArgument("exactly one ideal is required".into()));
    }
    Ok(v.remove(0))
}

fn nzd_arg(s: &Session, o: &Opts) -> Result<Option<Vec<Polynomial>>> {
    match &o.nzd {
        None => Ok(None),
        Some(text) => Ok(Some(
            split_top_level(text)
                .into_iter()
                .map(|t| s.eval_poly(t))
                .collect::<Result<_>>()?,
        )),
    }
}

fn index_arg(o: &Opts) -> Result<Vec<u32>> {
    let text = o
        .index
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--index is required".into()))?;
    text.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<i64>() {
                Ok(v) if v < 0 => Err(Error::NegativePower(v)),
                Ok(v) => u32::try_from(v).map_err(|_| Error::InvalidArgument(format!("index entry {v} is too large"))),
                Err(_) => Err(Error::InvalidArgument(format!("index entry `{t}` is not an integer"))),
            }
        })
        .collect()
}

fn poly_arg(o: &Opts) -> Result<(std::sync::Arc<RingContext>, Polynomial)> {
    let text = o
        .poly
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--poly is required".into()))?;
    let s = load_session(o)?;
    let ring = s.ring()?.clone();
    Ok((ring, s.eval_poly(text)?))
}

fn polytopes_arg(o: &Opts) -> Result<Vec<LatticePolytope>> {
    let text = o
        .polytopes
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--polytopes is required".into()))?;
    let trimmed = text.trim_start();
    let json_text = if trimmed.starts_with('[') {
        Some(text.to_string())
    } else if std::path::Path::new(text).is_file() {
        Some(std::fs::read_to_string(text).map_err(|e| Error::InvalidArgument(format!("cannot read {text}: {e}")))?)
    } else {
        None
    };
    match json_text {
        Some(j) => {
            let raw: Vec<Vec<Vec<i64>>> = serde_json::from_str(&j).map_err(|e| Error::Syntax {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            raw.into_iter().map(LatticePolytope::new).collect()
        }
        None => {
            let s = load_session(o)?;
            split_top_level(text)
                .into_iter()
                .map(|n| s.polytope(n.trim()).cloned())
                .collect()
        }
    }
}

/// Plain-text rendering: scalars on one line, lists one item per line,
/// maps as `key: value`.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::String(s) => {
            out.push_str(s);
            out.push('\n');
        }
        Value::Array(items) => {
            for item in items {
                out.push_str(&inline(item));
                out.push('\n');
            }
        }
        Value::Object(map) => {
            for (k, item) in map {
                match item {
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{k}:\n"));
                        for i in items {
                            out.push_str(&format!("  {}\n", inline(i)));
                        }
                    }
                    _ => out.push_str(&format!("{k}: {}\n", inline(item))),
                }
            }
        }
        other => {
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
    out
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("{k}={}", inline(x)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
