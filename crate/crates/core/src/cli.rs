//! Command-line front end for `pi-forge`.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{builtin, AlgebraSpec};
use crate::error::{Error, Result};
use crate::free::Mode;
use crate::gradings::{classify, classify_z2, parse_group, GradingClass};
use crate::identity::{is_identity_in, IdentityCheck, Quotient};
use crate::multilinear::{degree_cap, Signature};
use crate::parse::parse_polynomial;
use crate::representation::{cocharacter, expected, format_shapes};
use crate::theorems::GeneratorSet;
use crate::verify::{verify_basis, BasisReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "pi-forge", version, about = "Polynomial identities of a five-dimensional upper triangular algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Maximum total degree (at most the cap, PI_FORGE_MAX_DEGREE or 8)
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Write output to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a generator set spans the identities of an algebra
    Verify {
        /// Built-in name or JSON spec path (defaults to the basis file's algebra)
        #[arg(long)]
        algebra: Option<String>,
        /// Generator file path or bundled:NAME
        #[arg(long)]
        basis: String,
        #[command(flatten)]
        common: Common,
    },
    /// Dimensions of P, Id ∩ P and the quotient per signature
    Dims {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        mode: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Cocharacter multiplicities per shape tuple
    Cochar {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// Classify elementary gradings by a finite abelian group
    Gradings {
        #[arg(long, default_value = "Z2")]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether a polynomial is an identity
    CheckIdentity {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        mode: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

/// Which command to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Verify,
    Dims,
    Cochar,
    Gradings,
    CheckIdentity,
}

/// A fully resolved invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub algebra: Option<String>,
    pub basis: Option<String>,
    pub mode: Option<String>,
    pub poly: Option<String>,
    pub group: Option<String>,
    pub max_degree: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let blank = |command, common: Common| RunConfig {
            command,
            algebra: None,
            basis: None,
            mode: None,
            poly: None,
            group: None,
            max_degree: common.max_degree,
            out: common.out,
            format: common.format,
        };
        match cli.command {
            Command::Verify { algebra, basis, common } => RunConfig { algebra, basis: Some(basis), ..blank(CommandKind::Verify, common) },
            Command::Dims { algebra, mode, common } => RunConfig { algebra: Some(algebra), mode, ..blank(CommandKind::Dims, common) },
            Command::Cochar { algebra, common } => RunConfig { algebra: Some(algebra), ..blank(CommandKind::Cochar, common) },
            Command::Gradings { group, common } => RunConfig { group: Some(group), ..blank(CommandKind::Gradings, common) },
            Command::CheckIdentity { algebra, poly, mode, common } => {
                RunConfig { algebra: Some(algebra), poly: Some(poly), mode, ..blank(CommandKind::CheckIdentity, common) }
            }
        }
    }
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Fail = 1,
    Usage = 2,
}

/// Rendered output of a command.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub body: String,
}

const DEFAULT_DEGREE: usize = 6;

/// Built-in name or a JSON spec on disk.
pub fn load_algebra(arg: &str) -> Result<AlgebraSpec> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        return AlgebraSpec::from_json(&std::fs::read_to_string(path)?);
    }
    builtin(arg)
}

fn degree(cfg: &RunConfig) -> Result<usize> {
    let d = cfg.max_degree.unwrap_or(DEFAULT_DEGREE.min(degree_cap()));
    let cap = degree_cap();
    if d > cap {
        return Err(Error::DegreeCap { degree: d, cap });
    }
    Ok(d)
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::Precondition(format!("--{flag} is required")))
}

fn mode_for(cfg: &RunConfig, spec: &AlgebraSpec) -> Result<Mode> {
    let mode = match &cfg.mode {
        Some(m) => Mode::from_str(m)?,
        None => spec.mode(),
    };
    spec.supports(mode)?;
    Ok(mode)
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn render(format: Format, header: &[&str], rows: &[Vec<String>], json_value: impl FnOnce() -> String, preamble: &str, footer: &str) -> Result<String> {
    Ok(match format {
        Format::Json => json_value(),
        Format::Csv => csv_string(header, rows)?,
        Format::Text => format!("{preamble}{}{footer}", text_table(header, rows)),
    })
}

fn sig_str(counts: &[usize]) -> String {
    format!("({})", counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    algebra: &'a str,
    basis: &'a str,
    mode: Mode,
    max_degree: usize,
    verified_through: usize,
    sound: bool,
    verdict: &'static str,
    rows: &'a [crate::verify::SignatureRecord],
}

fn run_verify(cfg: &RunConfig) -> Result<Outcome> {
    let set = GeneratorSet::load(required(&cfg.basis, "basis")?)?;
    let spec = load_algebra(cfg.algebra.as_deref().unwrap_or(&set.algebra))?;
    let d = degree(cfg)?;
    let report: BasisReport = match verify_basis(&spec, &set.generators, set.mode, d) {
        Ok(r) => r,
        Err(Error::NotAnIdentity { name, detail }) => {
            return Ok(Outcome { status: Status::Fail, body: format!("generator {name} is not an identity of {}: {detail}\n", spec.name()) });
        }
        Err(e) => return Err(e),
    };
    let header = ["signature", "dimP", "dimId", "dimCons", "verdict"];
    let rows: Vec<Vec<String>> = report
        .records
        .iter()
        .map(|r| {
            vec![sig_str(&r.signature), r.dim_p.to_string(), r.dim_id.to_string(), r.dim_cons.to_string(), if r.verdict { "pass" } else { "fail" }.to_string()]
        })
        .collect();
    let through = report.verified_through();
    let sound = report.records.iter().all(|r| r.sound);
    let preamble = format!("algebra {} ({} mode), basis {} ({} generators)\n", spec.name(), set.mode.name(), set.name, set.generators.len());
    let mut footer = String::new();
    if !sound {
        footer += "some generated consequences are not identities\n";
    }
    if report.verdict() {
        footer += &format!("basis verified through degree {through}\n");
    } else {
        let first = report.records.iter().find(|r| !r.verdict).expect("a failing record");
        footer += &format!("verification failed at signature {}; basis verified through degree {through}\n", sig_str(&first.signature));
    }
    let body = render(
        cfg.format.unwrap_or(Format::Text),
        &header,
        &rows,
        || {
            json(&VerifyJson {
                algebra: spec.name(),
                basis: &set.name,
                mode: set.mode,
                max_degree: d,
                verified_through: through,
                sound,
                verdict: if report.verdict() { "pass" } else { "fail" },
                rows: &report.records,
            })
        },
        &preamble,
        &footer,
    )?;
    Ok(Outcome { status: if report.verdict() { Status::Pass } else { Status::Fail }, body })
}

#[derive(Serialize)]
struct DimRow {
    signature: Vec<usize>,
    #[serde(rename = "dimP")]
    dim_p: usize,
    #[serde(rename = "dimId")]
    dim_id: usize,
    #[serde(rename = "dimQuotient")]
    dim_quotient: usize,
}

fn run_dims(cfg: &RunConfig) -> Result<Outcome> {
    let spec = load_algebra(required(&cfg.algebra, "algebra")?)?;
    let mode = mode_for(cfg, &spec)?;
    let d = degree(cfg)?;
    let sigs = Signature::all_up_to(mode, d);
    let dims: Vec<DimRow> = {
        use rayon::prelude::*;
        sigs.par_iter()
            .map(|s| {
                let q = Quotient::new(&spec, s)?;
                Ok(DimRow { signature: s.counts().to_vec(), dim_p: q.basis().len(), dim_id: q.identity_dim(), dim_quotient: q.dim() })
            })
            .collect::<Result<Vec<_>>>()?
    };
    let header = ["signature", "dimP", "dimId", "dimQuotient"];
    let rows: Vec<Vec<String>> =
        dims.iter().map(|r| vec![sig_str(&r.signature), r.dim_p.to_string(), r.dim_id.to_string(), r.dim_quotient.to_string()]).collect();
    let preamble = format!("algebra {} ({} mode), total degree 1..{d}\n", spec.name(), mode.name());
    let body = render(cfg.format.unwrap_or(Format::Text), &header, &rows, || json(&dims), &preamble, "")?;
    Ok(Outcome { status: Status::Pass, body })
}

#[derive(Serialize)]
struct CocharRow {
    signature: Vec<usize>,
    shapes: String,
    multiplicity: usize,
    formula_expected: Option<usize>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

fn run_cochar(cfg: &RunConfig) -> Result<Outcome> {
    let spec = load_algebra(required(&cfg.algebra, "algebra")?)?;
    let mode = spec.mode();
    let d = degree(cfg)?;
    let formula = expected::for_algebra(spec.name());
    let mut table = Vec::new();
    for sig in Signature::all_up_to(mode, d) {
        for r in cocharacter(&spec, &sig)? {
            let want = formula.map(|f| f(&r.shapes));
            table.push(CocharRow {
                signature: sig.counts().to_vec(),
                shapes: format_shapes(&r.shapes),
                multiplicity: r.multiplicity,
                formula_expected: want,
                matches: want.map(|w| w == r.multiplicity),
            });
        }
    }
    let all_match = table.iter().all(|r| r.matches != Some(false));
    let header = ["shapes", "multiplicity", "formula_expected", "match"];
    let opt = |o: Option<String>| o.unwrap_or_default();
    let rows: Vec<Vec<String>> = table
        .iter()
        .map(|r| vec![r.shapes.clone(), r.multiplicity.to_string(), opt(r.formula_expected.map(|x| x.to_string())), opt(r.matches.map(|x| x.to_string()))])
        .collect();
    let preamble = format!("algebra {} ({} mode), total degree 1..{d}\n", spec.name(), mode.name());
    let footer = match formula {
        None => "no closed formula for this algebra\n".to_string(),
        Some(_) if all_match => format!("all multiplicities match the formula through degree {d}\n"),
        Some(_) => "some multiplicities differ from the formula\n".to_string(),
    };
    let body = render(cfg.format.unwrap_or(Format::Csv), &header, &rows, || json(&table), &preamble, &footer)?;
    Ok(Outcome { status: if all_match { Status::Pass } else { Status::Fail }, body })
}

fn run_gradings(cfg: &RunConfig) -> Result<Outcome> {
    let group_src = cfg.group.as_deref().unwrap_or("Z2");
    let group = parse_group(group_src)?;
    let classes: Vec<GradingClass> = if group.moduli == [2] { classify_z2() } else { classify(&group) };
    let fmt_g = |g: &[u32]| if g.len() == 1 { g[0].to_string() } else { format!("({})", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")) };
    let fmt_t = |t: &[Vec<u32>; 3]| format!("({})", t.iter().map(|g| fmt_g(g)).collect::<Vec<_>>().join(","));
    let header = ["name", "deg u", "deg d", "deg a", "deg b", "deg c", "triples"];
    let rows: Vec<Vec<String>> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut row = vec![c.name.clone().unwrap_or_else(|| format!("class{}", i + 1))];
            row.extend(c.degrees.iter().map(|g| fmt_g(g)));
            row.push(c.triples.iter().map(fmt_t).collect::<Vec<_>>().join(" "));
            row
        })
        .collect();
    let preamble = format!(
        "elementary gradings of the algebra by {group_src}: {} classes of {} triples\n",
        classes.len(),
        classes.iter().map(|c| c.triples.len()).sum::<usize>()
    );
    let body = render(cfg.format.unwrap_or(Format::Text), &header, &rows, || json(&classes), &preamble, "")?;
    Ok(Outcome { status: Status::Pass, body })
}

#[derive(Serialize)]
struct CheckJson<'a> {
    algebra: &'a str,
    mode: Mode,
    polynomial: String,
    identity: bool,
    witness: Option<&'a crate::identity::Witness>,
}

fn run_check(cfg: &RunConfig) -> Result<Outcome> {
    let spec = load_algebra(required(&cfg.algebra, "algebra")?)?;
    let mode = mode_for(cfg, &spec)?;
    let p = parse_polynomial(required(&cfg.poly, "poly")?, mode)?;
    let check = is_identity_in(&spec, &p, mode)?;
    let shown = p.display(mode).to_string();
    let body = match cfg.format.unwrap_or(Format::Text) {
        Format::Json => json(&CheckJson { algebra: spec.name(), mode, polynomial: shown, identity: check.holds(), witness: check.witness() }),
        Format::Csv => {
            let w = check.witness().map(|w| w.assignment.iter().map(|(v, e)| format!("{v}={e}")).collect::<Vec<_>>().join(" "));
            csv_string(&["polynomial", "identity", "witness"], &[vec![shown, check.holds().to_string(), w.unwrap_or_default()]])?
        }
        Format::Text => match &check {
            IdentityCheck::Holds => format!("{shown} is an identity of {} ({} mode)\n", spec.name(), mode.name()),
            IdentityCheck::Fails(w) => {
                let a: Vec<String> = w.assignment.iter().map(|(v, e)| format!("{v} = {e}")).collect();
                format!(
                    "{shown} is not an identity of {} ({} mode)\ncomponent {} evaluates to {} at {}\n",
                    spec.name(),
                    mode.name(),
                    w.component,
                    w.value,
                    a.join(", ")
                )
            }
        },
    };
    Ok(Outcome { status: if check.holds() { Status::Pass } else { Status::Fail }, body })
}

/// Runs a resolved configuration; library errors become usage failures.
pub fn run(cfg: &RunConfig) -> Outcome {
    let result = match cfg.command {
        CommandKind::Verify => run_verify(cfg),
        CommandKind::Dims => run_dims(cfg),
        CommandKind::Cochar => run_cochar(cfg),
        CommandKind::Gradings => run_gradings(cfg),
        CommandKind::CheckIdentity => run_check(cfg),
    };
    result.unwrap_or_else(|e| Outcome { status: Status::Usage, body: format!("error: {e}\n") })
}

/// Parses arguments, runs, writes output; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage as i32 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = RunConfig::from(cli);
    let outcome = run(&cfg);
    if outcome.status == Status::Usage {
        eprint!("{}", outcome.body);
        return Status::Usage as i32;
    }
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Status::Usage as i32;
            }
        }
        None => print!("{}", outcome.body),
    }
    outcome.status as i32
}
