//! Command-line front end: argument definitions and the subcommands.

pub mod expr;
pub mod report;

use std::fmt;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand};
use mixprod::alexander::{closed_dual, dual};
use mixprod::betti::{hilbert_numerator, BettiTable, ORACLE_LIMIT};
use mixprod::cm::{classify_cm, closed_type};
use mixprod::sweep;
use mixprod::{Field, GroundSet, Ideal, MixedSpec};
use serde::Serialize;

pub use expr::{parse_ideal_expr, ExprError};
pub use report::{HilbertJson, IdealJson, Input, Method, Report, Tables};

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit status 2.
    Usage(String),
    /// Well-formed input the computation cannot handle: exit status 1.
    Domain(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn domain(e: mixprod::Error) -> Self {
        CliError::Domain(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "mixprod",
    version,
    about = "Alexander duals, Betti tables and Cohen-Macaulay data of mixed product ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander dual, in closed form when the shape allows it.
    Dual(IdealArgs),
    /// Graded Betti table of S/I.
    Betti(BettiArgs),
    /// Depth, dimension, Cohen-Macaulayness, type and Gorenstein property.
    Cm(IdealArgs),
    /// Hilbert series numerator, from faces and from the Betti table.
    Hilbert(IdealArgs),
    /// Compare every closed formula with the oracles on all small cases.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("ideal").required(true).args(["expr", "gens"])))]
pub struct IdealArgs {
    /// Number of x-variables.
    #[arg(long)]
    pub n: u32,
    /// Number of y-variables.
    #[arg(long)]
    pub m: u32,
    /// Coefficient field: rat, gf2 or gfp:<p>.
    #[arg(long, default_value = "rat", value_parser = parse_field)]
    pub field: Field,
    /// Print one JSON object instead of text.
    #[arg(long)]
    pub json: bool,
    /// Explicit generators instead of an expression, e.g. "x1*y1, x2*x3".
    #[arg(long)]
    pub gens: Option<String>,
    /// Mixed product expression, e.g. "I2*J1 + I3".
    pub expr: Option<String>,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// closed, hochster, both, or auto (both when the closed formulas apply
    /// and the oracle is in reach).
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest n + m swept.
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u32).range(1..=ORACLE_LIMIT as i64))]
    pub max_vertices: u32,
    #[arg(long, default_value = "rat", value_parser = parse_field)]
    pub field: Field,
    #[arg(long)]
    pub json: bool,
}

impl IdealArgs {
    pub fn input(&self) -> Result<Input, CliError> {
        let ground = GroundSet::new(self.n, self.m).map_err(|e| CliError::Usage(e.to_string()))?;
        match (&self.expr, &self.gens) {
            (Some(text), _) => parse_ideal_expr(text, ground)
                .map(Input::from_spec)
                .map_err(|e| CliError::Usage(e.to_string())),
            (None, Some(list)) => Ideal::parse_gens(ground, list)
                .map(Input::from_ideal)
                .map_err(|e| CliError::Usage(e.to_string())),
            (None, None) => Err(CliError::Usage(
                "an expression or --gens is required".into(),
            )),
        }
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Generators shown in text output before eliding the rest.
const SHOWN_GENERATORS: usize = 40;

fn write_ideal(
    out: &mut dyn Write,
    label: &str,
    json: &IdealJson,
    count: u128,
    closed_form: bool,
) -> Result<(), CliError> {
    match &json.expr {
        Some(e) => writeln!(out, "{label}: {e}")?,
        None if closed_form => writeln!(out, "{label}: no closed form")?,
        None => {}
    }
    if json.gens.is_empty() && count > 0 {
        writeln!(out, "{label} generators: {count} generators, not listed")?;
    } else if json.gens.len() > SHOWN_GENERATORS {
        let shown = json.gens[..SHOWN_GENERATORS].join(", ");
        writeln!(out, "{label} generators: {shown}, ... ({count} in total)")?;
    } else {
        writeln!(out, "{label} generators: {}", json.gens.join(", "))?;
    }
    Ok(())
}

fn write_input(out: &mut dyn Write, input: &Input) -> Result<(), CliError> {
    let count = report::generator_count(input.ideal.as_ref(), input.spec.as_ref());
    write_ideal(out, "ideal", &input.describe(), count, false)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs one subcommand, writing its normal output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Dual(args) => cmd_dual(args, out),
        Command::Betti(args) => cmd_betti(args, out),
        Command::Cm(args) => cmd_cm(args, out),
        Command::Hilbert(args) => cmd_hilbert(args, out),
        Command::Verify(args) => cmd_verify(args, out),
    }
}

/// The dual as a closed expression (when the shape allows) and as computed
/// generators (when the ideal can be expanded); the two must agree.
fn compute_dual(input: &Input) -> Result<(Option<MixedSpec>, Option<Ideal>), CliError> {
    let closed = match &input.spec {
        Some(spec) => match closed_dual(spec) {
            Ok(d) => Some(d),
            Err(mixprod::Error::UnsupportedShape(_)) => None,
            Err(e) => return Err(CliError::domain(e)),
        },
        None => None,
    };
    let computed = match &input.ideal {
        Some(i) => Some(dual(i).map_err(CliError::domain)?),
        None => None,
    };
    let expanded = match (&closed, computed) {
        (Some(c), Some(d)) => {
            if c.make_ideal().ok().is_some_and(|e| e != d) {
                return Err(CliError::Domain(format!(
                    "closed dual {c} disagrees with the computed dual"
                )));
            }
            Some(d)
        }
        (Some(c), None) => c.make_ideal().ok(),
        (None, d) => d,
    };
    if closed.is_none() && expanded.is_none() {
        return Err(CliError::Domain(
            "too many generators to dualize and no closed dual for this shape".into(),
        ));
    }
    Ok((closed, expanded))
}

pub fn cmd_dual(args: &IdealArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = args.input()?;
    let (closed, expanded) = compute_dual(&input)?;
    let dual_json = report::ideal_json(expanded.as_ref(), closed.as_ref());
    if args.json {
        let tables = input.tables(args.field, Method::Auto, false)?;
        let mut report = Report::new(&input, &tables, args.field)?;
        report.dual = Some(dual_json);
        return write_json(out, &report);
    }
    write_input(out, &input)?;
    let count = report::generator_count(expanded.as_ref(), closed.as_ref());
    write_ideal(out, "dual", &dual_json, count, input.spec.is_some())
}

fn write_table(out: &mut dyn Write, label: &str, table: &BettiTable) -> Result<(), CliError> {
    writeln!(out, "{label}:")?;
    for line in table.to_string().lines() {
        writeln!(out, "  {line}")?;
    }
    Ok(())
}

pub fn cmd_betti(args: &BettiArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let a = &args.ideal;
    let input = a.input()?;
    let tables = input.tables(a.field, args.method, true)?;
    if a.json {
        write_json(out, &Report::new(&input, &tables, a.field)?)?;
    } else {
        write_input(out, &input)?;
        writeln!(out, "field: {}", a.field)?;
        if let Some(t) = &tables.closed {
            write_table(out, "closed", t)?;
        }
        if let Some(t) = &tables.oracle {
            write_table(out, "hochster", t)?;
        }
        if let Some(agree) = tables.agree() {
            writeln!(out, "tables: {}", if agree { "EQUAL" } else { "DIFFERENT" })?;
        }
    }
    if tables.agree() == Some(false) {
        return Err(CliError::Domain("closed and oracle tables differ".into()));
    }
    Ok(())
}

pub fn cmd_cm(args: &IdealArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = args.input()?;
    let tables = input.tables(args.field, Method::Auto, false)?;
    let report = Report::new(&input, &tables, args.field)?;
    if args.json {
        return write_json(out, &report);
    }
    write_input(out, &input)?;
    writeln!(out, "field: {}", args.field)?;
    writeln!(out, "method: {}", report.method)?;
    writeln!(out, "pd: {}", report.pd)?;
    writeln!(out, "depth: {}", report.depth)?;
    writeln!(out, "dim: {}", report.dim)?;
    writeln!(out, "cohen-macaulay: {}", yes_no(report.cm))?;
    if let Some(t) = report.cm_type {
        writeln!(out, "type: {t}")?;
    }
    writeln!(out, "gorenstein: {}", yes_no(report.gorenstein))?;
    if let Some(spec) = &input.spec {
        match classify_cm(spec) {
            Ok(true) => {
                let t = closed_type(spec).map_err(CliError::domain)?;
                writeln!(out, "closed classification: cohen-macaulay, type {t}")?;
            }
            Ok(false) => writeln!(out, "closed classification: not cohen-macaulay")?,
            Err(_) => writeln!(out, "closed classification: not available for this shape")?,
        }
    }
    Ok(())
}

pub fn cmd_hilbert(args: &IdealArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = args.input()?;
    let tables = input.tables(args.field, Method::Auto, false)?;
    let k_polynomial = tables.primary().k_polynomial();
    let face_count = match &input.ideal {
        Some(i) if input.ground.len() <= ORACLE_LIMIT => {
            Some(hilbert_numerator(i).map_err(CliError::domain)?)
        }
        _ => None,
    };
    let matches = face_count.as_ref().map(|f| *f == k_polynomial);
    if args.json {
        let mut report = Report::new(&input, &tables, args.field)?;
        report.hilbert = Some(HilbertJson {
            face_count: face_count.as_ref().map(|p| p.coeffs().to_vec()),
            k_polynomial: k_polynomial.coeffs().to_vec(),
        });
        write_json(out, &report)?;
    } else {
        write_input(out, &input)?;
        writeln!(out, "k-polynomial: {k_polynomial}")?;
        match &face_count {
            Some(f) => writeln!(out, "face count:   {f}")?,
            None => writeln!(
                out,
                "face count:   not available beyond {ORACLE_LIMIT} variables"
            )?,
        }
        if let Some(m) = matches {
            writeln!(out, "match: {}", yes_no(m))?;
        }
    }
    if matches == Some(false) {
        return Err(CliError::Domain(
            "K-polynomial differs from the face count".into(),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    cases: usize,
    failures: usize,
    failing: Vec<String>,
    status: &'static str,
}

#[derive(Serialize)]
struct VerifyJson {
    max_vertices: u32,
    field: String,
    checks: Vec<CheckJson>,
    pass: bool,
}

/// Failing cases shown per check.
const SHOWN_FAILURES: usize = 10;

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let checks = sweep::run_all(args.max_vertices, args.field);
    let pass = checks.iter().all(|c| c.passed());
    let status = |c: &sweep::Check| if c.passed() { "PASS" } else { "FAIL" };
    if args.json {
        let json = VerifyJson {
            max_vertices: args.max_vertices,
            field: args.field.to_string(),
            checks: checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name,
                    cases: c.cases,
                    failures: c.failures.len(),
                    failing: c.failures.iter().take(SHOWN_FAILURES).cloned().collect(),
                    status: status(c),
                })
                .collect(),
            pass,
        };
        write_json(out, &json)?;
    } else {
        let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &checks {
            write!(out, "{} {:<width$} {:>6} cases", status(c), c.name, c.cases)?;
            if !c.passed() {
                write!(out, ", {} failed", c.failures.len())?;
            }
            writeln!(out)?;
            for f in c.failures.iter().take(SHOWN_FAILURES) {
                writeln!(out, "     {f}")?;
            }
        }
        let failed = checks.iter().filter(|c| !c.passed()).count();
        writeln!(
            out,
            "verify: {} checks over n + m <= {} ({}), {}",
            checks.len(),
            args.max_vertices,
            args.field,
            if pass {
                "all PASS".to_string()
            } else {
                format!("{failed} FAIL")
            }
        )?;
    }
    if pass {
        Ok(())
    } else {
        Err(CliError::Domain("verification failed".into()))
    }
}
