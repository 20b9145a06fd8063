//! `sheffer`: generate polynomial tables, extract coefficient triples,
//! verify identities and audit the printed worked examples.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 internal error.

mod render;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sheffer_core::catalog::{self, Params};
use sheffer_core::engine::{self, Corollary, PolySequence, Theorem};
use sheffer_core::verify::{self, CheckKind};
use sheffer_core::{audit, Error, Rational};

#[derive(Parser)]
#[command(name = "sheffer", version, about = "Exact Sheffer-Appell polynomial tables and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in (l, h) families.
    Families {
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Emit polynomials 0..=N of a sequence.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::ShefferAppell)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = GenFormat::Json)]
        format: GenFormat,
    },
    /// Emit the (a, b, c) vectors of a theorem, derived from the series.
    Coeffs {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long)]
        n: usize,
    },
    /// Check residuals, the matrix factorization and matrix properties.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Check a single theorem.
        #[arg(long, value_parser = parse_theorem, conflicts_with = "all")]
        theorem: Option<Theorem>,
        /// Check every theorem (the default), plus corollaries for associated pairs.
        #[arg(long)]
        all: bool,
        /// Also check the Pascal/Wronskian matrix properties.
        #[arg(long)]
        properties: bool,
        /// Also check the matrix factorization of the sequence.
        #[arg(long)]
        lemma: bool,
    },
    /// Evaluate the printed example identities and report.
    Audit {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    /// Family parameter as name=value, value an exact rational like 2 or -1/3.
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, Rational)>,
}

impl FamilyArgs {
    fn params(&self) -> Params {
        self.params.iter().cloned().collect()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sheffer,
    Appell,
    ShefferAppell,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse()
}

fn parse_param(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let value = value.parse::<Rational>().map_err(|e| e.to_string())?;
    Ok((name.trim().to_string(), value))
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownFamily(_)
            | Error::MissingParam { .. }
            | Error::UnexpectedParam { .. }
            | Error::InvalidParam { .. }
            | Error::ParseRational(_) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Style {
            color: std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal(),
        }
    }

    fn status(&self, pass: bool) -> String {
        let word = if pass { "PASS" } else { "FAIL" };
        match (self.color, pass) {
            (false, _) => word.to_string(),
            (true, true) => format!("\x1b[32m{word}\x1b[0m"),
            (true, false) => format!("\x1b[31m{word}\x1b[0m"),
        }
    }
}

fn families(format: ListFormat, out: &mut String) -> Outcome {
    let list = catalog::list_families();
    match format {
        ListFormat::Json => out.push_str(&to_json(&list)?),
        ListFormat::Table => {
            for f in &list {
                let params: Vec<&str> = f.params.iter().map(|p| p.name).collect();
                out.push_str(&format!("{:<16}{:<10}{}", f.name, params.join(","), f.description));
                out.push('\n');
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn generate(family: &FamilyArgs, n: usize, kind: Kind, format: GenFormat, out: &mut String) -> Outcome {
    let params = family.params();
    let pair = catalog::make_pair(&family.family, &params, n.max(1))?;
    let seq: PolySequence = match kind {
        Kind::Sheffer => engine::sheffer_sequence(&pair, n)?,
        Kind::Appell => engine::appell_sequence(pair.l(), n)?,
        Kind::ShefferAppell => engine::sheffer_appell_sequence(&pair, n)?,
    };
    match format {
        GenFormat::Json => out.push_str(&to_json(&json!({
            "family": family.family,
            "params": params,
            "kind": seq.kind.to_string(),
            "n": n,
            "polys": seq.polys,
        }))?),
        GenFormat::Csv => out.push_str(&render::emit_csv(&seq)),
        GenFormat::Latex => out.push_str(&render::emit_latex(&seq)),
    }
    Ok(ExitCode::SUCCESS)
}

fn coeffs(family: &FamilyArgs, theorem: Theorem, n: usize, out: &mut String) -> Outcome {
    let params = family.params();
    let pair = catalog::make_pair(&family.family, &params, n + 2)?;
    let triple = engine::coeff_triple(&pair, theorem, n)?;
    out.push_str(&to_json(&json!({
        "family": family.family,
        "params": params,
        "n": n,
        "theorem": triple.theorem,
        "a": triple.a,
        "b": triple.b,
        "c": triple.c,
    }))?);
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    family: &FamilyArgs,
    n: usize,
    theorem: Option<Theorem>,
    properties: bool,
    lemma: bool,
    style: &Style,
    out: &mut String,
) -> Outcome {
    let params = family.params();
    // fail fast on bad families before fanning out
    let pair = catalog::make_pair(&family.family, &params, n + 2)?;
    let mut kinds: Vec<CheckKind> = match theorem {
        Some(t) => vec![CheckKind::Theorem(t)],
        None => {
            let mut k = verify::theorem_kinds();
            if pair.is_associated() {
                k.extend(Corollary::ALL.iter().map(|&c| CheckKind::Corollary(c)));
            }
            k
        }
    };
    if lemma {
        kinds.push(CheckKind::Lemma);
    }
    let mut checks = verify::grid(&family.family, &params, &kinds, n);
    if properties {
        checks.extend(verify::grid(&family.family, &params, &verify::property_kinds(), n));
    }
    let outcomes = verify::run(&checks);
    let mut failures = 0;
    for o in &outcomes {
        out.push_str(&format!("{} {}\n", style.status(o.passed), o.label()));
        if let Some(r) = &o.residual {
            out.push_str(&format!("    residual: {r}\n"));
        }
        if let Some(e) = &o.error {
            out.push_str(&format!("    error: {e}\n"));
        }
        failures += usize::from(!o.passed);
    }
    out.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        outcomes.len(),
        outcomes.len() - failures,
        failures
    ));
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_audit(n: usize, format: ListFormat, style: &Style, out: &mut String) -> Outcome {
    if n < 3 {
        return Err(Failure::Usage("audit needs --n 3 or larger".into()));
    }
    let report = audit::printed_example_audit(n)?;
    match format {
        ListFormat::Json => out.push_str(&to_json(&report)?),
        ListFormat::Table => {
            for e in &report {
                let params: Vec<String> = e.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!(
                    "{} {:<18}{:<12}n={:<3}backing theorem {} {}\n",
                    style.status(e.status == audit::Status::Pass),
                    e.identity_id,
                    params.join(","),
                    e.n,
                    e.backing_theorem,
                    style.status(e.backing_status == audit::Status::Pass),
                ));
                if !e.residual.is_zero() {
                    out.push_str(&format!("    residual: {}\n", e.residual));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cli: Cli, out: &mut String) -> Outcome {
    let style = Style::detect();
    match cli.command {
        Command::Families { format } => families(format, out),
        Command::Gen {
            family,
            n,
            kind,
            format,
        } => generate(&family, n, kind, format, out),
        Command::Coeffs { family, theorem, n } => coeffs(&family, theorem, n, out),
        Command::Verify {
            family,
            n,
            theorem,
            all: _,
            properties,
            lemma,
        } => run_verify(&family, n, theorem, properties, lemma, &style, out),
        Command::Audit { n, format } => run_audit(n, format, &style, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match dispatch(cli, &mut out) {
        Ok(code) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nRun `sheffer --help` for usage.");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
