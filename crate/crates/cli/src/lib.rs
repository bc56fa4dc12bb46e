//! Command-line front end: class numbers, L(1, ψ), Hurwitz zeta values and
//! identity-check suites.

pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use l1class::characters::build_group;
use l1class::classnum::{batch_class_numbers, class_number};
use l1class::strategy::{check_suites, l1_methods, periodic_zeta_evaluators};
use l1class::zeta::hurwitz_zeta;
use l1class::EngineConfig;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "l1class", version, about = "L(1, psi) and class numbers of real quadratic fields")]
pub struct Cli {
    /// Output format; csv is only accepted by h-range.
    #[arg(long, global = true, value_enum, default_value = "text", visible_alias = "out")]
    pub format: Format,

    #[arg(long, short, global = true)]
    pub verbose: bool,

    /// Multiplies every engine tolerance; values below 1 also raise precision.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub tolerance_scale: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class number of Q(sqrt(D)) from the four-term decomposition.
    H {
        #[arg(long, allow_negative_numbers = true)]
        disc: i64,
    },
    /// Class numbers for every fundamental discriminant in [from, to].
    HRange {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
    },
    /// L(1, psi) for an even primitive character.
    L1 {
        #[arg(long)]
        modulus: u64,
        /// Mixed-radix index of the character, first generator least significant.
        #[arg(long)]
        char_index: u64,
        #[arg(long, default_value = "theorem")]
        method: String,
    },
    /// Hurwitz zeta value zeta(s, P/Q).
    Hurwitz {
        #[arg(long)]
        s: u32,
        /// Rational argument P/Q.
        #[arg(long)]
        a: String,
        /// Also evaluate the periodic zeta function Phi(s, P/Q) with this evaluator.
        #[arg(long)]
        periodic: Option<String>,
    },
    /// Run identity-check suites over all moduli up to a bound.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        max_modulus: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn report(&self) -> String {
        let (kind, msg) = match self {
            Failure::Usage(m) => ("usage", m),
            Failure::Domain(m) => ("domain", m),
            Failure::Verification(m) => ("verification", m),
        };
        format!("error: {kind}: {msg}")
    }
}

impl From<l1class::Error> for Failure {
    fn from(e: l1class::Error) -> Self {
        match e {
            l1class::Error::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(format!("write failed: {e}"))
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let rendered = e.render().to_string();
            let mut lines = rendered.lines();
            let first = lines.next().unwrap_or_default().trim_start_matches("error: ");
            let _ = writeln!(err, "error: usage: {first}");
            for line in lines.filter(|l| !l.trim().is_empty()) {
                let _ = writeln!(err, "{line}");
            }
            return 1;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "{}", f.report());
            f.code()
        }
    }
}

fn engine_config(cli: &Cli) -> Result<EngineConfig, Failure> {
    let scale = cli.tolerance_scale;
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Failure::Usage(format!("--tolerance-scale must be positive, got {scale}")));
    }
    Ok(if scale == 1.0 { EngineConfig::default() } else { EngineConfig::default().scaled(scale) })
}

fn parse_fraction(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("expected a positive fraction P/Q, got '{text}'"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
        None => (text.trim().parse().map_err(|_| bad())?, 1),
    };
    if p == 0 || q == 0 {
        return Err(bad());
    }
    Ok((p, q))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = engine_config(cli)?;
    if cli.format == Format::Csv && !matches!(cli.command, Command::HRange { .. }) {
        return Err(Failure::Usage("csv output is only available for h-range".into()));
    }
    match &cli.command {
        Command::H { disc } => {
            let report = class_number(*disc, &cfg)?;
            match cli.format {
                Format::Json => write!(out, "{}", output::to_json_string(&output::report_json(&report)))?,
                _ => write!(out, "{}", output::report_text(&report, cli.verbose))?,
            }
            if let Some(reason) = &report.failure {
                return Err(Failure::Verification(format!("D = {disc}: {reason}")));
            }
        }
        Command::HRange { from, to } => {
            let reports = batch_class_numbers(*from, *to, &cfg)?;
            match cli.format {
                Format::Csv => {
                    writeln!(out, "{}", output::CSV_HEADER)?;
                    for r in &reports {
                        writeln!(out, "{}", output::csv_row(r))?;
                    }
                }
                Format::Json => {
                    let all: Vec<Value> = reports.iter().map(output::report_json).collect();
                    write!(out, "{}", output::to_json_string(&Value::Array(all)))?;
                }
                Format::Text => write!(out, "{}", output::range_text(&reports))?,
            }
            let failed: Vec<String> = reports.iter().filter(|r| !r.is_ok()).map(|r| r.disc.to_string()).collect();
            if !failed.is_empty() {
                return Err(Failure::Verification(format!("failed discriminants: {}", failed.join(", "))));
            }
        }
        Command::L1 { modulus, char_index, method } => {
            let methods = l1_methods();
            let Some(route) = methods.get(method) else {
                return Err(Failure::Usage(format!(
                    "unknown method '{method}' (expected one of: {})",
                    methods.names().join(", ")
                )));
            };
            let psi = build_group(*modulus)?.character(*char_index)?;
            let value = route.evaluate(&psi, &cfg)?;
            match cli.format {
                Format::Json => {
                    let v = json!({
                        "modulus": modulus,
                        "char_index": char_index,
                        "method": route.name(),
                        "conductor": psi.conductor(),
                        "order": psi.order(),
                        "L1": output::complex_json(value),
                    });
                    write!(out, "{}", output::to_json_string(&v))?;
                }
                _ => {
                    if cli.verbose {
                        writeln!(out, "modulus = {modulus}")?;
                        writeln!(out, "char_index = {char_index}")?;
                        writeln!(out, "order = {}", psi.order())?;
                        writeln!(out, "method = {} ({})", route.name(), route.description())?;
                    }
                    writeln!(out, "L(1, psi) = {}", output::fmt_complex(value))?;
                }
            }
        }
        Command::Hurwitz { s, a, periodic } => {
            let (p, q) = parse_fraction(a)?;
            let z = hurwitz_zeta(*s, p as f64 / q as f64, &cfg)?;
            let phi = match periodic {
                Some(name) => {
                    let evaluators = periodic_zeta_evaluators();
                    let Some(ev) = evaluators.get(name) else {
                        return Err(Failure::Usage(format!(
                            "unknown evaluator '{name}' (expected one of: {})",
                            evaluators.names().join(", ")
                        )));
                    };
                    Some((ev.name(), ev.evaluate(*s, p, q, &cfg)?))
                }
                None => None,
            };
            match cli.format {
                Format::Json => {
                    let mut v = json!({
                        "s": s,
                        "a": format!("{p}/{q}"),
                        "value": output::real_json(z.value),
                        "error_bound": output::real_json(z.error_bound),
                    });
                    if let Some((name, value)) = phi {
                        v["periodic"] = json!({ "evaluator": name, "value": output::complex_json(value) });
                    }
                    write!(out, "{}", output::to_json_string(&v))?;
                }
                _ => {
                    writeln!(out, "zeta({s}, {p}/{q}) = {}", output::fmt12(z.value))?;
                    if cli.verbose {
                        writeln!(out, "error bound = {:.3e}", z.error_bound)?;
                    }
                    if let Some((name, value)) = phi {
                        writeln!(out, "Phi({s}, {p}/{q}) = {} [{name}]", output::fmt_complex(value))?;
                    }
                }
            }
        }
        Command::Check { suite, max_modulus } => {
            let suites = check_suites();
            let selected: Vec<_> = if suite == "all" {
                suites.iter().collect()
            } else {
                match suites.get(suite) {
                    Some(one) => vec![one],
                    None => {
                        return Err(Failure::Usage(format!(
                            "unknown suite '{suite}' (expected all or one of: {})",
                            suites.names().join(", ")
                        )))
                    }
                }
            };
            let mut outcomes = Vec::new();
            for s in selected {
                let outcome = s.run(*max_modulus, &cfg)?;
                if cli.format == Format::Text {
                    write!(out, "{}", output::suite_text(&outcome, cli.verbose))?;
                }
                outcomes.push(outcome);
            }
            if cli.format == Format::Json {
                let all: Vec<Value> = outcomes.iter().map(output::suite_json).collect();
                write!(out, "{}", output::to_json_string(&Value::Array(all)))?;
            }
            let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.suite).collect();
            if !failed.is_empty() {
                return Err(Failure::Verification(format!("failed suites: {}", failed.join(", "))));
            }
        }
    }
    Ok(())
}
