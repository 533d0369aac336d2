//! The `stringy` command line: argument parsing, bounds, rendering and exit
//! codes. The binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::oracle::{crosscheck_quotients, crosscheck_report, orbifold_terms};
use crate::report::Report;
use crate::sectors::{sector_polynomial, EnumerationOptions};
use crate::stringy::{generating_table_with, stringy_e_with};
use crate::symfun::chi_a;
use crate::toric::{
    build_delta_fan, combinatorial_check, fiber_product_check, multiplicity_check,
    verify_bundle_structure, verify_delta_fan,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Name of the environment variable that raises the size bounds.
pub const MAX_N_VAR: &str = "STRINGY_MAX_N";

const MAX_COMPUTE_N: usize = 8;
const MAX_CHARACTER_N: usize = 12;
const MAX_FAN_N: usize = 6;
const MAX_GEOMETRIC_FAN_N: usize = 4;
const MAX_ORACLE_R: usize = 5;
const MAX_ORBIFOLD_N: usize = crate::toric::MAX_GEOMETRIC_N;

#[derive(Debug, Parser)]
#[command(name = "stringy", version, about = "Stringy E-polynomials of relative symmetric products")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Evaluate sectors on a thread pool. Output is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stringy E-polynomial of Z^(n)
    Compute {
        #[arg(long)]
        n: usize,
    },
    /// Table of all twisted sectors
    Sectors {
        #[arg(long)]
        n: usize,
    },
    /// The character chi[A_{n-1}, q] in the h-basis
    Character {
        #[arg(long)]
        n: usize,
    },
    /// Structural checks of the fan of the local model
    FanCheck {
        #[arg(long)]
        n: usize,
    },
    /// Burnside cross-check of the quotient E-polynomials up to r
    Oracle {
        #[arg(long)]
        r: usize,
    },
    /// Orbifold E-function from the fan, class by class, against the sectors
    Orbifold {
        #[arg(long)]
        n: usize,
    },
    /// E_st(Z^(n)) for 2 <= n <= n_max
    Table {
        #[arg(long = "n-max")]
        n_max: usize,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

/// Rendered output and whether every check passed.
struct Rendered {
    body: String,
    passed: bool,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. `max_n` is the value of [`MAX_N_VAR`], if set.
pub fn run<I, T>(args: I, max_n: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let to_stdout = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if to_stdout {
                let _ = write!(stdout, "{text}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{text}");
            return EXIT_USAGE;
        }
    };
    let raised = match max_n.map(str::trim).filter(|s| !s.is_empty()) {
        None => None,
        Some(s) => match s.parse::<usize>() {
            Ok(v) => Some(v),
            Err(_) => {
                let _ = writeln!(stderr, "error: {MAX_N_VAR}={s} is not a nonnegative integer");
                return EXIT_USAGE;
            }
        },
    };
    let rendered = match execute(&config, raised) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_CHECK_FAILED;
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::write(path, &rendered.body),
        None => stdout.write_all(rendered.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if rendered.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn bound(what: &'static str, value: usize, min: usize, max: usize, raised: Option<usize>) -> Result<(), Failure> {
    let max = raised.map_or(max, |r| r.max(max));
    if value < min || value > max {
        return Err(Error::OutOfRange { what, value, min, max }.into());
    }
    Ok(())
}

fn execute(config: &RunConfig, raised: Option<usize>) -> Result<Rendered, Failure> {
    let options = EnumerationOptions {
        parallel: config.parallel,
        ..Default::default()
    };
    let json = config.format == Format::Json;
    match config.command {
        Command::Compute { n } => {
            bound("n", n, 2, MAX_COMPUTE_N, raised)?;
            let result = stringy_e_with(n, options)?;
            let body = if json {
                line(&json!({
                    "n": n,
                    "total": result.total,
                    "untwisted": result.untwisted,
                    "sector_count": result.sectors.len(),
                }))
            } else {
                format!("{}\n", result.total)
            };
            Ok(Rendered { body, passed: true })
        }
        Command::Sectors { n } => {
            bound("n", n, 2, MAX_COMPUTE_N, raised)?;
            let result = stringy_e_with(n, options)?;
            let mut lambdas: Vec<_> = result.sectors.iter().map(|s| s.lambda.clone()).collect();
            lambdas.dedup();
            let body = if json {
                let totals: Vec<_> = lambdas
                    .iter()
                    .map(|l| json!({ "lambda": l, "total": result.lambda_total(l) }))
                    .collect();
                line(&json!({
                    "n": n,
                    "sectors": result.sectors,
                    "lambda_totals": totals,
                    "untwisted": result.untwisted,
                    "total": result.total,
                }))
            } else {
                sector_table(&result)
            };
            Ok(Rendered { body, passed: true })
        }
        Command::Character { n } => {
            bound("n", n, 1, MAX_CHARACTER_N, raised)?;
            let chi = chi_a(n);
            let body = if json {
                let terms: Vec<_> = chi
                    .terms()
                    .iter()
                    .map(|(h, q)| json!({ "h": h, "coeffs": q }))
                    .collect();
                line(&json!({ "n": n, "character": chi.render(), "terms": terms }))
            } else {
                format!("{}\n", chi.render())
            };
            Ok(Rendered { body, passed: true })
        }
        Command::FanCheck { n } => {
            bound("n", n, 2, MAX_FAN_N, raised)?;
            let mut report = Report::new(format!("fan-check, n = {n}"));
            if n <= MAX_GEOMETRIC_FAN_N {
                let fan = build_delta_fan(n)?;
                report.extend(verify_delta_fan(n, &fan)?);
                report.extend(verify_bundle_structure(n, Some(&fan))?);
                report.extend(multiplicity_check(n, Some(&fan))?);
                report.extend(fiber_product_check(n)?);
            } else {
                report.extend(combinatorial_check(n)?);
            }
            Ok(render_report(&report, json))
        }
        Command::Oracle { r } => {
            bound("r", r, 1, MAX_ORACLE_R, raised)?;
            let rows = crosscheck_quotients(r)?;
            let report = crosscheck_report(&rows);
            let body = if json {
                line(&rows)
            } else {
                let mut out = String::new();
                for row in &rows {
                    out.push_str(&format!(
                        "r = {}  mu = {:<12} formula = {:<28} oracle = {:<28} {}\n",
                        row.r,
                        row.mu.to_string(),
                        row.formula.to_string(),
                        row.oracle.to_string(),
                        if row.matches { "ok" } else { "MISMATCH" }
                    ));
                }
                let bad = rows.iter().filter(|r| !r.matches).count();
                out.push_str(&format!("{} of {} quotients agree\n", rows.len() - bad, rows.len()));
                out
            };
            Ok(Rendered {
                body,
                passed: report.passed(),
            })
        }
        Command::Orbifold { n } => {
            bound("n", n, 2, MAX_ORBIFOLD_N, raised)?;
            let result = stringy_e_with(n, options)?;
            let mut report = Report::new(format!("orbifold oracle, n = {n}"));
            let terms = orbifold_terms(n)?;
            let oracle_total: crate::exactalg::LPoly = terms.iter().map(|t| t.polynomial.clone()).sum();
            let mut rows = Vec::new();
            for term in terms {
                let sectors = if term.cycle_type.is_all_ones() {
                    result.untwisted.clone()
                } else {
                    result.lambda_total(&term.cycle_type)
                };
                report.check_with(
                    format!("class {}: {}", term.cycle_type, term.polynomial),
                    term.polynomial == sectors,
                    || format!("sectors give {sectors}"),
                );
                rows.push(json!({
                    "class": term.cycle_type,
                    "centralizer_order": term.centralizer_order,
                    "oracle": term.polynomial,
                    "sectors": sectors,
                }));
            }
            report.check_with(
                format!("total: {oracle_total}"),
                oracle_total == result.total,
                || format!("sectors give {}", result.total),
            );
            if json {
                Ok(Rendered {
                    body: line(&json!({
                        "n": n,
                        "classes": rows,
                        "oracle_total": oracle_total,
                        "total": result.total,
                        "passed": report.passed(),
                    })),
                    passed: report.passed(),
                })
            } else {
                Ok(render_report(&report, false))
            }
        }
        Command::Table { n_max } => {
            bound("n-max", n_max, 2, MAX_COMPUTE_N, raised)?;
            let table = generating_table_with(n_max, options)?;
            let body = if json {
                let rows: Vec<_> = table.iter().map(|(n, t)| json!({ "n": n, "total": t })).collect();
                line(&rows)
            } else {
                table
                    .iter()
                    .map(|(n, t)| format!("n = {n}: {t}\n"))
                    .collect()
            };
            Ok(Rendered { body, passed: true })
        }
    }
}

fn line<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn render_report(report: &Report, json: bool) -> Rendered {
    let body = if json {
        line(&json!({
            "title": report.title,
            "passed": report.passed(),
            "checks": report.checks,
        }))
    } else {
        let verdict = if report.passed() { "all checks passed" } else { "some checks FAILED" };
        format!("{report}{verdict}\n")
    };
    Rendered {
        body,
        passed: report.passed(),
    }
}

fn sector_table(result: &crate::stringy::StringyResult) -> String {
    let header = [
        "lambda", "theta", "rep", "m", "mu", "phi", "age", "e_factor", "exponent", "sector",
    ];
    let rows: Vec<[String; 10]> = result
        .sectors
        .iter()
        .map(|s| {
            [
                s.lambda.to_string(),
                s.theta.to_string(),
                s.rep.to_string(),
                format!("{:?}", s.m),
                s.mu_list.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(""),
                s.phi.to_string(),
                s.age.to_string(),
                s.e_factor.to_string(),
                s.exponent.to_string(),
                sector_polynomial(s).to_string(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let fmt_row = |cells: &[&str]| -> String {
        let mut out = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                out.push_str(c);
            } else {
                out.push_str(c);
                out.push_str(&" ".repeat(w - c.chars().count() + 2));
            }
        }
        out.push('\n');
        out
    };
    let mut out = fmt_row(&header);
    for (i, (s, row)) in result.sectors.iter().zip(&rows).enumerate() {
        out.push_str(&fmt_row(&row.iter().map(String::as_str).collect::<Vec<_>>()));
        let last_of_lambda = result.sectors.get(i + 1).is_none_or(|next| next.lambda != s.lambda);
        if last_of_lambda {
            out.push_str(&format!(
                "subtotal {}: {}\n",
                s.lambda,
                result.lambda_total(&s.lambda)
            ));
        }
    }
    out.push_str(&format!("untwisted: {}\n", result.untwisted));
    out.push_str(&format!("total: {}\n", result.total));
    out
}

