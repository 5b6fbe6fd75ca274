//! The `pa` command line.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure, 2 on
//! a usage or I/O error.

mod bfile;
mod report;
mod suites;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::asympt::{
    auluck_exponent, auluck_integral_quadrature, auluck_product_check, constant_a,
    eta_inversion_check, pa_limit_check, pa_o_dominance_table, tauberian_ratio_table,
    DiagnosticRow, DEFAULT_DOMINANCE_GRID, DEFAULT_EPS_GRID, DEFAULT_N_GRID,
};
use crate::genfunc::{series_g1, series_pa_o};
use crate::{Error, Result};

pub use bfile::{parse_bfile, read_bfile, BFileEntry};
pub use report::{Check, Status, VerificationReport, SCHEMA_VERSION};
pub use suites::{run_suite, Suite, SuiteOptions, FIRST_VALUES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` accepted by `table`, `asympt` and `oeis-check`.
pub const MAX_SERIES_N: u64 = 5000;
/// Largest `n` accepted by the enumerating suites.
pub const MAX_ENUMERATION_N: u64 = 60;
pub const MAX_PRECISION: usize = 15;

#[derive(Debug, Parser)]
#[command(
    name = "pa",
    version,
    about = "Parity alternating partitions: tables and checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print n, pa(n), pa_o(n) for 1 <= n <= max.
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        json: bool,
        #[arg(long = "max-n")]
        max_n: Option<u64>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Asymptotic diagnostics as tables.
    Asympt {
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        eps: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Decimal places in the tables.
        #[arg(long, default_value_t = 12)]
        precision: usize,
    },
    /// Compare an OEIS b-file against computed pa(n).
    OeisCheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        max: u64,
    },
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn usage<T>(msg: impl Into<String>) -> std::result::Result<T, Usage> {
    Err(Usage(msg.into()))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, Usage> {
    let text = match cmd {
        Command::Table { max, format } => table(max, format)?,
        Command::Verify {
            suite,
            json,
            max_n,
            order,
        } => {
            let opts = verify_options(suite, max_n, order)?;
            let report = run_suite(suite, opts);
            write_out(
                out,
                &if json {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                },
            )?;
            return Ok(report.exit_code());
        }
        Command::Asympt {
            n,
            eps,
            format,
            precision,
        } => asympt(n, eps, format, precision)?,
        Command::OeisCheck { bfile, max } => {
            let report = oeis_check(&bfile, max)?;
            write_out(out, &report.to_text())?;
            return Ok(report.exit_code());
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_PASS)
}

fn write_out(out: &mut dyn Write, text: &str) -> std::result::Result<(), Usage> {
    out.write_all(text.as_bytes())
        .map_err(|e| Usage(format!("writing output: {e}")))
}

fn verify_options(
    suite: Suite,
    max_n: Option<u64>,
    order: Option<usize>,
) -> std::result::Result<SuiteOptions, Usage> {
    if let Some(n) = max_n {
        if n == 0 || n > MAX_ENUMERATION_N {
            return usage(format!("--max-n must be in 1..={MAX_ENUMERATION_N}"));
        }
        if suite == Suite::Injection && n < crate::monotone::INJECTION_MIN_N {
            return usage(format!(
                "--max-n must be at least {} for the injection suite",
                crate::monotone::INJECTION_MIN_N
            ));
        }
    }
    if let Some(o) = order {
        if o == 0 || o as u64 > MAX_SERIES_N {
            return usage(format!("--order must be in 1..={MAX_SERIES_N}"));
        }
    }
    Ok(SuiteOptions { max_n, order })
}

#[derive(Serialize)]
struct TableRow {
    n: u64,
    #[serde(serialize_with = "as_decimal")]
    pa: num_bigint::BigUint,
    #[serde(serialize_with = "as_decimal")]
    pa_o: num_bigint::BigUint,
}

/// Big integers go out as JSON integers, digit for digit.
fn as_decimal<S: serde::Serializer>(
    v: &num_bigint::BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::Error as _;
    let raw = serde_json::value::RawValue::from_string(v.to_string()).map_err(S::Error::custom)?;
    raw.serialize(s)
}

fn check_series_limit(flag: &str, n: u64) -> std::result::Result<(), Usage> {
    if n == 0 || n > MAX_SERIES_N {
        return usage(format!("{flag} must be in 1..={MAX_SERIES_N}, got {n}"));
    }
    Ok(())
}

fn table(max: u64, format: Format) -> std::result::Result<String, Usage> {
    check_series_limit("--max", max)?;
    let pa = series_g1(max as usize)?.coefficients;
    let pa_o = series_pa_o(max as usize)?.coefficients;
    let rows: Vec<TableRow> = pa
        .into_iter()
        .zip(pa_o)
        .enumerate()
        .map(|(i, (pa, pa_o))| TableRow {
            n: i as u64 + 1,
            pa,
            pa_o,
        })
        .collect();
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("n,pa,pa_o\n");
            for r in &rows {
                s.push_str(&format!("{},{},{}\n", r.n, r.pa, r.pa_o));
            }
            s
        }
        Format::Json => serde_json::to_string(&rows).map_err(|e| Usage(e.to_string()))? + "\n",
    })
}

/// Everything `pa asympt` prints, with reals already rendered at a fixed
/// number of decimals.
#[derive(Debug, Serialize)]
pub struct AsymptReport {
    pub schema_version: u32,
    pub precision: usize,
    pub constants: Vec<(String, String)>,
    pub tables: Vec<(String, Vec<[String; 4]>)>,
}

fn fixed_rows(rows: &[DiagnosticRow], precision: usize) -> Vec<[String; 4]> {
    rows.iter()
        .map(|r| {
            [
                format!("{}", r.parameter),
                format!("{:.precision$}", r.lhs),
                format!("{:.precision$}", r.rhs),
                format!("{:.precision$}", r.log_ratio),
            ]
        })
        .collect()
}

pub fn asympt_report(ns: &[u64], eps: &[f64], precision: usize) -> Result<AsymptReport> {
    let digits = precision.max(15);
    let q = auluck_integral_quadrature(1e-10)?;
    let constants = vec![
        (
            "A".to_string(),
            constant_a(digits).to_decimal_string(digits),
        ),
        (
            "two_log_sq_phi".to_string(),
            auluck_exponent(digits).to_decimal_string(digits),
        ),
        ("auluck_integral".to_string(), format!("{q:.precision$}")),
    ];

    let dominance_max = DEFAULT_DOMINANCE_GRID[DEFAULT_DOMINANCE_GRID.len() - 1];
    let order = ns.iter().copied().max().unwrap_or(0).max(dominance_max) as usize;
    let pa = series_g1(order)?.coefficients;
    let pa_o = series_pa_o(order)?.coefficients;

    let grid = |f: fn(f64) -> Result<DiagnosticRow>| -> Result<Vec<DiagnosticRow>> {
        eps.iter().map(|&e| f(e)).collect()
    };
    let tables = vec![
        ("ingham".to_string(), tauberian_ratio_table(ns, &pa)?),
        ("eta".to_string(), grid(eta_inversion_check)?),
        ("auluck".to_string(), grid(auluck_product_check)?),
        ("pa_limit".to_string(), grid(pa_limit_check)?),
        (
            "pa_o_dominance".to_string(),
            pa_o_dominance_table(&DEFAULT_DOMINANCE_GRID, &pa, &pa_o)?,
        ),
    ];
    Ok(AsymptReport {
        schema_version: SCHEMA_VERSION,
        precision,
        constants,
        tables: tables
            .into_iter()
            .map(|(k, rows)| (k, fixed_rows(&rows, precision)))
            .collect(),
    })
}

impl AsymptReport {
    pub fn to_csv(&self) -> String {
        let mut s = format!("# precision: {} decimal places\n", self.precision);
        for (k, v) in &self.constants {
            s.push_str(&format!("# {k} = {v}\n"));
        }
        s.push_str("table,parameter,lhs,rhs,log_ratio\n");
        for (name, rows) in &self.tables {
            for r in rows {
                s.push_str(&format!("{name},{},{},{},{}\n", r[0], r[1], r[2], r[3]));
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        let constants: serde_json::Map<String, serde_json::Value> = self
            .constants
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let tables: serde_json::Map<String, serde_json::Value> = self
            .tables
            .iter()
            .map(|(k, rows)| {
                let rows = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "parameter": r[0], "lhs": r[1], "rhs": r[2], "log_ratio": r[3]
                        })
                    })
                    .collect();
                (k.clone(), serde_json::Value::Array(rows))
            })
            .collect();
        let v = serde_json::json!({
            "schema_version": self.schema_version,
            "precision": self.precision,
            "constants": constants,
            "tables": tables,
        });
        serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
    }
}

fn asympt(
    n: Option<Vec<u64>>,
    eps: Option<Vec<f64>>,
    format: Format,
    precision: usize,
) -> std::result::Result<String, Usage> {
    if precision == 0 || precision > MAX_PRECISION {
        return usage(format!("--precision must be in 1..={MAX_PRECISION}"));
    }
    let ns = n.unwrap_or_else(|| DEFAULT_N_GRID.to_vec());
    for &x in &ns {
        check_series_limit("--n", x)?;
    }
    let eps = eps.unwrap_or_else(|| DEFAULT_EPS_GRID.to_vec());
    if eps.windows(2).any(|w| w[1] >= w[0]) {
        return usage("--eps must be strictly decreasing");
    }
    if let Some(&bad) = eps.iter().find(|&&e| !(e > 0.0 && e <= 1.0)) {
        return usage(format!("--eps values must lie in (0, 1], got {bad}"));
    }
    let report = asympt_report(&ns, &eps, precision)?;
    Ok(match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    })
}

/// Compares every b-file entry with `1 <= n <= max` against the sum-product
/// pipeline. An index 0 line, if present, is outside the sequence as
/// computed here and is skipped.
pub fn oeis_check_entries(entries: &[BFileEntry], max: u64) -> Result<VerificationReport> {
    let used: Vec<&BFileEntry> = entries
        .iter()
        .filter(|e| e.index >= 1 && e.index <= max)
        .collect();
    let mut parameters = std::collections::BTreeMap::new();
    parameters.insert("max".to_string(), serde_json::json!(max));
    parameters.insert("entries".to_string(), serde_json::json!(used.len()));
    let Some(top) = used.last().map(|e| e.index) else {
        return Ok(VerificationReport::new("oeis-check", vec![], parameters));
    };
    let pa = series_g1(top as usize)?.coefficients;
    let mismatch = used.iter().find(|e| pa[e.index as usize - 1] != e.value);
    let check = match mismatch {
        None => Check::new(
            "bfile_matches",
            true,
            format!("{} entries with 1 <= n <= {top} agree", used.len()),
        ),
        Some(e) => Check::new(
            "bfile_matches",
            false,
            format!(
                "first mismatch at n = {}: b-file {}, computed {}",
                e.index,
                e.value,
                pa[e.index as usize - 1]
            ),
        ),
    };
    Ok(VerificationReport::new(
        "oeis-check",
        vec![check],
        parameters,
    ))
}

fn oeis_check(path: &std::path::Path, max: u64) -> std::result::Result<VerificationReport, Usage> {
    check_series_limit("--max", max)?;
    let entries = read_bfile(path)?;
    let start = std::time::Instant::now();
    let mut report = oeis_check_entries(&entries, max)?;
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
