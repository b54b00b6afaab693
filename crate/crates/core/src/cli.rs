//! Command-line front end. The `circnull` binary only forwards its
//! arguments to [`run_from_args`]; everything else lives here so it can be
//! driven from tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, validation or
//! output error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::census::{self, CensusRecord};
use crate::circulant::QuarticCirculant;
use crate::error::Error;
use crate::extremal::{
    extremal_report, nullspace_basis, ExtremalReport, ExtremumMode, GraphClass, NullSpaceDescriptor,
};
use crate::nullity::{nullity, NullityBreakdown};
use crate::verify::{verify, VerifyMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "circnull",
    version,
    about = "Nullity, singularity and nut analysis of quartic circulant graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one graph Circ(n, {p, q})
    Analyze(AnalyzeArgs),
    /// Same as `analyze --with-basis`
    Basis(AnalyzeArgs),
    /// One record per graph over a range of orders
    Census(CensusArgs),
    /// Minimum or maximum nullity with attaining graphs
    Extremal(ExtremalArgs),
    /// Check closed forms against exact elimination
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(allow_negative_numbers = true)]
    pub n: i64,
    #[arg(allow_negative_numbers = true)]
    pub p: i64,
    #[arg(allow_negative_numbers = true)]
    pub q: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include the null-space basis and its family
    #[arg(long)]
    pub with_basis: bool,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub n_max: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (defaults to the rayon global pool)
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["n_min", "n_max"])]
    pub n: Option<i64>,
    #[arg(long, allow_negative_numbers = true, requires = "n_max")]
    pub n_min: Option<i64>,
    #[arg(long, allow_negative_numbers = true, requires = "n_min")]
    pub n_max: Option<i64>,
    /// all or connected; both when omitted
    #[arg(long)]
    pub class: Option<GraphClass>,
    /// min or max; both when omitted
    #[arg(long)]
    pub mode: Option<ExtremumMode>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n_max: i64,
    /// formula, extremal, bases or all
    #[arg(long, default_value = "all")]
    pub mode: VerifyMode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::OrderTooSmall { .. } => "OrderTooSmall",
            Error::JumpOutOfRange { .. } => "JumpOutOfRange",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::Domain(_) => "DomainError",
        };
        Outcome::usage(format!("error: {kind}: {e}"))
    }
}

/// Everything `analyze` reports about one graph. The census fields sit at
/// the top level so a census row and an analysis agree field for field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    #[serde(flatten)]
    pub record: CensusRecord,
    pub breakdown: NullityBreakdown,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nullspace: Option<NullSpaceDescriptor>,
}

pub fn analyze_report(g: &QuarticCirculant, with_basis: bool) -> AnalyzeReport {
    AnalyzeReport {
        record: CensusRecord::of(g),
        breakdown: nullity(g),
        nullspace: with_basis.then(|| nullspace_basis(g)),
    }
}

fn format_vector(v: &[i64]) -> String {
    let cells: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", cells.join(", "))
}

fn analyze_text(g: &QuarticCirculant, r: &AnalyzeReport) -> String {
    let b = &r.breakdown;
    let c = &r.record;
    let mut s = String::new();
    let _ = writeln!(s, "graph      {g}");
    let _ = writeln!(s, "nullity    {}", c.nullity);
    let _ = writeln!(s, "case       {}", c.case);
    let _ = writeln!(s, "eta1       {}  (gcd(n, p+q))", b.eta1);
    let _ = writeln!(s, "eta2       {}  (gcd(n, q-p))", b.eta2);
    let _ = writeln!(s, "eta3       {}  (gcd(n, p+q, q-p))", b.eta3);
    let _ = writeln!(s, "v2(p+q)    {}", b.v2_1);
    let _ = writeln!(s, "v2(q-p)    {}", b.v2_2);
    let _ = writeln!(s, "v2(n)      {}", b.v2_3);
    let _ = writeln!(s, "singular   {}", c.singular);
    let _ = writeln!(s, "core       {}", c.core);
    let _ = writeln!(s, "nut        {}", c.nut);
    let _ = writeln!(s, "connected  {}", c.connected);
    let _ = writeln!(s, "min-extremal {}", c.extremal_min);
    let _ = writeln!(s, "max-extremal {}", c.extremal_max);
    if let Some(d) = &r.nullspace {
        let _ = writeln!(s, "basis      {} ({} vectors)", d.kind, d.dimension());
        for v in &d.basis {
            let _ = writeln!(s, "  {}", format_vector(v));
        }
    }
    s
}

fn cmd_analyze(args: &AnalyzeArgs, force_basis: bool) -> Outcome {
    let g = match QuarticCirculant::new(args.n, args.p, args.q) {
        Ok(g) => g,
        Err(e) => return e.into(),
    };
    let report = analyze_report(&g, args.with_basis || force_basis);
    let out = match args.format {
        Format::Text => analyze_text(&g, &report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => census::to_csv(&[report.record]),
    };
    Outcome::ok(out)
}

fn cmd_census(args: &CensusArgs) -> Outcome {
    let records = match args.threads {
        Some(t) => census::census_with_threads(args.n_min, args.n_max, t),
        None => census::census(args.n_min, args.n_max),
    };
    let records = match records {
        Ok(r) => r,
        Err(e) => return e.into(),
    };
    let body = match args.format {
        Format::Json => census::to_json(&records),
        Format::Csv | Format::Text => census::to_csv(&records),
    };
    match &args.out {
        None => Outcome::ok(body),
        Some(path) => match std::fs::write(path, body) {
            Ok(()) => Outcome::ok(format!(
                "wrote {} records to {}\n",
                records.len(),
                path.display()
            )),
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}", path.display())),
        },
    }
}

fn report_text(r: &ExtremalReport) -> String {
    let pairs: Vec<String> = r
        .attaining
        .iter()
        .map(|(p, q)| format!("({p},{q})"))
        .collect();
    let mut s = String::new();
    let _ = writeln!(s, "n={} class={} mode={}", r.n, r.class, r.mode);
    let _ = writeln!(s, "  value      {}", r.value);
    let _ = writeln!(
        s,
        "  row        {}",
        serde_json::to_value(r.table_row)
            .expect("row")
            .as_str()
            .unwrap_or("")
    );
    let _ = writeln!(
        s,
        "  attaining  {} pairs: {}",
        r.attaining.len(),
        pairs.join(" ")
    );
    let _ = writeln!(
        s,
        "  nullspace  {} ({} vectors)",
        r.nullspace.kind,
        r.nullspace.dimension()
    );
    s
}

fn cmd_extremal(args: &ExtremalArgs) -> Outcome {
    let (lo, hi) = match (args.n, args.n_min, args.n_max) {
        (Some(n), _, _) => (n, n),
        (None, Some(lo), Some(hi)) => (lo, hi),
        _ => return Outcome::usage("error: pass --n or both --n-min and --n-max"),
    };
    if lo < 5 {
        return Error::OrderTooSmall { n: lo }.into();
    }
    if lo > hi {
        return Outcome::usage(format!("error: empty order range {lo}..={hi}"));
    }
    let classes = args.class.map_or(GraphClass::ALL.to_vec(), |c| vec![c]);
    let modes = args.mode.map_or(ExtremumMode::ALL.to_vec(), |m| vec![m]);
    let mut reports = Vec::new();
    for n in lo..=hi {
        for &class in &classes {
            for &mode in &modes {
                match extremal_report(n, class, mode) {
                    Ok(r) => reports.push(r),
                    Err(e) => return e.into(),
                }
            }
        }
    }
    let out = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => reports_csv(&reports),
        Format::Text => reports.iter().map(report_text).collect(),
    };
    Outcome::ok(out)
}

fn reports_csv(reports: &[ExtremalReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = [
        "n",
        "class",
        "mode",
        "value",
        "table_row",
        "nullspace",
        "attaining",
    ];
    w.write_record(header).expect("in-memory write");
    for r in reports {
        let row = serde_json::to_value(r.table_row).expect("row");
        let pairs: Vec<String> = r
            .attaining
            .iter()
            .map(|(p, q)| format!("{p}:{q}"))
            .collect();
        w.write_record([
            r.n.to_string(),
            r.class.to_string(),
            r.mode.to_string(),
            r.value.to_string(),
            row.as_str().unwrap_or_default().to_owned(),
            r.nullspace.kind.to_string(),
            pairs.join(" "),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let report = match verify(args.n_max, args.mode) {
        Ok(r) => r,
        Err(e) => return e.into(),
    };
    let stdout = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "checked", "failure"])
                .expect("in-memory write");
            for c in &report.checks {
                let failure = c.failure.clone().unwrap_or_default();
                w.write_record([c.name.clone(), c.checked.to_string(), failure])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(s, "{c}");
            }
            let total: usize = report.checks.iter().map(|c| c.checked).sum();
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{verdict}: {total} checks up to n = {}", report.n_max);
            s
        }
    };
    Outcome {
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
        stdout,
        stderr: String::new(),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, false),
        Command::Basis(a) => cmd_analyze(a, true),
        Command::Census(a) => cmd_census(a),
        Command::Extremal(a) => cmd_extremal(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run_from_args(std::iter::once("circnull").chain(args.iter().copied()))
    }

    #[test]
    fn analyze_examples() {
        let o = run_args(&["analyze", "6", "1", "2", "--with-basis"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("nullity    3"));
        assert!(o.stdout.contains("SixVertexSpecial"));

        let o = run_args(&["analyze", "8", "1", "3"]);
        assert!(o.stdout.contains("nullity    6"));
        assert!(o.stdout.contains("connected  true"));

        let o = run_args(&["analyze", "6", "1", "3"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("JumpOutOfRange"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["analyze", "six", "1", "2"]).code, 2);
        assert_eq!(
            run_args(&["extremal", "--n", "10", "--class", "weird"]).code,
            2
        );
        assert_eq!(run_args(&["verify", "--n-max", "4"]).code, 2);
        assert_eq!(
            run_args(&["census", "--n-min", "9", "--n-max", "8"]).code,
            2
        );
    }
}
