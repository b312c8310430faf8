//! The `qdiv` command line.
//!
//! Exit codes: 0 success, 1 a verification or `--expect` check failed,
//! 2 usage or I/O error. [`run`] takes explicit output streams so every
//! subcommand is testable in-process.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analyze::{resource_report, ResourceReport};
use crate::baselines::{compare_tdepth, ledger, reproduce_table, ReproducedTable, TableId};
use crate::blocks::{standalone, BlockKind};
use crate::dividers::{DividerKind, DividerLayout};
use crate::error::Error;
use crate::gateir::{export_json, export_qasm, import_json, lower_to_clifford_t, Circuit};
use crate::sim::{
    verify_block, verify_divider_with, VerifyOptions, MAX_BLOCK_SWEEP, MAX_DIVIDER_SWEEP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qdiv", version, about = "Clifford+T quantum integer dividers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a divider or block and write it as QASM or JSON.
    Build(BuildArgs),
    /// Exhaustively simulate a divider or block against its classical oracle.
    Verify(VerifyArgs),
    /// Report T-count, T-depth, depth and qubits.
    Resources(ResourcesArgs),
    /// Regenerate a comparison table.
    Tables(TablesArgs),
    /// Convert a JSON circuit to QASM or JSON, optionally lowered.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CircuitKind {
    Restoring,
    Nonrestoring,
    Adder,
    Subtractor,
    Addsub,
    Ctrladd,
}

impl CircuitKind {
    fn divider(self) -> Option<DividerKind> {
        match self {
            CircuitKind::Restoring => Some(DividerKind::Restoring),
            CircuitKind::Nonrestoring => Some(DividerKind::NonRestoring),
            _ => None,
        }
    }

    fn block(self) -> Option<BlockKind> {
        match self {
            CircuitKind::Adder => Some(BlockKind::Adder),
            CircuitKind::Subtractor => Some(BlockKind::Subtractor),
            CircuitKind::Addsub => Some(BlockKind::AddSub),
            CircuitKind::Ctrladd => Some(BlockKind::CtrlAdd),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match (self.divider(), self.block()) {
            (Some(d), _) => d.name(),
            (_, Some(b)) => b.name(),
            _ => unreachable!(),
        }
    }

    fn min_width(self) -> usize {
        if self.divider().is_some() {
            2
        } else {
            1
        }
    }

    /// Formula T-count and qubit count at width `n`.
    fn expected(self, n: usize) -> (u64, u64) {
        match (self.divider(), self.block()) {
            (Some(d), _) => (d.t_count(n), d.qubit_count(n) as u64),
            (_, Some(b)) => (b.t_count(n) as u64, (2 * n + b.has_ctrl() as usize) as u64),
            _ => unreachable!(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Qasm,
    Json,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub kind: CircuitKind,
    #[arg(long)]
    pub n: usize,
    /// Replace each Toffoli by its Clifford+T network.
    #[arg(long)]
    pub lower: bool,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Qasm)]
    pub format: Format,
    /// Also write the divider register layout as JSON.
    #[arg(long)]
    pub layout_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub kind: CircuitKind,
    #[arg(long)]
    pub n: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Also record outputs for inputs outside the valid domain.
    #[arg(long)]
    pub probe_invalid: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ResourcesArgs {
    #[arg(long, required_unless_present = "input", conflicts_with = "input", requires = "n")]
    pub kind: Option<CircuitKind>,
    #[arg(long)]
    pub n: Option<usize>,
    /// JSON circuit file, or `-` for stdin.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
    /// Compare T-count and qubits to the closed forms; exit 1 on mismatch.
    #[arg(long, requires = "kind")]
    pub expect: bool,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, value_parser = parse_table)]
    pub table: TableId,
    /// Replace proposed cells up to this width with measured values and
    /// check them against the formulas.
    #[arg(long)]
    pub measure_upto: Option<u64>,
    /// Append notes on disagreements with the printed tables.
    #[arg(long)]
    pub ledger: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// JSON circuit file, or `-` for stdin.
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum)]
    pub format: Format,
    #[arg(long)]
    pub lower: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_table(s: &str) -> Result<TableId, String> {
    s.parse()
}

/// Why a subcommand stopped early.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let res = match cli.command {
        Command::Build(a) => build(a, stdout),
        Command::Verify(a) => verify(a, stdout),
        Command::Resources(a) => resources(a, stdin, stdout),
        Command::Tables(a) => tables(a, stdout),
        Command::Export(a) => export(a, stdin, stdout),
    };
    match res {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn check_width(kind: CircuitKind, n: usize, max: Option<usize>) -> Result<(), Failure> {
    let min = kind.min_width();
    if n < min || max.is_some_and(|m| n > m) {
        let range = match max {
            Some(m) => format!("{min}..={m}"),
            None => format!(">= {min}"),
        };
        return Err(Failure::Usage(format!("--n {n} is invalid for {}; expected {range}", kind.name())));
    }
    Ok(())
}

fn construct(kind: CircuitKind, n: usize) -> Result<(Circuit, Option<DividerLayout>), Failure> {
    check_width(kind, n, None)?;
    Ok(match (kind.divider(), kind.block()) {
        (Some(d), _) => {
            let (c, layout) = d.build(n)?;
            (c, Some(layout))
        }
        (_, Some(b)) => (standalone(b, n)?, None),
        _ => unreachable!(),
    })
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render(c: &Circuit, format: Format) -> String {
    match format {
        Format::Qasm => export_qasm(c),
        Format::Json => export_json(c),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<Circuit, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    Ok(import_json(&text)?)
}

fn build(a: BuildArgs, stdout: &mut dyn Write) -> Outcome {
    let (c, layout) = construct(a.kind, a.n)?;
    if a.layout_out.is_some() && layout.is_none() {
        return Err(Failure::Usage("--layout-out applies to dividers only".into()));
    }
    let c = if a.lower { lower_to_clifford_t(&c) } else { c };
    emit(&render(&c, a.format), a.out.as_deref(), stdout)?;
    if let (Some(p), Some(l)) = (&a.layout_out, &layout) {
        fs::write(p, l.to_json())?;
    }
    if a.out.is_some() {
        let r = resource_report(&c);
        writeln!(stdout, "qubits={} gates={} t_count={}", c.qubit_count(), c.len(), r.t_count)?;
    }
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, stdout: &mut dyn Write) -> Outcome {
    let (json, passed) = match (a.kind.divider(), a.kind.block()) {
        (Some(d), _) => {
            check_width(a.kind, a.n, Some(MAX_DIVIDER_SWEEP))?;
            let opts = VerifyOptions {
                jobs: a.jobs,
                probe_invalid: a.probe_invalid,
            };
            let r = verify_divider_with(d, a.n, opts)?;
            (r.to_json(), r.passed())
        }
        (_, Some(b)) => {
            check_width(a.kind, a.n, Some(MAX_BLOCK_SWEEP))?;
            if a.probe_invalid {
                return Err(Failure::Usage("--probe-invalid applies to dividers only".into()));
            }
            let r = verify_block(b, a.n, a.jobs)?;
            (r.to_json(), r.passed())
        }
        _ => unreachable!(),
    };
    emit(&(json + "\n"), a.out.as_deref(), stdout)?;
    Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

#[derive(Serialize)]
struct Expectation {
    t_count: u64,
    qubits: u64,
    matches: bool,
}

#[derive(Serialize)]
struct ResourcesDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(flatten)]
    report: &'a ResourceReport,
    /// Closed-form T-depth stated for the divider, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    claimed_t_depth: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_depth_delta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<Expectation>,
}

fn resources(a: ResourcesArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Outcome {
    let (c, kind, n) = match (&a.input, a.kind, a.n) {
        (Some(path), _, _) => (read_input(path, stdin)?, None, None),
        (None, Some(k), Some(n)) => (construct(k, n)?.0, Some(k), Some(n)),
        _ => return Err(Failure::Usage("give --kind with --n, or --input".into())),
    };
    let report = resource_report(&c);
    let (claimed, delta) = match (kind.and_then(CircuitKind::divider), n) {
        (Some(d), Some(n)) => {
            let cmp = compare_tdepth(d, n)?;
            (Some(cmp.claimed), Some(cmp.delta))
        }
        _ => (None, None),
    };
    let expected = match (a.expect, kind, n) {
        (true, Some(k), Some(n)) => {
            let (t, q) = k.expected(n);
            Some(Expectation {
                t_count: t,
                qubits: q,
                matches: t == report.t_count && q == report.qubit_count,
            })
        }
        _ => None,
    };
    let ok = expected.as_ref().is_none_or(|e| e.matches);
    let label = kind.map(CircuitKind::name).unwrap_or("input");
    let row = report.row(n.unwrap_or(0), label);

    if a.json {
        let doc = ResourcesDoc {
            kind: kind.map(CircuitKind::name),
            n,
            report: &report,
            claimed_t_depth: claimed,
            t_depth_delta: delta,
            expected,
        };
        writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).map_err(Error::from)?)?;
    } else if a.csv {
        stdout.write_all(crate::analyze::rows_to_csv(&[row])?.as_bytes())?;
    } else {
        stdout.write_all(crate::analyze::rows_to_markdown(&[row]).as_bytes())?;
        for (name, m) in &report.per_register_max {
            writeln!(stdout, "max T-layers touching register {name}: {m}")?;
        }
        if let (Some(cl), Some(d)) = (claimed, delta) {
            writeln!(
                stdout,
                "t_depth measured={} claimed={cl} delta={d:+}",
                report.t_depth
            )?;
        }
        if let Some(e) = &expected {
            let verdict = if e.matches { "match" } else { "MISMATCH" };
            writeln!(
                stdout,
                "expect t_count={} qubits={}: {verdict}",
                e.t_count, e.qubits
            )?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn tables(a: TablesArgs, stdout: &mut dyn Write) -> Outcome {
    let mut table = reproduce_table(a.table);
    let mut checks = Vec::new();
    if let Some(upto) = a.measure_upto {
        match &mut table {
            ReproducedTable::Comparison(t) => checks = t.use_measured(upto)?,
            ReproducedTable::Summary(_) => {
                return Err(Failure::Usage("--measure-upto applies to comparison tables".into()))
            }
        }
    }
    let (body, note) = if a.csv {
        (table.to_csv()?, "# ")
    } else {
        (table.to_markdown(), "- ")
    };
    stdout.write_all(body.as_bytes())?;
    for c in &checks {
        let verdict = if c.agrees() { "agree" } else { "DISAGREE" };
        writeln!(
            stdout,
            "{note}measured n={}: formula={} measured={} {verdict}",
            c.n, c.formula, c.measured
        )?;
    }
    if a.ledger {
        for line in ledger(a.table) {
            writeln!(stdout, "{note}{line}")?;
        }
    }
    Ok(if checks.iter().all(|c| c.agrees()) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn export(a: ExportArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Outcome {
    let c = read_input(&a.input, stdin)?;
    let c = if a.lower { lower_to_clifford_t(&c) } else { c };
    emit(&render(&c, a.format), a.out.as_deref(), stdout)?;
    Ok(EXIT_OK)
}
