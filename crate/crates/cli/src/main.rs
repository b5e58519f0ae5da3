//! `ym2`: reproducible runs over the ym2d library.
//!
//! Exit codes: 0 success, 1 usage error, 2 regime or precision error (and
//! failed verification suites).

mod args;
mod table;

use args::{Cli, Command, ReportFormat, SurfaceRun, SweepArgs, VerifyArgs, ZetaArgs};
use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::json;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;
use table::{write_json, Table};
use ym2d::partition_fn::{convergence_table, monotonicity_scan, z_value};
use ym2d::verify::{run_verify, Suite, VerifyConfig};
use ym2d::zeta::{zeta_su, zeta_su_to_width, ZetaQuery};
use ym2d::{Error, Execution};

/// Echoed under "config" in JSON output.
#[derive(Serialize)]
struct RunConfig<'a, T: Serialize> {
    command: &'a str,
    #[serde(flatten)]
    args: &'a T,
}

enum Failure {
    Usage(String),
    Regime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPartition(_)
            | Error::InvalidWeight(_)
            | Error::InvalidParameter(_)
            | Error::NonPositiveArea(_)
            | Error::InvalidQ(_) => Failure::Usage(e.to_string()),
            _ => Failure::Regime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit<T: Serialize>(
    table: &Table,
    command: &str,
    args: &T,
    out: &args::OutputArgs,
) -> Result<(), Failure> {
    let mut w = open_output(out.output.as_deref())?;
    table.write(out.format, &RunConfig { command, args }, &mut w)?;
    w.flush()?;
    Ok(())
}

fn cmd_zeta(a: &ZetaArgs) -> Result<(), Failure> {
    let mut t = Table::new(vec!["N", "s", "lower", "upper", "width", "dim_cutoff"]);
    for &n in &a.n.0 {
        let (z, d) = match a.target_width {
            Some(w) => zeta_su_to_width(n, a.s, w, Execution::Parallel)?,
            None => {
                let d = a.dim_cutoff.unwrap_or(ym2d::zeta::DEFAULT_DIM_CUTOFF);
                (zeta_su(&ZetaQuery::new(n, a.s, d)?)?, d)
            }
        };
        t.push(vec![
            n.into(),
            a.s.into(),
            z.lower.into(),
            z.upper.into(),
            z.width().into(),
            d.into(),
        ]);
    }
    emit(&t, "zeta", a, &a.out)
}

fn cmd_zn(a: &SurfaceRun) -> Result<(), Failure> {
    let trunc = a.trunc.params();
    let mut t = Table::new(vec![
        "N",
        "genus",
        "area",
        "group",
        "orientable",
        "lower",
        "upper",
    ]);
    for &n in &a.n.0 {
        let spec = a.spec(n)?;
        let z = z_value(&spec, &trunc)?;
        t.push(vec![
            n.into(),
            spec.genus.into(),
            spec.area.into(),
            spec.group.to_string().into(),
            spec.orientable.into(),
            z.lower.into(),
            z.upper.into(),
        ]);
    }
    emit(&t, "zn", a, &a.out)
}

fn cmd_converge(a: &SurfaceRun) -> Result<(), Failure> {
    let spec = a.spec(1)?;
    let rows = convergence_table(&spec, &a.n.0, &a.trunc.params())?;
    let mut t = Table::new(vec![
        "N",
        "z_lower",
        "z_upper",
        "limit_lower",
        "limit_upper",
        "gap_bound",
    ]);
    for r in rows {
        t.push(vec![
            r.n.into(),
            r.z.lower.into(),
            r.z.upper.into(),
            r.limit.lower.into(),
            r.limit.upper.into(),
            r.gap_bound.into(),
        ]);
    }
    emit(&t, "converge", a, &a.out)
}

fn cmd_sweep(a: &SweepArgs) -> Result<(), Failure> {
    let report = monotonicity_scan(
        a.genus,
        a.coupling.area()?,
        &a.n.0,
        a.group.into(),
        &a.trunc.params(),
    )?;
    let mut t = Table::new(vec![
        "N",
        "next",
        "z_lower",
        "z_upper",
        "z_next_lower",
        "z_next_upper",
        "status",
    ]);
    for s in &report.steps {
        let status = match s.status {
            ym2d::partition_fn::MonotoneStatus::Confirmed => "confirmed",
            ym2d::partition_fn::MonotoneStatus::Violated => "violated",
            ym2d::partition_fn::MonotoneStatus::Inconclusive => "inconclusive",
        };
        t.push(vec![
            s.n.into(),
            s.next.into(),
            s.z.lower.into(),
            s.z.upper.into(),
            s.z_next.lower.into(),
            s.z_next.upper.into(),
            status.into(),
        ]);
    }
    emit(&t, "sweep", a, &a.out)
}

fn cmd_verify(a: &VerifyArgs) -> Result<(), Failure> {
    let suites: Vec<Suite> = if a.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suite.iter().map(|&s| s.into()).collect()
    };
    let report = run_verify(&VerifyConfig {
        seed: a.seed,
        suites,
        instances: a.instances,
    });
    let mut w = open_output(a.output.as_deref())?;
    match a.report {
        ReportFormat::Json => {
            let value = json!({
                "config": RunConfig { command: "verify", args: a },
                "rows": report.checks,
                "unitary_fs": report.unitary_fs,
                "passed": report.all_passed(),
            });
            write_json(&mut w, &value)?;
        }
        ReportFormat::Text => {
            for c in &report.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                write!(w, "{mark} {}/{} ({} cases)", c.suite, c.name, c.cases)?;
                if let Some(ce) = &c.counterexample {
                    write!(w, " counterexample: {ce}")?;
                }
                writeln!(w)?;
            }
            if let Some(d) = &report.unitary_fs {
                writeln!(
                    w,
                    "unitary fs diagnostic: {} weights, {} disagreements with the m-vector rule, {} unstable",
                    d.checked,
                    d.mismatches.len(),
                    d.unstable.len()
                )?;
            }
        }
    }
    w.flush()?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Regime("verification failed".into()))
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("YM2_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("YM2_THREADS must be an integer, got '{raw}'")))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Zeta(a) => cmd_zeta(a),
        Command::Zn(a) => cmd_zn(a),
        Command::Converge(a) => cmd_converge(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Regime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
