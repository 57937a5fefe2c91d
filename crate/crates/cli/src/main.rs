//! `torsionscan`: torsion invariants of Calabi-Yau hypersurfaces from
//! reflexive polytopes given as vertex matrices.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use torsionscan_core::dataset::{
    scan, table16, table_rows, verify_comb_dual, verify_tor_dual, ScanOptions, ScanRecord,
};
use torsionscan_core::invariants::{fundamental_group, fundamental_group_label};
use torsionscan_core::io::{
    emit_pi1_json, emit_polytope, emit_report_json, emit_report_table, emit_scan_summary,
    emit_table_row, parse_vertex_matrix, ParsedRecord, SquareLayout,
};
use torsionscan_core::{analyze, analyze_dual, Error, LatticePolytope};

#[derive(Parser)]
#[command(name = "torsionscan", version, about)]
struct Cli {
    #[command(flatten)]
    layout: LayoutArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LayoutArgs {
    /// Read square matrices with one point per row.
    #[arg(long, global = true, conflicts_with = "cols_are_points")]
    rows_are_points: bool,

    /// Read square matrices with one point per column (default).
    #[arg(long, global = true)]
    cols_are_points: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze each record as the polytope Delta of the ambient toric variety.
    Analyze {
        file: PathBuf,
        /// Treat records as the dual polytope instead.
        #[arg(long)]
        dual: bool,
        /// One JSON object per record instead of table lines.
        #[arg(long)]
        json: bool,
    },
    /// Print the polar dual of each record in the same format.
    Dual { file: PathBuf },
    /// Rebuild and print the table of sixteen exceptional families.
    Table16 {
        /// Also check the table values and both duality statements.
        #[arg(long)]
        verify: bool,
    },
    /// Analyze every record as a dual polytope and summarize torsion hits.
    Scan {
        file: PathBuf,
        /// Worker threads (0 = one per core).
        #[arg(long, env = "TORSIONSCAN_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Count non-reflexive records as skipped rather than failed.
        #[arg(long)]
        skip_nonreflexive: bool,
    },
    /// Report whether each record is reflexive.
    Check { file: PathBuf },
}

/// Exit status, ordered by severity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Ok = 0,
    Mismatch = 1,
    Input = 2,
    Internal = 3,
}

impl Status {
    fn of(e: &Error) -> Self {
        if e.is_internal() {
            Status::Internal
        } else {
            Status::Input
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let layout = if cli.layout.rows_are_points {
        SquareLayout::RowsArePoints
    } else {
        SquareLayout::ColumnsArePoints
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = match cli.command {
        Command::Analyze { file, dual, json } => {
            with_records(&file, layout, |r| cmd_analyze(r, dual, json, &mut out))
        }
        Command::Dual { file } => with_records(&file, layout, |r| cmd_dual(r, &mut out)),
        Command::Table16 { verify } => cmd_table16(verify, &mut out),
        Command::Scan {
            file,
            jobs,
            skip_nonreflexive,
        } => with_records(&file, layout, |r| {
            cmd_scan(r, jobs, skip_nonreflexive, &mut out)
        }),
        Command::Check { file } => with_records(&file, layout, |r| cmd_check(r, &mut out)),
    };
    if out.flush().is_err() {
        return ExitCode::from(Status::Input as u8);
    }
    ExitCode::from(status as u8)
}

fn with_records(
    path: &Path,
    layout: SquareLayout,
    f: impl FnOnce(Vec<ParsedRecord>) -> Status,
) -> Status {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Status::Input;
        }
    };
    let records = parse_vertex_matrix(&text, layout);
    for r in &records {
        if r.dropped > 0 {
            eprintln!(
                "warning: record at line {}: dropped {} duplicate or non-vertex point(s)",
                r.line, r.dropped
            );
        }
    }
    f(records)
}

fn report_error(line: usize, e: &Error) -> Status {
    eprintln!("error: record at line {line}: {e}");
    Status::of(e)
}

fn cmd_analyze(records: Vec<ParsedRecord>, dual: bool, json: bool, out: &mut impl Write) -> Status {
    let mut status = Status::Ok;
    for rec in records {
        let result = rec.polytope.and_then(|p| analyze_one(&p, dual, json));
        match result {
            Ok(line) => {
                let _ = writeln!(out, "{line}");
            }
            Err(e) => status = status.max(report_error(rec.line, &e)),
        }
    }
    status
}

fn analyze_one(p: &LatticePolytope, dual: bool, json: bool) -> Result<String, Error> {
    if p.dim() == 4 {
        let report = if dual { analyze_dual(p)? } else { analyze(p)? };
        return Ok(if json {
            emit_report_json(&report)
        } else {
            emit_report_table(&report)
        });
    }
    // outside dimension 4 only the fundamental group is defined
    let dstar = if dual { p.clone() } else { p.polar_dual()? };
    let pi1 = fundamental_group(&dstar)?;
    let kind = fundamental_group_label(p.dim());
    Ok(if json {
        emit_pi1_json(p.dim(), &pi1)
    } else {
        format!("d={} | {pi1} | {kind}", p.dim())
    })
}

fn cmd_dual(records: Vec<ParsedRecord>, out: &mut impl Write) -> Status {
    let mut status = Status::Ok;
    for rec in records {
        match rec.polytope.and_then(|p| p.polar_dual()) {
            Ok(d) => {
                let _ = write!(out, "{}", emit_polytope(&d));
            }
            Err(e) => status = status.max(report_error(rec.line, &e)),
        }
    }
    status
}

fn cmd_check(records: Vec<ParsedRecord>, out: &mut impl Write) -> Status {
    let mut status = Status::Ok;
    for (i, rec) in records.into_iter().enumerate() {
        match rec.polytope {
            Ok(p) => {
                let verdict = if p.is_reflexive() && p.origin_is_interior() {
                    "reflexive"
                } else {
                    "not reflexive"
                };
                let _ = writeln!(
                    out,
                    "{} | line {} | d={} vertices={} | {verdict}",
                    i + 1,
                    rec.line,
                    p.dim(),
                    p.num_vertices()
                );
            }
            Err(e) => status = status.max(report_error(rec.line, &e)),
        }
    }
    status
}

fn cmd_scan(
    records: Vec<ParsedRecord>,
    jobs: usize,
    skip_nonreflexive: bool,
    out: &mut impl Write,
) -> Status {
    let opts = ScanOptions {
        jobs,
        skip_nonreflexive,
        ..Default::default()
    };
    let input = records.into_iter().map(|r| ScanRecord {
        line: r.line,
        polytope: r.polytope,
    });
    let summary = match scan(input, &opts) {
        Ok(s) => s,
        Err(e) => return report_error(0, &e),
    };
    let _ = writeln!(out, "{}", emit_scan_summary(&summary));
    eprintln!(
        "scanned {} record(s): {} analyzed, {} skipped, {} failed",
        summary.total,
        summary.analyzed,
        summary.skipped_nonreflexive,
        summary.failures.len()
    );
    if summary.has_internal_failures() {
        Status::Internal
    } else if summary.failures.is_empty() {
        Status::Ok
    } else {
        Status::Input
    }
}

fn cmd_table16(verify: bool, out: &mut impl Write) -> Status {
    let pairs = match table16() {
        Ok(p) => p,
        Err(e) => return report_error(0, &e),
    };
    let _ = writeln!(out, "n | pi1 | P_D V_D | P_D* V_D* | h11 h21 | chi");
    for pair in &pairs {
        let _ = writeln!(out, "{}", emit_table_row(pair.row, &pair.report));
    }
    if !verify {
        return Status::Ok;
    }
    let mut status = Status::Ok;
    for (pair, row) in pairs.iter().zip(table_rows()) {
        let table_ok = pair.observed() == row.expected;
        let comb = [&pair.delta, &pair.dstar]
            .into_iter()
            .map(verify_comb_dual)
            .collect::<Result<Vec<_>, _>>();
        let comb_ok = match comb {
            Ok(c) => c.iter().all(|c| c.holds()),
            Err(e) => return report_error(0, &e),
        };
        let tor_ok = verify_tor_dual(pair);
        let word = |ok: bool| if ok { "ok" } else { "MISMATCH" };
        let _ = writeln!(
            out,
            "row {}: table {}, combinatorial duality {}, torsion exchange {} (A = {}, mirror B = {})",
            pair.row,
            word(table_ok),
            word(comb_ok),
            word(tor_ok),
            pair.report.a,
            pair.mirror_report.b
        );
        if !(table_ok && comb_ok && tor_ok) {
            status = status.max(Status::Mismatch);
        }
    }
    status
}
