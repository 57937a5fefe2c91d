//! Bulk analysis of polytope lists.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::FiniteAbelianGroup;
use crate::error::{Error, Result};
use crate::invariants::analyze_dual;
use crate::polytope::LatticePolytope;

/// One input record: the polytope in `N` (or why it could not be read) and
/// the line its header was on.
#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub line: usize,
    pub polytope: Result<LatticePolytope>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    /// Worker threads; `0` lets the thread pool decide.
    pub jobs: usize,
    /// Count non-reflexive records as skipped instead of as failures.
    pub skip_nonreflexive: bool,
    /// Records are processed this many at a time, so arbitrarily long
    /// inputs can be streamed.
    pub chunk_size: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            jobs: 0,
            skip_nonreflexive: false,
            chunk_size: 4096,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanHit {
    pub index: usize,
    pub line: usize,
    pub pi1: FiniteAbelianGroup,
    pub brauer: FiniteAbelianGroup,
    pub h11: i64,
    pub h21: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Parse,
    NotReflexive,
    Input,
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanFailure {
    pub index: usize,
    pub line: usize,
    pub kind: FailureKind,
    pub message: String,
}

/// Totals of a scan; hits and failures are listed in input order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub analyzed: usize,
    pub skipped_nonreflexive: usize,
    pub nontrivial_pi1: Vec<ScanHit>,
    pub nontrivial_brauer: Vec<ScanHit>,
    pub failures: Vec<ScanFailure>,
}

impl ScanSummary {
    pub fn has_internal_failures(&self) -> bool {
        self.failures
            .iter()
            .any(|f| f.kind == FailureKind::Internal)
    }
}

enum Outcome {
    Hit(ScanHit),
    Skipped,
    Failed(ScanFailure),
}

fn classify(e: &Error) -> FailureKind {
    match e {
        Error::Parse { .. } => FailureKind::Parse,
        Error::NotReflexive | Error::OriginNotInterior => FailureKind::NotReflexive,
        Error::Internal(_) => FailureKind::Internal,
        _ => FailureKind::Input,
    }
}

fn run_one(index: usize, rec: &ScanRecord, opts: &ScanOptions) -> Outcome {
    let result = rec
        .polytope
        .as_ref()
        .map_err(Clone::clone)
        .and_then(analyze_dual);
    match result {
        Ok(r) => Outcome::Hit(ScanHit {
            index,
            line: rec.line,
            pi1: r.pi1,
            brauer: r.brauer,
            h11: r.h11,
            h21: r.h21,
        }),
        Err(e) => {
            let kind = classify(&e);
            if kind == FailureKind::NotReflexive && opts.skip_nonreflexive {
                Outcome::Skipped
            } else {
                Outcome::Failed(ScanFailure {
                    index,
                    line: rec.line,
                    kind,
                    message: e.to_string(),
                })
            }
        }
    }
}

/// Analyzes every record as the polytope `Dstar` in `N`, collecting those
/// with nontrivial fundamental or Brauer group. Parallelism never changes
/// the result.
pub fn scan<I>(records: I, opts: &ScanOptions) -> Result<ScanSummary>
where
    I: IntoIterator<Item = ScanRecord>,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if opts.jobs > 0 {
        builder = builder.num_threads(opts.jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let chunk_size = opts.chunk_size.max(1);

    let mut summary = ScanSummary::default();
    let mut iter = records.into_iter();
    loop {
        let chunk: Vec<ScanRecord> = iter.by_ref().take(chunk_size).collect();
        if chunk.is_empty() {
            break;
        }
        let base = summary.total;
        let outcomes: Vec<Outcome> = pool.install(|| {
            chunk
                .par_iter()
                .enumerate()
                .map(|(i, rec)| run_one(base + i, rec, opts))
                .collect()
        });
        summary.total += chunk.len();
        for o in outcomes {
            match o {
                Outcome::Hit(hit) => {
                    summary.analyzed += 1;
                    if !hit.pi1.is_trivial() {
                        summary.nontrivial_pi1.push(hit.clone());
                    }
                    if !hit.brauer.is_trivial() {
                        summary.nontrivial_brauer.push(hit);
                    }
                }
                Outcome::Skipped => summary.skipped_nonreflexive += 1,
                Outcome::Failed(f) => summary.failures.push(f),
            }
        }
    }
    Ok(summary)
}
