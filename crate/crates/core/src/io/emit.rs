use std::fmt::Write;

use serde::Serialize;

use crate::algebra::FiniteAbelianGroup;
use crate::dataset::ScanSummary;
use crate::invariants::{fundamental_group_label, TorsionReport};
use crate::polytope::LatticePolytope;

/// Vertex matrix with coordinates as rows and vertices as columns, in the
/// format read by [`parse_vertex_matrix`](super::parse_vertex_matrix).
pub fn emit_polytope(p: &LatticePolytope) -> String {
    let d = p.dim();
    let n = p.num_vertices();
    let width = p
        .vertices()
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = format!("{d} {n}\n");
    for i in 0..d {
        let row: Vec<String> = p
            .vertices()
            .iter()
            .map(|v| format!("{:>width$}", v[i]))
            .collect();
        writeln!(out, "{}", row.join(" ")).expect("writing to a string");
    }
    out
}

/// One-line JSON object with the keys in report order.
pub fn emit_report_json(report: &TorsionReport) -> String {
    serde_json::to_string(report).expect("report serializes")
}

/// `|pi1| | P_Delta V_Delta | P_Dstar V_Dstar | h11 h21 | chi`.
pub fn emit_report_table(report: &TorsionReport) -> String {
    let c = &report.counts;
    let order = report
        .pi1
        .order()
        .map_or_else(|| "inf".to_string(), |o| o.to_string());
    format!(
        "{order} | {} {} | {} {} | {} {} | {}",
        c.p_delta, c.v_delta, c.p_dual, c.v_dual, report.h11, report.h21, report.chi
    )
}

/// Table line prefixed by the row number.
pub fn emit_table_row(row: usize, report: &TorsionReport) -> String {
    format!("{row} | {}", emit_report_table(report))
}

#[derive(Serialize)]
struct Pi1Only<'a> {
    dim: usize,
    pi1: &'a FiniteAbelianGroup,
    pi1_kind: &'static str,
}

/// JSON for inputs outside dimension 4, where only the fundamental group
/// (or its stringy candidate) is computed.
pub fn emit_pi1_json(dim: usize, pi1: &FiniteAbelianGroup) -> String {
    serde_json::to_string(&Pi1Only {
        dim,
        pi1,
        pi1_kind: fundamental_group_label(dim),
    })
    .expect("group serializes")
}

/// Pretty-printed scan summary.
pub fn emit_scan_summary(summary: &ScanSummary) -> String {
    serde_json::to_string_pretty(summary).expect("summary serializes")
}
