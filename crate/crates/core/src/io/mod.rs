//! The vertex-matrix text format and report output.

mod emit;
mod parse;

pub use emit::{
    emit_pi1_json, emit_polytope, emit_report_json, emit_report_table, emit_scan_summary,
    emit_table_row,
};
pub use parse::{parse_vertex_matrix, ParsedRecord, SquareLayout, MAX_DIGITS};
