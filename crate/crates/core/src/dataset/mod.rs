//! The sixteen exceptional polytope pairs, their duality checks, test
//! corpora and the bulk scanner.

pub mod corpus;
mod relations;
mod scan;
mod table;
mod verify;

pub use relations::{BuiltPolytope, RelationSpec, MAX_AUX_DENOMINATOR};
pub use scan::{scan, FailureKind, ScanFailure, ScanHit, ScanOptions, ScanRecord, ScanSummary};
pub use table::{table16, table_rows, ExpectedRow, MirrorPair, TableRow, ROWS_WITH_DOUBLED_AUX};
pub use verify::{verify_comb_dual, verify_tor_dual, CombDualCheck};

#[cfg(test)]
mod tests;
