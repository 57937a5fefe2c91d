//! The sixteen reflexive 4-polytopes whose Calabi-Yau hypersurfaces have a
//! nontrivial fundamental group, with their published numbers.

use serde::Serialize;

use super::relations::RelationSpec;
use crate::error::Result;
use crate::invariants::{analyze, analyze_dual, TorsionReport};
use crate::polytope::LatticePolytope;

/// Published numbers of one row: `|pi_1|`, point and vertex counts of both
/// polytopes, the Hodge numbers and the Euler number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedRow {
    pub pi1_order: u64,
    pub p_delta: usize,
    pub v_delta: usize,
    pub p_dual: usize,
    pub v_dual: usize,
    pub h11: i64,
    pub h21: i64,
    pub chi: i64,
}

struct RawRow {
    n: usize,
    relations: &'static [&'static [i64]],
    aux: &'static [i64],
    den: u32,
    expected: [i64; 8],
}

#[rustfmt::skip]
const ROWS: [RawRow; 16] = [
    RawRow { n: 5, relations: &[&[1, 1, 1, 1, 1]],
        aux: &[0, 1, 2, 3, 4], den: 5, expected: [5, 26, 5, 6, 5, 1, 21, -40] },
    RawRow { n: 6, relations: &[&[1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 1]],
        aux: &[0, 1, 2, 0, 1, 2], den: 3, expected: [3, 34, 9, 7, 6, 2, 29, -54] },
    RawRow { n: 5, relations: &[&[3, 3, 1, 1, 1]],
        aux: &[1, 2, 1, 2, 0], den: 3, expected: [3, 49, 5, 7, 5, 2, 38, -72] },
    RawRow { n: 5, relations: &[&[4, 1, 1, 1, 1]],
        aux: &[2, 1, 2, 3, 0], den: 4, expected: [2, 53, 5, 9, 5, 3, 43, -80] },
    RawRow { n: 6, relations: &[&[4, 2, 1, 1, 0, 0], &[2, 0, 0, 0, 1, 1]],
        aux: &[1, 1, 1, 0, 1, 0], den: 2, expected: [2, 77, 7, 9, 6, 3, 59, -112] },
    RawRow { n: 7, relations: &[&[2, 1, 1, 0, 0, 0, 0], &[2, 0, 0, 1, 1, 0, 0], &[2, 0, 0, 0, 0, 1, 1]],
        aux: &[1, 1, 0, 1, 0, 1, 0], den: 2, expected: [2, 77, 9, 9, 7, 3, 59, -112] },
    RawRow { n: 5, relations: &[&[8, 4, 2, 1, 1]],
        aux: &[1, 1, 1, 1, 0], den: 2, expected: [2, 101, 5, 9, 5, 3, 75, -144] },
    RawRow { n: 6, relations: &[&[4, 2, 1, 1, 0, 0], &[4, 2, 0, 0, 1, 1]],
        aux: &[1, 1, 1, 0, 1, 0], den: 2, expected: [2, 101, 6, 9, 6, 3, 75, -144] },
    RawRow { n: 6, relations: &[&[1, 1, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 1]],
        aux: &[0, 1, 2, 3, 0, 2], den: 4, expected: [2, 29, 8, 9, 6, 4, 28, -48] },
    RawRow { n: 6, relations: &[&[4, 2, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 1]],
        aux: &[1, 1, 1, 0, 1, 0], den: 2, expected: [2, 53, 8, 9, 6, 4, 44, -80] },
    RawRow { n: 7, relations: &[&[2, 1, 1, 0, 0, 0, 0], &[2, 0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 0, 1, 1]],
        aux: &[1, 1, 0, 1, 0, 1, 0], den: 2, expected: [2, 53, 10, 9, 7, 4, 44, -80] },
    RawRow { n: 6, relations: &[&[2, 1, 1, 0, 0, 0], &[0, 0, 0, 2, 1, 1]],
        aux: &[1, 1, 0, 1, 1, 0], den: 2, expected: [2, 41, 9, 9, 6, 4, 36, -64] },
    RawRow { n: 7, relations: &[&[2, 1, 1, 0, 0, 0, 0], &[0, 0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 0, 1, 1]],
        aux: &[1, 1, 0, 1, 0, 1, 0], den: 2, expected: [2, 41, 12, 9, 7, 4, 36, -64] },
    RawRow { n: 8, relations: &[&[1, 1, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 1, 0, 0, 0, 0],
                                &[0, 0, 0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 0, 0, 1, 1]],
        aux: &[1, 0, 1, 0, 1, 0, 1, 0], den: 2, expected: [2, 41, 16, 9, 8, 4, 36, -64] },
    RawRow { n: 5, relations: &[&[2, 2, 2, 1, 1]],
        aux: &[1, 2, 3, 0, 2], den: 4, expected: [2, 29, 5, 9, 5, 5, 29, -48] },
    RawRow { n: 6, relations: &[&[1, 1, 1, 1, 0, 0], &[0, 0, 1, 1, 1, 1]],
        aux: &[1, 3, 0, 2, 0, 2], den: 4, expected: [2, 29, 6, 9, 6, 5, 29, -48] },
];

/// Rows whose `N'` needs `2v` besides the vertices.
pub const ROWS_WITH_DOUBLED_AUX: [usize; 4] = [4, 9, 15, 16];

/// One table row: how to build the polytope in `N` and what to expect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub spec: RelationSpec,
    pub expected: ExpectedRow,
}

pub fn table_rows() -> Vec<TableRow> {
    ROWS.iter()
        .enumerate()
        .map(|(i, r)| {
            let e = r.expected;
            TableRow {
                spec: RelationSpec {
                    label: i + 1,
                    num_vertices: r.n,
                    relations: r.relations.iter().map(|x| x.to_vec()).collect(),
                    aux_numerators: r.aux.to_vec(),
                    aux_denominator: r.den,
                },
                expected: ExpectedRow {
                    pi1_order: e[0] as u64,
                    p_delta: e[1] as usize,
                    v_delta: e[2] as usize,
                    p_dual: e[3] as usize,
                    v_dual: e[4] as usize,
                    h11: e[5],
                    h21: e[6],
                    chi: e[7],
                },
            }
        })
        .collect()
}

/// A polytope `delta` in `M`, its polar dual `dstar` in `N`, and the
/// reports for the hypersurface family and its mirror.
#[derive(Clone, Debug)]
pub struct MirrorPair {
    pub row: usize,
    pub delta: LatticePolytope,
    pub dstar: LatticePolytope,
    /// Hypersurfaces in the toric variety of `delta`.
    pub report: TorsionReport,
    /// The mirror family, in the toric variety of `dstar`.
    pub mirror_report: TorsionReport,
}

impl MirrorPair {
    pub fn from_dual(row: usize, dstar: LatticePolytope) -> Result<Self> {
        let delta = dstar.polar_dual()?;
        let report = analyze_dual(&dstar)?;
        let mirror_report = analyze(&dstar)?;
        Ok(Self {
            row,
            delta,
            dstar,
            report,
            mirror_report,
        })
    }

    /// The row's numbers as computed, in [`ExpectedRow`] form.
    pub fn observed(&self) -> ExpectedRow {
        let r = &self.report;
        ExpectedRow {
            pi1_order: r.pi1.order_u64().unwrap_or(0),
            p_delta: r.counts.p_delta,
            v_delta: r.counts.v_delta,
            p_dual: r.counts.p_dual,
            v_dual: r.counts.v_dual,
            h11: r.h11,
            h21: r.h21,
            chi: r.chi,
        }
    }
}

/// All sixteen rows, built from their relations and analyzed on both sides.
pub fn table16() -> Result<Vec<MirrorPair>> {
    table_rows()
        .iter()
        .map(|row| MirrorPair::from_dual(row.spec.label, row.spec.build()?))
        .collect()
}
