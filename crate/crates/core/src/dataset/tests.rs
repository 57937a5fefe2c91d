use std::sync::OnceLock;

use num_bigint::BigInt;

use super::corpus::*;
use super::*;
use crate::algebra::{quotient_group, SublatticeSpan};
use crate::invariants::{codim_filtered_span, Codim};
use crate::FiniteAbelianGroup;

fn pairs() -> &'static [MirrorPair] {
    static PAIRS: OnceLock<Vec<MirrorPair>> = OnceLock::new();
    PAIRS.get_or_init(|| table16().unwrap())
}

#[test]
fn every_row_matches() {
    let rows = table_rows();
    for (pair, row) in pairs().iter().zip(&rows) {
        assert_eq!(pair.observed(), row.expected, "row {}", row.spec.label);
    }
}

#[test]
fn pairs_are_dual() {
    for p in pairs() {
        assert!(p.delta.is_polar_dual_of(&p.dstar), "row {}", p.row);
        assert!(p.dstar.is_polar_dual_of(&p.delta), "row {}", p.row);
        assert_eq!(p.delta.polar_dual().unwrap(), p.dstar);
    }
}

#[test]
fn codim1_span_and_extra_vector() {
    for row in table_rows() {
        let built = row.spec.build_with_aux().unwrap();
        let n1 = codim_filtered_span(&built.polytope, Codim::One).unwrap();
        let mut gens = built.spec_vertices.clone();
        if ROWS_WITH_DOUBLED_AUX.contains(&row.spec.label) {
            gens.push(built.aux.iter().map(|x| 2 * x).collect());
        }
        let expected = SublatticeSpan::from_i64(4, &gens).unwrap();
        assert!(n1.same_lattice(&expected), "row {}", row.spec.label);

        // the extra vector has order exactly `den` modulo the vertices
        let verts = SublatticeSpan::from_i64(4, &built.spec_vertices).unwrap();
        let index = quotient_group(&verts).order_u64().unwrap();
        assert_eq!(
            index,
            u64::from(row.spec.aux_denominator),
            "row {}",
            row.spec.label
        );
        let v: Vec<BigInt> = built.aux.iter().map(|&x| BigInt::from(x)).collect();
        assert!(!verts.contains(&v) || row.spec.aux_denominator == 1);
    }
}

#[test]
fn mirror_exchange() {
    for p in pairs() {
        assert!(verify_tor_dual(p), "row {}", p.row);
        assert_eq!(p.mirror_report.h11, p.report.h21);
        assert_eq!(p.mirror_report.h21, p.report.h11);
        assert!(p.mirror_report.pi1.is_trivial());
    }
    let first = &pairs()[0];
    assert_eq!(first.mirror_report.brauer, FiniteAbelianGroup::cyclic(5u32));
}

#[test]
fn comb_duality_on_table_and_quintic() {
    for p in pairs() {
        assert!(verify_comb_dual(&p.delta).unwrap().holds(), "row {}", p.row);
        assert!(verify_comb_dual(&p.dstar).unwrap().holds(), "row {}", p.row);
    }
    let (delta, _) = quintic_pair();
    let c = verify_comb_dual(&delta).unwrap();
    assert!(c.holds());
    assert!(c.wedge_delta.is_trivial() && c.quotient_delta.is_trivial());
}

#[test]
fn scan_directions() {
    let opts = ScanOptions {
        jobs: 2,
        ..Default::default()
    };
    let duals = pairs().iter().enumerate().map(|(i, p)| ScanRecord {
        line: i + 1,
        polytope: Ok(p.dstar.clone()),
    });
    let s = scan(duals, &opts).unwrap();
    assert_eq!((s.total, s.analyzed), (16, 16));
    assert_eq!(s.nontrivial_pi1.len(), 16);
    assert!(s.nontrivial_brauer.is_empty());

    let deltas = pairs().iter().map(|p| ScanRecord {
        line: 0,
        polytope: Ok(p.delta.clone()),
    });
    let s = scan(deltas, &opts).unwrap();
    assert!(s.nontrivial_pi1.is_empty());
    assert_eq!(s.nontrivial_brauer.len(), 16);

    let empty = scan(Vec::new(), &opts).unwrap();
    assert_eq!(empty, ScanSummary::default());
}

#[test]
fn scan_failures_and_skips() {
    let bad = LatticePolytopeFixture::nonreflexive();
    let records = || {
        vec![
            ScanRecord {
                line: 1,
                polytope: Ok(standard_simplex(4)),
            },
            ScanRecord {
                line: 3,
                polytope: Ok(bad.clone()),
            },
            ScanRecord {
                line: 9,
                polytope: Err(crate::Error::Parse {
                    line: 9,
                    column: 2,
                    message: "x".into(),
                }),
            },
            ScanRecord {
                line: 12,
                polytope: Ok(cross_polytope(3)),
            },
        ]
    };
    let strict = scan(records(), &ScanOptions::default()).unwrap();
    assert_eq!(strict.analyzed, 1);
    let kinds: Vec<_> = strict.failures.iter().map(|f| (f.index, f.kind)).collect();
    assert_eq!(
        kinds,
        vec![
            (1, FailureKind::NotReflexive),
            (2, FailureKind::Parse),
            (3, FailureKind::Input)
        ]
    );
    let lenient = scan(
        records(),
        &ScanOptions {
            skip_nonreflexive: true,
            chunk_size: 1,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(lenient.skipped_nonreflexive, 1);
    assert_eq!(lenient.failures.len(), 2);
    assert!(!lenient.has_internal_failures());
}

#[test]
fn scan_is_independent_of_jobs_and_chunks() {
    let records = || {
        pairs()
            .iter()
            .flat_map(|p| [p.dstar.clone(), p.delta.clone()])
            .enumerate()
            .map(|(i, p)| ScanRecord {
                line: i,
                polytope: Ok(p),
            })
            .collect::<Vec<_>>()
    };
    let a = scan(
        records(),
        &ScanOptions {
            jobs: 1,
            ..Default::default()
        },
    )
    .unwrap();
    let b = scan(
        records(),
        &ScanOptions {
            jobs: 8,
            chunk_size: 3,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn corpora_sizes() {
    let polys = reflexive_polygons();
    assert_eq!(
        polys.len(),
        polys.iter().filter(|p| p.is_reflexive()).count()
    );
    assert!(polys.len() >= 10, "{}", polys.len());
    let three = reflexive_3d();
    assert!(three.len() >= 10, "{}", three.len());
    assert!(three.iter().all(|p| p.dim() == 3 && p.is_reflexive()));
    let four = product_4d();
    assert!(four.len() >= 20, "{}", four.len());
    assert!(four.iter().all(|p| p.dim() == 4 && p.is_reflexive()));
}

struct LatticePolytopeFixture;

impl LatticePolytopeFixture {
    fn nonreflexive() -> crate::LatticePolytope {
        crate::LatticePolytope::new(vec![
            vec![3, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![-1, -1, -1, -1],
        ])
        .unwrap()
    }
}
