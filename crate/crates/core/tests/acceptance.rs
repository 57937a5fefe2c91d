//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the summary prints in order; exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use torsionscan_core::dataset::corpus::{corpus_4d, product_4d, quintic_pair, reflexive_3d};
use torsionscan_core::dataset::{
    scan, table16, verify_comb_dual, verify_tor_dual, MirrorPair, ScanOptions, ScanRecord,
};
use torsionscan_core::invariants::{
    brauer_group, codim2_invariants, fundamental_group, fundamental_group_via_exterior,
};
use torsionscan_core::io::{emit_scan_summary, emit_table_row, parse_vertex_matrix, SquareLayout};
use torsionscan_core::{analyze, FiniteAbelianGroup, LatticePolytope};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn table_reproduction(pairs: &[MirrorPair], elapsed: f64) -> Outcome {
    let golden: Vec<&str> = include_str!("data/table16.golden").lines().collect();
    ensure(pairs.len() == 16, || format!("{} rows", pairs.len()))?;
    let mut bad = Vec::new();
    for (p, g) in pairs.iter().zip(&golden) {
        let line = emit_table_row(p.row, &p.report);
        if line != *g {
            bad.push(format!("got `{line}`, want `{g}`"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    ensure(elapsed < 10.0, || format!("took {elapsed:.2} s"))?;
    Ok(format!(
        "16/16 rows exact, built and analyzed in {elapsed:.2} s"
    ))
}

fn torsion_multiplicities(pairs: &[MirrorPair]) -> Outcome {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for p in pairs {
        ensure(p.report.pi1.is_cyclic(), || {
            format!("row {}: {} not cyclic", p.row, p.report.pi1)
        })?;
        *counts
            .entry(p.report.pi1.order_u64().unwrap_or(0))
            .or_default() += 1;
    }
    let want = BTreeMap::from([(2, 13), (3, 2), (5, 1)]);
    ensure(counts == want, || format!("orders {counts:?}"))?;
    Ok("orders 5 x1, 3 x2, 2 x13; all cyclic".into())
}

fn mirror_exchange(pairs: &[MirrorPair]) -> Outcome {
    for p in pairs {
        ensure(verify_tor_dual(p), || {
            format!(
                "row {}: A={} B={} vs mirror A={} B={}",
                p.row, p.report.a, p.report.b, p.mirror_report.a, p.mirror_report.b
            )
        })?;
    }
    let m = &pairs[0].mirror_report;
    ensure(
        m.brauer == FiniteAbelianGroup::cyclic(5u32) && m.pi1.is_trivial(),
        || format!("row 1 mirror: pi1={} B={}", m.pi1, m.brauer),
    )?;
    Ok("A(X)=B(X*) and B(X)=A(X*) on 16 pairs; row-1 mirror has B=Z/5, pi1=0".into())
}

fn comb_duality(pairs: &[MirrorPair]) -> Outcome {
    let products = product_4d();
    ensure(products.len() >= 20, || {
        format!("only {} products", products.len())
    })?;
    let (qd, qs) = quintic_pair();
    let mut polys: Vec<&LatticePolytope> = Vec::new();
    for p in pairs {
        polys.push(&p.delta);
        polys.push(&p.dstar);
    }
    polys.push(&qd);
    polys.push(&qs);
    polys.extend(&products);
    for p in &polys {
        let c = verify_comb_dual(p).map_err(err)?;
        ensure(c.holds(), || format!("{c:?} for {:?}", p.vertices()))?;
    }
    Ok(format!(
        "{} polytopes (32 table, 2 quintic, {} products)",
        polys.len(),
        products.len()
    ))
}

fn exterior_cross_check(corpus: &[LatticePolytope]) -> Outcome {
    let three = reflexive_3d();
    let all: Vec<&LatticePolytope> = corpus.iter().chain(&three).collect();
    ensure(all.len() >= 40, || format!("corpus of {}", all.len()))?;
    for p in &all {
        let a = fundamental_group(p).map_err(err)?;
        let b = fundamental_group_via_exterior(p).map_err(err)?;
        ensure(a == b, || format!("{a} vs {b} for {:?}", p.vertices()))?;
    }
    Ok(format!("{} polytopes agree", all.len()))
}

fn k3_sanity() -> Outcome {
    let suite = reflexive_3d();
    ensure(suite.len() >= 10, || {
        format!("only {} polytopes", suite.len())
    })?;
    for p in &suite {
        let g = fundamental_group(p).map_err(err)?;
        ensure(g.is_trivial(), || format!("{g} for {:?}", p.vertices()))?;
    }
    Ok(format!(
        "{} three-dimensional polytopes, all trivial",
        suite.len()
    ))
}

fn structure_claim(corpus: &[LatticePolytope]) -> Outcome {
    let one = BigUint::from(1u32);
    for p in corpus {
        let c = codim2_invariants(p).map_err(err)?;
        ensure(c[0] == one && c[1] == one, || format!("c = {c:?}"))?;
        let b = brauer_group(p).map_err(err)?;
        let want = FiniteAbelianGroup::from_cyclic_orders([c[2].clone()]);
        ensure(b == want, || format!("B = {b}, c = {c:?}"))?;
    }
    Ok(format!(
        "c1 = c2 = 1 and B = Z/c3 on {} polytopes",
        corpus.len()
    ))
}

fn quintic() -> Outcome {
    let (delta, _) = quintic_pair();
    let r = analyze(&delta).map_err(err)?;
    ensure(
        (r.h11, r.h21, r.chi) == (1, 101, -200) && r.pi1.is_trivial() && r.brauer.is_trivial(),
        || {
            format!(
                "({}, {}), chi {}, pi1 {}, B {}",
                r.h11, r.h21, r.chi, r.pi1, r.brauer
            )
        },
    )?;
    Ok("(1, 101), chi = -200, pi1 = B = 0".into())
}

fn algebra_properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 500,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&common::small_matrix(), |(cols, a)| {
            common::check_snf(&a, cols).map_err(TestCaseError::fail)
        })
        .map_err(|e| format!("smith form: {e}"))?;
    let mut runner = TestRunner::new(Config {
        cases: 100,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&common::full_rank_span(), |(d, gens)| {
            common::check_wedge_closed_form(d, &gens).map_err(TestCaseError::fail)
        })
        .map_err(|e| format!("exterior square: {e}"))?;
    Ok("500 random matrices, 100 random spans".into())
}

fn determinism() -> Outcome {
    let text = include_str!("data/corpus32.txt");
    let records = || {
        parse_vertex_matrix(text, SquareLayout::default())
            .into_iter()
            .map(|r| ScanRecord {
                line: r.line,
                polytope: r.polytope,
            })
    };
    let run = |jobs| {
        scan(
            records(),
            &ScanOptions {
                jobs,
                ..ScanOptions::default()
            },
        )
        .map(|s| emit_scan_summary(&s))
        .map_err(err)
    };
    let one = run(1)?;
    let eight = run(8)?;
    ensure(one == eight, || "outputs differ".into())?;
    ensure(one.contains("\"total\": 32"), || {
        "corpus is not 32 records".into()
    })?;
    Ok(format!("{} bytes identical for 1 and 8 workers", one.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let pairs = table16();
    let elapsed = start.elapsed().as_secs_f64();
    let corpus = corpus_4d();

    let with_pairs = |f: &dyn Fn(&[MirrorPair]) -> Outcome| -> Outcome {
        match &pairs {
            Ok(p) => f(p),
            Err(e) => Err(format!("table construction failed: {e}")),
        }
    };
    let with_corpus = |f: &dyn Fn(&[LatticePolytope]) -> Outcome| -> Outcome {
        match &corpus {
            Ok(c) => f(c),
            Err(e) => Err(format!("corpus construction failed: {e}")),
        }
    };

    let criteria: Vec<Criterion> = vec![
        (
            "table reproduction",
            Box::new(|| with_pairs(&|p| table_reproduction(p, elapsed))),
        ),
        (
            "torsion multiplicities",
            Box::new(|| with_pairs(&torsion_multiplicities)),
        ),
        ("mirror exchange", Box::new(|| with_pairs(&mirror_exchange))),
        (
            "combinatorial duality",
            Box::new(|| with_pairs(&comb_duality)),
        ),
        (
            "exterior-power cross-check",
            Box::new(|| with_corpus(&exterior_cross_check)),
        ),
        ("three-dimensional sanity", Box::new(k3_sanity)),
        (
            "codimension-2 structure",
            Box::new(|| with_corpus(&structure_claim)),
        ),
        ("quintic sanity", Box::new(quintic)),
        ("algebra property suite", Box::new(algebra_properties)),
        ("scan determinism", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
