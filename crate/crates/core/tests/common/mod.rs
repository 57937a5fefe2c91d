//! Oracles shared by the property and acceptance tests. Everything here is
//! computed without the crate's normal-form code.

#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use torsionscan_core::algebra::{
    positional_invariants, smith_normal_form, wedge_square_from_invariants, wedge_square_quotient,
};
use torsionscan_core::{IntegerMatrix, SublatticeSpan};

/// Cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn to_rows(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// gcd of all `k x k` minors.
pub fn minor_gcd(a: &[Vec<i64>], k: usize) -> BigInt {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut g = BigInt::zero();
    for rs in (0..rows).combinations(k) {
        for cs in (0..cols).combinations(k) {
            let m: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| BigInt::from(a[i][j])).collect())
                .collect();
            g = g.gcd(&laplace_det(&m));
        }
    }
    g
}

/// All contractual properties of the Smith decomposition of `a`.
pub fn check_snf(a: &[Vec<i64>], cols: usize) -> Result<(), String> {
    let m = IntegerMatrix::from_rows(cols, a).map_err(|e| e.to_string())?;
    let s = smith_normal_form(&m);
    if &(&s.u * &m) * &s.v != s.d {
        return Err(format!("U A V != D for {a:?}"));
    }
    for (name, x) in [("U", &s.u), ("V", &s.v)] {
        if laplace_det(&to_rows(x)).abs() != BigInt::one() {
            return Err(format!("{name} is not unimodular for {a:?}"));
        }
    }
    if !s.d.is_diagonal() {
        return Err(format!("D not diagonal for {a:?}"));
    }
    let diag = s.diagonal();
    if diag.iter().any(|x| x.is_negative()) {
        return Err(format!("negative diagonal for {a:?}"));
    }
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            w[1].is_multiple_of(&w[0])
        };
        if !ok {
            return Err(format!("divisibility chain broken: {diag:?} for {a:?}"));
        }
    }
    for k in 1..=diag.len().min(3) {
        let prod: BigInt = diag[..k].iter().product();
        let g = minor_gcd(a, k);
        if prod != g {
            return Err(format!("d_1..d_{k} = {prod} but minor gcd {g} for {a:?}"));
        }
    }
    Ok(())
}

/// Direct exterior-square cokernel against the closed form in the invariant
/// factors of `Z^d / span`.
pub fn check_wedge_closed_form(d: usize, gens: &[Vec<i64>]) -> Result<(), String> {
    let span = SublatticeSpan::from_i64(d, gens).map_err(|e| e.to_string())?;
    let direct = wedge_square_quotient(d, &span).map_err(|e| e.to_string())?;
    let closed = wedge_square_from_invariants(&positional_invariants(&span));
    if direct == closed {
        Ok(())
    } else {
        Err(format!("{direct} != {closed} for {gens:?}"))
    }
}

pub fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        (
            Just(c),
            prop::collection::vec(prop::collection::vec(-9i64..=9, c), r),
        )
    })
}

fn rank(d: usize, gens: &[Vec<i64>]) -> usize {
    IntegerMatrix::from_rows(d, gens)
        .map(|m| m.rank())
        .unwrap_or(0)
}

/// Generator lists of full rank in `Z^d`, `d` in {3, 4}, with up to two
/// extra generators.
pub fn full_rank_span() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (3usize..=4, 0usize..=2)
        .prop_flat_map(|(d, extra)| {
            (
                Just(d),
                prop::collection::vec(prop::collection::vec(-6i64..=6, d), d + extra),
            )
        })
        .prop_filter("full rank", |(d, g)| rank(*d, g) == *d)
}
