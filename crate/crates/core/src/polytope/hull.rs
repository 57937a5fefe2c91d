//! Exact facet enumeration by exhaustive search over affinely independent
//! `d`-subsets of the input points.

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use num_integer::Integer;

use super::FacetInequality;
use crate::algebra::IntegerMatrix;
use crate::error::{Error, Result};

pub(crate) fn dot(a: &[i64], b: &[i64]) -> Result<i128> {
    a.iter().zip(b).try_fold(0i128, |acc, (&x, &y)| {
        acc.checked_add(x as i128 * y as i128)
            .ok_or(Error::Overflow("inner product"))
    })
}

/// Rank of the affine hull of `points`.
pub(crate) fn affine_rank(points: &[Vec<i64>], d: usize) -> usize {
    let Some(base) = points.first() else { return 0 };
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(&x, &y)| x as i128 - y as i128)
                .collect()
        })
        .collect();
    IntegerMatrix::from_rows(d, &diffs)
        .expect("uniform point length")
        .rank()
}

pub(crate) fn linear_rank(vectors: &[&[i64]], d: usize) -> usize {
    let rows: Vec<Vec<i64>> = vectors.iter().map(|v| v.to_vec()).collect();
    IntegerMatrix::from_rows(d, &rows)
        .expect("uniform vector length")
        .rank()
}

fn det_i128(mut a: Vec<Vec<i128>>) -> Result<i128> {
    let n = a.len();
    if n == 0 {
        return Ok(1);
    }
    let overflow = || Error::Overflow("facet normal determinant");
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k]).ok_or_else(overflow)?;
                let rhs = a[i][k].checked_mul(a[k][j]).ok_or_else(overflow)?;
                a[i][j] = lhs.checked_sub(rhs).ok_or_else(overflow)? / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Primitive normal of the hyperplane through the given points (generalized
/// cross product of the edge vectors), or `None` if they are affinely
/// dependent.
fn hyperplane_normal(points: &[&Vec<i64>], d: usize) -> Result<Option<Vec<i64>>> {
    let base = points[0];
    let edges: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(&x, &y)| x as i128 - y as i128)
                .collect()
        })
        .collect();
    let mut normal = Vec::with_capacity(d);
    for skip in 0..d {
        let minor: Vec<Vec<i128>> = edges
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let c = det_i128(minor)?;
        normal.push(if skip % 2 == 0 { c } else { -c });
    }
    let g = normal.iter().fold(0i128, |g, x| g.gcd(x));
    if g == 0 {
        return Ok(None);
    }
    normal
        .into_iter()
        .map(|x| i64::try_from(x / g).map_err(|_| Error::Overflow("facet normal")))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// All facets of `conv(points)`, sorted lexicographically by normal. The
/// points must span `Z^d` affinely.
pub(crate) fn facets(points: &[Vec<i64>], d: usize) -> Result<Vec<FacetInequality>> {
    let mut found: Vec<(FacetInequality, FixedBitSet)> = Vec::new();
    for subset in (0..points.len()).combinations(d) {
        // a subset lying in a known facet can only reproduce that facet
        if found
            .iter()
            .any(|(_, on)| subset.iter().all(|&i| on.contains(i)))
        {
            continue;
        }
        let chosen: Vec<&Vec<i64>> = subset.iter().map(|&i| &points[i]).collect();
        let Some(mut normal) = hyperplane_normal(&chosen, d)? else {
            continue;
        };
        let level = dot(chosen[0], &normal)?;
        let mut above = false;
        let mut below = false;
        let mut on = FixedBitSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            let s = dot(p, &normal)? - level;
            above |= s > 0;
            below |= s < 0;
            if s == 0 {
                on.insert(i);
            }
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        let mut offset = level;
        if below {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        let offset = i64::try_from(offset).map_err(|_| Error::Overflow("facet offset"))?;
        found.push((FacetInequality { normal, offset }, on));
    }
    let mut out: Vec<FacetInequality> = found.into_iter().map(|(f, _)| f).collect();
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    out.dedup();
    Ok(out)
}
