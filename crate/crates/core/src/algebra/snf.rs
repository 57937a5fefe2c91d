//! Smith normal form with unimodular transforms.
//!
//! For an `m x n` integer matrix `A` this computes unimodular `U` (`m x m`)
//! and `V` (`n x n`) with `U * A * V = D`, where `D` is diagonal, its
//! entries are nonnegative, each divides the next, and zeros trail.
//!
//! Pivoting always picks the entry of smallest absolute value in the
//! remaining block, scanning row-major and keeping the first occurrence, so
//! the transforms are deterministic. Only `D` is unique.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// The diagonal of `D`, of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Nonzero diagonal entries different from one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero() && *x != BigInt::from(1))
            .collect()
    }
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    'outer: for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                // remaining block is zero
                break 'outer;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // row t and column t are clear; enforce divisibility on the rest
            let offender =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition { u, d, v }
}

fn min_pivot(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(cols: usize, rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(cols, rows).unwrap()
    }

    fn check(a: &IntegerMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d, "U*A*V != D for {a:?}");
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must trail: {diag:?}");
            } else {
                assert!(w[1].is_multiple_of(&w[0]), "chain broken: {diag:?}");
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntegerMatrix::identity(2);
        let s = check(&a);
        assert_eq!(s.d, a);
        assert_eq!(s.u, a);
        assert_eq!(s.v, a);
    }

    #[test]
    fn two_by_two_example() {
        // gcd of entries is 2, |det| = 8
        let s = check(&m(2, &[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntegerMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert!(s.invariant_factors().is_empty());
        assert_eq!(s.rank(), 0);
        assert_eq!(3 - s.rank(), 3);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let s = check(&IntegerMatrix::zeros(r, c));
            assert!(s.diagonal().is_empty());
        }
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) is diagonal but not in normal form
        let s = check(&m(2, &[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let s = check(&m(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 5]]));
        assert_eq!(s.rank(), 2);
        let s = check(&m(2, &[vec![4, 6], vec![6, 9], vec![2, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn deterministic() {
        let a = m(3, &[vec![3, -7, 2], vec![5, 1, -4], vec![9, 9, 6]]);
        assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }
}
