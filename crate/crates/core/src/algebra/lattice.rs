//! Sublattices of `Z^d` given by generators, their quotients, and exterior
//! powers.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::group::FiniteAbelianGroup;
use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// The Z-module spanned by a list of integer vectors in `Z^d`. Generators
/// need not be independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeSpan {
    ambient_rank: usize,
    generators: Vec<Vec<BigInt>>,
}

impl SublatticeSpan {
    pub fn new(ambient_rank: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient_rank) {
            return Err(Error::InvalidInput(format!(
                "generator of length {} in a rank-{ambient_rank} lattice",
                g.len()
            )));
        }
        Ok(Self {
            ambient_rank,
            generators,
        })
    }

    pub fn from_i64(ambient_rank: usize, generators: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            ambient_rank,
            generators.iter().map(|g| to_bigint_vec(g)).collect(),
        )
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `d x k` matrix with the generators as columns.
    pub fn to_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(self.ambient_rank, &self.generators)
            .expect("generator lengths validated at construction")
    }

    pub fn with_generator(&self, g: Vec<BigInt>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.push(g);
        Self::new(self.ambient_rank, gens)
    }

    /// Rank of the spanned sublattice.
    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let basis = lattice_basis(self);
        solve_in_basis(&basis, v).is_some()
    }

    /// Same sublattice (compared through the canonical Hermite basis).
    pub fn same_lattice(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && lattice_basis(self) == lattice_basis(other)
    }
}

/// Elementary divisors of `Z^d / span`, one per coordinate: ones are kept in
/// place and free directions appear as trailing zeros, so the result always
/// has length `d` and forms a chain `c_1 | c_2 | ... | c_d`.
pub fn positional_invariants(span: &SublatticeSpan) -> Vec<BigUint> {
    let d = span.ambient_rank();
    let diag = if span.is_empty() {
        Vec::new()
    } else {
        smith_normal_form(&span.to_matrix()).diagonal()
    };
    let mut out: Vec<BigUint> = diag
        .into_iter()
        .map(|x| x.to_biguint().expect("Smith diagonal is nonnegative"))
        .collect();
    out.resize(d, BigUint::zero());
    out
}

/// Structure of `Z^d / span`.
pub fn quotient_group(span: &SublatticeSpan) -> FiniteAbelianGroup {
    FiniteAbelianGroup::from_cyclic_orders(positional_invariants(span))
}

/// Column-style Hermite normal form basis of the spanned sublattice.
///
/// The result is `d x r` with `r` the rank. Pivots sit in strictly
/// increasing rows, are positive, and every entry to the left of a pivot in
/// its row is reduced into `[0, pivot)`. The basis is canonical: two spans
/// give equal matrices exactly when they generate the same lattice.
pub fn lattice_basis(span: &SublatticeSpan) -> IntegerMatrix {
    let d = span.ambient_rank();
    let mut a = span.to_matrix();
    let k = a.cols();
    let mut pc = 0;
    for r in 0..d {
        if pc == k {
            break;
        }
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for j in pc..k {
                let x = a[(r, j)].abs();
                if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| x < *b) {
                    best = Some((j, x));
                }
            }
            let Some((j, _)) = best else { break };
            a.swap_cols(pc, j);
            let pivot = a[(r, pc)].clone();
            let mut done = true;
            for j in pc + 1..k {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let q = -a[(r, j)].div_floor(&pivot);
                a.add_col_multiple(j, pc, &q);
                done &= a[(r, j)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(r, pc)].is_zero() {
            continue;
        }
        if a[(r, pc)].is_negative() {
            a.negate_col(pc);
        }
        let pivot = a[(r, pc)].clone();
        for j in 0..pc {
            let q = -a[(r, j)].div_floor(&pivot);
            a.add_col_multiple(j, pc, &q);
        }
        pc += 1;
    }
    let cols: Vec<Vec<BigInt>> = (0..pc).map(|j| a.column(j)).collect();
    IntegerMatrix::from_columns(d, &cols).expect("shape preserved")
}

/// Coordinates of `v` in a basis produced by [`lattice_basis`], or `None` if
/// `v` is not in the lattice.
pub fn solve_in_basis(basis: &IntegerMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.rows(), v.len(), "dimension mismatch");
    let mut rest = v.to_vec();
    let mut coeffs = Vec::with_capacity(basis.cols());
    let mut row = 0;
    for j in 0..basis.cols() {
        while row < basis.rows() && basis[(row, j)].is_zero() {
            if !rest[row].is_zero() {
                return None;
            }
            row += 1;
        }
        let pivot = &basis[(row, j)];
        let (q, r) = rest[row].div_rem(pivot);
        if !r.is_zero() {
            return None;
        }
        for (i, x) in rest.iter_mut().enumerate() {
            *x -= &q * &basis[(i, j)];
        }
        coeffs.push(q);
        row += 1;
    }
    rest.iter().all(Zero::is_zero).then_some(coeffs)
}

/// Basis of the integer kernel `{x in Z^n : A x = 0}` as columns.
pub fn kernel_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    let cols: Vec<Vec<BigInt>> = (r..a.cols()).map(|j| s.v.column(j)).collect();
    IntegerMatrix::from_columns(a.cols(), &cols).expect("shape preserved")
}

/// Exterior product `w_1 ^ ... ^ w_k` of vectors in `Z^d`, in the basis
/// `e_S`, `S` ranging over `k`-subsets of coordinates in lexicographic order
/// (standard orientation). Each coordinate is the corresponding `k x k`
/// minor.
pub fn wedge(vectors: &[Vec<BigInt>], d: usize) -> Vec<BigInt> {
    let k = vectors.len();
    (0..d)
        .combinations(k)
        .map(|rows| {
            let entries = rows
                .iter()
                .flat_map(|&i| vectors.iter().map(move |w| w[i].clone()))
                .collect();
            IntegerMatrix::new(k, k, entries)
                .and_then(|m| m.determinant())
                .expect("square minor")
        })
        .collect()
}

/// `Lambda^2 Z^d / (Z^d ^ L)` for the sublattice `L` spanned by `gens`,
/// computed directly as the cokernel of all wedges `e_a ^ g`.
pub fn wedge_square_quotient(d: usize, gens: &SublatticeSpan) -> Result<FiniteAbelianGroup> {
    if d < 2 || gens.ambient_rank() != d {
        return Err(Error::InvalidInput(format!(
            "exterior square needs d >= 2 and generators in Z^{d}"
        )));
    }
    let mut columns = Vec::with_capacity(d * gens.generators().len());
    for a in 0..d {
        let mut e = vec![BigInt::zero(); d];
        e[a] = BigInt::from(1);
        for g in gens.generators() {
            let w = wedge(&[e.clone(), g.clone()], d);
            if w.iter().any(|x| !x.is_zero()) {
                columns.push(w);
            }
        }
    }
    let span = SublatticeSpan::new(d * (d - 1) / 2, columns)?;
    Ok(quotient_group(&span))
}

/// `(+)_{i<j} Z/c_i` for a chain of positional invariants `c_1..c_d`
/// (zeros meaning infinite cyclic).
pub fn wedge_square_from_invariants(c: &[BigUint]) -> FiniteAbelianGroup {
    let d = c.len();
    FiniteAbelianGroup::from_cyclic_orders(
        c.iter()
            .enumerate()
            .flat_map(|(i, ci)| std::iter::repeat_n(ci.clone(), d - 1 - i)),
    )
}

pub(crate) fn to_bigint_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn is_primitive(v: &[i64]) -> bool {
    v.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
}
