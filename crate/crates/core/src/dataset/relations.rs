//! Polytopes given by linear relations among their vertices, in the lattice
//! generated by the vertices and one extra rational combination of them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{lattice_basis, solve_in_basis, SublatticeSpan};
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

/// Largest denominator accepted for the extra vector.
pub const MAX_AUX_DENOMINATOR: u32 = 64;

const DIM: usize = 4;

/// Vertices `v_1..v_n` of a reflexive 4-polytope described by integer
/// relations `sum_i a_i v_i = 0`, and the extra lattice vector
/// `v = (1/den) sum_i num_i v_i`. The lattice is `Z v + sum Z v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub label: usize,
    pub num_vertices: usize,
    pub relations: Vec<Vec<i64>>,
    pub aux_numerators: Vec<i64>,
    pub aux_denominator: u32,
}

/// A built polytope together with the coordinates of the extra vector in
/// the same basis.
#[derive(Clone, Debug)]
pub struct BuiltPolytope {
    pub polytope: LatticePolytope,
    /// Vertex `v_i` in the normalized basis, indexed like the spec.
    pub spec_vertices: Vec<Vec<i64>>,
    pub aux: Vec<i64>,
}

impl RelationSpec {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Spec {
            row: self.label,
            reason: reason.into(),
        }
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.num_vertices;
        if let Some(r) = self.relations.iter().find(|r| r.len() != n) {
            return Err(self.err(format!("relation of length {} for {n} vertices", r.len())));
        }
        if self.aux_numerators.len() != n {
            return Err(self.err("extra vector has the wrong number of coefficients"));
        }
        if self.aux_denominator == 0 || self.aux_denominator > MAX_AUX_DENOMINATOR {
            return Err(self.err(format!(
                "denominator {} outside 1..={MAX_AUX_DENOMINATOR}",
                self.aux_denominator
            )));
        }
        Ok(())
    }

    /// Rational coordinates of `v_1..v_n`: the relation matrix is reduced
    /// with pivots taken from the last columns, so the leading vertices stay
    /// free and become the standard basis.
    fn embed(&self) -> Result<Vec<Vec<BigRational>>> {
        let n = self.num_vertices;
        let mut rows: Vec<Vec<BigRational>> = self
            .relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut next = 0;
        for col in (0..n).rev() {
            let Some(p) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let inv = rows[next][col].recip();
            for x in rows[next].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows.len() {
                if i != next && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    let pivot_row = rows[next].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push((next, col));
            next += 1;
        }
        if n < DIM || pivots.len() != n - DIM {
            return Err(self.err(format!(
                "relations leave rank {} instead of {DIM}",
                n - pivots.len()
            )));
        }
        let free: Vec<usize> = (0..n)
            .filter(|j| pivots.iter().all(|&(_, c)| c != *j))
            .collect();
        let mut coords = vec![vec![BigRational::zero(); DIM]; n];
        for (k, &f) in free.iter().enumerate() {
            coords[f][k] = BigRational::one();
        }
        for &(r, c) in &pivots {
            for (k, &f) in free.iter().enumerate() {
                coords[c][k] = -rows[r][f].clone();
            }
        }
        Ok(coords)
    }

    pub fn build(&self) -> Result<LatticePolytope> {
        self.build_with_aux().map(|b| b.polytope)
    }

    /// Builds the polytope in the Hermite basis of `Z v + sum Z v_i`.
    pub fn build_with_aux(&self) -> Result<BuiltPolytope> {
        self.check_shape()?;
        let verts = self.embed()?;
        let den = BigRational::from_integer(self.aux_denominator.into());
        let aux: Vec<BigRational> = (0..DIM)
            .map(|k| {
                verts
                    .iter()
                    .zip(&self.aux_numerators)
                    .map(|(v, &a)| &v[k] * BigRational::from_integer(a.into()))
                    .fold(BigRational::zero(), |s, x| s + x)
                    / &den
            })
            .collect();

        // clear denominators, then change to a basis of the generated lattice
        let scale = verts
            .iter()
            .chain(std::iter::once(&aux))
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let to_int = |v: &[BigRational]| -> Vec<BigInt> {
            v.iter().map(|x| (x * &scale).to_integer()).collect()
        };
        let mut gens: Vec<Vec<BigInt>> = verts.iter().map(|v| to_int(v)).collect();
        gens.push(to_int(&aux));
        let basis = lattice_basis(&SublatticeSpan::new(DIM, gens.clone())?);
        if basis.cols() != DIM {
            return Err(self.err("vertices do not span a 4-dimensional lattice"));
        }
        let rewrite = |g: &[BigInt]| -> Result<Vec<i64>> {
            solve_in_basis(&basis, g)
                .ok_or_else(|| Error::Internal("generator outside its own span".into()))?
                .iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow("vertex coordinate")))
                .collect()
        };
        let mut coords = gens
            .iter()
            .map(|g| rewrite(g))
            .collect::<Result<Vec<_>>>()?;
        let aux = coords.pop().expect("extra vector present");

        let (polytope, _) = LatticePolytope::hull_of(coords.clone())?;
        if polytope.num_vertices() != self.num_vertices {
            return Err(self.err(format!(
                "convex hull has {} vertices, expected {}",
                polytope.num_vertices(),
                self.num_vertices
            )));
        }
        if !polytope.is_reflexive() {
            return Err(self.err("result is not reflexive"));
        }
        Ok(BuiltPolytope {
            polytope,
            spec_vertices: coords,
            aux,
        })
    }
}
