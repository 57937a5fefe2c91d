//! Torsion invariants of the Calabi-Yau hypersurface attached to a
//! reflexive polytope.
//!
//! Conventions: `Delta` lives in the lattice `M`, its polar dual `Dstar` in
//! `N`. The hypersurface is taken in the toric variety of `Delta`, so its
//! fundamental group is `N / N'` and its Brauer group is dual to
//! `Lambda^2 N / (N ^ N'')`, where `N'` (resp. `N''`) is spanned by the
//! lattice points of `Dstar` on faces of codimension greater than one
//! (resp. two).

mod hodge;
mod report;

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::{
    is_primitive, kernel_basis, positional_invariants, quotient_group, wedge,
    wedge_square_from_invariants, wedge_square_quotient, FiniteAbelianGroup, IntegerMatrix,
    SublatticeSpan,
};
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

pub use hodge::stringy_hodge;
pub use report::{analyze, analyze_dual, PointCounts, TorsionReport, EXTENSION_NOTE};

/// Which face-codimension filter to apply in [`codim_filtered_span`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Codim {
    /// Points on faces of codimension > 1, spanning `N'`.
    One,
    /// Points on faces of codimension > 2, spanning `N''`.
    Two,
}

impl Codim {
    fn k(self) -> usize {
        match self {
            Codim::One => 1,
            Codim::Two => 2,
        }
    }
}

/// Lattice points of a reflexive polytope whose minimal face has dimension
/// at most `d - k - 1`. The origin, the only interior point, never
/// qualifies.
pub fn codim_filtered_points(dstar: &LatticePolytope, codim: Codim) -> Result<Vec<Vec<i64>>> {
    dstar.require_reflexive()?;
    let d = dstar.dim();
    let k = codim.k();
    if k >= d {
        return Err(Error::UnsupportedDimension {
            op: "codimension filter",
            required: "k < d",
            dim: d,
        });
    }
    Ok(dstar
        .lattice_points()
        .iter()
        .filter(|p| p.minimal_face_dim < d - k)
        .map(|p| p.point.clone())
        .collect())
}

pub fn codim_filtered_span(dstar: &LatticePolytope, codim: Codim) -> Result<SublatticeSpan> {
    let pts = codim_filtered_points(dstar, codim)?;
    SublatticeSpan::from_i64(dstar.dim(), &pts)
}

/// `pi_1 = N / N'` of the crepant resolution; for `d >= 5` this is only a
/// candidate stringy fundamental group.
pub fn fundamental_group(dstar: &LatticePolytope) -> Result<FiniteAbelianGroup> {
    let d = dstar.dim();
    if d < 3 {
        return Err(Error::UnsupportedDimension {
            op: "fundamental group",
            required: "d >= 3",
            dim: d,
        });
    }
    let g = quotient_group(&codim_filtered_span(dstar, Codim::One)?);
    if d == 4 && !g.is_cyclic() {
        return Err(Error::Internal(format!(
            "fundamental group {g} of a 4-dimensional reflexive polytope is not cyclic"
        )));
    }
    Ok(g)
}

/// Whether [`fundamental_group`] in this dimension is a genuine fundamental
/// group (`d <= 4`) or the stringy candidate (`d >= 5`).
pub fn fundamental_group_label(d: usize) -> &'static str {
    if d >= 5 {
        "stringy fundamental group candidate"
    } else {
        "fundamental group"
    }
}

/// The same group through the exterior-power presentation: the cokernel of
/// `(+)_v Lambda^(d-1) M_v -> Lambda^(d-1) M`, where `v` runs over the
/// generators of `N'` and `M_v` is the orthogonal complement of `v`.
pub fn fundamental_group_via_exterior(dstar: &LatticePolytope) -> Result<FiniteAbelianGroup> {
    let d = dstar.dim();
    if d < 3 {
        return Err(Error::UnsupportedDimension {
            op: "fundamental group",
            required: "d >= 3",
            dim: d,
        });
    }
    let mut columns = Vec::new();
    for v in codim_filtered_points(dstar, Codim::One)? {
        let row = IntegerMatrix::from_rows(d, &[v])?;
        let m_v = kernel_basis(&row);
        debug_assert_eq!(m_v.cols(), d - 1);
        columns.push(wedge(&m_v.columns(), d));
    }
    let span = SublatticeSpan::new(d, columns)?;
    Ok(quotient_group(&span).torsion())
}

/// Invariant factors `c_1 | ... | c_d` of `N / N''`, ones kept in place.
pub fn codim2_invariants(dstar: &LatticePolytope) -> Result<Vec<BigUint>> {
    Ok(positional_invariants(&codim_filtered_span(
        dstar,
        Codim::Two,
    )?))
}

/// Brauer group of the crepant resolution, as the (isomorphic) dual of
/// `Lambda^2 N / (N ^ N'')`. Only `d = 4` is supported.
pub fn brauer_group(dstar: &LatticePolytope) -> Result<FiniteAbelianGroup> {
    let d = dstar.dim();
    if d != 4 {
        return Err(Error::UnsupportedDimension {
            op: "Brauer group",
            required: "d = 4",
            dim: d,
        });
    }
    let span = codim_filtered_span(dstar, Codim::Two)?;
    let g = wedge_square_quotient(d, &span)?;
    let c = positional_invariants(&span);
    let expected = FiniteAbelianGroup::from_cyclic_orders([c[2].clone()]);
    if !g.is_cyclic() || g != expected {
        return Err(Error::Internal(format!(
            "Brauer group {g} differs from Z/c_3 with c = {c:?}"
        )));
    }
    Ok(g.dual())
}

/// Brauer group of a smooth toric variety with the given rays:
/// `(+)_{i<j} Hom(Z/c_i, Q/Z)` for the elementary divisors `c_i` of
/// `N / sum Z e_i`. Free directions give infinite summands (free rank).
pub fn demeyer_ford_brauer(rays: &[Vec<i64>], d: usize) -> Result<FiniteAbelianGroup> {
    if d < 2 {
        return Err(Error::UnsupportedDimension {
            op: "toric Brauer group",
            required: "d >= 2",
            dim: d,
        });
    }
    if let Some(r) = rays.iter().find(|r| r.len() == d && !is_primitive(r)) {
        return Err(Error::NonPrimitiveRay(r.clone()));
    }
    let span = SublatticeSpan::from_i64(d, rays)?;
    let c = positional_invariants(&span);
    Ok(wedge_square_from_invariants(&c))
}

/// Orders `|A| * |B|` of the torsion in even and odd cohomology.
pub(crate) fn torsion_product_order(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> BigUint {
    a.order().unwrap_or_else(BigUint::one) * b.order().unwrap_or_else(BigUint::one)
}
