use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use super::{brauer_group, fundamental_group, stringy_hodge, torsion_product_order};
use crate::algebra::FiniteAbelianGroup;
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

pub const EXTENSION_NOTE: &str =
    "Tors K0 and Tors K1 are given by order only; the extension is undetermined";

/// Lattice point and vertex counts of a dual pair, as in the columns
/// `P_Delta V_Delta | P_Dstar V_Dstar`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointCounts {
    pub p_delta: usize,
    pub v_delta: usize,
    pub p_dual: usize,
    pub v_dual: usize,
}

/// Everything computed for one hypersurface family. Field order is the JSON
/// key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionReport {
    pub pi1: FiniteAbelianGroup,
    pub brauer: FiniteAbelianGroup,
    /// Torsion of `H^2`, dual to `pi1`.
    #[serde(rename = "A")]
    pub a: FiniteAbelianGroup,
    /// Torsion of `H^3`, the Brauer group.
    #[serde(rename = "B")]
    pub b: FiniteAbelianGroup,
    pub h11: i64,
    pub h21: i64,
    pub chi: i64,
    pub counts: PointCounts,
    #[serde(rename = "tors_k0_order", serialize_with = "big_as_number")]
    pub tors_even_order: BigUint,
    #[serde(rename = "tors_k1_order", serialize_with = "big_as_number")]
    pub tors_odd_order: BigUint,
    pub notes: Vec<String>,
}

fn big_as_number<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

impl TorsionReport {
    pub fn has_nontrivial_torsion(&self) -> bool {
        !self.a.is_trivial() || !self.b.is_trivial()
    }
}

/// Analyzes the hypersurface in the toric variety of the reflexive
/// 4-polytope `delta`.
pub fn analyze(delta: &LatticePolytope) -> Result<TorsionReport> {
    check_dim(delta)?;
    let dstar = delta.polar_dual()?;
    analyze_pair(delta, &dstar)
}

/// Same as [`analyze`], starting from the polytope in `N` whose lattice
/// points generate the fan.
pub fn analyze_dual(dstar: &LatticePolytope) -> Result<TorsionReport> {
    check_dim(dstar)?;
    let delta = dstar.polar_dual()?;
    analyze_pair(&delta, dstar)
}

fn check_dim(p: &LatticePolytope) -> Result<()> {
    if p.dim() != 4 {
        return Err(Error::UnsupportedDimension {
            op: "torsion report",
            required: "d = 4",
            dim: p.dim(),
        });
    }
    Ok(())
}

fn analyze_pair(delta: &LatticePolytope, dstar: &LatticePolytope) -> Result<TorsionReport> {
    let pi1 = fundamental_group(dstar)?;
    let brauer = brauer_group(dstar)?;
    let (h11, h21) = stringy_hodge(delta, dstar)?;
    let a = pi1.dual();
    let b = brauer.clone();
    let order = torsion_product_order(&a, &b);
    Ok(TorsionReport {
        pi1,
        brauer,
        a,
        b,
        h11,
        h21,
        chi: 2 * (h11 - h21),
        counts: PointCounts {
            p_delta: delta.num_lattice_points(),
            v_delta: delta.num_vertices(),
            p_dual: dstar.num_lattice_points(),
            v_dual: dstar.num_vertices(),
        },
        tors_even_order: order.clone(),
        tors_odd_order: order,
        notes: vec![EXTENSION_NOTE.to_string()],
    })
}
