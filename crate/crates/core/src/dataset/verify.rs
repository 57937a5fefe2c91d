use serde::Serialize;

use super::table::MirrorPair;
use crate::algebra::{quotient_group, wedge_square_quotient, FiniteAbelianGroup};
use crate::error::{Error, Result};
use crate::invariants::{codim_filtered_span, Codim};
use crate::polytope::LatticePolytope;

/// Both sides of the two isomorphisms
/// `Lambda^2 M / (M ^ M''_Delta) = N / N'_Dstar` and
/// `Lambda^2 N / (N ^ N''_Dstar) = M / M'_Delta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombDualCheck {
    pub wedge_delta: FiniteAbelianGroup,
    pub quotient_dual: FiniteAbelianGroup,
    pub wedge_dual: FiniteAbelianGroup,
    pub quotient_delta: FiniteAbelianGroup,
}

impl CombDualCheck {
    pub fn first_holds(&self) -> bool {
        self.wedge_delta == self.quotient_dual
    }

    pub fn second_holds(&self) -> bool {
        self.wedge_dual == self.quotient_delta
    }

    pub fn holds(&self) -> bool {
        self.first_holds() && self.second_holds()
    }
}

/// Computes the four groups for a reflexive 4-polytope and its dual.
pub fn verify_comb_dual(delta: &LatticePolytope) -> Result<CombDualCheck> {
    if delta.dim() != 4 {
        return Err(Error::UnsupportedDimension {
            op: "combinatorial duality check",
            required: "d = 4",
            dim: delta.dim(),
        });
    }
    let dstar = delta.polar_dual()?;
    Ok(CombDualCheck {
        wedge_delta: wedge_square_quotient(4, &codim_filtered_span(delta, Codim::Two)?)?,
        quotient_dual: quotient_group(&codim_filtered_span(&dstar, Codim::One)?),
        wedge_dual: wedge_square_quotient(4, &codim_filtered_span(&dstar, Codim::Two)?)?,
        quotient_delta: quotient_group(&codim_filtered_span(delta, Codim::One)?),
    })
}

/// `A(X) = B(X*)` and `B(X) = A(X*)` as abstract groups.
pub fn verify_tor_dual(pair: &MirrorPair) -> bool {
    pair.report.a == pair.mirror_report.b && pair.report.b == pair.mirror_report.a
}
