use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

/// `(h11, h21)` of a Calabi-Yau threefold hypersurface for a reflexive
/// dual pair `(delta, dstar)` of dimension 4.
///
/// `h11 = l(Dstar) - 5 - sum_{facets} l*(f) + sum_{2-faces} l*(f) l*(f^)`,
/// with the dual face `f^` of `Delta`; `h21` swaps the roles.
pub fn stringy_hodge(delta: &LatticePolytope, dstar: &LatticePolytope) -> Result<(i64, i64)> {
    let d = delta.dim();
    if d != 4 || dstar.dim() != 4 {
        return Err(Error::UnsupportedDimension {
            op: "Hodge numbers",
            required: "d = 4",
            dim: if d != 4 { d } else { dstar.dim() },
        });
    }
    if !delta.is_polar_dual_of(dstar) || !dstar.is_polar_dual_of(delta) {
        return Err(Error::NotDualPair);
    }
    let h11 = one_side(dstar, delta)?;
    let h21 = one_side(delta, dstar)?;
    if h11 < 1 || h21 < 1 {
        return Err(Error::Internal(format!(
            "Hodge numbers ({h11}, {h21}) out of range"
        )));
    }
    Ok((h11, h21))
}

/// The formula evaluated on the faces of `p`, with `q` its polar dual.
fn one_side(p: &LatticePolytope, q: &LatticePolytope) -> Result<i64> {
    let d = p.dim();
    let faces = p.face_lattice();
    let q_faces = q.face_lattice();
    let mut h = p.num_lattice_points() as i64 - d as i64 - 1;
    for (i, _) in faces.faces_of_dim(d - 1) {
        h -= p.interior_point_count(i) as i64;
    }
    for (i, face) in faces.faces_of_dim(d - 2) {
        let inner = p.interior_point_count(i) as i64;
        if inner == 0 {
            continue;
        }
        let j = q_faces
            .index_by_vertices(face.dual_vertex_indices())
            .ok_or_else(|| Error::Internal("dual face missing from face lattice".into()))?;
        h += inner * q.interior_point_count(j) as i64;
    }
    Ok(h)
}
