//! Small families of reflexive polytopes for checks beyond the table:
//! simplices, cross-polytopes, polygons and their products.

use itertools::Itertools;

use super::table::table16;
use crate::error::Result;
use crate::polytope::LatticePolytope;

/// `conv(e_1, ..., e_d, -e_1 - ... - e_d)`.
pub fn standard_simplex(d: usize) -> LatticePolytope {
    let mut v: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    v.push(vec![-1; d]);
    LatticePolytope::new(v).expect("simplex is full-dimensional")
}

/// `conv(+-e_1, ..., +-e_d)`.
pub fn cross_polytope(d: usize) -> LatticePolytope {
    let v = (0..d)
        .flat_map(|i| [-1, 1].map(|s| (0..d).map(|j| if i == j { s } else { 0 }).collect()))
        .collect();
    LatticePolytope::new(v).expect("cross-polytope is full-dimensional")
}

/// Reflexive polygons with vertices among the nonzero points of
/// `[-1, 1]^2`, together with their polar duals, without repetition (in the
/// fixed basis). Sorted by vertex count, then by vertex list.
pub fn reflexive_polygons() -> Vec<LatticePolytope> {
    let ring: Vec<Vec<i64>> = (-1..=1)
        .cartesian_product(-1..=1)
        .filter(|&(x, y)| (x, y) != (0, 0))
        .map(|(x, y)| vec![x, y])
        .collect();
    let mut found: Vec<LatticePolytope> = Vec::new();
    for mask in 1u32..(1 << ring.len()) {
        let pts: Vec<Vec<i64>> = (0..ring.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ring[i].clone())
            .collect();
        if pts.len() < 3 {
            continue;
        }
        let Ok(p) = LatticePolytope::new(pts) else {
            continue;
        };
        if !p.origin_is_interior() || !p.is_reflexive() {
            continue;
        }
        let dual = p.polar_dual().expect("reflexive");
        for q in [p, dual] {
            if !found.contains(&q) {
                found.push(q);
            }
        }
    }
    found.sort_by(|a, b| (a.num_vertices(), a.vertices()).cmp(&(b.num_vertices(), b.vertices())));
    found
}

/// Seven reflexive polygons: the triangle of the projective plane and its
/// dual, the square and the diamond, a pentagon and its dual, and the
/// self-dual hexagon.
pub fn representative_polygons() -> Vec<LatticePolytope> {
    let triangle = vec![vec![1, 0], vec![0, 1], vec![-1, -1]];
    let square = vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]];
    let pentagon = vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![-1, 0], vec![0, -1]];
    let hexagon = vec![
        vec![1, 0],
        vec![0, 1],
        vec![-1, 1],
        vec![-1, 0],
        vec![0, -1],
        vec![1, -1],
    ];
    let mut out = Vec::new();
    for v in [triangle, square, pentagon] {
        let p = LatticePolytope::new(v).expect("polygon is full-dimensional");
        let dual = p.polar_dual().expect("reflexive");
        out.push(p);
        out.push(dual);
    }
    out.push(LatticePolytope::new(hexagon).expect("polygon is full-dimensional"));
    out
}

/// Reflexive 3-polytopes: the simplex, the octahedron, and the products of
/// the representative polygons with a segment, each with its dual.
pub fn reflexive_3d() -> Vec<LatticePolytope> {
    let segment = cross_polytope(1);
    let mut out = vec![standard_simplex(3), cross_polytope(3)];
    for p in representative_polygons() {
        out.push(
            p.product(&segment)
                .expect("product of full-dimensional polytopes"),
        );
    }
    let duals: Vec<LatticePolytope> = out
        .iter()
        .map(|p| p.polar_dual().expect("reflexive"))
        .collect();
    for q in duals {
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Reflexive 4-polytopes built as products `P x Q` of the representative
/// polygons, plus the simplex and octahedron times a segment.
pub fn product_4d() -> Vec<LatticePolytope> {
    let polys = representative_polygons();
    let mut out: Vec<LatticePolytope> = Vec::new();
    for (i, j) in (0..polys.len()).tuple_combinations::<(usize, usize)>() {
        out.push(polys[i].product(&polys[j]).expect("product"));
    }
    let segment = cross_polytope(1);
    for p in [standard_simplex(3), cross_polytope(3)] {
        out.push(p.product(&segment).expect("product"));
    }
    out
}

/// The standard simplex in `N` and its polar dual, the pair of the quintic.
pub fn quintic_pair() -> (LatticePolytope, LatticePolytope) {
    let dstar = standard_simplex(4);
    let delta = dstar.polar_dual().expect("reflexive");
    (delta, dstar)
}

/// Reflexive 4-polytopes for corpus-wide checks: both sides of the sixteen
/// table pairs, the quintic pair and [`product_4d`].
pub fn corpus_4d() -> Result<Vec<LatticePolytope>> {
    let mut out = Vec::new();
    for pair in table16()? {
        out.push(pair.dstar);
        out.push(pair.delta);
    }
    let (delta, dstar) = quintic_pair();
    out.push(dstar);
    out.push(delta);
    out.extend(product_4d());
    Ok(out)
}
