//! Full-dimensional lattice polytopes in `Z^d`: facets, polar duality,
//! reflexivity, the face lattice and lattice points classified by their
//! minimal face.

mod faces;
mod hull;

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

pub use faces::{FaceDescriptor, FaceLattice};
pub(crate) use hull::dot;

use crate::error::{Error, Result};

/// Supporting inequality `<x, normal> >= offset`; the facet is where
/// equality holds. `normal` is primitive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetInequality {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl FacetInequality {
    /// `<x, normal> - offset`, nonnegative on the polytope.
    pub fn slack(&self, x: &[i64]) -> Result<i128> {
        Ok(dot(x, &self.normal)? - self.offset as i128)
    }
}

/// A lattice point of a polytope tagged with the dimension of the smallest
/// face containing it (`dim` of the polytope for interior points).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedPoint {
    pub point: Vec<i64>,
    pub minimal_face_dim: usize,
    /// Index into the face lattice; `None` for interior points.
    pub face: Option<usize>,
}

#[derive(Clone, Debug)]
struct PointTable {
    points: Vec<ClassifiedPoint>,
    per_face: Vec<usize>,
}

/// Convex hull of finitely many points of `Z^d`, stored by its sorted,
/// irredundant vertex list together with its facets.
///
/// The face lattice and lattice-point table are computed on first use and
/// cached in the value.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<FacetInequality>,
    faces: OnceLock<FaceLattice>,
    points: OnceLock<PointTable>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Convex hull of `points`; non-vertices and duplicates are dropped.
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        Self::hull_of(points).map(|(p, _)| p)
    }

    /// Like [`LatticePolytope::new`], also returning how many input points
    /// were dropped as duplicates or non-vertices.
    pub fn hull_of(points: Vec<Vec<i64>>) -> Result<(Self, usize)> {
        let input_len = points.len();
        let dim = points.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(Error::InvalidInput(
                "polytope needs at least one coordinate".into(),
            ));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::InvalidInput(format!(
                "point of length {} in dimension {dim}",
                p.len()
            )));
        }
        let mut points = points;
        points.sort();
        points.dedup();
        let rank = hull::affine_rank(&points, dim);
        if rank != dim {
            return Err(Error::NotFullDimensional { dim, rank });
        }
        let facets = hull::facets(&points, dim)?;
        let mut vertices = Vec::with_capacity(points.len());
        for p in points {
            let mut tight: Vec<&[i64]> = Vec::new();
            for f in &facets {
                if f.slack(&p)? == 0 {
                    tight.push(&f.normal);
                }
            }
            if tight.len() >= dim && hull::linear_rank(&tight, dim) == dim {
                vertices.push(p);
            }
        }
        let dropped = input_len - vertices.len();
        Ok((
            Self {
                dim,
                vertices,
                facets,
                faces: OnceLock::new(),
                points: OnceLock::new(),
            },
            dropped,
        ))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Facets sorted lexicographically by normal.
    pub fn facets(&self) -> &[FacetInequality] {
        &self.facets
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| f.slack(x).is_ok_and(|s| s >= 0))
    }

    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset < 0)
    }

    /// All facets at lattice distance one from the origin. Normals are
    /// primitive, so this is equivalent to the polar dual being a lattice
    /// polytope.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset == -1)
    }

    pub(crate) fn require_reflexive(&self) -> Result<()> {
        if self.is_reflexive() {
            Ok(())
        } else {
            Err(Error::NotReflexive)
        }
    }

    /// `{y : <x, y> >= -1 for all x in P}`, which must be a lattice polytope.
    pub fn polar_dual(&self) -> Result<Self> {
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        self.require_reflexive()?;
        Self::new(self.facets.iter().map(|f| f.normal.clone()).collect())
    }

    /// Whether `other` is exactly the polar dual of `self` in the same
    /// basis.
    pub fn is_polar_dual_of(&self, other: &Self) -> bool {
        self.dim == other.dim
            && other.is_reflexive()
            && other.facets.len() == self.vertices.len()
            && other
                .facets
                .iter()
                .zip(&self.vertices)
                .all(|(f, v)| f.normal == *v)
    }

    /// Cartesian product `P x Q`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut verts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                verts.push(a.iter().chain(b).copied().collect());
            }
        }
        Self::new(verts)
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.faces.get_or_init(|| {
            let incidence: Vec<FixedBitSet> = self
                .facets
                .iter()
                .map(|f| {
                    let mut s = FixedBitSet::with_capacity(self.vertices.len());
                    for (i, v) in self.vertices.iter().enumerate() {
                        if f.slack(v).is_ok_and(|x| x == 0) {
                            s.insert(i);
                        }
                    }
                    s
                })
                .collect();
            FaceLattice::build(self.dim, self.vertices.len(), &incidence)
        })
    }

    fn point_table(&self) -> &PointTable {
        self.points.get_or_init(|| {
            let lattice = self.face_lattice();
            let d = self.dim;
            let lo: Vec<i64> = (0..d)
                .map(|i| self.vertices.iter().map(|v| v[i]).min().expect("nonempty"))
                .collect();
            let hi: Vec<i64> = (0..d)
                .map(|i| self.vertices.iter().map(|v| v[i]).max().expect("nonempty"))
                .collect();
            let mut per_face = vec![0; lattice.faces().len()];
            let mut points = Vec::new();
            let mut cur = lo.clone();
            let mut tight = Vec::new();
            'scan: loop {
                tight.clear();
                let mut inside = true;
                for (i, f) in self.facets.iter().enumerate() {
                    // overflow here panics rather than wrapping
                    match f.slack(&cur).expect("bounded by vertex products") {
                        s if s < 0 => {
                            inside = false;
                            break;
                        }
                        0 => tight.push(i),
                        _ => {}
                    }
                }
                if inside {
                    let face = if tight.is_empty() {
                        None
                    } else {
                        Some(
                            lattice
                                .index_by_facets(&tight)
                                .expect("tight facet set of a boundary point is a face"),
                        )
                    };
                    let minimal_face_dim = face.map_or(d, |i| lattice.get(i).dim);
                    if let Some(i) = face {
                        per_face[i] += 1;
                    }
                    points.push(ClassifiedPoint {
                        point: cur.clone(),
                        minimal_face_dim,
                        face,
                    });
                }
                // odometer, last coordinate fastest: lexicographic order
                let mut k = d;
                loop {
                    if k == 0 {
                        break 'scan;
                    }
                    k -= 1;
                    if cur[k] < hi[k] {
                        cur[k] += 1;
                        break;
                    }
                    cur[k] = lo[k];
                }
            }
            PointTable { points, per_face }
        })
    }

    /// Every lattice point, in lexicographic order, with its minimal face.
    pub fn lattice_points(&self) -> &[ClassifiedPoint] {
        &self.point_table().points
    }

    pub fn num_lattice_points(&self) -> usize {
        self.point_table().points.len()
    }

    /// Lattice points in the relative interior of a face (`l*` of the face).
    pub fn interior_point_count(&self, face_index: usize) -> usize {
        self.point_table().per_face[face_index]
    }

    /// Lattice points in the interior of the polytope itself.
    pub fn interior_lattice_points(&self) -> usize {
        self.lattice_points()
            .iter()
            .filter(|p| p.face.is_none())
            .count()
    }

    /// Number of lattice points grouped by the dimension of their minimal face.
    pub fn points_by_face_dim(&self) -> HashMap<usize, usize> {
        let mut out = HashMap::new();
        for p in self.lattice_points() {
            *out.entry(p.minimal_face_dim).or_insert(0) += 1;
        }
        out
    }
}
