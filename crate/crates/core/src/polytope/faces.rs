use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

/// A proper nonempty face, described by its vertices and by the facets that
/// cut it out.
///
/// For a reflexive polytope the facets of `P` are, in the same sorted order,
/// the vertices of the polar dual. `active_facets` is therefore also the
/// vertex set of the dual face, of dimension `d - 1 - dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceDescriptor {
    pub dim: usize,
    pub vertex_indices: Vec<usize>,
    pub active_facets: Vec<usize>,
}

impl FaceDescriptor {
    pub fn dual_vertex_indices(&self) -> &[usize] {
        &self.active_facets
    }

    pub fn dual_dim(&self, ambient_dim: usize) -> usize {
        ambient_dim - 1 - self.dim
    }
}

#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<FaceDescriptor>,
    by_facets: HashMap<Vec<usize>, usize>,
    by_vertices: HashMap<Vec<usize>, usize>,
}

impl FaceLattice {
    /// `incidence[f]` is the set of vertices on facet `f`.
    pub(crate) fn build(dim: usize, num_vertices: usize, incidence: &[FixedBitSet]) -> Self {
        let as_key = |s: &FixedBitSet| s.ones().collect::<Vec<usize>>();

        // faces of each dimension as sorted vertex lists, top-down
        let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim];
        let mut current: Vec<FixedBitSet> = Vec::new();
        for f in incidence {
            if levels[dim - 1].insert(as_key(f)) {
                current.push(f.clone());
            }
        }
        for k in (0..dim - 1).rev() {
            let mut next: Vec<FixedBitSet> = Vec::new();
            for face in &current {
                // facets of `face` are its maximal proper nonempty
                // intersections with facets of the polytope
                let mut cands: Vec<FixedBitSet> = Vec::new();
                for f in incidence {
                    let mut meet = face.clone();
                    meet.intersect_with(f);
                    if meet.count_ones(..) == 0 || meet == *face || cands.contains(&meet) {
                        continue;
                    }
                    cands.push(meet);
                }
                for (i, c) in cands.iter().enumerate() {
                    let maximal = cands
                        .iter()
                        .enumerate()
                        .all(|(j, o)| i == j || !c.is_subset(o));
                    if maximal && levels[k].insert(as_key(c)) {
                        next.push(c.clone());
                    }
                }
            }
            current = next;
        }

        let mut faces = Vec::new();
        for (k, level) in levels.into_iter().enumerate() {
            for vertex_indices in level {
                let active_facets = incidence
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| vertex_indices.iter().all(|&v| f.contains(v)))
                    .map(|(i, _)| i)
                    .collect();
                faces.push(FaceDescriptor {
                    dim: k,
                    vertex_indices,
                    active_facets,
                });
            }
        }
        debug_assert_eq!(
            faces.iter().filter(|f| f.dim == 0).count(),
            if dim == 0 { 0 } else { num_vertices }
        );
        let by_facets = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.active_facets.clone(), i))
            .collect();
        let by_vertices = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertex_indices.clone(), i))
            .collect();
        Self {
            faces,
            by_facets,
            by_vertices,
        }
    }

    /// All proper faces, ordered by dimension and then by vertex list.
    pub fn faces(&self) -> &[FaceDescriptor] {
        &self.faces
    }

    pub fn get(&self, index: usize) -> &FaceDescriptor {
        &self.faces[index]
    }

    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = (usize, &FaceDescriptor)> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dim == k)
    }

    /// Face counts `f_0, ..., f_(d-1)`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.iter().map(|f| f.dim + 1).max().unwrap_or(0);
        let mut out = vec![0; top];
        for f in &self.faces {
            out[f.dim] += 1;
        }
        out
    }

    pub fn index_by_facets(&self, active_facets: &[usize]) -> Option<usize> {
        self.by_facets.get(active_facets).copied()
    }

    pub fn index_by_vertices(&self, vertex_indices: &[usize]) -> Option<usize> {
        self.by_vertices.get(vertex_indices).copied()
    }
}
