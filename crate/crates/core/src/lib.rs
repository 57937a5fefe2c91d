//! Torsion invariants of Calabi-Yau hypersurfaces in Gorenstein toric Fano
//! varieties, computed from reflexive lattice polytopes.
//!
//! The pipeline is: exact integer algebra ([`algebra`]) underneath lattice
//! polytopes with facets, faces and classified lattice points
//! ([`polytope`]), on top of which [`invariants`] computes the fundamental
//! group, Brauer group and stringy Hodge numbers. [`dataset`] holds the
//! sixteen exceptional polytope pairs and the bulk scanner, and [`io`] the
//! text formats.

pub mod algebra;
pub mod dataset;
pub mod error;
pub mod invariants;
pub mod io;
pub mod polytope;

pub use algebra::{FiniteAbelianGroup, IntegerMatrix, SmithDecomposition, SublatticeSpan};
pub use error::{Error, Result};
pub use invariants::{analyze, analyze_dual, TorsionReport};
pub use polytope::{ClassifiedPoint, FaceDescriptor, FacetInequality, LatticePolytope};
