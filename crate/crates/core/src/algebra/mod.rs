//! Exact integer linear algebra: Smith and Hermite normal forms, quotient
//! groups of sublattices, and exterior-power quotients.

mod group;
mod lattice;
mod matrix;
mod snf;

pub use group::FiniteAbelianGroup;
pub(crate) use lattice::is_primitive;
pub use lattice::{
    kernel_basis, lattice_basis, positional_invariants, quotient_group, solve_in_basis, wedge,
    wedge_square_from_invariants, wedge_square_quotient, SublatticeSpan,
};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithDecomposition};
