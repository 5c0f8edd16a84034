//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! machine-word fast path. The Smith form is the workhorse: Picard group
//! structure, lattice membership and the minor-based oracle all go through it.

mod det;
mod lattice;
mod matrix;
mod smith;

pub use det::det_fraction_free;
pub use lattice::{lattice_contains, solve_rational, RationalSolution};
pub use matrix::IntMatrix;
pub use smith::{invariant_factors_by_minors, smith_normal_form, SmithForm, DEFAULT_MINOR_LIMIT};
