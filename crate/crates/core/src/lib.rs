//! Lattice cohomology of curve singularities.
//!
//! One branch: numerical semigroups, the weight function `w₀`, the graded
//! root and its `ℤ[U]`-module, and the inverse map recovering the semigroup
//! from the module. Several branches: the Hilbert function of the local
//! algebra of a parametrized germ, the cubical weight complex and its
//! cohomology.

pub mod fixtures;
pub mod formats;
pub mod graded;
pub mod multibranch;
pub mod reconstruct;
pub mod semigroup;
pub mod weight1d;
