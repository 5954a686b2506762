//! Graded roots, their `ℤ[U]`-modules and tower decompositions.
//!
//! Weights are stored undoubled: a tower `T^{2n}_{2m}` is the pair `(m, n)`.

mod iso;
mod render;
mod root;
mod sweep;
mod tower;

pub use iso::{roots_isomorphic, CanonicalCoder};
pub use render::{to_ascii, to_dot};
pub use root::{
    module_from_root, module_of_set, root_from_weight, try_root_from_weight, GradedRoot, RootError,
    TieBreak, Vertex,
};
pub use sweep::{conjecture_sweep, SweepReport};
pub use tower::{ModuleError, TowerModule};
