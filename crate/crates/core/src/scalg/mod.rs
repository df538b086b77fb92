//! Finite-dimensional algebras given by rational structure constants.
//!
//! An [`SCAlgebra`] is a complete `dim x dim` table of product vectors for a
//! bilinear product on coordinate space. On top of it sit the generalized
//! Jordan axiom checks, annihilators, ideals and quotients, Jordan algebras
//! and their bimodules, and the split-extension construction.

mod algebra;
mod jordan;
mod subspace;

pub use algebra::{CheckMode, RightUnits, SCAlgebra, ScError};
pub use jordan::{
    induced_bimodule, jordan_algebra_reports, split_extension, BimoduleSC, InducedBimodule,
    JordanSC,
};
pub use subspace::{solve_affine, Subspace};
