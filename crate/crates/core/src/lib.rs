//! Exact verification engine for Lie-algebraic generalized Kähler structures
//! on compact Lie groups.
//!
//! Everything is evaluated at the Lie-algebra level over `Q(i)[√d]`: the
//! double `g ⊕ g`, the Clifford algebra `Cl(g, κ)`, pure spinors, the Hodge
//! grid of `Cl(g, κ)` and the invariant Lie algebra cohomology.

pub mod clifford;
pub mod cohomology;
pub mod error;
pub mod exactfield;
pub mod genkahler;
pub mod lagrangian;
pub mod liealg;
pub mod presets;

pub use error::{Error, Result};
pub use exactfield::{Matrix, Scalar, Subspace, Vector};
