//! Pure spinors of generalized Kähler pairs, the canonical-bundle identities
//! for `d^Cl`, the degree of the canonical bundle, the Hodge grid of
//! `Cl(g, κ)` and the restriction to a maximal torus.

mod canonical;
mod degree;
mod hodge;
mod spinor;
mod torus;

pub use canonical::{canonical_connection_eigenvalue, verify_dcl_spinor, DclSpinorReport, IdentityCheck};
pub use degree::{degree_canonical, rho_10, DegreeReport, MetricSide};
pub use hodge::{graded_dcl, hodge_grid, GradedDclReport, HodgeCell, HodgeGrid, TauJ, DCL_SHIFTS};
pub use spinor::{
    annihilator_of, build_pure_spinor, default_generators, expected_annihilator, expected_type_parity, pure_spinor_from_generators,
    spinor_spaces, type_of, PureSpinor, Side,
};
pub use torus::torus_restriction_check;
