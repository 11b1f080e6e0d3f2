//! `Cl(g, κ)` over a non-orthogonal basis: products, quantization, the star
//! map, `Θ`, `d^Cl`, `τ′` and the spinor action of the double.

mod algebra;
mod blades;
mod cache;

pub use algebra::{content_digest, CliffordAlgebra, MAX_GENERATORS};
pub use blades::{grade, indices, position, wedge_sign, CliffordElement, Form, Mask, Multivector};

use crate::error::{Error, Result};
use crate::exactfield::{Matrix, Scalar};

/// Largest Clifford dimension accepted by [`dcl_cohomology`].
pub const COHOMOLOGY_BOUND: usize = 256;

/// Dimensions of `ker d^Cl / im d^Cl` split by parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DclCohomology {
    pub even: usize,
    pub odd: usize,
    pub rank_even: usize,
    pub rank_odd: usize,
}

impl DclCohomology {
    pub fn total(&self) -> usize {
        self.even + self.odd
    }
}

pub fn dcl_cohomology(cl: &CliffordAlgebra) -> Result<DclCohomology> {
    if cl.dim() > COHOMOLOGY_BOUND {
        return Err(Error::SizeBound(format!("Cl dimension {} exceeds {COHOMOLOGY_BOUND}", cl.dim())));
    }
    let columns = cl.operator_columns(|u| cl.d_cl(u));
    let rank_of = |odd: bool| -> usize {
        let rows: Vec<Vec<Scalar>> =
            columns.iter().enumerate().filter(|(m, _)| (grade(*m as Mask) % 2 == 1) == odd).map(|(_, c)| c.clone()).collect();
        Matrix::from_rows_with_cols(rows, cl.dim()).rank()
    };
    let rank_even = rank_of(false);
    let rank_odd = rank_of(true);
    let half = cl.dim() / 2;
    Ok(DclCohomology { even: half - rank_even - rank_odd, odd: half - rank_odd - rank_even, rank_even, rank_odd })
}
