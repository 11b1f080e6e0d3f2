//! Named structure choices for rank-two groups.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactfield::{unit_vector, Scalar, Subspace};
use crate::lagrangian::{gk_pair, samelson, GKPair};
use crate::liealg::{CartanFrame, Conjugation, LieAlgebra};

/// The two κ-isotropic lines of a two-dimensional Cartan subalgebra.
///
/// Writes `h = span(H1, H2)` and solves `κ(H1 + cH2, H1 + cH2) = 0` for `c`;
/// the second line is the conjugate of the first.
pub fn isotropic_lines(alg: &LieAlgebra, frame: &CartanFrame) -> Result<[Subspace; 2]> {
    if frame.rank() != 2 {
        return Err(Error::InvalidSamelson(format!("presets need rank 2, found rank {}", frame.rank())));
    }
    let dim = alg.dim();
    let (h1, h2) = (unit_vector(dim, frame.cartan_indices[0]), unit_vector(dim, frame.cartan_indices[1]));
    let g11 = alg.kappa(&h1, &h1);
    let g12 = alg.kappa(&h1, &h2);
    let g22 = alg.kappa(&h2, &h2);
    let rational = |x: &Scalar| x.as_rational().cloned().ok_or_else(|| Error::InvalidSamelson("Cartan Gram is not rational".into()));
    let (a, b, c) = (rational(&g22)?, rational(&g12)?, rational(&g11)?);
    let disc = &b * &b - &a * &c;
    let root = Scalar::sqrt_rational(&disc, alg.field_d())
        .ok_or_else(|| Error::InvalidSamelson(format!("isotropic lines need √({disc}), outside Q(i)[√{}]", alg.field_d())))?;
    let line = |sign: i64| -> Result<Subspace> {
        // a·c² + 2b·c + g11 = 0  ⇒  c = (−b ± √disc)/a
        let coeff =
            (&(-Scalar::from_rational(b.clone())) + &(&Scalar::from_int(sign) * &root)).checked_div(&Scalar::from_rational(a.clone()))?;
        let v: Vec<Scalar> = h1.iter().zip(&h2).map(|(x, y)| x + &(&coeff * y)).collect();
        Ok(Subspace::span(dim, vec![v]))
    };
    Ok([line(1)?, line(-1)?])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// `l_+ = l_−`.
    Canonical,
    /// Same Borel, `t_{1,0}` of `l_−` conjugate to that of `l_+`.
    InducedPair1,
    /// As `InducedPair1` with the roles of the two lines swapped.
    InducedPair2,
    /// Same `t_{1,0}`, opposite Borel on the minus side.
    OppositeBorel,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Canonical, Preset::InducedPair1, Preset::InducedPair2, Preset::OppositeBorel];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Canonical => "canonical",
            Preset::InducedPair1 => "induced-pair-1",
            Preset::InducedPair2 => "induced-pair-2",
            Preset::OppositeBorel => "opposite-borel",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::InvalidSamelson(format!("unknown preset `{s}`")))
    }
}

/// Builds the pair named by `preset`.
pub fn preset_pair(alg: &LieAlgebra, frame: &CartanFrame, conj: &Conjugation, preset: Preset) -> Result<GKPair> {
    let [w1, w2] = isotropic_lines(alg, frame)?;
    let opposite = CartanFrame::new(alg, frame.system.opposite())?;
    let (plus, minus) = match preset {
        Preset::Canonical => ((frame, &w1), (frame, &w1)),
        Preset::InducedPair1 => ((frame, &w1), (frame, &w2)),
        Preset::InducedPair2 => ((frame, &w2), (frame, &w1)),
        Preset::OppositeBorel => ((frame, &w1), (&opposite, &w1)),
    };
    let l_plus = samelson(alg, plus.0, conj, plus.1)?;
    let l_minus = samelson(alg, minus.0, conj, minus.1)?;
    gk_pair(alg, conj, &l_plus, &l_minus)
}
