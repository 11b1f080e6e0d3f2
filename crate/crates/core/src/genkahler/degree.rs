use std::fmt;

use crate::clifford::{Form, Mask};
use crate::error::{Error, Result};
use crate::exactfield::{axpy, sub_vectors, zero_vector, Matrix, Scalar, Vector};
use crate::lagrangian::GKPair;

/// Which Hermitian metric `ω_±` the degree is taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricSide {
    Plus,
    Minus,
}

impl fmt::Display for MetricSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricSide::Plus => "plus-metric",
            MetricSide::Minus => "minus-metric",
        })
    }
}

/// Values at the identity of the forms entering `deg_±(U_+)`.
///
/// `curvature`, `curvature_top` and `omega_top` are written in the basis dual
/// to `(b_1, b̄_1, …, b_n, b̄_n)`, so the volume form `∧_i b_i^* ∧ b̄_i^*` is the
/// top monomial.
#[derive(Clone, Debug)]
pub struct DegreeReport {
    pub side: MetricSide,
    /// `φ_+ = κ(·, ρ^{1,0}_+)` in the basis dual to the basis of `g`.
    pub phi_plus: Form,
    /// `φ_− = −κ(·, ρ^{1,0}_−)`.
    pub phi_minus: Form,
    pub curvature: Form,
    /// `F ∧ ω^{n−1}`.
    pub curvature_top: Form,
    /// `ω^n`.
    pub omega_top: Form,
    pub kappa_rho_rho: Scalar,
    /// `(i/2) coeff(F ∧ ω^{n−1}) / coeff(ω^n)` as computed, `−2κ(ρ, ρ)/n`.
    pub wedge_ratio: Scalar,
    /// `n · coeff(F ∧ ω^{n−1})`, the numerator with the proof's `n!`.
    pub proof_numerator: Scalar,
    pub degree: Scalar,
    /// `proof_numerator = −(2·n!·i^{n−1}/2^{n−1}) κ(ρ, ρ)`.
    pub numerator_matches: bool,
    /// `coeff(ω^n) = n!·i^n/2^n`.
    pub denominator_matches: bool,
}

impl DegreeReport {
    /// `degree = −2κ(ρ, ρ)` with both displayed coefficients reproduced.
    pub fn holds(&self) -> bool {
        self.numerator_matches && self.denominator_matches && self.degree == &Scalar::from_int(-2) * &self.kappa_rho_rho
    }
}

/// `ρ^{1,0}` of the side: the `t_{1,0}` component of `ρ ∈ t_{1,0} ⊕ t_{0,1}`.
pub fn rho_10(pair: &GKPair, side: MetricSide) -> Result<Vector> {
    let (l, rho) = match side {
        MetricSide::Plus => (&pair.l_plus, &pair.rho_plus),
        MetricSide::Minus => (&pair.l_minus, &pair.rho_minus),
    };
    let dim = pair.alg.dim();
    let t10 = l.t10.basis_vectors();
    let mut basis = t10.clone();
    basis.extend(l.t01(&pair.conj).basis_vectors());
    let coords = Matrix::from_cols(basis, dim).solve(rho)?.ok_or(Error::Singular)?;
    let mut out = zero_vector(dim);
    for (c, v) in coords.iter().zip(&t10) {
        axpy(&mut out, c, v);
    }
    Ok(out)
}

fn factorial(n: usize) -> Scalar {
    (1..=n as i64).fold(Scalar::one(), |acc, k| &acc * &Scalar::from_int(k))
}

/// `deg_±(U_+)` at the identity.
///
/// `φ − φ̄ = ±κ(·, ρ^{1,0} − conj ρ^{1,0})`; the right-invariant differential is
/// `(dξ)(a, b) = −ξ([a, b])` and the left-invariant one `(dξ)(a, b) = ξ([a, b])`,
/// so on both sides `F(a, b) = −κ([a, b], ρ^{1,0} − conj ρ^{1,0})`.
pub fn degree_canonical(pair: &GKPair, side: MetricSide) -> Result<DegreeReport> {
    let alg = &pair.alg;
    let n = pair.n();
    let (dual, rho) = match side {
        MetricSide::Plus => (&pair.dual_plus, &pair.rho_plus),
        MetricSide::Minus => (&pair.dual_minus, &pair.rho_minus),
    };
    let rho10_plus = rho_10(pair, MetricSide::Plus)?;
    let rho10_minus = rho_10(pair, MetricSide::Minus)?;
    let phi_plus = Form::from_vector(&alg.kappa_flat(&rho10_plus));
    let phi_minus = -Form::from_vector(&alg.kappa_flat(&rho10_minus));
    let (phi_sign, d_sign) = match side {
        MetricSide::Plus => (Scalar::one(), Scalar::from_int(-1)),
        MetricSide::Minus => (Scalar::from_int(-1), Scalar::one()),
    };
    let rho10 = match side {
        MetricSide::Plus => &rho10_plus,
        MetricSide::Minus => &rho10_minus,
    };
    let xi = sub_vectors(rho10, &pair.conj.apply(rho10));
    let f = |a: &[Scalar], b: &[Scalar]| -> Scalar { &(&d_sign * &phi_sign) * &alg.kappa(&alg.bracket(a, b), &xi) };

    let basis: Vec<&Vector> = dual.b.iter().zip(&dual.bbar).flat_map(|(b, bb)| [b, bb]).collect();
    let mut curvature = Form::zero();
    for x in 0..2 * n {
        for y in x + 1..2 * n {
            curvature.add_term((1 << x) | (1 << y), &f(basis[x], basis[y]));
        }
    }
    let half_i = &Scalar::i() * &Scalar::from_frac(1, 2);
    let omega = Form::from_terms((0..n).map(|k| (((1 << (2 * k)) | (1 << (2 * k + 1))) as Mask, half_i.clone())));
    let power = |k: usize| (0..k).fold(Form::one(), |acc, _| acc.wedge(&omega));
    let curvature_top = curvature.wedge(&power(n.saturating_sub(1)));
    let omega_top = power(n);
    let full: Mask = ((1u64 << (2 * n)) - 1) as Mask;
    let num = curvature_top.coefficient(full);
    let den = omega_top.coefficient(full);
    let den_inv = den.inv()?;
    let wedge_ratio = &(&half_i * &num) * &den_inv;
    let proof_numerator = &Scalar::from_int(n as i64) * &num;
    let degree = &(&half_i * &proof_numerator) * &den_inv;

    let kappa_rho_rho = alg.kappa(rho, rho);
    let i = Scalar::i();
    let two = Scalar::from_int(2);
    let expected_num =
        &(&(&Scalar::from_int(-2) * &factorial(n)) * &i.pow(n.saturating_sub(1) as u32)) * &two.pow(n.saturating_sub(1) as u32).inv()?;
    let expected_num = &expected_num * &kappa_rho_rho;
    let expected_den = &(&factorial(n) * &i.pow(n as u32)) * &two.pow(n as u32).inv()?;
    Ok(DegreeReport {
        side,
        phi_plus,
        phi_minus,
        curvature,
        curvature_top,
        omega_top,
        kappa_rho_rho,
        wedge_ratio,
        numerator_matches: proof_numerator == expected_num,
        denominator_matches: den == expected_den,
        proof_numerator,
        degree,
    })
}
