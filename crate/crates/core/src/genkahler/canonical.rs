use super::spinor::{build_pure_spinor, PureSpinor, Side};
use crate::clifford::{CliffordAlgebra, CliffordElement};
use crate::error::{Error, Result};
use crate::exactfield::{scale_vector, Scalar, Vector};
use crate::lagrangian::GKPair;

/// One exact equality `lhs = rhs` with its residual `lhs − rhs`.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub residual: CliffordElement,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: &CliffordElement, rhs: &CliffordElement) -> Self {
        let residual = lhs - rhs;
        IdentityCheck { name: name.into(), holds: residual.is_zero(), residual }
    }
}

#[derive(Clone, Debug)]
pub struct DclSpinorReport {
    pub checks: Vec<IdentityCheck>,
    /// `d^Cl u_+ = 0` and `d^Cl u_− = 0`.
    pub calabi_yau: bool,
}

impl DclSpinorReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn half(v: &[Scalar]) -> Vector {
    scale_vector(&Scalar::from_frac(1, 2), v)
}

fn neg(v: &[Scalar]) -> Vector {
    scale_vector(&Scalar::from_int(-1), v)
}

/// `d^Cl u` against `½(x, x′) ∘ u`.
fn dcl_check(cl: &CliffordAlgebra, name: String, u: &CliffordElement, x: &[Scalar], x_prime: &[Scalar]) -> IdentityCheck {
    IdentityCheck::new(name, &cl.d_cl(u), &cl.spinor_action(&half(x), &half(x_prime), u))
}

/// Checks `d^Cl u_+ = ½(−ρ_−, ρ_+) ∘ u_+`, `d^Cl u_− = ½(ρ_−, ρ_+) ∘ u_−`
/// and, for `l = l_±` with Weyl vector `ρ`, `d^Cl u_l = ½(−ρ, ρ) ∘ u_l`,
/// `d^Cl u_l̄ = ½(ρ, −ρ) ∘ u_l̄` and `d^Cl(u_l · u_l̄) = ½(ρ, ρ) ∘ (u_l · u_l̄)`,
/// where `u_l = b̄_1 ··· b̄_n` and `u_l̄ = b_1 ··· b_n`.
pub fn verify_dcl_spinor(cl: &CliffordAlgebra, pair: &GKPair) -> Result<DclSpinorReport> {
    let (rp, rm) = (&pair.rho_plus, &pair.rho_minus);
    let up = build_pure_spinor(cl, pair, Side::Plus)?;
    let um = build_pure_spinor(cl, pair, Side::Minus)?;
    let mut checks = vec![
        dcl_check(cl, "d u+ = ½(−ρ−, ρ+) ∘ u+".into(), &up.element, &neg(rm), rp),
        dcl_check(cl, "d u− = ½(ρ−, ρ+) ∘ u−".into(), &um.element, rm, rp),
    ];
    for (label, dual, rho) in [("l+", &pair.dual_plus, rp), ("l−", &pair.dual_minus, rm)] {
        let ul = cl.product_of_vectors(&dual.bbar);
        let ulbar = cl.product_of_vectors(&dual.b);
        checks.push(dcl_check(cl, format!("d u_{label} = ½(−ρ, ρ) ∘ u_{label}"), &ul, &neg(rho), rho));
        checks.push(dcl_check(cl, format!("d ū_{label} = ½(ρ, −ρ) ∘ ū_{label}"), &ulbar, rho, &neg(rho)));
        checks.push(dcl_check(cl, format!("d(u_{label} ū_{label}) = ½(ρ, ρ) ∘ (u_{label} ū_{label})"), &cl.mul(&ul, &ulbar), rho, rho));
    }
    let calabi_yau = cl.d_cl(&up.element).is_zero() && cl.d_cl(&um.element).is_zero();
    Ok(DclSpinorReport { checks, calabi_yau })
}

/// For `â = (a, a′)` in the annihilator of `u_+`, checks
/// `â ∘ (½(−ρ_−, ρ_+) ∘ u_+) = (κ(a′, ρ_+) + κ(a, ρ_−)) u_+` and returns the
/// eigenvalue, which is `κ(a′ + a, ρ)` when `ρ_+ = ρ_−`.
pub fn canonical_connection_eigenvalue(
    cl: &CliffordAlgebra,
    pair: &GKPair,
    u: &PureSpinor,
    a: &[Scalar],
    a_prime: &[Scalar],
) -> Result<Scalar> {
    if u.side != Side::Plus {
        return Err(Error::IdentityFailed("the connection eigenvalue is defined on u+".into()));
    }
    if !u.annihilator.contains_vector(&pair.double.join(a, a_prime)) {
        return Err(Error::NotInAnnihilator);
    }
    let (rp, rm) = (&pair.rho_plus, &pair.rho_minus);
    let du = cl.spinor_action(&half(&neg(rm)), &half(rp), &u.element);
    let lhs = cl.spinor_action(a, a_prime, &du);
    let value = &pair.alg.kappa(a_prime, rp) + &pair.alg.kappa(a, rm);
    let residual = &lhs - &u.element.scale(&value);
    if !residual.is_zero() {
        return Err(Error::IdentityFailed(format!("â ∘ ½(−ρ−, ρ+) ∘ u+ − λ u+ = {residual}")));
    }
    Ok(value)
}
