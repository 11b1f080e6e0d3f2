use crate::error::{Error, Result};
use crate::exactfield::{add_vectors, axpy, sub_vectors, zero_vector, Matrix, Scalar, Subspace, Vector};
use crate::lagrangian::GKPair;

/// `x = Σ c_k v_k + Σ c′_k w_k` solved over the basis `vs ++ ws`; returns
/// `i Σ c_k v_k − i Σ c′_k w_k`.
fn complex_structure(vs: &[Vector], ws: &[Vector], x: &[Scalar]) -> Result<Vector> {
    let dim = x.len();
    let mut basis = vs.to_vec();
    basis.extend(ws.iter().cloned());
    let coords = Matrix::from_cols(basis.clone(), dim).solve(x)?.ok_or(Error::Singular)?;
    let i = Scalar::i();
    let mut out = zero_vector(dim);
    for (k, (c, v)) in coords.iter().zip(&basis).enumerate() {
        let sign = if k < vs.len() { i.clone() } else { -&i };
        axpy(&mut out, &(c * &sign), v);
    }
    Ok(out)
}

/// On `t ⊞ t ⊂ d` for a canonical pair, checks that with `v = a′ − a` and
/// `w = a′ + a`, `J_+` acts as `(v, w) ↦ (Jv, Jw)` and `J_−` as
/// `(v, w) ↦ (Jw, Jv)`, where `J` is `i` on `t_{1,0}` and `−i` on `t_{0,1}`,
/// and that both preserve the real torus algebra.
pub fn torus_restriction_check(pair: &GKPair) -> Result<bool> {
    if !pair.canonical {
        return Err(Error::NotCanonical);
    }
    let d = &pair.double;
    let dim = pair.alg.dim();
    let t10 = pair.l_plus.t10.basis_vectors();
    let t01 = pair.l_plus.t01(&pair.conj).basis_vectors();
    let cartan = pair.l_plus.frame.cartan();
    let real_t: Vec<Vector> = pair.conj.real_basis().iter().filter(|v| cartan.contains_vector(v)).cloned().collect();
    let j = |a: &[Scalar]| complex_structure(&t10, &t01, a);

    let big = |s: &Subspace| s.basis_vectors();
    let plus = (big(&pair.big_plus.subspace), big(&pair.big_plus_bar()));
    let minus = (big(&pair.big_minus.subspace), big(&pair.big_minus_bar()));
    let points: Vec<Vector> = real_t.iter().flat_map(|a| [d.join(a, &zero_vector(dim)), d.join(&zero_vector(dim), a)]).collect();
    let real_tt = Subspace::span(2 * dim, points.clone());

    for point in points {
        let (x, xp) = d.split(&point);
        let v = sub_vectors(xp, x);
        let w = add_vectors(xp, x);
        for (structure, swapped) in [(&plus, false), (&minus, true)] {
            let image = complex_structure(&structure.0, &structure.1, &point)?;
            if d.conjugate(&pair.conj, &image) != image || !real_tt.contains_vector(&image) {
                return Ok(false);
            }
            let (y, yp) = d.split(&image);
            let (jv, jw) = if swapped { (j(&w)?, j(&v)?) } else { (j(&v)?, j(&w)?) };
            if sub_vectors(yp, y) != jv || add_vectors(yp, y) != jw {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
