use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::exactfield::Scalar;

/// Subset of basis labels, bit `k` standing for `e_k`.
pub type Mask = u32;

pub fn grade(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Number of elements of `m` below `j` (the position of `j` in `m`).
pub fn position(m: Mask, j: usize) -> usize {
    (m & ((1u32 << j) - 1)).count_ones() as usize
}

/// Sign of `e_a ∧ e_b` relative to `e_{a ∪ b}`; `None` when they overlap.
pub fn wedge_sign(a: Mask, b: Mask) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    // count pairs (x ∈ a, y ∈ b) with x > y
    let mut inversions = 0;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        inversions += (a >> (y + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(inversions % 2 == 1)
}

pub fn indices(m: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&k| m & (1 << k) != 0)
}

macro_rules! sparse_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Default, PartialEq, Eq)]
        pub struct $name {
            terms: BTreeMap<Mask, Scalar>,
        }

        impl $name {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn scalar(c: Scalar) -> Self {
                Self::monomial(0, c)
            }

            pub fn one() -> Self {
                Self::scalar(Scalar::one())
            }

            pub fn monomial(m: Mask, c: Scalar) -> Self {
                let mut out = Self::zero();
                out.add_term(m, &c);
                out
            }

            /// `Σ v_k e_k`.
            pub fn from_vector(v: &[Scalar]) -> Self {
                let mut out = Self::zero();
                for (k, c) in v.iter().enumerate() {
                    out.add_term(1 << k, c);
                }
                out
            }

            pub fn from_terms(terms: impl IntoIterator<Item = (Mask, Scalar)>) -> Self {
                let mut out = Self::zero();
                for (m, c) in terms {
                    out.add_term(m, &c);
                }
                out
            }

            /// Dense coordinates in the monomial basis of size `2^dim`.
            pub fn from_dense(v: &[Scalar]) -> Self {
                Self::from_terms(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m as Mask, c.clone())))
            }

            pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
                let mut v = vec![Scalar::zero(); 1 << dim];
                for (m, c) in &self.terms {
                    v[*m as usize] = c.clone();
                }
                v
            }

            pub fn add_term(&mut self, m: Mask, c: &Scalar) {
                if c.is_zero() {
                    return;
                }
                let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&m);
                }
            }

            pub fn terms(&self) -> impl Iterator<Item = (Mask, &Scalar)> {
                self.terms.iter().map(|(m, c)| (*m, c))
            }

            pub fn coefficient(&self, m: Mask) -> Scalar {
                self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn scale(&self, c: &Scalar) -> Self {
                if c.is_zero() {
                    return Self::zero();
                }
                Self { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
            }

            pub fn grade_part(&self, k: usize) -> Self {
                Self { terms: self.terms.iter().filter(|(m, _)| grade(**m) == k).map(|(m, c)| (*m, c.clone())).collect() }
            }

            /// Part of parity `odd`.
            pub fn parity_part(&self, odd: bool) -> Self {
                Self {
                    terms: self.terms.iter().filter(|(m, _)| (grade(**m) % 2 == 1) == odd).map(|(m, c)| (*m, c.clone())).collect(),
                }
            }

            pub fn max_grade(&self) -> Option<usize> {
                self.terms.keys().map(|m| grade(*m)).max()
            }

            pub fn min_grade(&self) -> Option<usize> {
                self.terms.keys().map(|m| grade(*m)).min()
            }

            /// `Some(parity)` when all terms share one parity.
            pub fn parity(&self) -> Option<bool> {
                let mut it = self.terms.keys().map(|m| grade(*m) % 2 == 1);
                let first = it.next()?;
                it.all(|p| p == first).then_some(first)
            }

            /// Applies `f` to every coefficient.
            pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
                Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
            }

            /// `v ∧ w` in the exterior algebra on the same labels.
            pub fn wedge(&self, other: &Self) -> Self {
                let mut out = Self::zero();
                for (a, x) in &self.terms {
                    for (b, y) in &other.terms {
                        if let Some(neg) = wedge_sign(*a, *b) {
                            let c = x * y;
                            out.add_term(a | b, &if neg { -c } else { c });
                        }
                    }
                }
                out
            }

            /// Contraction with a dual vector `ξ = Σ ξ_j e^j` from the left.
            pub fn interior(&self, xi: &[Scalar]) -> Self {
                let mut out = Self::zero();
                for (m, c) in &self.terms {
                    for j in indices(*m) {
                        if xi[j].is_zero() {
                            continue;
                        }
                        let t = c * &xi[j];
                        out.add_term(m & !(1 << j), &if position(*m, j) % 2 == 1 { -t } else { t });
                    }
                }
                out
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                let mut out = self.clone();
                for (m, c) in &rhs.terms {
                    out.add_term(*m, c);
                }
                out
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                let mut out = self.clone();
                for (m, c) in &rhs.terms {
                    out.add_term(*m, &-c);
                }
                out
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.terms.is_empty() {
                    return f.write_str("0");
                }
                let parts: Vec<String> = self
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let idx: Vec<String> = indices(*m).map(|k| k.to_string()).collect();
                        format!("({})[{}]", c.to_literal(), idx.join(","))
                    })
                    .collect();
                f.write_str(&parts.join(" + "))
            }
        }
    };
}

sparse_type!(
    /// Element of `∧*g`.
    Multivector
);
sparse_type!(
    /// Element of `∧*g*`, in the basis dual to the basis of `g`.
    Form
);
sparse_type!(
    /// Element of `Cl(g, κ)` in normal-ordered monomials `e_{i1}···e_{ik}`, `i1 < … < ik`.
    CliffordElement
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_sign(0b01, 0b10), Some(false));
        assert_eq!(wedge_sign(0b10, 0b01), Some(true));
        assert_eq!(wedge_sign(0b011, 0b100), Some(false));
        assert_eq!(wedge_sign(0b110, 0b001), Some(false));
        assert_eq!(wedge_sign(0b100, 0b011), Some(false));
        assert_eq!(wedge_sign(0b010, 0b101), Some(true));
        assert_eq!(wedge_sign(0b1, 0b1), None);
    }

    #[test]
    fn wedge_is_graded_commutative() {
        let a = Multivector::monomial(0b001, Scalar::one());
        let b = Multivector::monomial(0b110, Scalar::one());
        let c = Multivector::monomial(0b010, Scalar::one());
        assert_eq!(a.wedge(&b), b.wedge(&a));
        assert_eq!(a.wedge(&c), -c.wedge(&a));
        assert!(c.wedge(&b).is_zero());
    }

    #[test]
    fn interior_is_a_derivation() {
        // ι_ξ(a ∧ b) = ι_ξ a ∧ b − a ∧ ι_ξ b for 1-vectors
        let xi = vec![Scalar::from_int(2), Scalar::from_int(3), Scalar::from_int(5)];
        let a = Multivector::from_vector(&[Scalar::one(), Scalar::from_int(-1), Scalar::zero()]);
        let b = Multivector::from_vector(&[Scalar::zero(), Scalar::from_int(4), Scalar::i()]);
        let lhs = a.wedge(&b).interior(&xi);
        let rhs = &a.interior(&xi).wedge(&b) - &a.wedge(&b.interior(&xi));
        assert_eq!(lhs, rhs);
    }
}
