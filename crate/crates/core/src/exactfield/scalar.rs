use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `c0 + c1·i + c2·r + c3·i·r` of `Q(i)[r]`, `r = √d`.
///
/// `d` is carried per value and collapses to 1 whenever the `r` part
/// vanishes, so equality and hashing are coefficient-wise. Mixing two
/// different non-trivial `d` values is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    c: [BigRational; 4],
    d: u32,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn join_d(a: u32, b: u32) -> u32 {
    if a == 1 || a == b {
        b
    } else if b == 1 {
        a
    } else {
        panic!("scalars from different fields Q(i)[√{a}] and Q(i)[√{b}] mixed");
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { c: [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()], d: 1 }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(rat(0), rat(1), rat(0), rat(0), 1)
    }

    /// `√d` itself. `d` must be squarefree and positive.
    pub fn sqrt_d(d: u32) -> Self {
        if d == 1 {
            return Self::one();
        }
        Self::new(rat(0), rat(0), rat(1), rat(0), d)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::new(q, BigRational::zero(), BigRational::zero(), BigRational::zero(), 1)
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Self::new(re, im, BigRational::zero(), BigRational::zero(), 1)
    }

    /// Builds `c0 + c1 i + c2 √d + c3 i √d`.
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational, d: u32) -> Self {
        assert!(d >= 1, "field parameter d must be positive");
        let mut s = Scalar { c: [c0, c1, c2, c3], d };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.d == 1 {
            // Q(i)[√1] = Q(i): fold the r components back.
            let c2 = std::mem::take(&mut self.c[2]);
            let c3 = std::mem::take(&mut self.c[3]);
            self.c[0] += c2;
            self.c[1] += c3;
        } else if self.c[2].is_zero() && self.c[3].is_zero() {
            self.d = 1;
        }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn field_d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// True when the value lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.c[0])
    }

    /// Complex conjugation: `i ↦ −i`, `√d ↦ √d`.
    pub fn conjugate(&self) -> Self {
        Scalar { c: [self.c[0].clone(), -self.c[1].clone(), self.c[2].clone(), -self.c[3].clone()], d: self.d }
    }

    /// Real part in the embedding where `√d > 0`: `c0 + c2 √d`.
    pub fn real_part(&self) -> Self {
        Self::new(self.c[0].clone(), BigRational::zero(), self.c[2].clone(), BigRational::zero(), self.d)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Scalar { c: [&self.c[0] * q, &self.c[1] * q, &self.c[2] * q, &self.c[3] * q], d: self.d }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (A + B r)^{-1} = (A − B r) / (A² − d B²), with A, B ∈ Q(i).
        let d = self.d;
        let a = (self.c[0].clone(), self.c[1].clone());
        let b = (self.c[2].clone(), self.c[3].clone());
        let (a2r, a2i) = gauss_mul(&a, &a);
        let (b2r, b2i) = gauss_mul(&b, &b);
        let dd = rat(d as i64);
        let nr = a2r - &dd * b2r;
        let ni = a2i - &dd * b2i;
        // 1 / (nr + ni i) = (nr − ni i) / (nr² + ni²)
        let den = &nr * &nr + &ni * &ni;
        let inv_n = (&nr / &den, -&ni / &den);
        let (c0, c1) = gauss_mul(&a, &inv_n);
        let (c2, c3) = gauss_mul(&(-b.0, -b.1), &inv_n);
        Ok(Self::new(c0, c1, c2, c3, d))
    }

    /// A square root of the rational `q` inside `Q(i)[√d]`, if one exists.
    pub fn sqrt_rational(q: &BigRational, d: u32) -> Option<Self> {
        if q.is_zero() {
            return Some(Self::zero());
        }
        // |q| = a/b, √(a/b) = √(ab)/b, and ab = k²·m with m squarefree
        let prod = (q.numer() * q.denom()).abs();
        let (k, m) = square_part(&prod);
        let coeff = BigRational::new(k, q.denom().clone());
        let root = match m {
            m if m.is_one() => Self::from_rational(coeff),
            m if m == BigInt::from(d) => Self::sqrt_d(d).scale(&coeff),
            _ => return None,
        };
        Some(if q.is_negative() { &root * &Self::i() } else { root })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact literal syntax: sum of terms `p/q`, `p/q*i`, `p/q*r`, `p/q*i*r`.
    pub fn to_literal(&self) -> String {
        let suffix = ["", "*i", "*r", "*i*r"];
        let mut out = String::new();
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let body = q.abs().to_string();
            if out.is_empty() {
                if q.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if q.is_negative() { "-" } else { "+" });
            }
            out.push_str(&body);
            out.push_str(suffix[k]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the literal syntax produced by [`Scalar::to_literal`]; `r` denotes `√d`.
    pub fn parse(text: &str, d: u32) -> Result<Self> {
        let bad = || Error::MalformedScalar(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'*' && bytes[k - 1] != b'/' {
                terms.push(&s[start..k]);
                start = k;
            }
        }
        terms.push(&s[start..]);
        let mut acc = Scalar::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let mut factors = body.split('*');
            let mut value = match factors.next() {
                Some(f) if f == "i" => Scalar::i(),
                Some(f) if f == "r" && d > 1 => Scalar::sqrt_d(d),
                Some(f) if !f.is_empty() => Scalar::from_rational(parse_rational(f).ok_or_else(bad)?),
                _ => return Err(bad()),
            };
            for f in factors {
                value = match f {
                    "i" => &value * &Scalar::i(),
                    "r" => {
                        if d == 1 {
                            return Err(bad());
                        }
                        &value * &Scalar::sqrt_d(d)
                    }
                    other => &value * &Scalar::from_rational(parse_rational(other).ok_or_else(bad)?),
                };
            }
            if neg {
                value = -value;
            }
            acc += &value;
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

fn gauss_mul(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> (BigRational, BigRational) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.to_literal())
        } else {
            write!(f, "{} (r=√{})", self.to_literal(), self.d)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.d = join_d(self.d, rhs.d);
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] += &rhs.c[k];
            }
        }
        self.normalize();
    }
}

impl<'a> SubAssign<&'a Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.d = join_d(self.d, rhs.d);
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] -= &rhs.c[k];
            }
        }
        self.normalize();
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { c: self.c.map(|q| -q), d: self.d }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let d = join_d(self.d, rhs.d);
        // basis products: e_j e_k with e = (1, i, r, ir); i² = −1, r² = d.
        let dd = rat(d as i64);
        let mut c = [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
        for j in 0..4 {
            if self.c[j].is_zero() {
                continue;
            }
            for k in 0..4 {
                if rhs.c[k].is_zero() {
                    continue;
                }
                let p = &self.c[j] * &rhs.c[k];
                let (slot, sign_neg, times_d) = basis_product(j, k);
                let p = if times_d { p * &dd } else { p };
                if sign_neg {
                    c[slot] -= p;
                } else {
                    c[slot] += p;
                }
            }
        }
        let [c0, c1, c2, c3] = c;
        Scalar::new(c0, c1, c2, c3, d)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

/// `(slot, negate, multiply by d)` for the product of basis units `j·k`.
fn basis_product(j: usize, k: usize) -> (usize, bool, bool) {
    // bit 0 = i, bit 1 = r
    let slot = j ^ k;
    let neg = (j & 1 == 1) && (k & 1 == 1);
    let times_d = (j & 2 == 2) && (k & 2 == 2);
    (slot, neg, times_d)
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// Writes `n = k²·m` with `m` squarefree, by trial division.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut m = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            k *= &p;
        }
        if e % 2 == 1 {
            m *= &p;
        }
        p += 1;
    }
    (k, m * rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str, d: u32) -> Scalar {
        Scalar::parse(text, d).unwrap()
    }

    #[test]
    fn gaussian_norm() {
        let a = s("1+1*i", 1);
        let b = s("1-1*i", 1);
        assert_eq!(&a * &b, Scalar::from_int(2));
    }

    #[test]
    fn inverse_with_sqrt3() {
        let x = s("1+1*r", 3);
        let inv = x.inv().unwrap();
        assert_eq!(inv, s("-1/2+1/2*r", 3));
        assert!((&inv * &x).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn conjugation_fixes_sqrt_d() {
        assert_eq!(Scalar::i().conjugate(), -Scalar::i());
        let x = s("1*i*r", 3);
        assert_eq!(x.conjugate(), s("-1*i*r", 3));
        assert_eq!(Scalar::sqrt_d(3).conjugate(), Scalar::sqrt_d(3));
    }

    #[test]
    fn rational_square_roots() {
        let q = |n: i64, m: i64| BigRational::new(BigInt::from(n), BigInt::from(m));
        for (value, d) in [(q(9, 4), 1), (q(-3, 1), 3), (q(12, 49), 3), (q(-1, 8), 2), (q(64, 1), 1)] {
            let r = Scalar::sqrt_rational(&value, d).unwrap();
            assert_eq!(&r * &r, Scalar::from_rational(value));
        }
        assert!(Scalar::sqrt_rational(&q(2, 1), 3).is_none());
    }

    #[test]
    fn sqrt_d_squares_to_d() {
        let r = Scalar::sqrt_d(5);
        assert_eq!(&r * &r, Scalar::from_int(5));
        assert_eq!((&r * &r).field_d(), 1);
    }

    #[test]
    fn literal_roundtrip() {
        for lit in ["0", "3/4", "-1/2*i", "1+2*i-3/5*r+7*i*r", "-5*r"] {
            let x = s(lit, 5);
            assert_eq!(s(&x.to_literal(), 5), x);
        }
        assert_eq!(s("1/2*i*r", 3).to_literal(), "1/2*i*r");
    }

    #[test]
    fn malformed_literals_rejected() {
        for bad in ["", "1/0", "x", "1**i", "2*r"] {
            assert!(Scalar::parse(bad, 1).is_err(), "{bad}");
        }
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let _ = &Scalar::sqrt_d(2) + &Scalar::sqrt_d(3);
    }
}
