use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{Matrix, Scalar};

/// Which compact group to build: products of `SU(2)`, `SU(3)` and circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    /// Ranks of the type-A simple factors, in order (1 → `sl2`, 2 → `sl3`).
    pub simple_factors: Vec<usize>,
    pub abelian_rank: usize,
    /// Gram matrix of κ on the center; rational and positive definite.
    pub center_gram: Matrix,
    pub field_d: u32,
}

impl GroupSpec {
    /// Parses the comma-separated token grammar `A1`, `A2`, `U1`, `Tk`.
    ///
    /// A missing center Gram defaults to `8·I` when simple factors are
    /// present (so that `|z|² = |ih|²` for `sl2`) and to `I` for tori.
    pub fn parse(text: &str, center_gram: Option<Matrix>, field_d: u32) -> Result<Self> {
        let mut simple = Vec::new();
        let mut abelian = 0;
        for tok in text.split(',').map(str::trim) {
            match tok {
                "A1" => simple.push(1),
                "A2" => simple.push(2),
                "U1" => abelian += 1,
                t if t.starts_with('T') => {
                    let k: usize = t[1..].parse().map_err(|_| Error::InvalidGroup(format!("unknown token `{t}`")))?;
                    abelian += k;
                }
                t => return Err(Error::InvalidGroup(format!("unknown token `{t}`"))),
            }
        }
        let gram = match center_gram {
            Some(g) => g,
            None => {
                let scale = if simple.is_empty() { 1 } else { 8 };
                Matrix::from_fn(abelian, abelian, |r, c| if r == c { Scalar::from_int(scale) } else { Scalar::zero() })
            }
        };
        let spec = GroupSpec { simple_factors: simple, abelian_rank: abelian, center_gram: gram, field_d };
        spec.validate()?;
        Ok(spec)
    }

    pub fn dim(&self) -> usize {
        self.simple_factors.iter().map(|&r| (r + 1) * (r + 1) - 1).sum::<usize>() + self.abelian_rank
    }

    pub fn rank(&self) -> usize {
        self.simple_factors.iter().sum::<usize>() + self.abelian_rank
    }

    /// Checks everything except the parity conditions.
    pub fn validate_structure(&self) -> Result<()> {
        if self.simple_factors.iter().any(|&r| r == 0 || r > 2) {
            return Err(Error::InvalidGroup("only A1 and A2 simple factors are supported".into()));
        }
        if self.dim() == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if self.field_d == 0 || !is_squarefree(self.field_d) {
            return Err(Error::InvalidGroup(format!("field parameter d = {} is not squarefree", self.field_d)));
        }
        let g = &self.center_gram;
        if g.rows() != self.abelian_rank || g.cols() != self.abelian_rank {
            return Err(Error::InvalidGroup(format!("center Gram must be {0}x{0}, got {1}x{2}", self.abelian_rank, g.rows(), g.cols())));
        }
        for r in 0..g.rows() {
            for c in 0..g.cols() {
                if !g[(r, c)].is_rational() || g[(r, c)] != g[(c, r)] {
                    return Err(Error::InvalidGroup("center Gram must be symmetric and rational".into()));
                }
            }
        }
        for k in 1..=g.rows() {
            let minor = Matrix::from_fn(k, k, |r, c| g[(r, c)].clone()).determinant()?;
            let positive = minor.as_rational().is_some_and(|q| q > &num_rational::BigRational::from_integer(0.into()));
            if !positive {
                return Err(Error::InvalidGroup("center Gram is not positive definite".into()));
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_structure()?;
        if self.dim() % 2 != 0 {
            return Err(Error::InvalidGroup(format!("real dimension {} is odd", self.dim())));
        }
        if self.rank() % 2 != 0 {
            return Err(Error::InvalidGroup(format!("rank {} is odd", self.rank())));
        }
        Ok(())
    }
}

fn is_squarefree(d: u32) -> bool {
    let mut k = 2u32;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks: Vec<String> = self.simple_factors.iter().map(|r| format!("A{r}")).collect();
        toks.extend(std::iter::repeat_n("U1".to_string(), self.abelian_rank));
        f.write_str(&toks.join(","))
    }
}
