//! Univariate polynomials over exact rationals, just enough for the
//! projected-curve degree and fiber computations: division, gcd, and
//! double-root deflation.

#[cfg(test)]
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficients little-endian, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    #[cfg(test)]
    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add_scaled(&self, other: &UniPoly, scale: &BigRational) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i) * scale).collect();
        UniPoly::new(coeffs)
    }

    #[cfg(test)]
    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Quotient and remainder with `deg rem < deg d`.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.degree().expect("nonzero");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(d.coeffs.len()).saturating_add(1)
        ];
        while rem.len() > dd && rem.len() >= d.coeffs.len() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().expect("nonempty") / &lead;
            quot[k] = f.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                let v = &rem[k + i] - c * &f;
                rem[k + i] = v;
            }
            // The leading term cancels exactly, so rem strictly shrinks.
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn monic(&self) -> UniPoly {
        match self.degree() {
            None => UniPoly::zero(),
            Some(d) => {
                let inv = BigRational::one() / &self.coeffs[d];
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.monic())
    }

    /// Divides by `(u - a)^2`, checking both divisions are exact.
    pub fn deflate_double_root(&self, a: &BigRational) -> Result<UniPoly> {
        let factor =
            UniPoly::new(vec![-a.clone(), BigRational::one()]);
        let mut out = self.clone();
        for _ in 0..2 {
            let (q, r) = out.divrem(&factor)?;
            if !r.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "expected a double root at {a}, found remainder"
                )));
            }
            out = q;
        }
        Ok(out)
    }
}
