//! Second-order jets: truncated Taylor expansions `f + df + d2f` in `m`
//! active variables, with exact ring arithmetic over any [`FieldScalar`]
//! ground field.
//!
//! A jet stores the value, the gradient and the full (symmetric) Hessian of
//! a function germ. Products follow the Leibniz rules exactly, so evaluating
//! a polynomial map on jets yields exact first and second derivatives. This
//! is the engine behind the Gauss-map rank and contact-locus computations,
//! and it is cross-checked in the test suite against closed-form monomial
//! differentiation.

use crate::error::{Error, Result};
use crate::field::{FieldKind, FieldScalar};

/// Truncated second-order Taylor expansion in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet2 {
    pub val: FieldScalar,
    /// Gradient, `nvars` entries.
    pub grad: Vec<FieldScalar>,
    /// Hessian in row-major order, `nvars * nvars` entries, symmetric.
    pub hess: Vec<FieldScalar>,
}

impl Jet2 {
    pub fn nvars(&self) -> usize {
        self.grad.len()
    }

    pub fn kind(&self) -> FieldKind {
        self.val.kind()
    }

    /// Jet of the constant `v`.
    pub fn constant(v: FieldScalar, nvars: usize) -> Self {
        let kind = v.kind();
        Jet2 {
            val: v,
            grad: vec![FieldScalar::zero(kind); nvars],
            hess: vec![FieldScalar::zero(kind); nvars * nvars],
        }
    }

    /// Jet of the coordinate function `x_i` evaluated at `v`.
    pub fn variable(v: FieldScalar, i: usize, nvars: usize) -> Self {
        let kind = v.kind();
        let mut grad = vec![FieldScalar::zero(kind); nvars];
        grad[i] = FieldScalar::one(kind);
        Jet2 { val: v, grad, hess: vec![FieldScalar::zero(kind); nvars * nvars] }
    }

    pub fn hess_at(&self, i: usize, j: usize) -> &FieldScalar {
        &self.hess[i * self.nvars() + j]
    }

    pub fn add(&self, other: &Jet2) -> Jet2 {
        Jet2 {
            val: self.val.add(&other.val),
            grad: self.grad.iter().zip(&other.grad).map(|(a, b)| a.add(b)).collect(),
            hess: self.hess.iter().zip(&other.hess).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Jet2) -> Jet2 {
        Jet2 {
            val: self.val.sub(&other.val),
            grad: self.grad.iter().zip(&other.grad).map(|(a, b)| a.sub(b)).collect(),
            hess: self.hess.iter().zip(&other.hess).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldScalar) -> Jet2 {
        Jet2 {
            val: self.val.mul(c),
            grad: self.grad.iter().map(|a| a.mul(c)).collect(),
            hess: self.hess.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Leibniz product: `(fg)_i = f_i g + f g_i`,
    /// `(fg)_{ij} = f_{ij} g + f_i g_j + f_j g_i + f g_{ij}`.
    pub fn mul(&self, other: &Jet2) -> Jet2 {
        let m = self.nvars();
        debug_assert_eq!(m, other.nvars());
        let val = self.val.mul(&other.val);
        let grad: Vec<FieldScalar> = (0..m)
            .map(|i| self.grad[i].mul(&other.val).add(&self.val.mul(&other.grad[i])))
            .collect();
        let mut hess = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let t = self.hess_at(i, j).mul(&other.val);
                let t = t.add(&self.grad[i].mul(&other.grad[j]));
                let t = t.add(&self.grad[j].mul(&other.grad[i]));
                let t = t.add(&self.val.mul(other.hess_at(i, j)));
                hess.push(t);
            }
        }
        Jet2 { val, grad, hess }
    }

    /// Multiplicative inverse; requires a nonzero value part.
    ///
    /// For `h = 1/f`: `h_i = -f_i / f^2`, `h_{ij} = 2 f_i f_j / f^3 - f_{ij} / f^2`.
    pub fn inv(&self) -> Result<Jet2> {
        if self.val.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.nvars();
        let w = self.val.inv()?;
        let w2 = w.mul(&w);
        let w3 = w2.mul(&w);
        let two = FieldScalar::from_i64(self.kind(), 2);
        let grad: Vec<FieldScalar> = (0..m).map(|i| self.grad[i].mul(&w2).neg()).collect();
        let mut hess = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let a = two.mul(&self.grad[i]).mul(&self.grad[j]).mul(&w3);
                let b = self.hess_at(i, j).mul(&w2);
                hess.push(a.sub(&b));
            }
        }
        Ok(Jet2 { val: w, grad, hess })
    }

    /// `self^e` for integer `e`; negative exponents require a unit value part.
    pub fn pow_i64(&self, e: i64) -> Result<Jet2> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Jet2::constant(FieldScalar::one(self.kind()), self.nvars());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            exp >>= 1;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind;

    fn q(v: i64) -> FieldScalar {
        FieldScalar::from_i64(FieldKind::Rational, v)
    }

    /// Jet of `x^2 y` at `(x, y) = (3, 5)`: value 45, grad (30, 9),
    /// hessian [[10, 6], [6, 0]].
    #[test]
    fn product_rule_on_x2y() {
        let x = Jet2::variable(q(3), 0, 2);
        let y = Jet2::variable(q(5), 1, 2);
        let f = x.mul(&x).mul(&y);
        assert_eq!(f.val, q(45));
        assert_eq!(f.grad, vec![q(30), q(9)]);
        assert_eq!(f.hess, vec![q(10), q(6), q(6), q(0)]);
    }

    /// `1/x` at `x = 2`: value 1/2, derivative -1/4, second derivative 1/4.
    #[test]
    fn inverse_jet_matches_calculus() {
        let x = Jet2::variable(q(2), 0, 1);
        let h = x.inv().unwrap();
        assert!(x.mul(&h).val.is_one());
        assert_eq!(h.val, q(1).div(&q(2)).unwrap());
        assert_eq!(h.grad[0], q(-1).div(&q(4)).unwrap());
        assert_eq!(h.hess[0], q(1).div(&q(4)).unwrap());
    }

    #[test]
    fn pow_negative_exponent() {
        let x = Jet2::variable(q(3), 0, 1);
        let f = x.pow_i64(-2).unwrap();
        // d/dx x^-2 = -2 x^-3 = -2/27 at x = 3.
        assert_eq!(f.grad[0], q(-2).div(&q(27)).unwrap());
        // d2/dx2 x^-2 = 6 x^-4 = 6/81.
        assert_eq!(f.hess[0], q(6).div(&q(81)).unwrap());
        assert!(x.mul(&x).mul(&f).val.is_one());
    }

    #[test]
    fn inverse_of_zero_value_fails() {
        let x = Jet2::variable(q(0), 0, 1);
        assert!(x.inv().is_err());
    }
}
