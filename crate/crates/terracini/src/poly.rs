//! Sparse Laurent polynomial maps with integer coefficients.
//!
//! Every catalog parametrization is stored in this form: a list of
//! coordinate polynomials in `m` variables, exponents allowed to be negative
//! (torus charts). Evaluation specializes the integer coefficients into any
//! ground field; derivatives exist both in closed form (exponent rule) and
//! through jet arithmetic, and the two are cross-checked by the test suite.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldKind, FieldScalar};
use crate::jet::Jet2;

/// One monomial `coeff * x^exps` with Laurent exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub exps: Vec<i32>,
}

/// Sparse polynomial, terms deduplicated and sorted by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    pub nvars: usize,
    pub terms: Vec<Term>,
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: vec![] }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        if c == 0 {
            return Self::zero(nvars);
        }
        SparsePoly { nvars, terms: vec![Term { coeff: c, exps: vec![0; nvars] }] }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, 1, {
            let mut e = vec![0; nvars];
            e[i] = 1;
            e
        })
    }

    pub fn monomial(nvars: usize, coeff: i64, exps: Vec<i32>) -> Self {
        debug_assert_eq!(exps.len(), nvars);
        if coeff == 0 {
            return Self::zero(nvars);
        }
        SparsePoly { nvars, terms: vec![Term { coeff, exps }] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_map(nvars: usize, map: BTreeMap<Vec<i32>, i64>) -> Self {
        let terms = map
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(exps, coeff)| Term { coeff, exps })
            .collect();
        SparsePoly { nvars, terms }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut map = BTreeMap::new();
        for t in self.terms.iter().chain(&other.terms) {
            let e = map.entry(t.exps.clone()).or_insert(0i64);
            *e = checked_add(*e, t.coeff);
        }
        Self::from_map(self.nvars, map)
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> SparsePoly {
        if c == 0 {
            return Self::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: checked_mul(t.coeff, c), exps: t.exps.clone() })
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut map = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let exps: Vec<i32> =
                    a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
                let e = map.entry(exps).or_insert(0i64);
                *e = checked_add(*e, checked_mul(a.coeff, b.coeff));
            }
        }
        Self::from_map(self.nvars, map)
    }

    /// Closed-form partial derivative by the exponent rule.
    pub fn partial(&self, i: usize) -> SparsePoly {
        let mut map = BTreeMap::new();
        for t in &self.terms {
            let e = t.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = t.exps.clone();
            exps[i] -= 1;
            let entry = map.entry(exps).or_insert(0i64);
            *entry = checked_add(*entry, checked_mul(t.coeff, e as i64));
        }
        Self::from_map(self.nvars, map)
    }

    /// Evaluates at a point of the ground field. Negative exponents at a
    /// zero coordinate are a forbidden evaluation point.
    pub fn eval(&self, pt: &[FieldScalar], kind: FieldKind) -> Result<FieldScalar> {
        debug_assert_eq!(pt.len(), self.nvars);
        let mut acc = FieldScalar::zero(kind);
        for t in &self.terms {
            let mut m = FieldScalar::from_i64(kind, t.coeff);
            for (x, &e) in pt.iter().zip(&t.exps) {
                if e == 0 {
                    continue;
                }
                if x.is_zero() && e < 0 {
                    return Err(Error::ForbiddenPoint(
                        "negative exponent at zero coordinate".into(),
                    ));
                }
                m = m.mul(&x.pow_i64(e as i64).map_err(|_| {
                    Error::ForbiddenPoint("negative exponent at zero coordinate".into())
                })?);
            }
            acc = acc.add(&m);
        }
        Ok(acc)
    }

    /// Evaluates on second-order jets; `jets[j]` supplies the jet of
    /// variable `j`.
    pub fn eval_jet(&self, jets: &[Jet2], kind: FieldKind, active_vars: usize) -> Result<Jet2> {
        let mut acc = Jet2::constant(FieldScalar::zero(kind), active_vars);
        for t in &self.terms {
            let mut m = Jet2::constant(FieldScalar::from_i64(kind, t.coeff), active_vars);
            for (x, &e) in jets.iter().zip(&t.exps) {
                if e == 0 {
                    continue;
                }
                m = m.mul(&x.pow_i64(e as i64).map_err(|_| {
                    Error::ForbiddenPoint("negative exponent at zero coordinate".into())
                })?);
            }
            acc = acc.add(&m);
        }
        Ok(acc)
    }

    /// Total degree (max over terms of the exponent sum); `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.iter().map(|t| t.exps.iter().map(|&e| e as i64).sum()).max()
    }
}

/// A polynomial map `k^m -> k^(N+1)`: the affine-cone form of a projective
/// parametrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    pub nvars: usize,
    pub coords: Vec<SparsePoly>,
}

impl PolyMap {
    pub fn new(nvars: usize, coords: Vec<SparsePoly>) -> Self {
        debug_assert!(coords.iter().all(|c| c.nvars == nvars));
        PolyMap { nvars, coords }
    }

    pub fn ncoords(&self) -> usize {
        self.coords.len()
    }

    pub fn eval(&self, pt: &[FieldScalar], kind: FieldKind) -> Result<Vec<FieldScalar>> {
        self.coords.iter().map(|c| c.eval(pt, kind)).collect()
    }

    /// All first partials in closed form, `partials[j][i] = d coord_j / d x_i`.
    pub fn partials(&self) -> Vec<Vec<SparsePoly>> {
        self.coords
            .iter()
            .map(|c| (0..self.nvars).map(|i| c.partial(i)).collect())
            .collect()
    }

    /// Evaluates the map on jets with the listed variables active (in the
    /// given order); the others are frozen constants.
    pub fn jet_eval(
        &self,
        pt: &[FieldScalar],
        active: &[usize],
        kind: FieldKind,
    ) -> Result<Vec<Jet2>> {
        debug_assert_eq!(pt.len(), self.nvars);
        let m = active.len();
        let jets: Vec<Jet2> = pt
            .iter()
            .enumerate()
            .map(|(j, x)| match active.iter().position(|&a| a == j) {
                Some(slot) => Jet2::variable(x.clone(), slot, m),
                None => Jet2::constant(x.clone(), m),
            })
            .collect();
        self.coords.iter().map(|c| c.eval_jet(&jets, kind, m)).collect()
    }

    /// Evaluates with all variables active.
    pub fn jet_eval_full(&self, pt: &[FieldScalar], kind: FieldKind) -> Result<Vec<Jet2>> {
        let active: Vec<usize> = (0..self.nvars).collect();
        self.jet_eval(pt, &active, kind)
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// the first row. Intended for the small chart matrices of the catalog.
pub fn det(mat: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = mat.len();
    debug_assert!(mat.iter().all(|r| r.len() == n));
    if n == 0 {
        return SparsePoly::constant(0, 1);
    }
    let nvars = mat[0][0].nvars;
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = SparsePoly::zero(nvars);
    for (j, entry) in mat[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = entry.mul(&det(&minor));
        acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldKind, FieldScalar, P1};

    fn qs(v: i64) -> FieldScalar {
        FieldScalar::from_i64(FieldKind::Rational, v)
    }

    #[test]
    fn eval_and_partial_match_hand_computation() {
        // f = 3 x^2 y - y + 5
        let f = SparsePoly::monomial(2, 3, vec![2, 1])
            .add(&SparsePoly::monomial(2, -1, vec![0, 1]))
            .add(&SparsePoly::constant(2, 5));
        let at = [qs(2), qs(7)];
        assert_eq!(f.eval(&at, FieldKind::Rational).unwrap(), qs(3 * 4 * 7 - 7 + 5));
        let fx = f.partial(0); // 6xy
        assert_eq!(fx.eval(&at, FieldKind::Rational).unwrap(), qs(6 * 2 * 7));
        let fy = f.partial(1); // 3x^2 - 1
        assert_eq!(fy.eval(&at, FieldKind::Rational).unwrap(), qs(11));
    }

    #[test]
    fn jet_eval_agrees_with_closed_form() {
        // f = x^3 y^-2 (Laurent), at (x, y) = (3, 2) over F_p and Q.
        let f = SparsePoly::monomial(2, 1, vec![3, -2]);
        for kind in [FieldKind::Rational, FieldKind::Prime(P1)] {
            let pt = [FieldScalar::from_i64(kind, 3), FieldScalar::from_i64(kind, 2)];
            let map = PolyMap::new(2, vec![f.clone()]);
            let jet = &map.jet_eval_full(&pt, kind).unwrap()[0];
            assert_eq!(jet.val, f.eval(&pt, kind).unwrap());
            for i in 0..2 {
                assert_eq!(jet.grad[i], f.partial(i).eval(&pt, kind).unwrap());
                for j in 0..2 {
                    assert_eq!(
                        *jet.hess_at(i, j),
                        f.partial(i).partial(j).eval(&pt, kind).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn laurent_at_zero_is_forbidden() {
        let f = SparsePoly::monomial(1, 1, vec![-1]);
        let r = f.eval(&[qs(0)], FieldKind::Rational);
        assert!(matches!(r, Err(Error::ForbiddenPoint(_))));
    }

    #[test]
    fn det_two_by_two() {
        // det [[x, 1], [1, y]] = xy - 1
        let x = SparsePoly::variable(2, 0);
        let y = SparsePoly::variable(2, 1);
        let one = SparsePoly::constant(2, 1);
        let d = det(&[vec![x.clone(), one.clone()], vec![one, y.clone()]]);
        let expect = x.mul(&y).sub(&SparsePoly::constant(2, 1));
        assert_eq!(d, expect);
    }

    #[test]
    fn det_three_by_three_vandermonde() {
        // Vandermonde on variables (x0, x1, x2): det = prod_{i<j} (xj - xi).
        let vars: Vec<SparsePoly> = (0..3).map(|i| SparsePoly::variable(3, i)).collect();
        let rows: Vec<Vec<SparsePoly>> = vars
            .iter()
            .map(|x| {
                vec![SparsePoly::constant(3, 1), x.clone(), x.mul(x)]
            })
            .collect();
        let d = det(&rows);
        let pt = [qs(2), qs(3), qs(5)];
        // (3-2)(5-2)(5-3) = 6
        assert_eq!(d.eval(&pt, FieldKind::Rational).unwrap(), qs(6));
    }
}
