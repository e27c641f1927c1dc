//! Ground-field scalars: residues modulo a fixed large prime, or exact
//! arbitrary-precision rationals, behind one tagged type.
//!
//! Rank computations run over at least two primes so that an agreeing answer
//! is a trustworthy generic value; witness verification runs over the
//! rationals so that incidence statements are unconditional. Every scalar
//! carries its field tag and public entry points refuse to mix tags.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// First working prime, `2^61 - 1`.
pub const P1: u64 = 2_305_843_009_213_693_951;
/// Second working prime, the next prime after `2^61`.
pub const P2: u64 = 2_305_843_009_213_693_967;
/// Primes used by default for randomized rank computations.
pub const DEFAULT_PRIMES: [u64; 2] = [P1, P2];

/// Tag identifying the ground field of a scalar.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldKind {
    /// The prime field with the given modulus.
    Prime(u64),
    /// The field of rational numbers.
    Rational,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime(p) => write!(f, "F_{p}"),
            FieldKind::Rational => write!(f, "Q"),
        }
    }
}

/// An exact field element tagged with its ground field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldScalar {
    Fp { value: u64, modulus: u64 },
    Rat(BigRational),
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    // a, b < p < 2^62, so the sum fits in u64.
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Modular inverse by the extended Euclidean algorithm. `a` must be nonzero
/// mod `p` and `p` prime.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of non-unit");
    old_s.rem_euclid(p as i128) as u64
}

impl FieldScalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldScalar::Fp { modulus, .. } => FieldKind::Prime(*modulus),
            FieldScalar::Rat(_) => FieldKind::Rational,
        }
    }

    pub fn zero(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Prime(p) => FieldScalar::Fp { value: 0, modulus: p },
            FieldKind::Rational => FieldScalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Prime(p) => FieldScalar::Fp { value: 1, modulus: p },
            FieldKind::Rational => FieldScalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(kind: FieldKind, v: i64) -> Self {
        match kind {
            FieldKind::Prime(p) => {
                let value = (v as i128).rem_euclid(p as i128) as u64;
                FieldScalar::Fp { value, modulus: p }
            }
            FieldKind::Rational => FieldScalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        FieldScalar::Rat(r)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Fp { value, .. } => *value == 0,
            FieldScalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Fp { value, .. } => *value == 1,
            FieldScalar::Rat(r) => r.is_one(),
        }
    }

    fn check_same(&self, other: &FieldScalar) {
        assert!(
            self.kind() == other.kind(),
            "mixed ground fields in scalar arithmetic: {} vs {}",
            self.kind(),
            other.kind()
        );
    }

    pub fn add(&self, other: &FieldScalar) -> FieldScalar {
        self.check_same(other);
        match (self, other) {
            (FieldScalar::Fp { value: a, modulus: p }, FieldScalar::Fp { value: b, .. }) => {
                FieldScalar::Fp { value: add_mod(*a, *b, *p), modulus: *p }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a + b),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &FieldScalar) -> FieldScalar {
        self.check_same(other);
        match (self, other) {
            (FieldScalar::Fp { value: a, modulus: p }, FieldScalar::Fp { value: b, .. }) => {
                FieldScalar::Fp { value: sub_mod(*a, *b, *p), modulus: *p }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a - b),
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &FieldScalar) -> FieldScalar {
        self.check_same(other);
        match (self, other) {
            (FieldScalar::Fp { value: a, modulus: p }, FieldScalar::Fp { value: b, .. }) => {
                FieldScalar::Fp { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a * b),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> FieldScalar {
        match self {
            FieldScalar::Fp { value, modulus } => FieldScalar::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            FieldScalar::Rat(r) => FieldScalar::Rat(-r),
        }
    }

    pub fn inv(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Fp { value, modulus } => FieldScalar::Fp {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
            FieldScalar::Rat(r) => FieldScalar::Rat(r.recip()),
        })
    }

    pub fn div(&self, other: &FieldScalar) -> Result<FieldScalar> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self^e` for integer `e`; negative exponents require a unit base.
    pub fn pow_i64(&self, e: i64) -> Result<FieldScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = FieldScalar::one(self.kind());
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

    /// The rational payload, if this scalar lives over `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldScalar::Rat(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Fp { value, .. } => write!(f, "{value}"),
            FieldScalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Checks that all scalars of a slice share one field tag and returns it.
pub fn common_kind(scalars: &[FieldScalar]) -> Result<FieldKind> {
    let first = scalars
        .first()
        .ok_or_else(|| Error::InvalidInput("empty scalar list".into()))?
        .kind();
    for s in scalars {
        if s.kind() != first {
            return Err(Error::MixedField(format!("{} vs {}", first, s.kind())));
        }
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_large_and_distinct() {
        assert!(P1 > 1 << 60);
        assert!(P2 > 1 << 60);
        assert_ne!(P1, P2);
    }

    #[test]
    fn modular_inverse_round_trips() {
        for v in [1u64, 2, 17, P1 - 1, 123_456_789] {
            let a = FieldScalar::Fp { value: v, modulus: P1 };
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn negative_values_normalize() {
        let a = FieldScalar::from_i64(FieldKind::Prime(P1), -3);
        let b = FieldScalar::from_i64(FieldKind::Prime(P1), 3);
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn rational_pow_matches_naive() {
        let k = FieldKind::Rational;
        let x = FieldScalar::from_i64(k, 7);
        assert_eq!(x.pow_i64(3).unwrap(), FieldScalar::from_i64(k, 343));
        let inv = x.pow_i64(-1).unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn zero_inverse_is_an_error() {
        assert!(FieldScalar::zero(FieldKind::Prime(P1)).inv().is_err());
        assert!(FieldScalar::zero(FieldKind::Rational).inv().is_err());
    }

    #[test]
    fn mixed_kinds_are_detected() {
        let a = FieldScalar::from_i64(FieldKind::Prime(P1), 1);
        let b = FieldScalar::from_i64(FieldKind::Rational, 1);
        assert!(common_kind(&[a, b]).is_err());
    }
}
