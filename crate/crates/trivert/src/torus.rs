//! Exact algebra of primitive homology classes and mapping classes on the
//! reference torus fiber.
//!
//! Curves are unoriented essential simple closed curves, identified with
//! primitive vectors in `Z^2` up to global sign. Mapping classes are
//! determinant-one integer 2x2 matrices acting on those vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("({0}, {1}) is not a primitive vector")]
    NotPrimitive(BigInt, BigInt),
    #[error("matrix [[{0}, {1}], [{2}, {3}]] does not have determinant 1")]
    NotUnimodular(BigInt, BigInt, BigInt, BigInt),
}

/// An unoriented essential simple closed curve on the torus: a primitive
/// integer pair up to sign. The stored representative has its first nonzero
/// coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveClass {
    p: BigInt,
    q: BigInt,
}

impl PrimitiveClass {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, TorusError> {
        let p = p.into();
        let q = q.into();
        if p.abs().gcd(&q.abs()) != BigInt::one() {
            return Err(TorusError::NotPrimitive(p, q));
        }
        Ok(Self::canonical(p, q))
    }

    fn canonical(p: BigInt, q: BigInt) -> Self {
        let flip = p.is_negative() || (p.is_zero() && q.is_negative());
        if flip {
            Self { p: -p, q: -q }
        } else {
            Self { p, q }
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    fn q1(&self) -> (&BigInt, &BigInt) {
        (&self.p, &self.q)
    }

    pub fn components(&self) -> (BigInt, BigInt) {
        (self.p.clone(), self.q.clone())
    }
}

impl fmt::Display for PrimitiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Algebraic intersection number of the canonical representatives,
/// `x1*y2 - x2*y1`. Defined up to sign for unoriented classes.
pub fn intersection(x: &PrimitiveClass, y: &PrimitiveClass) -> BigInt {
    &x.p * &y.q - &x.q * &y.p
}

/// True iff the classes are parallel as unoriented curves.
pub fn is_parallel(x: &PrimitiveClass, y: &PrimitiveClass) -> bool {
    intersection(x, y).is_zero()
}

/// An orientation-preserving torus mapping class: an integer 2x2 matrix of
/// determinant 1 acting on homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClass {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl MappingClass {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, TorusError> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d - &b * &c != BigInt::one() {
            return Err(TorusError::NotUnimodular(a, b, c, d));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Representation matrix of the right-handed Dehn twist along `gamma`:
    /// `[[1 - pq, p^2], [-q^2, 1 + pq]]`.
    pub fn dehn_twist(gamma: &PrimitiveClass) -> Self {
        let (p, q) = gamma.q1();
        Self {
            a: BigInt::one() - p * q,
            b: p * p,
            c: -(q * q),
            d: BigInt::one() + p * q,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Matrix-vector product on raw integer vectors, no re-canonicalization.
    pub fn apply_raw(&self, v: (&BigInt, &BigInt)) -> (BigInt, BigInt) {
        (&self.a * v.0 + &self.b * v.1, &self.c * v.0 + &self.d * v.1)
    }

    /// Action on an unoriented class, re-canonicalized. Unimodularity keeps
    /// the image primitive.
    pub fn apply(&self, x: &PrimitiveClass) -> PrimitiveClass {
        let (p, q) = self.apply_raw((&x.p, &x.q));
        PrimitiveClass::canonical(p, q)
    }

    pub fn entries(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        (self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone())
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A determinant-one matrix `T` with `T * x = (1, 0)`.
///
/// With `x = (p, q)` the bottom row is `(-q, p)` and the top row is the
/// minimal nonnegative Bezout pair for `a p + b q = 1` (the unique solution
/// with `0 <= a < |q|` when `q != 0`, and `b = 0` when `q = 0`).
pub fn solve_basis(x: &PrimitiveClass) -> MappingClass {
    let (p, q) = x.q1();
    if q.is_zero() {
        // canonical representative is (1, 0)
        return MappingClass::identity();
    }
    let qa = q.abs();
    let e = p.extended_gcd(&qa);
    // e.x * p == 1 mod |q|
    let a = e.x.mod_floor(&qa);
    let b = (BigInt::one() - &a * p) / q;
    MappingClass {
        a,
        b,
        c: -q.clone(),
        d: p.clone(),
    }
}
