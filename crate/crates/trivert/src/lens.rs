//! Oriented lens-space arithmetic and the thickened-torus bridge
//! construction, plus connected-sum normal forms of the 3-manifolds that
//! arise from it.
//!
//! The orientation convention is pinned by a single rule: the manifold built
//! from a curve pair `(alpha, beta)` is `L(p, q)` where `p` is the
//! intersection number of the pair and `q` is the first coordinate of `beta`
//! in a basis taking `alpha` to `(1, 0)`. Choosing another such basis shifts
//! `q` mod `p`, and flipping representative signs lands on `L(-p, -q)`,
//! which names the same oriented manifold.

use crate::torus::{solve_basis, PrimitiveClass};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LensError {
    #[error("L({0}, {1}) is not defined: gcd is not 1")]
    NotCoprime(BigInt, BigInt),
}

/// An oriented lens space in normal form.
///
/// `p = 0` is `S^1 x S^2`, `p = 1` is `S^3` (with `q` pinned to 1 and 0
/// respectively); for `p >= 2` the residue satisfies `0 < q < p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

impl LensSpace {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, LensError> {
        let mut p = p.into();
        let mut q = q.into();
        if p.abs().gcd(&q.abs()) != BigInt::one() {
            return Err(LensError::NotCoprime(p, q));
        }
        if p.is_negative() {
            p = -p;
            q = -q;
        }
        if p.is_zero() {
            return Ok(Self { p, q: BigInt::one() });
        }
        if p.is_one() {
            return Ok(Self { p, q: BigInt::zero() });
        }
        q = q.mod_floor(&p);
        Ok(Self { p, q })
    }

    pub fn sphere() -> Self {
        Self { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn s1_x_s2() -> Self {
        Self { p: BigInt::zero(), q: BigInt::one() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_sphere(&self) -> bool {
        self.p.is_one()
    }

    pub fn is_s1_x_s2(&self) -> bool {
        self.p.is_zero()
    }

    pub fn mirror(&self) -> Self {
        Self::new(self.p.clone(), -self.q.clone()).expect("mirror stays coprime")
    }

    /// `q^{-1} mod p`, the other normalized representative of the same
    /// oriented manifold. Only meaningful for `p >= 2`.
    fn q_inverse(&self) -> BigInt {
        let e = self.q.extended_gcd(&self.p);
        e.x.mod_floor(&self.p)
    }

    /// Smaller of `q` and `q^{-1} mod p`: a complete invariant of the
    /// oriented diffeomorphism type together with `p`.
    pub fn oriented_key(&self) -> (BigInt, BigInt) {
        if self.p <= BigInt::one() {
            return (self.p.clone(), self.q.clone());
        }
        let qi = self.q_inverse();
        (self.p.clone(), self.q.clone().min(qi))
    }

    pub fn is_oriented_diffeo(&self, other: &Self) -> bool {
        self.oriented_key() == other.oriented_key()
    }

    pub fn is_diffeo(&self, other: &Self) -> bool {
        self.is_oriented_diffeo(other) || self.is_oriented_diffeo(&other.mirror())
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_sphere() {
            write!(f, "S3")
        } else if self.is_s1_x_s2() {
            write!(f, "S1xS2")
        } else {
            write!(f, "L({},{})", self.p, self.q)
        }
    }
}

/// The closed 3-manifold obtained from a thickened torus by attaching
/// 2-handles along `alpha` on one side and `beta` on the other and filling
/// the boundary spheres.
///
/// Parallel inputs give `S^1 x S^2`; intersection number one gives `S^3`.
pub fn from_curve_pair(alpha: &PrimitiveClass, beta: &PrimitiveClass) -> LensSpace {
    let t = solve_basis(alpha);
    let (b1, b2) = t.apply_raw((beta.p(), beta.q()));
    LensSpace::new(b2, b1).expect("image of a primitive vector is primitive")
}

/// An oriented closed 3-manifold in connected-sum normal form: lens
/// summands (each with `p >= 2`) plus a count of `S^1 x S^2` summands.
/// The empty sum is `S^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeManifold {
    lens: Vec<LensSpace>,
    s1s2: usize,
}

fn lens_order(a: &LensSpace, b: &LensSpace) -> Ordering {
    b.p().cmp(a.p()).then_with(|| b.q().cmp(a.q()))
}

impl ThreeManifold {
    pub fn sphere() -> Self {
        Self { lens: Vec::new(), s1s2: 0 }
    }

    pub fn s1_x_s2(count: usize) -> Self {
        Self { lens: Vec::new(), s1s2: count }
    }

    pub fn from_lens(l: LensSpace) -> Self {
        if l.is_sphere() {
            Self::sphere()
        } else if l.is_s1_x_s2() {
            Self::s1_x_s2(1)
        } else {
            Self { lens: vec![l], s1s2: 0 }
        }
    }

    pub fn lens_summands(&self) -> &[LensSpace] {
        &self.lens
    }

    pub fn s1s2_count(&self) -> usize {
        self.s1s2
    }

    pub fn is_sphere(&self) -> bool {
        self.lens.is_empty() && self.s1s2 == 0
    }

    pub fn connected_sum(&self, other: &Self) -> Self {
        let mut lens = self.lens.clone();
        lens.extend(other.lens.iter().cloned());
        lens.sort_by(lens_order);
        Self { lens, s1s2: self.s1s2 + other.s1s2 }
    }

    pub fn mirror(&self) -> Self {
        let mut lens: Vec<_> = self.lens.iter().map(LensSpace::mirror).collect();
        lens.sort_by(lens_order);
        Self { lens, s1s2: self.s1s2 }
    }

    /// Sorted oriented-diffeomorphism keys of the summands plus the
    /// `S^1 x S^2` count: a complete invariant of the normal form.
    pub fn oriented_key(&self) -> (Vec<(BigInt, BigInt)>, usize) {
        let mut keys: Vec<_> = self.lens.iter().map(LensSpace::oriented_key).collect();
        keys.sort();
        (keys, self.s1s2)
    }

    /// Oriented diffeomorphism of normal forms: summand-wise lens
    /// equivalence and equal `S^1 x S^2` counts.
    pub fn equal(&self, other: &Self) -> bool {
        self.oriented_key() == other.oriented_key()
    }

    /// Canonical text rendering: summands sorted by descending `(p, q)`,
    /// joined with `" # "`; the empty sum renders as `S3`.
    pub fn render(&self) -> String {
        if self.is_sphere() {
            return "S3".to_string();
        }
        let mut parts: Vec<String> = self.lens.iter().map(|l| l.to_string()).collect();
        parts.extend(std::iter::repeat("S1xS2".to_string()).take(self.s1s2));
        parts.join(" # ")
    }
}

impl fmt::Display for ThreeManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromIterator<ThreeManifold> for ThreeManifold {
    fn from_iter<T: IntoIterator<Item = ThreeManifold>>(iter: T) -> Self {
        iter.into_iter()
            .fold(ThreeManifold::sphere(), |acc, m| acc.connected_sum(&m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: i64, q: i64) -> PrimitiveClass {
        PrimitiveClass::new(p, q).unwrap()
    }

    fn lens(p: i64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn curve_pair_values() {
        assert_eq!(from_curve_pair(&pc(1, 0), &pc(-1, 3)), lens(3, 2));
        assert!(from_curve_pair(&pc(0, 1), &pc(0, -1)).is_s1_x_s2());
        assert_eq!(from_curve_pair(&pc(2, 1), &pc(-1, 4)), lens(9, 4));
        // the two presentations of V_cc in the exceptional branch
        assert_eq!(from_curve_pair(&pc(5, -1), &pc(-1, 2)), lens(9, -2));
        assert_eq!(from_curve_pair(&pc(5, 1), &pc(-1, -2)), lens(9, 2));
    }

    #[test]
    fn mirror_values() {
        assert_eq!(lens(9, 2).mirror(), lens(9, 7));
        assert_eq!(LensSpace::s1_x_s2().mirror(), LensSpace::s1_x_s2());
        assert_eq!(lens(2, 1).mirror(), lens(2, 1));
    }

    #[test]
    fn classification() {
        assert!(lens(7, 2).is_oriented_diffeo(&lens(7, 4)));
        assert!(lens(9, 4).is_oriented_diffeo(&lens(9, 7)));
        assert!(!lens(9, 2).is_oriented_diffeo(&lens(9, 7)));
        assert!(lens(9, 2).is_diffeo(&lens(9, 7)));
        assert!(!lens(5, 1).is_diffeo(&lens(5, 2)));
    }

    #[test]
    fn sums() {
        let l92 = ThreeManifold::from_lens(lens(9, 2));
        assert!(ThreeManifold::sphere().connected_sum(&l92).equal(&l92));
        let m = ThreeManifold::from_lens(lens(4, 1))
            .connected_sum(&ThreeManifold::from_lens(lens(3, 1)));
        assert_eq!(m.render(), "L(4,1) # L(3,1)");
        let s = ThreeManifold::s1_x_s2(1).connected_sum(&ThreeManifold::s1_x_s2(1));
        assert_eq!(s.s1s2_count(), 2);
    }

    #[test]
    fn normal_form_equality() {
        let a = ThreeManifold::from_lens(lens(9, 4));
        let b = ThreeManifold::from_lens(lens(9, 7));
        let c = ThreeManifold::from_lens(lens(9, 2));
        assert!(a.equal(&b));
        assert!(!c.equal(&b));
        assert!(ThreeManifold::sphere().equal(&ThreeManifold::sphere()));
    }

    #[test]
    fn validation_set() {
        // printed values of the main-case computations, q in a small range
        for q in 2i64..=8 {
            let c2p = pc(-1, q);
            assert_eq!(from_curve_pair(&pc(1, 0), &c2p), lens(q, -1));
            let c2 = pc(q - 2, 1);
            assert_eq!(from_curve_pair(&c2, &pc(0, 1)), lens(q - 2, 1));
            if q >= 3 {
                let vcc = from_curve_pair(&c2, &c2p);
                assert_eq!(vcc, lens((q - 1) * (q - 1), q));
            }
        }
        // fourth-power branch values
        for s in [1i64, -1] {
            let b2p = pc(4 * s, 1);
            assert!(from_curve_pair(&b2p, &pc(0, 1)).is_oriented_diffeo(&lens(4 * s, 1)));
            for e2 in [1i64, -1] {
                let c2 = pc(-1 + 4 * s * e2, e2);
                let vcb = from_curve_pair(&c2, &pc(0, 1));
                assert!(vcb.is_oriented_diffeo(&lens(4 * s - e2, 1)));
            }
        }
    }
}
