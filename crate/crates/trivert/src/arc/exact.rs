//! Exact sign arithmetic for quadratic irrationalities.
//!
//! A segment with rational endpoints meets a circle at parameters of the
//! form `(-B +- sqrt(D)) / (2A)`; coordinates of those points live in
//! `Q(sqrt(D))`. All predicates reduce to the sign of `r + s*sqrt(D)` with
//! `r`, `s`, `D` rational, which is decidable by squaring.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

pub type Rat = BigRational;

/// Sign of `r + s * sqrt(delta)` for rational `r`, `s` and `delta >= 0`.
pub fn sign_lin_sqrt(r: &Rat, s: &Rat, delta: &Rat) -> i32 {
    debug_assert!(!delta.is_negative());
    let sign = |x: &Rat| -> i32 {
        if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        }
    };
    if s.is_zero() || delta.is_zero() {
        return sign(r);
    }
    let sr = sign(r);
    let ss = sign(s);
    if sr == 0 {
        return ss;
    }
    if sr == ss {
        return sr;
    }
    // opposite signs: compare r^2 against s^2 * delta
    match (r * r).cmp(&(s * s * delta)) {
        Ordering::Greater => sr,
        Ordering::Less => ss,
        Ordering::Equal => 0,
    }
}

/// A number `r + s * sqrt(delta)`.
#[derive(Debug, Clone)]
pub struct QuadVal {
    pub r: Rat,
    pub s: Rat,
    pub delta: Rat,
}

impl QuadVal {

    pub fn sign(&self) -> i32 {
        sign_lin_sqrt(&self.r, &self.s, &self.delta)
    }

    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let f = |x: &Rat| x.to_f64().unwrap_or(f64::NAN);
        f(&self.r) + f(&self.s) * f(&self.delta).sqrt()
    }
}

/// Parameter of an event along one segment: either rational or a root
/// `(-B +- sqrt(delta)) / (2A)` of the segment's distance quadratic. All
/// roots of one segment share `A` and `B`, so comparisons reduce to the
/// branch and discriminant.
#[derive(Debug, Clone)]
pub enum TPos {
    Rational(Rat),
    Root { plus: bool, delta: Rat },
}

/// Compare two event parameters on a segment with quadratic coefficients
/// `A > 0` and `B`. Returns `None` when the parameters coincide, which the
/// caller treats as a degeneracy.
pub fn cmp_tpos(a2: &Rat, b: &Rat, x: &TPos, y: &TPos) -> Option<Ordering> {
    let strict = |o: Ordering| if o == Ordering::Equal { None } else { Some(o) };
    match (x, y) {
        (TPos::Rational(p), TPos::Rational(q)) => strict(p.cmp(q)),
        (TPos::Root { plus: p1, delta: d1 }, TPos::Root { plus: p2, delta: d2 }) => {
            match (p1, p2) {
                (false, true) => Some(Ordering::Less),
                (true, false) => Some(Ordering::Greater),
                (false, false) => strict(d2.cmp(d1)),
                (true, true) => strict(d1.cmp(d2)),
            }
        }
        (TPos::Rational(p), TPos::Root { plus, delta }) => {
            // sign of p - (-B +- sqrt(delta)) / (2A): scale by 2A > 0
            let lin = Rat::from_integer(2.into()) * a2 * p + b;
            let s = if *plus {
                Rat::from_integer((-1).into())
            } else {
                Rat::from_integer(1.into())
            };
            match sign_lin_sqrt(&lin, &s, delta) {
                0 => None,
                v if v > 0 => Some(Ordering::Greater),
                _ => Some(Ordering::Less),
            }
        }
        (TPos::Root { .. }, TPos::Rational(_)) => {
            cmp_tpos(a2, b, y, x).map(Ordering::reverse)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sign_cases() {
        // 1 - sqrt(2) < 0, 2 - sqrt(2) > 0, 3 - sqrt(9) = 0
        assert_eq!(sign_lin_sqrt(&rat(1, 1), &rat(-1, 1), &rat(2, 1)), -1);
        assert_eq!(sign_lin_sqrt(&rat(2, 1), &rat(-1, 1), &rat(2, 1)), 1);
        assert_eq!(sign_lin_sqrt(&rat(3, 1), &rat(-1, 1), &rat(9, 1)), 0);
        assert_eq!(sign_lin_sqrt(&rat(0, 1), &rat(1, 2), &rat(3, 1)), 1);
        assert_eq!(sign_lin_sqrt(&rat(-1, 2), &rat(0, 1), &rat(5, 1)), -1);
    }

    #[test]
    fn root_ordering() {
        // t^2 - 1: roots at +-1 via A=1, B=0: minus root < plus root,
        // and larger discriminant pushes the minus root left
        let a2 = rat(1, 1);
        let b = rat(0, 1);
        let lo = TPos::Root { plus: false, delta: rat(4, 1) };
        let hi = TPos::Root { plus: true, delta: rat(1, 1) };
        assert_eq!(cmp_tpos(&a2, &b, &lo, &hi), Some(Ordering::Less));
        let mid = TPos::Rational(rat(0, 1));
        assert_eq!(cmp_tpos(&a2, &b, &mid, &lo), Some(Ordering::Greater));
        assert_eq!(cmp_tpos(&a2, &b, &mid, &hi), Some(Ordering::Less));
    }
}
