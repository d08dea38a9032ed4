//! Simplified (2,0)-trisection data: construction of the standard families,
//! validation, the six-tuple of vertical 3-manifolds, reflection, and
//! identification of the source 4-manifold.

use crate::homology::{hopf_pair_form, FourManifoldName};
use crate::lens::{from_curve_pair, LensSpace, ThreeManifold};
use crate::torus::{intersection, is_parallel, MappingClass, PrimitiveClass};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Monodromy of the fiber along the loop between the two cusped circles:
/// trivial, a single Dehn twist, or a fourth power of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Monodromy {
    Identity,
    Twist { d: PrimitiveClass, sign: i8 },
    FourthTwist { d: PrimitiveClass, sign: i8 },
}

impl Monodromy {
    pub fn matrix(&self) -> MappingClass {
        match self {
            Monodromy::Identity => MappingClass::identity(),
            Monodromy::Twist { d, sign } => MappingClass::dehn_twist(d).pow(*sign as i64),
            Monodromy::FourthTwist { d, sign } => {
                MappingClass::dehn_twist(d).pow(4 * *sign as i64)
            }
        }
    }

    pub fn twist_curve(&self) -> Option<&PrimitiveClass> {
        match self {
            Monodromy::Identity => None,
            Monodromy::Twist { d, .. } | Monodromy::FourthTwist { d, .. } => Some(d),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Monodromy::Identity)
    }
}

impl fmt::Display for Monodromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monodromy::Identity => write!(f, "identity"),
            Monodromy::Twist { d, sign } => {
                write!(f, "twist {} along {}", if *sign > 0 { "+1" } else { "-1" }, d)
            }
            Monodromy::FourthTwist { d, sign } => {
                write!(f, "twist4 {} along {}", if *sign > 0 { "+1" } else { "-1" }, d)
            }
        }
    }
}

/// A constraint violated by a [`TrisectionData`] value. Violations are data,
/// not errors: `validate` returns all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CuspTransversality { pair: &'static str, value: BigInt },
    MonodromyConsistency { relation: &'static str },
    CaseConstraint { detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CuspTransversality { pair, value } => {
                write!(f, "cusp transversality fails for {pair}: |intersection| = {value}")
            }
            Violation::MonodromyConsistency { relation } => {
                write!(f, "monodromy consistency fails: {relation}")
            }
            Violation::CaseConstraint { detail } => write!(f, "case constraint fails: {detail}"),
        }
    }
}

/// Vanishing-cycle data of a simplified (2,0)-trisection map: the six cycles
/// on the reference torus fiber together with the monodromy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrisectionData {
    pub a2: PrimitiveClass,
    pub b2: PrimitiveClass,
    pub c2: PrimitiveClass,
    pub a2p: PrimitiveClass,
    pub b2p: PrimitiveClass,
    pub c2p: PrimitiveClass,
    pub mu: Monodromy,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("q = {0} puts the twist curve parallel to a vanishing cycle; not in the transverse case")]
    DegenerateQ(BigInt),
}

#[derive(Debug, Error)]
pub enum DataError {
    #[error("invalid trisection data: {}", render_violations(.0))]
    Invalid(Vec<Violation>),
}

fn render_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Subcase of the transverse family, named by the first coordinate of the
/// primed a-cycle in the normalized basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseASubcase {
    /// `a2'` parallel to `b2`; one vertical manifold over an off-diagonal
    /// arc is `S^1 x S^2`. The parameter is unbounded.
    Main { q: BigInt },
    /// First coordinate -1; sporadic.
    ExceptionalOne,
    /// First coordinate -2; sporadic.
    ExceptionalTwo,
}

impl TrisectionData {
    /// Transverse-case data: the twist curve meets the a-cycle once.
    /// `sign` is the exponent of the Dehn twist.
    pub fn case_a(sign: i8, subcase: CaseASubcase) -> Result<Self, BuildError> {
        assert!(sign == 1 || sign == -1);
        let s = BigInt::from(sign);
        let (r, q) = match &subcase {
            CaseASubcase::Main { q } => {
                if *q == s {
                    // d = (r, 1) with r = -sign is parallel to (-1, q) exactly here
                    return Err(BuildError::DegenerateQ(q.clone()));
                }
                (-s.clone(), q.clone())
            }
            CaseASubcase::ExceptionalOne => (BigInt::from(-2) * &s, BigInt::from(2) * &s),
            CaseASubcase::ExceptionalTwo => (BigInt::from(-3) * &s, s.clone()),
        };
        let d = PrimitiveClass::new(r, BigInt::one()).expect("(r, 1) is primitive");
        let mu = Monodromy::Twist { d, sign };
        Ok(Self::from_unprimed(
            PrimitiveClass::new(1, 0).unwrap(),
            PrimitiveClass::new(0, 1).unwrap(),
            PrimitiveClass::new(BigInt::from(-1), q).expect("(-1, q) is primitive"),
            mu,
        ))
    }

    /// Parallel-case data: the twist curve is parallel to the a-cycle.
    /// `power` is 1 or 4, `sign` the exponent sign, `eps2` the second
    /// coordinate of the unprimed c-cycle.
    pub fn case_b(power: u8, sign: i8, eps2: i8) -> Self {
        assert!(power == 1 || power == 4);
        assert!(sign == 1 || sign == -1);
        assert!(eps2 == 1 || eps2 == -1);
        let d = PrimitiveClass::new(1, 0).unwrap();
        let mu = if power == 1 {
            Monodromy::Twist { d, sign }
        } else {
            Monodromy::FourthTwist { d, sign }
        };
        Self::from_unprimed(
            PrimitiveClass::new(1, 0).unwrap(),
            PrimitiveClass::new(0, 1).unwrap(),
            PrimitiveClass::new(-1, eps2 as i64).unwrap(),
            mu,
        )
    }

    /// Identity-monodromy data.
    pub fn identity() -> Self {
        Self::from_unprimed(
            PrimitiveClass::new(1, 0).unwrap(),
            PrimitiveClass::new(0, 1).unwrap(),
            PrimitiveClass::new(-1, 1).unwrap(),
            Monodromy::Identity,
        )
    }

    /// Derive the primed cycles from `a2`, `b2`, `c2'` and the monodromy,
    /// using the relations `a2 = mu(a2')`, `b2' = mu(b2)`, `c2 = mu(c2')`.
    pub fn from_unprimed(
        a2: PrimitiveClass,
        b2: PrimitiveClass,
        c2p: PrimitiveClass,
        mu: Monodromy,
    ) -> Self {
        let m = mu.matrix();
        let a2p = m.inverse().apply(&a2);
        let b2p = m.apply(&b2);
        let c2 = m.apply(&c2p);
        Self { a2, b2, c2, a2p, b2p, c2p, mu }
    }

    /// All violated constraints; empty iff the data is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (pair, x, y) in [
            ("a2 . b2", &self.a2, &self.b2),
            ("b2 . c2'", &self.b2, &self.c2p),
            ("a2' . c2'", &self.a2p, &self.c2p),
        ] {
            let v = intersection(x, y).abs();
            if !v.is_one() {
                out.push(Violation::CuspTransversality { pair, value: v });
            }
        }
        let m = self.mu.matrix();
        for (relation, lhs, rhs) in [
            ("a2 = mu(a2')", &self.a2, m.apply(&self.a2p)),
            ("b2' = mu(b2)", &self.b2p, m.apply(&self.b2)),
            ("c2 = mu(c2')", &self.c2, m.apply(&self.c2p)),
        ] {
            if *lhs != rhs {
                out.push(Violation::MonodromyConsistency { relation });
            }
        }
        if let Some(d) = self.mu.twist_curve() {
            let cycles = [&self.a2, &self.b2, &self.c2];
            let parallel = cycles.iter().any(|c| is_parallel(c, d));
            match &self.mu {
                Monodromy::FourthTwist { .. } if !parallel => {
                    out.push(Violation::CaseConstraint {
                        detail: "fourth-power twist requires the twist curve parallel to a vanishing cycle".into(),
                    });
                }
                Monodromy::Twist { .. } if !parallel => {
                    let once = cycles.iter().any(|c| intersection(c, d).abs().is_one());
                    if !once {
                        out.push(Violation::CaseConstraint {
                            detail: "non-parallel twist curve must meet a vanishing cycle once".into(),
                        });
                    }
                }
                _ => {}
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The six-tuple of vertical 3-manifolds over the standard arcs,
    /// computed directly from the vanishing cycles.
    pub fn six_tuple(&self) -> Result<SixTuple, DataError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(DataError::Invalid(violations));
        }
        if self.mu.is_identity() {
            return Ok(SixTuple {
                v_aa: ThreeManifold::s1_x_s2(1),
                v_bb: ThreeManifold::s1_x_s2(1),
                v_cc: ThreeManifold::s1_x_s2(1),
                v_ba: ThreeManifold::sphere(),
                v_cb: ThreeManifold::sphere(),
                v_ac: ThreeManifold::sphere(),
            });
        }
        let m = |x: &PrimitiveClass, y: &PrimitiveClass| {
            ThreeManifold::from_lens(from_curve_pair(x, y))
        };
        Ok(SixTuple {
            v_aa: m(&self.a2, &self.a2p),
            v_bb: m(&self.b2p, &self.b2),
            v_cc: m(&self.c2, &self.c2p),
            v_ba: m(&self.b2, &self.a2p),
            v_cb: m(&self.c2, &self.b2),
            v_ac: m(&self.a2, &self.c2p),
        })
    }
}

/// The vertical 3-manifolds over the six standard arcs, in the order
/// `(aa, bb, cc; ba, cb, ac)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixTuple {
    pub v_aa: ThreeManifold,
    pub v_bb: ThreeManifold,
    pub v_cc: ThreeManifold,
    pub v_ba: ThreeManifold,
    pub v_cb: ThreeManifold,
    pub v_ac: ThreeManifold,
}

impl SixTuple {
    pub fn new(
        v_aa: ThreeManifold,
        v_bb: ThreeManifold,
        v_cc: ThreeManifold,
        v_ba: ThreeManifold,
        v_cb: ThreeManifold,
        v_ac: ThreeManifold,
    ) -> Self {
        Self { v_aa, v_bb, v_cc, v_ba, v_cb, v_ac }
    }

    pub fn entries(&self) -> [&ThreeManifold; 6] {
        [&self.v_aa, &self.v_bb, &self.v_cc, &self.v_ba, &self.v_cb, &self.v_ac]
    }

    /// Image under the orientation-reversing disc symmetry exchanging the
    /// b- and c-labels: every entry is mirrored and the off-diagonal
    /// entries swap ends.
    pub fn reflect(&self) -> Self {
        Self {
            v_aa: self.v_aa.mirror(),
            v_bb: self.v_cc.mirror(),
            v_cc: self.v_bb.mirror(),
            v_ba: self.v_ac.mirror(),
            v_cb: self.v_cb.mirror(),
            v_ac: self.v_ba.mirror(),
        }
    }

    fn sort_key(&self) -> Vec<(Vec<(BigInt, BigInt)>, usize)> {
        self.entries().iter().map(|m| m.oriented_key()).collect()
    }

    /// Representative of the reflection class: the smaller of the tuple and
    /// its reflection under the oriented-classification key. Idempotent.
    pub fn canonical(&self) -> Self {
        let r = self.reflect();
        if r.sort_key() < self.sort_key() {
            r
        } else {
            self.clone()
        }
    }

    /// Entrywise oriented diffeomorphism.
    pub fn equal(&self, other: &Self) -> bool {
        self.entries()
            .iter()
            .zip(other.entries())
            .all(|(a, b)| a.equal(b))
    }

    /// Equality of reflection classes.
    pub fn equal_up_to_reflection(&self, other: &Self) -> bool {
        self.equal(other) || self.equal(&other.reflect())
    }

    /// Two-row rendering in the canonical lens notation.
    pub fn render_table(&self) -> String {
        let cell = |m: &ThreeManifold| m.render();
        let top = [cell(&self.v_aa), cell(&self.v_bb), cell(&self.v_cc)];
        let bottom = [cell(&self.v_ba), cell(&self.v_cb), cell(&self.v_ac)];
        let w: Vec<usize> = (0..3)
            .map(|i| top[i].len().max(bottom[i].len()))
            .collect();
        let row = |r: &[String; 3]| {
            format!(
                "[ {:<w0$}  {:<w1$}  {:<w2$} ]",
                r[0],
                r[1],
                r[2],
                w0 = w[0],
                w1 = w[1],
                w2 = w[2]
            )
        };
        format!("{}\n{}", row(&top), row(&bottom))
    }
}

/// Closed forms of the classified six-tuples, used by tests and by the
/// 4-manifold table lookup.
pub mod closed_forms {
    use super::*;

    fn lens(p: BigInt, q: BigInt) -> ThreeManifold {
        ThreeManifold::from_lens(LensSpace::new(p, q).expect("coprime by construction"))
    }

    fn lens_i(p: i64, q: i64) -> ThreeManifold {
        lens(BigInt::from(p), BigInt::from(q))
    }

    /// Transverse-case main family at parameter `q` and sign `eps`.
    pub fn case_a_main(q: &BigInt, eps: i8) -> SixTuple {
        let e = BigInt::from(eps);
        let qm1 = q - BigInt::one();
        SixTuple::new(
            ThreeManifold::sphere(),
            ThreeManifold::sphere(),
            lens(&qm1 * &qm1, &qm1 + &e),
            ThreeManifold::s1_x_s2(1),
            lens(q - BigInt::from(2), e.clone()),
            lens(q.clone(), -e),
        )
    }

    /// Transverse-case sporadic family at sign `eps`.
    pub fn case_a_exceptional(eps: i8) -> SixTuple {
        let e = eps as i64;
        SixTuple::new(
            ThreeManifold::sphere(),
            lens_i(9, 2 * e),
            lens_i(4, e),
            lens_i(2, 1),
            lens_i(5, e),
            ThreeManifold::sphere(),
        )
    }

    /// Parallel-case single-twist family at sign `eps`.
    pub fn case_b_single(eps: i8) -> SixTuple {
        SixTuple::new(
            ThreeManifold::s1_x_s2(1),
            ThreeManifold::sphere(),
            ThreeManifold::sphere(),
            ThreeManifold::sphere(),
            lens_i(1 + eps as i64, 1),
            ThreeManifold::sphere(),
        )
    }

    /// Parallel-case fourth-power family at sign `eps`.
    pub fn case_b_fourth(eps: i8) -> SixTuple {
        SixTuple::new(
            ThreeManifold::s1_x_s2(1),
            lens_i(4, 1),
            lens_i(4, 1),
            ThreeManifold::sphere(),
            lens_i(4 + eps as i64, 1),
            ThreeManifold::sphere(),
        )
    }

    /// Identity-monodromy tuple.
    pub fn identity_case() -> SixTuple {
        SixTuple::new(
            ThreeManifold::s1_x_s2(1),
            ThreeManifold::s1_x_s2(1),
            ThreeManifold::s1_x_s2(1),
            ThreeManifold::sphere(),
            ThreeManifold::sphere(),
            ThreeManifold::sphere(),
        )
    }
}

/// The source 4-manifold determined by a six-tuple, or the one intrinsically
/// ambiguous pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FourManifoldVerdict {
    Unique(FourManifoldName),
    Pair(FourManifoldName, FourManifoldName),
}

impl fmt::Display for FourManifoldVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourManifoldVerdict::Unique(n) => write!(f, "{n}"),
            FourManifoldVerdict::Pair(a, b) => write!(f, "{a} or {b}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("invalid trisection data: {}", render_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("six-tuple is not among the classified families")]
    UnrecognizedTuple,
    #[error("six-tuple matches several families with conflicting verdicts")]
    Ambiguous,
    #[error("table and intersection-form classifications disagree: {table} vs {form}")]
    StrategyMismatch { table: FourManifoldName, form: FourManifoldName },
}

/// Outcome of the classification, with the independent intersection-form
/// verdict where that strategy applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: FourManifoldVerdict,
    pub form_check: Option<FourManifoldName>,
}

fn i8_to_bigint(e: i8) -> BigInt {
    BigInt::from(e)
}

fn match_case_a_main(t: &SixTuple) -> Vec<(BigInt, i8)> {
    // candidate |q| values are bounded by the orders of the entries
    let mut bound = BigInt::from(3);
    for e in t.entries() {
        for l in e.lens_summands() {
            if *l.p() > bound {
                bound = l.p().clone();
            }
        }
    }
    bound += BigInt::from(2);
    let mut found = Vec::new();
    let mut q = -bound.clone();
    while q <= bound {
        for eps in [1i8, -1] {
            if q.is_one() {
                continue;
            }
            if t.equal_up_to_reflection(&closed_forms::case_a_main(&q, eps)) {
                found.push((q.clone(), eps));
            }
        }
        q += BigInt::one();
    }
    found
}

/// Identify the source 4-manifold from the six-tuple: a table lookup over
/// the classified families, cross-checked against the reduced framed-link
/// form where that applies.
pub fn classify_four_manifold(data: &TrisectionData) -> Result<Classification, ClassifyError> {
    let t = data
        .six_tuple()
        .map_err(|DataError::Invalid(v)| ClassifyError::Invalid(v))?;
    classify_six_tuple(&t)
}

pub fn classify_six_tuple(t: &SixTuple) -> Result<Classification, ClassifyError> {
    use FourManifoldName::*;
    let mut results: Vec<Classification> = Vec::new();

    for (q, eps) in match_case_a_main(t) {
        let table = if q.is_even() { S2xS2 } else { Cp2Cp2Bar };
        let form = hopf_pair_form(&(i8_to_bigint(eps) * &q), &BigInt::zero())
            .expect("hopf pair with a zero framing is unimodular");
        if form != table {
            return Err(ClassifyError::StrategyMismatch { table, form });
        }
        results.push(Classification {
            verdict: FourManifoldVerdict::Unique(table),
            form_check: Some(form),
        });
    }
    for eps in [1i8, -1] {
        if t.equal_up_to_reflection(&closed_forms::case_a_exceptional(eps)) {
            let table = if eps == -1 { Cp2Cp2 } else { Cp2BarCp2Bar };
            let form = hopf_pair_form(&i8_to_bigint(-eps), &(BigInt::from(-2) * i8_to_bigint(eps)))
                .expect("framings (-e, -2e) give a unimodular pair");
            if form != table {
                return Err(ClassifyError::StrategyMismatch { table, form });
            }
            results.push(Classification {
                verdict: FourManifoldVerdict::Unique(table),
                form_check: Some(form),
            });
        }
        if t.equal_up_to_reflection(&closed_forms::case_b_fourth(eps)) {
            let table = if eps == 1 { Cp2Cp2 } else { Cp2Cp2Bar };
            results.push(Classification {
                verdict: FourManifoldVerdict::Unique(table),
                form_check: None,
            });
        }
    }
    if t.equal_up_to_reflection(&closed_forms::case_b_single(-1)) {
        results.push(Classification {
            verdict: FourManifoldVerdict::Unique(Cp2Cp2Bar),
            form_check: None,
        });
    }
    if t.equal_up_to_reflection(&closed_forms::case_b_single(1)) {
        results.push(Classification {
            verdict: FourManifoldVerdict::Pair(Cp2Cp2, Cp2BarCp2Bar),
            form_check: None,
        });
    }

    let mut it = results.into_iter();
    let first = it.next().ok_or(ClassifyError::UnrecognizedTuple)?;
    for other in it {
        if other.verdict != first.verdict {
            return Err(ClassifyError::Ambiguous);
        }
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: i64, q: i64) -> PrimitiveClass {
        PrimitiveClass::new(p, q).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn validate_main_seed() {
        let data = TrisectionData::case_a(1, CaseASubcase::Main { q: big(3) }).unwrap();
        assert_eq!(data.a2, pc(1, 0));
        assert_eq!(data.b2, pc(0, 1));
        assert_eq!(data.c2p, pc(-1, 3));
        assert_eq!(data.mu.twist_curve(), Some(&pc(-1, 1)));
        assert!(data.validate().is_empty());
    }

    #[test]
    fn validate_catches_cusp_violation() {
        let mut data = TrisectionData::case_a(1, CaseASubcase::Main { q: big(3) }).unwrap();
        data.c2p = pc(-2, 3);
        let violations = data.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::CuspTransversality { pair: "b2 . c2'", value } if *value == big(2))));
    }

    #[test]
    fn validate_catches_case_constraint() {
        // fourth-power twist along a curve parallel to no vanishing cycle
        let data = TrisectionData::from_unprimed(
            pc(1, 0),
            pc(0, 1),
            pc(-1, 1),
            Monodromy::FourthTwist { d: pc(1, 1), sign: 1 },
        );
        let violations = data.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::CaseConstraint { .. })));
    }

    #[test]
    fn builder_values() {
        let d = TrisectionData::case_a(1, CaseASubcase::Main { q: big(4) }).unwrap();
        assert_eq!(d.b2p, pc(1, 0));
        assert_eq!(d.c2, pc(2, 1));
        let d = TrisectionData::case_a(-1, CaseASubcase::Main { q: big(4) }).unwrap();
        assert_eq!(d.c2, pc(-6, -1));
        let d = TrisectionData::case_a(1, CaseASubcase::ExceptionalTwo).unwrap();
        assert_eq!(d.b2p, pc(9, -2));
        assert_eq!(d.c2, pc(5, -1));
        assert!(TrisectionData::case_a(1, CaseASubcase::Main { q: big(1) }).is_err());
        assert!(TrisectionData::case_a(-1, CaseASubcase::Main { q: big(-1) }).is_err());
    }

    #[test]
    fn builder_case_b_values() {
        let d = TrisectionData::case_b(1, 1, 1);
        assert_eq!(d.c2, pc(0, 1));
        let d = TrisectionData::case_b(4, 1, -1);
        assert_eq!(d.b2p, pc(4, 1));
        assert_eq!(d.c2, pc(-5, -1));
        let d = TrisectionData::case_b(4, -1, 1);
        assert_eq!(d.b2p, pc(-4, 1));
        assert_eq!(d.c2, pc(-5, 1));
    }

    #[test]
    fn six_tuple_main_q4() {
        let data = TrisectionData::case_a(1, CaseASubcase::Main { q: big(4) }).unwrap();
        let t = data.six_tuple().unwrap();
        assert_eq!(t.v_aa.render(), "S3");
        assert_eq!(t.v_bb.render(), "S3");
        assert_eq!(t.v_cc.render(), "L(9,4)");
        assert_eq!(t.v_ba.render(), "S1xS2");
        assert_eq!(t.v_cb.render(), "L(2,1)");
        assert_eq!(t.v_ac.render(), "L(4,3)");
    }

    #[test]
    fn six_tuple_identity() {
        let t = TrisectionData::identity().six_tuple().unwrap();
        assert!(t.equal(&closed_forms::identity_case()));
    }

    #[test]
    fn six_tuple_case_b_fourth() {
        let t = TrisectionData::case_b(4, 1, -1).six_tuple().unwrap();
        let expect = SixTuple::new(
            ThreeManifold::s1_x_s2(1),
            ThreeManifold::from_lens(LensSpace::new(4, 1).unwrap()),
            ThreeManifold::from_lens(LensSpace::new(4, 1).unwrap()),
            ThreeManifold::sphere(),
            ThreeManifold::from_lens(LensSpace::new(5, 1).unwrap()),
            ThreeManifold::sphere(),
        );
        assert!(t.equal(&expect));
    }

    #[test]
    fn reflect_matches_printed_instance() {
        // the sporadic tuple printed for the first exceptional branch is the
        // reflection of the eps = +1 closed form
        let computed = TrisectionData::case_a(1, CaseASubcase::ExceptionalOne)
            .unwrap()
            .six_tuple()
            .unwrap();
        let expected = closed_forms::case_a_exceptional(1).reflect();
        assert!(computed.equal(&expected));
        assert!(computed.reflect().reflect().equal(&computed));
    }

    #[test]
    fn canonical_idempotent() {
        let t = TrisectionData::case_a(1, CaseASubcase::ExceptionalOne)
            .unwrap()
            .six_tuple()
            .unwrap();
        let c = t.canonical();
        assert!(c.canonical().equal(&c));
        assert!(c.equal_up_to_reflection(&t));
    }

    #[test]
    fn classify_values() {
        use FourManifoldName::*;
        let v = |d: &TrisectionData| classify_four_manifold(d).unwrap().verdict;
        let d = TrisectionData::case_a(1, CaseASubcase::Main { q: big(4) }).unwrap();
        assert_eq!(v(&d), FourManifoldVerdict::Unique(S2xS2));
        let d = TrisectionData::case_a(1, CaseASubcase::Main { q: big(3) }).unwrap();
        assert_eq!(v(&d), FourManifoldVerdict::Unique(Cp2Cp2Bar));
        let d = TrisectionData::case_a(-1, CaseASubcase::ExceptionalOne).unwrap();
        assert_eq!(v(&d), FourManifoldVerdict::Unique(Cp2Cp2));
        let d = TrisectionData::case_b(1, 1, -1);
        assert_eq!(v(&d), FourManifoldVerdict::Pair(Cp2Cp2, Cp2BarCp2Bar));
        assert!(matches!(
            classify_four_manifold(&TrisectionData::identity()),
            Err(ClassifyError::UnrecognizedTuple)
        ));
    }
}
