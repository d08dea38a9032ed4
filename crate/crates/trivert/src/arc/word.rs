//! The fixed concentric-circle singular-value model and exact extraction of
//! crossing words from polyline arcs.
//!
//! Circles of radius 1 (inner cusped), 2 (outer cusped), 3 (definite fold)
//! and 4 (boundary) around the origin. The fiber is genus 2 inside radius 1,
//! genus 1 in the band between 1 and 2, a sphere between 2 and 3, and empty
//! outside 3. Cusp rays point along (3,4), (-1,0), (3,-4); the branch cut is
//! the piece of the positive x-axis inside the middle band. Going
//! counterclockwise from the cut the outer-circle edges read a2, b2, c2',
//! a2' and back to the cut; crossing the cut clockwise raises the winding
//! counter.

use super::exact::{cmp_tpos, sign_lin_sqrt, QuadVal, Rat, TPos};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Cusp ray directions shared by the two cusped circles.
pub const CUSP_RAYS: [(i64, i64); 3] = [(3, 4), (-1, 0), (3, -4)];

/// The four model circles, outermost last.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Circle {
    Inner,
    Outer,
    Definite,
}

impl Circle {
    pub fn radius_squared(self) -> i64 {
        match self {
            Circle::Inner => 1,
            Circle::Outer => 4,
            Circle::Definite => 9,
        }
    }
}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Circle::Inner => "C1",
            Circle::Outer => "C2",
            Circle::Definite => "D",
        };
        f.write_str(s)
    }
}

/// Regions cut out by the circles, in increasing radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Core,
    TorusBand,
    SphereBand,
    Exterior,
}

/// Edges of the outer cusped circle. The cut splits the a-edge; `APlus` is
/// the side reached counterclockwise from the cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeC2 {
    APlus,
    AMinus,
    B,
    C,
}

impl fmt::Display for EdgeC2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EdgeC2::APlus => "e_a+",
            EdgeC2::AMinus => "e_a-",
            EdgeC2::B => "e_b",
            EdgeC2::C => "e_c",
        };
        f.write_str(s)
    }
}

/// Edges of the inner cusped circle, named by the sector they occupy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeC1 {
    AcrossCut,
    BSide,
    CSide,
}

impl fmt::Display for EdgeC1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EdgeC1::AcrossCut => "f_a",
            EdgeC1::BSide => "f_b",
            EdgeC1::CSide => "f_c",
        };
        f.write_str(s)
    }
}

/// The singular-value model: all constants are fixed; the struct exists to
/// anchor them and the classification predicates.
#[derive(Debug, Clone, Copy, Default)]
pub struct SingularModel;

impl SingularModel {
    pub fn standard() -> Self {
        SingularModel
    }
}

#[derive(Debug, Error)]
pub enum ArcError {
    #[error("arc needs at least two vertices")]
    TooShort,
    #[error("vertex {index} repeats its predecessor")]
    ZeroLengthSegment { index: usize },
    #[error("endpoint {index} is not on the boundary circle")]
    EndpointOffBoundary { index: usize },
    #[error("vertex {index} lies on a model circle")]
    VertexOnCircle { index: usize },
    #[error("vertex {index} lies outside the disc")]
    VertexOutsideDisc { index: usize },
    #[error("segments {first} and {second} intersect")]
    SelfIntersection { first: usize, second: usize },
    #[error("segment {index} is tangent to circle {circle}")]
    Tangency { index: usize, circle: Circle },
    #[error("segment {index} crosses {circle} at a cusp or on the cut")]
    DegenerateCrossing { index: usize, circle: Circle },
    #[error("segment {index} meets the branch cut degenerately")]
    DegenerateCut { index: usize },
    #[error("segment {index} produces coincident events")]
    CoincidentEvents { index: usize },
    #[error("region bookkeeping failed at segment {index}: {detail}")]
    RegionMismatch { index: usize, detail: String },
}

/// A generic proper arc: a simple polyline with rational vertices,
/// endpoints on the boundary circle, and all circle crossings transverse
/// and away from cusps, vertices and the cut.
#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    vertices: Vec<(Rat, Rat)>,
}

impl Arc {
    /// Validate the polyline invariants that do not involve crossing
    /// classification; the rest are checked during word extraction.
    pub fn from_vertices(vertices: Vec<(Rat, Rat)>) -> Result<Self, ArcError> {
        if vertices.len() < 2 {
            return Err(ArcError::TooShort);
        }
        let norm2 = |p: &(Rat, Rat)| &p.0 * &p.0 + &p.1 * &p.1;
        let sixteen = rat(16, 1);
        let last = vertices.len() - 1;
        for (i, v) in vertices.iter().enumerate() {
            let n = norm2(v);
            if i == 0 || i == last {
                if n != sixteen {
                    return Err(ArcError::EndpointOffBoundary { index: i });
                }
                continue;
            }
            if n > sixteen {
                return Err(ArcError::VertexOutsideDisc { index: i });
            }
            if [1i64, 4, 9, 16].iter().any(|r| n == rat(*r, 1)) {
                return Err(ArcError::VertexOnCircle { index: i });
            }
        }
        for i in 1..vertices.len() {
            if vertices[i] == vertices[i - 1] {
                return Err(ArcError::ZeroLengthSegment { index: i });
            }
        }
        let arc = Self { vertices };
        arc.check_simple()?;
        Ok(arc)
    }

    pub fn vertices(&self) -> &[(Rat, Rat)] {
        &self.vertices
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    fn check_simple(&self) -> Result<(), ArcError> {
        use num_traits::ToPrimitive;
        let n = self.vertices.len() - 1;
        // coarse float boxes with a safety margin prune most pairs before
        // the exact tests
        let approx: Vec<(f64, f64)> = self
            .vertices
            .iter()
            .map(|(x, y)| (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0)))
            .collect();
        let boxes: Vec<[f64; 4]> = (0..n)
            .map(|i| {
                let (x0, y0) = approx[i];
                let (x1, y1) = approx[i + 1];
                [x0.min(x1), x0.max(x1), y0.min(y1), y0.max(y1)]
            })
            .collect();
        const MARGIN: f64 = 1e-6;
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&boxes[i], &boxes[j]);
                if a[1] + MARGIN < b[0]
                    || b[1] + MARGIN < a[0]
                    || a[3] + MARGIN < b[2]
                    || b[3] + MARGIN < a[2]
                {
                    continue;
                }
                let shared = j == i + 1;
                if segments_meet(
                    &self.vertices[i],
                    &self.vertices[i + 1],
                    &self.vertices[j],
                    &self.vertices[j + 1],
                    shared,
                ) {
                    return Err(ArcError::SelfIntersection { first: i, second: j });
                }
            }
        }
        Ok(())
    }
}

fn orient(a: &(Rat, Rat), b: &(Rat, Rat), c: &(Rat, Rat)) -> i32 {
    let v = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn on_segment(a: &(Rat, Rat), b: &(Rat, Rat), p: &(Rat, Rat)) -> bool {
    // collinearity assumed
    let in_range = |lo: &Rat, hi: &Rat, x: &Rat| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= x && x <= hi
    };
    in_range(&a.0, &b.0, &p.0) && in_range(&a.1, &b.1, &p.1)
}

/// True when segments ab and cd have a point in common that makes the
/// polyline non-simple. `shared_endpoint` marks consecutive segments, where
/// meeting exactly at b = c is allowed.
fn segments_meet(
    a: &(Rat, Rat),
    b: &(Rat, Rat),
    c: &(Rat, Rat),
    d: &(Rat, Rat),
    shared_endpoint: bool,
) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if shared_endpoint {
        // b == c; forbid the second segment folding back onto the first
        if o1 == 0 && o2 == 0 {
            return on_segment(a, b, d) || on_segment(c, d, a);
        }
        return false;
    }
    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

/// One crossing event of the arc with a model circle.
#[derive(Debug, Clone)]
pub struct Event {
    pub circle: Circle,
    pub inward: bool,
    pub c2_edge: Option<EdgeC2>,
    pub c1_edge: Option<EdgeC1>,
    /// Accumulated winding at the event: clockwise cut crossings count +1.
    pub winding: i64,
    pub segment: usize,
    /// Approximate position, for rendering only.
    pub approx: (f64, f64),
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = if self.inward { "in" } else { "out" };
        match self.circle {
            Circle::Outer => {
                let e = self.c2_edge.expect("outer events carry an edge");
                write!(f, "C2-{dir}({e}, w={})", self.winding)
            }
            Circle::Inner => {
                let e = self.c1_edge.expect("inner events carry an edge");
                write!(f, "C1-{dir}({e})")
            }
            Circle::Definite => write!(f, "D-{dir}"),
        }
    }
}

/// The ordered crossing events of an arc.
#[derive(Debug, Clone, Default)]
pub struct CrossingWord {
    pub events: Vec<Event>,
}

impl CrossingWord {
    pub fn render(&self) -> String {
        if self.events.is_empty() {
            return "(empty)".to_string();
        }
        self.events
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for CrossingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

enum SegEvent {
    Cross { circle: Circle, inward: bool, point: (QuadVal, QuadVal) },
    CutCross { clockwise: bool },
}

/// Extract the crossing word of a valid arc over the standard model.
pub fn crossing_word(arc: &Arc, _model: &SingularModel) -> Result<CrossingWord, ArcError> {
    let verts = arc.vertices();
    let mut events: Vec<Event> = Vec::new();
    let mut region = Region::Exterior;
    let mut winding: i64 = 0;

    for i in 0..verts.len() - 1 {
        let u = &verts[i];
        let v = &verts[i + 1];
        let d = (&v.0 - &u.0, &v.1 - &u.1);
        let a2 = &d.0 * &d.0 + &d.1 * &d.1; // quadratic leading coefficient A
        let b = (&u.0 * &d.0 + &u.1 * &d.1) * rat(2, 1);
        let c0 = &u.0 * &u.0 + &u.1 * &u.1;

        let mut seg_events: Vec<(TPos, SegEvent)> = Vec::new();

        for circle in [Circle::Inner, Circle::Outer, Circle::Definite] {
            let c = &c0 - rat(circle.radius_squared(), 1);
            let delta = &b * &b - rat(4, 1) * &a2 * &c;
            if delta.is_negative() {
                continue;
            }
            // root at t = 0 or 1 means a vertex on the circle, caught above,
            // except endpoints: q(0) = c, q(1) = a2 + b + c
            if c.is_zero() || (&a2 + &b + &c).is_zero() {
                return Err(ArcError::VertexOnCircle { index: i });
            }
            if delta.is_zero() {
                // tangent line; error only if the touch point is interior
                let lo = sign_lin_sqrt(&b, &Rat::zero(), &Rat::zero()); // sign of B
                let touches = lo < 0 && (-&b) < rat(2, 1) * &a2;
                if touches {
                    return Err(ArcError::Tangency { index: i, circle });
                }
                continue;
            }
            for plus in [false, true] {
                let s = if plus { rat(1, 1) } else { rat(-1, 1) };
                // t > 0 iff -B +- sqrt(delta) > 0
                let gt0 = sign_lin_sqrt(&-&b, &s, &delta) > 0;
                // t < 1 iff -B +- sqrt(delta) < 2A
                let lt1 = sign_lin_sqrt(&(-&b - rat(2, 1) * &a2), &s, &delta) < 0;
                if !(gt0 && lt1) {
                    continue;
                }
                let half = rat(1, 2) / &a2;
                let tr = -&b * &half;
                let ts = if plus { half.clone() } else { -half.clone() };
                let x = QuadVal {
                    r: &u.0 + &d.0 * &tr,
                    s: &d.0 * &ts,
                    delta: delta.clone(),
                };
                let y = QuadVal {
                    r: &u.1 + &d.1 * &tr,
                    s: &d.1 * &ts,
                    delta: delta.clone(),
                };
                seg_events.push((
                    TPos::Root { plus, delta: delta.clone() },
                    SegEvent::Cross { circle, inward: !plus, point: (x, y) },
                ));
            }
        }

        // branch-cut crossings: y = 0 with 1 < x < 2
        if u.1.is_zero() && d.1.is_zero() {
            // segment along the x-axis: degenerate if it touches the cut
            let (lo, hi) = if u.0 <= v.0 { (&u.0, &v.0) } else { (&v.0, &u.0) };
            if *hi >= rat(1, 1) && *lo <= rat(2, 1) && hi.is_positive() {
                return Err(ArcError::DegenerateCut { index: i });
            }
        } else if !d.1.is_zero() {
            let t0 = -&u.1 / &d.1;
            if t0.is_positive() && t0 < Rat::one() {
                let x0 = &u.0 + &t0 * &d.0;
                if x0 == rat(1, 1) || x0 == rat(2, 1) {
                    return Err(ArcError::DegenerateCut { index: i });
                }
                if x0 > rat(1, 1) && x0 < rat(2, 1) {
                    seg_events.push((
                        TPos::Rational(t0),
                        SegEvent::CutCross { clockwise: d.1.is_negative() },
                    ));
                }
            } else if (t0.is_zero() || t0.is_one()) && {
                let x0 = &u.0 + &t0 * &d.0;
                x0 >= rat(1, 1) && x0 <= rat(2, 1)
            } {
                // a vertex sitting exactly on the cut ray
                return Err(ArcError::DegenerateCut { index: i });
            }
        }

        // exact ordering along the segment
        let mut order: Vec<usize> = (0..seg_events.len()).collect();
        let mut coincident = false;
        order.sort_by(|&p, &q| {
            match cmp_tpos(&a2, &b, &seg_events[p].0, &seg_events[q].0) {
                Some(o) => o,
                None => {
                    coincident = true;
                    Ordering::Equal
                }
            }
        });
        if coincident {
            return Err(ArcError::CoincidentEvents { index: i });
        }

        for idx in order {
            match &seg_events[idx].1 {
                SegEvent::CutCross { clockwise } => {
                    debug_assert_eq!(region, Region::TorusBand);
                    winding += if *clockwise { 1 } else { -1 };
                }
                SegEvent::Cross { circle, inward, point } => {
                    let (outer_side, inner_side) = match circle {
                        Circle::Inner => (Region::TorusBand, Region::Core),
                        Circle::Outer => (Region::SphereBand, Region::TorusBand),
                        Circle::Definite => (Region::Exterior, Region::SphereBand),
                    };
                    let expected = if *inward { outer_side } else { inner_side };
                    if region != expected {
                        return Err(ArcError::RegionMismatch {
                            index: i,
                            detail: format!(
                                "crossing {circle} {} from {:?}",
                                if *inward { "inward" } else { "outward" },
                                region
                            ),
                        });
                    }
                    region = if *inward { inner_side } else { outer_side };
                    let c2_edge = if *circle == Circle::Outer {
                        Some(classify_c2(point).ok_or(ArcError::DegenerateCrossing {
                            index: i,
                            circle: *circle,
                        })?)
                    } else {
                        None
                    };
                    let c1_edge = if *circle == Circle::Inner {
                        Some(classify_c1(point).ok_or(ArcError::DegenerateCrossing {
                            index: i,
                            circle: *circle,
                        })?)
                    } else {
                        None
                    };
                    events.push(Event {
                        circle: *circle,
                        inward: *inward,
                        c2_edge,
                        c1_edge,
                        winding,
                        segment: i,
                        approx: (point.0.approx(), point.1.approx()),
                    });
                }
            }
        }
    }

    if region != Region::Exterior {
        return Err(ArcError::RegionMismatch {
            index: verts.len() - 2,
            detail: "arc does not end outside the definite fold".into(),
        });
    }
    Ok(CrossingWord { events })
}

fn cross_sign(ray: (i64, i64), p: &(QuadVal, QuadVal)) -> i32 {
    // sign of ray.x * p.y - ray.y * p.x
    let rx = rat(ray.0, 1);
    let ry = rat(ray.1, 1);
    let r = &rx * &p.1.r - &ry * &p.0.r;
    let s = &rx * &p.1.s - &ry * &p.0.s;
    sign_lin_sqrt(&r, &s, &p.0.delta)
}

/// Edge of the outer circle containing a crossing point, or `None` when the
/// point sits on a cusp ray or on the cut.
fn classify_c2(p: &(QuadVal, QuadVal)) -> Option<EdgeC2> {
    let sy = p.1.sign();
    if sy > 0 {
        match cross_sign(CUSP_RAYS[0], p) {
            v if v < 0 => Some(EdgeC2::APlus),
            v if v > 0 => Some(EdgeC2::B),
            _ => None,
        }
    } else if sy < 0 {
        match cross_sign(CUSP_RAYS[2], p) {
            v if v < 0 => Some(EdgeC2::C),
            v if v > 0 => Some(EdgeC2::AMinus),
            _ => None,
        }
    } else {
        None
    }
}

fn classify_c1(p: &(QuadVal, QuadVal)) -> Option<EdgeC1> {
    let sy = p.1.sign();
    if sy > 0 {
        match cross_sign(CUSP_RAYS[0], p) {
            v if v < 0 => Some(EdgeC1::AcrossCut),
            v if v > 0 => Some(EdgeC1::BSide),
            _ => None,
        }
    } else if sy < 0 {
        match cross_sign(CUSP_RAYS[2], p) {
            v if v < 0 => Some(EdgeC1::CSide),
            v if v > 0 => Some(EdgeC1::AcrossCut),
            _ => None,
        }
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc_of(pts: &[(i64, i64, i64, i64)]) -> Result<Arc, ArcError> {
        Arc::from_vertices(
            pts.iter()
                .map(|&(xn, xd, yn, yd)| (rat(xn, xd), rat(yn, yd)))
                .collect(),
        )
    }

    #[test]
    fn rejects_bad_polylines() {
        assert!(matches!(arc_of(&[(4, 1, 0, 1)]), Err(ArcError::TooShort)));
        assert!(matches!(
            arc_of(&[(4, 1, 0, 1), (3, 1, 0, 1)]),
            Err(ArcError::EndpointOffBoundary { .. })
        ));
        // vertex on the outer cusped circle
        assert!(matches!(
            arc_of(&[(0, 1, 4, 1), (2, 1, 0, 1), (0, 1, -4, 1)]),
            Err(ArcError::VertexOnCircle { index: 1 })
        ));
    }

    #[test]
    fn chord_outside_definite_fold() {
        // chord between boundary points near angle 0: empty word
        let arc = arc_of(&[(96, 25, 28, 25), (96, 25, -28, 25)]).unwrap();
        let w = crossing_word(&arc, &SingularModel::standard()).unwrap();
        assert!(w.events.is_empty());
    }

    #[test]
    fn radial_in_and_out() {
        // dip across D into the sphere band and back
        let arc = arc_of(&[(96, 25, 28, 25), (5, 2, 7, 10), (96, 25, -28, 25)]).unwrap();
        let w = crossing_word(&arc, &SingularModel::standard()).unwrap();
        let kinds: Vec<String> = w.events.iter().map(|e| e.to_string()).collect();
        assert_eq!(kinds, vec!["D-in", "D-out"]);
    }

    #[test]
    fn self_intersection_rejected() {
        let r = arc_of(&[(4, 1, 0, 1), (-7, 2, 1, 1), (-7, 2, -1, 1), (0, 1, 4, 1)]);
        assert!(matches!(r, Err(ArcError::SelfIntersection { .. })));
    }
}
