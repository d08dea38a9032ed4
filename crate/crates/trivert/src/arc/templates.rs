//! Fixed polyline templates: the six standard arcs, the trivial chord, and
//! parametrized composites made of nested parallel strands joined outside
//! the outer circle, with optional excursions into the central region.
//!
//! All vertices are of the form `radius * u(t)` where `u(t)` is the
//! rational point of the unit circle with half-tangent `t`; a waypoint list
//! alternates radial moves (same direction, new radius) and chords (same
//! radius, next direction). Chord gaps are kept small enough that a chord
//! never leaves the annulus its endpoints lie in.

use super::word::{rat, Arc};
use crate::arc::exact::Rat;
use num_traits::One;

/// A rational direction: the unit-circle point with half-tangent `n/d`
/// (`d > 0`), or the exceptional west point (-1, 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    T(i64, i64),
    West,
}

impl Dir {
    pub fn unit(self) -> (Rat, Rat) {
        match self {
            Dir::West => (rat(-1, 1), rat(0, 1)),
            Dir::T(n, d) => {
                let t = rat(n, d);
                let one = Rat::one();
                let denom = &one + &t * &t;
                ((&one - &t * &t) / &denom, (rat(2, 1) * &t) / denom)
            }
        }
    }

    pub fn angle_deg(self) -> f64 {
        match self {
            Dir::West => 180.0,
            Dir::T(n, d) => {
                let a = 2.0 * (n as f64 / d as f64).atan().to_degrees();
                if a < 0.0 {
                    a + 360.0
                } else {
                    a
                }
            }
        }
    }
}

fn vertex(dir: Dir, r: &Rat) -> (Rat, Rat) {
    let (x, y) = dir.unit();
    (x * r, y * r)
}

/// Build an arc from waypoints, dropping consecutive duplicates.
fn arc_from_waypoints(wps: &[(Dir, Rat)]) -> Arc {
    let mut verts: Vec<(Rat, Rat)> = Vec::with_capacity(wps.len());
    for (d, r) in wps {
        let v = vertex(*d, r);
        if verts.last() != Some(&v) {
            verts.push(v);
        }
    }
    Arc::from_vertices(verts).expect("template waypoints form a valid arc")
}

/// The six standard arcs, named by the edges they cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardArc {
    Aa,
    Bb,
    Cc,
    Ba,
    Cb,
    Ac,
}

impl StandardArc {
    pub const ALL: [StandardArc; 6] =
        [StandardArc::Aa, StandardArc::Bb, StandardArc::Cc, StandardArc::Ba, StandardArc::Cb, StandardArc::Ac];

    pub fn name(self) -> &'static str {
        match self {
            StandardArc::Aa => "aa",
            StandardArc::Bb => "bb",
            StandardArc::Cc => "cc",
            StandardArc::Ba => "ba",
            StandardArc::Cb => "cb",
            StandardArc::Ac => "ac",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

/// Polyline of a standard arc, counterclockwise-oriented.
pub fn standard_arc(which: StandardArc) -> Arc {
    use Dir::*;
    let r15 = rat(3, 2);
    let r18 = rat(9, 5);
    let r13 = rat(13, 10);
    let r4 = rat(4, 1);
    let wps: Vec<(Dir, Rat)> = match which {
        // in at e_a+, the long way around the inner circle, out at e_a-
        StandardArc::Aa => vec![
            (T(1, 7), r4.clone()),
            (T(1, 7), r15.clone()),
            (T(1, 2), r15.clone()),
            (T(1, 1), r15.clone()),
            (T(2, 1), r15.clone()),
            (West, r15.clone()),
            (T(-2, 1), r15.clone()),
            (T(-1, 1), r15.clone()),
            (T(-1, 2), r15.clone()),
            (T(-1, 7), r15.clone()),
            (T(-1, 7), r4.clone()),
        ],
        // in and out on e_b, wrapping across the cut
        StandardArc::Bb => vec![
            (T(1, 1), r4.clone()),
            (T(1, 1), r18.clone()),
            (T(2, 1), r13.clone()),
            (West, r13.clone()),
            (T(-3, 1), r13.clone()),
            (T(-1, 1), r13.clone()),
            (T(-1, 2), r13.clone()),
            (T(-1, 7), r13.clone()),
            (T(1, 7), r13.clone()),
            (T(1, 2), r13.clone()),
            (T(3, 4), r13.clone()),
            (T(3, 4), r4.clone()),
        ],
        // in and out on e_c, wrapping across the cut
        StandardArc::Cc => vec![
            (T(-2, 1), r4.clone()),
            (T(-2, 1), r18.clone()),
            (T(-1, 1), r13.clone()),
            (T(-1, 2), r13.clone()),
            (T(-1, 7), r13.clone()),
            (T(1, 7), r13.clone()),
            (T(1, 2), r13.clone()),
            (T(1, 1), r13.clone()),
            (T(2, 1), r13.clone()),
            (West, r13.clone()),
            (T(-7, 1), r13.clone()),
            (T(-7, 1), r4.clone()),
        ],
        // e_b to e_a-, passing under e_c
        StandardArc::Ba => vec![
            (T(2, 1), r4.clone()),
            (T(2, 1), r15.clone()),
            (T(3, 1), r15.clone()),
            (West, r15.clone()),
            (T(-3, 1), r15.clone()),
            (T(-2, 1), r15.clone()),
            (T(-1, 1), r15.clone()),
            (T(-1, 2), r15.clone()),
            (T(-1, 3), r15.clone()),
            (T(-1, 3), r4.clone()),
        ],
        // e_c to e_b, passing under e_a across the cut
        StandardArc::Cb => vec![
            (T(-1, 1), r4.clone()),
            (T(-1, 1), r15.clone()),
            (T(-1, 2), r15.clone()),
            (T(-1, 7), r15.clone()),
            (T(1, 7), r15.clone()),
            (T(1, 2), r15.clone()),
            (T(1, 1), r15.clone()),
            (T(1, 1), r4.clone()),
        ],
        // e_a+ to e_c, passing under e_b
        StandardArc::Ac => vec![
            (T(1, 7), r4.clone()),
            (T(1, 7), r15.clone()),
            (T(1, 2), r15.clone()),
            (T(1, 1), r15.clone()),
            (T(2, 1), r15.clone()),
            (T(3, 1), r15.clone()),
            (West, r15.clone()),
            (T(-3, 1), r15.clone()),
            (T(-3, 1), r4.clone()),
        ],
    };
    arc_from_waypoints(&wps)
}

/// A chord staying outside the definite fold: the trivial vertical arc.
pub fn boundary_chord() -> Arc {
    arc_from_waypoints(&[(Dir::T(1, 7), rat(4, 1)), (Dir::T(-1, 7), rat(4, 1))])
}

/// Routing grid around the circle, counterclockwise.
const GRID: [Dir; 19] = [
    Dir::T(1, 7),
    Dir::T(1, 3),
    Dir::T(1, 2),
    Dir::T(3, 4),
    Dir::T(1, 1),
    Dir::T(3, 2),
    Dir::T(2, 1),
    Dir::T(3, 1),
    Dir::T(7, 1),
    Dir::West,
    Dir::T(-7, 1),
    Dir::T(-3, 1),
    Dir::T(-2, 1),
    Dir::T(-3, 2),
    Dir::T(-1, 1),
    Dir::T(-3, 4),
    Dir::T(-1, 2),
    Dir::T(-1, 3),
    Dir::T(-1, 7),
];

const EPS: f64 = 1e-7;

/// Grid directions strictly between `from` and `to` in the travel
/// direction, in traversal order.
fn walk(from: Dir, to: Dir, ccw: bool) -> Vec<Dir> {
    let a = from.angle_deg();
    let mut b = to.angle_deg();
    let mut picked: Vec<(f64, Dir)> = Vec::new();
    if ccw {
        if b <= a + EPS {
            b += 360.0;
        }
        for g in GRID {
            let mut c = g.angle_deg();
            if c <= a + EPS {
                c += 360.0;
            }
            if c > a + EPS && c < b - EPS {
                picked.push((c, g));
            }
        }
        picked.sort_by(|x, y| x.0.total_cmp(&y.0));
    } else {
        if b >= a - EPS {
            b -= 360.0;
        }
        for g in GRID {
            let mut c = g.angle_deg();
            if c >= a - EPS {
                c -= 360.0;
            }
            if c < a - EPS && c > b + EPS {
                picked.push((c, g));
            }
        }
        picked.sort_by(|x, y| y.0.total_cmp(&x.0));
    }
    picked.into_iter().map(|(_, d)| d).collect()
}

fn ccw_interval_contains(a: f64, b: f64, x: f64) -> bool {
    let span = (b - a).rem_euclid(360.0);
    let off = (x - a).rem_euclid(360.0);
    off > EPS && off < span - EPS
}

/// Travel direction from `from` to `to` whose swept interval avoids the
/// forbidden angle.
fn direction_avoiding(from: Dir, to: Dir, forbidden: f64) -> bool {
    let a = from.angle_deg();
    let b = to.angle_deg();
    if !ccw_interval_contains(a, b, forbidden) {
        true
    } else {
        debug_assert!(!ccw_interval_contains(b, a, forbidden));
        false
    }
}

/// The composite families: a diagonal strand type nested with an adjacent
/// off-diagonal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositeFamily {
    /// cc strands with cb strands.
    CcCb,
    /// aa strands with ac strands.
    AaAc,
    /// bb strands with ba strands.
    BbBa,
}

/// Excursion into the central region inserted on the deepest strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DipKind {
    /// Same inner edge twice: adds an `S^1 x S^2` summand.
    Bigon,
    /// Adjacent inner edges: leaves the preimage unchanged.
    Cusp,
}

#[derive(Debug, Clone)]
pub struct CompositePlan {
    pub family: CompositeFamily,
    /// Number of diagonal strands.
    pub r: usize,
    /// Number of off-diagonal strands.
    pub s: usize,
    pub dips: Vec<DipKind>,
    pub reversed: bool,
}

struct FamilySpec {
    /// Stub-side cluster of the diagonal group, extreme slot first.
    x_in: [Dir; 3],
    /// Other diagonal cluster.
    x_out: [Dir; 3],
    /// First diagonal strand travels counterclockwise.
    x_first_ccw: bool,
    /// Off-diagonal cluster facing the diagonal group (deepest slot used
    /// first).
    y_near: [Dir; 3],
    /// Off-diagonal cluster away from it.
    y_far: [Dir; 3],
    /// First off-diagonal strand travels counterclockwise.
    y_first_ccw: bool,
    free: Dir,
}

fn spec(family: CompositeFamily) -> FamilySpec {
    use Dir::*;
    match family {
        CompositeFamily::CcCb => FamilySpec {
            x_in: [T(-2, 1), T(-9, 4), T(-5, 2)],    // 233.1, 227.7, 223.6
            x_out: [T(-10, 1), T(-9, 1), T(-8, 1)],  // 191.4, 192.7, 194.2
            x_first_ccw: true,
            y_near: [T(3, 2), T(8, 5), T(17, 10)],   // 112.6, 116.0, 119.1
            y_far: [T(-1, 1), T(-21, 20), T(-11, 10)], // 270, 267.2, 264.5
            y_first_ccw: false,
            free: T(1, 7),
        },
        CompositeFamily::AaAc => FamilySpec {
            x_in: [T(-1, 7), T(-1, 8), T(-1, 9)],    // 343.7, 345.7, 347.3
            x_out: [T(1, 7), T(1, 8), T(1, 9)],      // 16.3, 14.2, 12.7
            x_first_ccw: false,
            y_near: [T(1, 3), T(3, 10), T(7, 25)],   // 36.9, 33.4, 31.3
            y_far: [T(-3, 1), T(-11, 4), T(-5, 2)],  // 216.9, 220.0, 223.6
            y_first_ccw: true,
            free: T(2, 1),
        },
        CompositeFamily::BbBa => FamilySpec {
            x_in: [T(3, 4), T(4, 5), T(5, 6)],       // 73.7, 77.3, 79.6
            x_out: [T(1, 1), T(19, 20), T(9, 10)],   // 90, 87.1, 84.0
            x_first_ccw: false,
            y_near: [T(2, 1), T(39, 20), T(19, 10)], // 126.9, 125.6, 124.6
            y_far: [T(-1, 3), T(-3, 10), T(-7, 25)], // 323.1, 326.6, 328.7
            y_first_ccw: true,
            free: T(-3, 2),
        },
    }
}

struct Strand {
    dir_in: Dir,
    dir_out: Dir,
    ccw: bool,
    rho: Rat,
    dips: Vec<DipKind>,
}

fn strand_waypoints(st: &Strand) -> Vec<(Dir, Rat)> {
    let mut dirs = vec![st.dir_in];
    dirs.extend(walk(st.dir_in, st.dir_out, st.ccw));
    dirs.push(st.dir_out);
    let mut wps: Vec<(Dir, Rat)> = dirs.into_iter().map(|d| (d, st.rho.clone())).collect();
    let dip_r = rat(4, 5);
    for dip in &st.dips {
        match dip {
            DipKind::Bigon => {
                // dive between the waypoints at 126.87 and 143.13
                let (p, q) = (Dir::T(2, 1), Dir::T(3, 1));
                let i = wps
                    .iter()
                    .position(|(d, _)| *d == p || *d == q)
                    .expect("bigon anchors on route");
                let first = wps[i].0;
                let second = if first == p { q } else { p };
                wps.splice(
                    i + 1..i + 1,
                    [(first, dip_r.clone()), (second, dip_r.clone())],
                );
            }
            DipKind::Cusp => {
                // dive at 163.74, resurface at 189.46 (or reversed),
                // replacing the west waypoint
                let i = wps
                    .iter()
                    .position(|(d, _)| *d == Dir::West)
                    .expect("cusp anchor on route");
                let before = wps[i - 1].0;
                let (p, q) = if before == Dir::T(7, 1) {
                    (Dir::T(7, 1), Dir::T(-12, 1))
                } else {
                    (Dir::T(-12, 1), Dir::T(7, 1))
                };
                wps.splice(
                    i..i + 1,
                    [
                        (p, dip_r.clone()),
                        (q, dip_r.clone()),
                        (q, st.rho.clone()),
                    ],
                );
                // the dive waypoint at rho must precede the dip
                let j = wps.iter().position(|(d, r)| *d == p && *r == dip_r).unwrap();
                wps.insert(j, (p, st.rho.clone()));
            }
        }
    }
    wps
}

/// Assemble a composite arc from a plan.
pub fn composite_arc(plan: &CompositePlan) -> Arc {
    assert!(plan.r + plan.s > 0, "composite needs at least one strand");
    assert!(plan.r <= 3 && plan.s <= 3, "at most three strands per group");
    let fam = spec(plan.family);
    let mut strands: Vec<Strand> = Vec::new();
    for k in 0..plan.r {
        let odd = k % 2 == 0;
        let (dir_in, dir_out) = if odd {
            (fam.x_in[k], fam.x_out[k])
        } else {
            (fam.x_out[k], fam.x_in[k])
        };
        let ccw = if odd { fam.x_first_ccw } else { !fam.x_first_ccw };
        // diagonal block sits below the off-diagonal one
        let rho = rat(149 - 12 * k as i64, 100);
        let dips = if k + 1 == plan.r { plan.dips.clone() } else { Vec::new() };
        strands.push(Strand { dir_in, dir_out, ccw, rho, dips });
    }
    for j in 0..plan.s {
        let odd = j % 2 == 0;
        let depth = plan.s - 1 - j;
        let (dir_in, dir_out) = if odd {
            (fam.y_near[depth], fam.y_far[depth])
        } else {
            (fam.y_far[depth], fam.y_near[depth])
        };
        let ccw = if odd { fam.y_first_ccw } else { !fam.y_first_ccw };
        let rho = rat(185 - 7 * (plan.s - 1 - j) as i64, 100);
        let dips = if plan.r == 0 && j + 1 == plan.s { plan.dips.clone() } else { Vec::new() };
        strands.push(Strand { dir_in, dir_out, ccw, rho, dips });
    }

    let stub_angle = strands[0].dir_in.angle_deg();
    let mut wps: Vec<(Dir, Rat)> = vec![(strands[0].dir_in, rat(4, 1))];
    for (i, st) in strands.iter().enumerate() {
        wps.extend(strand_waypoints(st));
        if i + 1 < strands.len() {
            let next = &strands[i + 1];
            let crossing_groups = i + 1 == plan.r && plan.r > 0 && plan.s > 0;
            let hop_r = if crossing_groups {
                rat(29, 10)
            } else if i < plan.r {
                rat(215 + 4 * i as i64, 100)
            } else {
                rat(240 + 4 * (i - plan.r) as i64, 100)
            };
            let ccw = direction_avoiding(st.dir_out, next.dir_in, stub_angle);
            wps.push((st.dir_out, hop_r.clone()));
            for d in walk(st.dir_out, next.dir_in, ccw) {
                wps.push((d, hop_r.clone()));
            }
            wps.push((next.dir_in, hop_r));
        }
    }
    let last = strands.last().unwrap();
    let esc_r = rat(59, 20);
    let ccw = direction_avoiding(last.dir_out, fam.free, stub_angle);
    wps.push((last.dir_out, esc_r.clone()));
    for d in walk(last.dir_out, fam.free, ccw) {
        wps.push((d, esc_r.clone()));
    }
    wps.push((fam.free, esc_r));
    wps.push((fam.free, rat(4, 1)));

    let arc = arc_from_waypoints(&wps);
    if plan.reversed {
        arc.reversed()
    } else {
        arc
    }
}

/// Deterministic pseudo-random composite plans for property tests.
pub fn random_plan(seed: u64) -> CompositePlan {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = |m: u64| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) % m
    };
    let family = match next(3) {
        0 => CompositeFamily::CcCb,
        1 => CompositeFamily::AaAc,
        _ => CompositeFamily::BbBa,
    };
    let (mut r, mut s) = (next(4) as usize, next(4) as usize);
    if r + s == 0 {
        r = 1 + next(3) as usize;
        s = next(4) as usize;
    }
    let mut dips = Vec::new();
    if r >= 1 {
        if next(3) == 0 {
            dips.push(DipKind::Bigon);
        }
        if next(3) == 0 {
            dips.push(DipKind::Cusp);
        }
    }
    CompositePlan { family, r, s, dips, reversed: next(2) == 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::word::{crossing_word, Circle, EdgeC2, SingularModel};

    fn word_of(arc: &Arc) -> crate::arc::word::CrossingWord {
        crossing_word(arc, &SingularModel::standard()).expect("template is generic")
    }

    #[test]
    fn standard_words() {
        let cases = [
            (StandardArc::Aa, EdgeC2::APlus, 0, EdgeC2::AMinus, 0),
            (StandardArc::Bb, EdgeC2::B, 0, EdgeC2::B, -1),
            (StandardArc::Cc, EdgeC2::C, 0, EdgeC2::C, -1),
            (StandardArc::Ba, EdgeC2::B, 0, EdgeC2::AMinus, 0),
            (StandardArc::Cb, EdgeC2::C, 0, EdgeC2::B, -1),
            (StandardArc::Ac, EdgeC2::APlus, 0, EdgeC2::C, 0),
        ];
        for (which, e1, w1, e2, w2) in cases {
            let w = word_of(&standard_arc(which));
            let c2: Vec<_> = w.events.iter().filter(|e| e.circle == Circle::Outer).collect();
            assert_eq!(c2.len(), 2, "{}", which.name());
            assert_eq!(c2[0].c2_edge, Some(e1), "{} first edge", which.name());
            assert_eq!(c2[0].winding, w1, "{} first winding", which.name());
            assert_eq!(c2[1].c2_edge, Some(e2), "{} second edge", which.name());
            assert_eq!(c2[1].winding, w2, "{} second winding", which.name());
            // D-in first, D-out last
            assert_eq!(w.events.first().unwrap().circle, Circle::Definite);
            assert_eq!(w.events.last().unwrap().circle, Circle::Definite);
        }
    }

    #[test]
    fn chord_is_trivial() {
        assert!(word_of(&boundary_chord()).events.is_empty());
    }

    #[test]
    fn composites_are_generic() {
        for family in [CompositeFamily::CcCb, CompositeFamily::AaAc, CompositeFamily::BbBa] {
            for r in 0..=3usize {
                for s in 0..=3usize {
                    if r + s == 0 {
                        continue;
                    }
                    let plan = CompositePlan { family, r, s, dips: vec![], reversed: false };
                    let arc = composite_arc(&plan);
                    let w = word_of(&arc);
                    let c2 = w.events.iter().filter(|e| e.circle == Circle::Outer).count();
                    assert_eq!(c2, 2 * (r + s), "{family:?} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn dips_cross_the_inner_circle() {
        for dip in [DipKind::Bigon, DipKind::Cusp] {
            let plan = CompositePlan {
                family: CompositeFamily::CcCb,
                r: 1,
                s: 1,
                dips: vec![dip],
                reversed: false,
            };
            let w = word_of(&composite_arc(&plan));
            let c1 = w.events.iter().filter(|e| e.circle == Circle::Inner).count();
            assert_eq!(c1, 2, "{dip:?}");
        }
    }
}
