//! Reduction of crossing words to connected-sum normal forms: cusp and
//! bigon moves remove excursions into the central region, splitting cuts
//! the word at excursions outside the outer cusped circle, and each
//! remaining piece evaluates through the bridge construction.

use super::word::{crossing_word, Arc, ArcError, Circle, CrossingWord, EdgeC2, SingularModel};
use crate::lens::{from_curve_pair, ThreeManifold};
use crate::trisection::{DataError, TrisectionData};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error("piece crosses the outer circle {0} times; splitting should leave at most two")]
    OddCrossings(usize),
}

/// Order in which inner-circle excursions are removed.
#[derive(Debug, Clone, Copy)]
pub enum ReduceOrder {
    /// Leftmost excursion first; the default.
    InnermostLeftmost,
    /// Pseudo-random order from the seed; used to verify confluence.
    Seeded(u64),
}

fn c1_pair_starts(word: &CrossingWord) -> Vec<usize> {
    word.events
        .iter()
        .enumerate()
        .filter(|(_, e)| e.circle == Circle::Inner && e.inward)
        .map(|(i, _)| i)
        .collect()
}

/// Remove all excursions into the central region. An excursion entering and
/// leaving through the same inner edge is a bigon and adds an `S^1 x S^2`
/// summand; one through adjacent edges (any two distinct edges of the
/// three-cusped circle are adjacent) is a cusp move and changes nothing.
pub fn reduce(word: &CrossingWord) -> (CrossingWord, usize) {
    reduce_with_order(word, ReduceOrder::InnermostLeftmost)
}

pub fn reduce_with_order(word: &CrossingWord, order: ReduceOrder) -> (CrossingWord, usize) {
    let mut events = word.events.clone();
    let mut bigons = 0usize;
    let mut state = match order {
        ReduceOrder::Seeded(s) => s.wrapping_mul(2862933555777941757).wrapping_add(3037000493),
        ReduceOrder::InnermostLeftmost => 0,
    };
    loop {
        let word_now = CrossingWord { events: events.clone() };
        let starts = c1_pair_starts(&word_now);
        if starts.is_empty() {
            break;
        }
        let pick = match order {
            ReduceOrder::InnermostLeftmost => starts[0],
            ReduceOrder::Seeded(_) => {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                starts[(state >> 33) as usize % starts.len()]
            }
        };
        let enter = &events[pick];
        let leave = &events[pick + 1];
        debug_assert_eq!(leave.circle, Circle::Inner);
        debug_assert!(!leave.inward);
        if enter.c1_edge == leave.c1_edge {
            bigons += 1;
        }
        events.drain(pick..=pick + 1);
    }
    (CrossingWord { events }, bigons)
}

/// Cut the word at every excursion outside the outer circle whose ends are
/// both on it; the pieces correspond to closing each cut end off across the
/// definite fold. Stray definite-fold events between pieces evaporate into
/// sphere summands.
pub fn split(word: &CrossingWord) -> Vec<CrossingWord> {
    let mut pieces: Vec<CrossingWord> = Vec::new();
    let mut current: Vec<super::word::Event> = Vec::new();
    let mut inside = false; // between a C2-in and the matching C2-out
    for e in &word.events {
        match e.circle {
            Circle::Outer => {
                if e.inward {
                    current.push(e.clone());
                    inside = true;
                } else {
                    current.push(e.clone());
                    inside = false;
                    pieces.push(CrossingWord { events: std::mem::take(&mut current) });
                }
            }
            Circle::Inner => {
                current.push(e.clone());
            }
            Circle::Definite => {
                if inside {
                    current.push(e.clone());
                }
                // outside a piece, definite-fold dips close into spheres
            }
        }
    }
    if pieces.is_empty() && current.is_empty() {
        // arcs that never reach the outer circle are a single trivial piece
        pieces.push(CrossingWord::default());
    } else if !current.is_empty() {
        pieces.push(CrossingWord { events: current });
    }
    pieces
}

/// Evaluate one split piece against trisection data. Pieces see the outer
/// circle zero or two times; the two cycles, each the winding-adjusted
/// direct label of its edge, feed the bridge construction in traversal
/// order.
pub fn evaluate(piece: &CrossingWord, data: &TrisectionData) -> Result<ThreeManifold, DecomposeError> {
    let c2: Vec<_> = piece
        .events
        .iter()
        .filter(|e| e.circle == Circle::Outer)
        .collect();
    match c2.len() {
        0 => Ok(ThreeManifold::sphere()),
        2 => {
            let mu = data.mu.matrix();
            let cycle = |e: &super::word::Event| {
                let direct = match e.c2_edge.expect("outer events carry an edge") {
                    EdgeC2::APlus => &data.a2,
                    EdgeC2::AMinus => &data.a2p,
                    EdgeC2::B => &data.b2,
                    EdgeC2::C => &data.c2p,
                };
                mu.pow(e.winding).apply(direct)
            };
            let first = cycle(c2[0]);
            let second = cycle(c2[1]);
            Ok(ThreeManifold::from_lens(from_curve_pair(&first, &second)))
        }
        n => Err(DecomposeError::OddCrossings(n)),
    }
}

/// Connected-sum normal form of the vertical 3-manifold over the arc.
pub fn decompose(arc: &Arc, data: &TrisectionData) -> Result<ThreeManifold, DecomposeError> {
    let violations = data.validate();
    if !violations.is_empty() {
        return Err(DecomposeError::Data(DataError::Invalid(violations)));
    }
    let word = crossing_word(arc, &SingularModel::standard())?;
    decompose_word(&word, data)
}

/// Decompose an already-extracted crossing word.
pub fn decompose_word(
    word: &CrossingWord,
    data: &TrisectionData,
) -> Result<ThreeManifold, DecomposeError> {
    let (reduced, bigons) = reduce(word);
    let mut total = ThreeManifold::s1_x_s2(bigons);
    for piece in split(&reduced) {
        total = total.connected_sum(&evaluate(&piece, data)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::templates::{
        boundary_chord, composite_arc, standard_arc, CompositeFamily, CompositePlan, DipKind,
        StandardArc,
    };
    use crate::trisection::{CaseASubcase, TrisectionData};
    use num_bigint::BigInt;

    fn sample_data() -> Vec<TrisectionData> {
        let mut out = vec![TrisectionData::identity()];
        for sign in [1i8, -1] {
            for q in [-3i64, 0, 2, 3, 4, 5] {
                if q == sign as i64 {
                    continue;
                }
                out.push(
                    TrisectionData::case_a(sign, CaseASubcase::Main { q: BigInt::from(q) })
                        .unwrap(),
                );
            }
            out.push(TrisectionData::case_a(sign, CaseASubcase::ExceptionalOne).unwrap());
            out.push(TrisectionData::case_a(sign, CaseASubcase::ExceptionalTwo).unwrap());
            for power in [1u8, 4] {
                for eps2 in [1i8, -1] {
                    out.push(TrisectionData::case_b(power, sign, eps2));
                }
            }
        }
        out
    }

    #[test]
    fn standard_arcs_match_six_tuple() {
        for data in sample_data() {
            let t = data.six_tuple().unwrap();
            let expect = [
                (StandardArc::Aa, &t.v_aa),
                (StandardArc::Bb, &t.v_bb),
                (StandardArc::Cc, &t.v_cc),
                (StandardArc::Ba, &t.v_ba),
                (StandardArc::Cb, &t.v_cb),
                (StandardArc::Ac, &t.v_ac),
            ];
            for (which, want) in expect {
                let got = decompose(&standard_arc(which), &data).unwrap();
                assert!(
                    got.equal(want),
                    "{} on {:?}: got {} want {}",
                    which.name(),
                    data.mu,
                    got.render(),
                    want.render()
                );
            }
        }
    }

    #[test]
    fn chord_decomposes_to_sphere() {
        let data = TrisectionData::case_a(1, CaseASubcase::Main { q: BigInt::from(3) }).unwrap();
        let m = decompose(&boundary_chord(), &data).unwrap();
        assert!(m.is_sphere());
    }

    #[test]
    fn composite_matches_closed_form() {
        // r diagonal strands and s off-diagonal strands alternate
        // orientation, diagonal plain-first, off-diagonal mirror-first
        let data = TrisectionData::case_a(1, CaseASubcase::Main { q: BigInt::from(4) }).unwrap();
        let t = data.six_tuple().unwrap();
        for r in 0..=3usize {
            for s in 0..=3usize {
                if r + s == 0 {
                    continue;
                }
                let plan = CompositePlan {
                    family: CompositeFamily::CcCb,
                    r,
                    s,
                    dips: vec![],
                    reversed: false,
                };
                let got = decompose(&composite_arc(&plan), &data).unwrap();
                let mut want = ThreeManifold::sphere();
                for i in 0..r {
                    let piece = if i % 2 == 0 { t.v_cc.clone() } else { t.v_cc.mirror() };
                    want = want.connected_sum(&piece);
                }
                for j in 0..s {
                    let piece = if j % 2 == 0 { t.v_cb.mirror() } else { t.v_cb.clone() };
                    want = want.connected_sum(&piece);
                }
                assert!(
                    got.equal(&want),
                    "r={r} s={s}: got {} want {}",
                    got.render(),
                    want.render()
                );
            }
        }
    }

    #[test]
    fn bigon_adds_summand_cusp_does_not() {
        let data = TrisectionData::case_b(4, 1, -1);
        let base = CompositePlan {
            family: CompositeFamily::BbBa,
            r: 2,
            s: 1,
            dips: vec![],
            reversed: false,
        };
        let plain = decompose(&composite_arc(&base), &data).unwrap();
        let mut bigon = base.clone();
        bigon.dips = vec![DipKind::Bigon];
        let with_bigon = decompose(&composite_arc(&bigon), &data).unwrap();
        assert!(with_bigon.equal(&plain.connected_sum(&ThreeManifold::s1_x_s2(1))));
        let mut cusp = base.clone();
        cusp.dips = vec![DipKind::Cusp];
        let with_cusp = decompose(&composite_arc(&cusp), &data).unwrap();
        assert!(with_cusp.equal(&plain));
    }

    #[test]
    fn reversal_mirrors() {
        let data = TrisectionData::case_a(-1, CaseASubcase::Main { q: BigInt::from(5) }).unwrap();
        for which in StandardArc::ALL {
            let arc = standard_arc(which);
            let m = decompose(&arc, &data).unwrap();
            let rev = decompose(&arc.reversed(), &data).unwrap();
            assert!(rev.equal(&m.mirror()), "{}", which.name());
        }
    }
}
