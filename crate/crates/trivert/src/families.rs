//! The connected-sum families realized as vertical 3-manifolds, and the
//! membership search with witness.
//!
//! Each family pairs a "diagonal" lens summand type with an "off-diagonal"
//! one; an instance is a connected sum of copies of the two types, where
//! within each type the counts of the two orientations differ by at most
//! one, plus any number of `S^1 x S^2` summands. This orientation-count
//! constraint is what a serpentine of parallel strands can produce.

use crate::lens::{LensSpace, ThreeManifold};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `L(k^2, k-1)` with `L(k+1, 1)` or `L(k-1, -1)`, any integer `k`.
    General,
    /// `L(9, 2)` with `L(k, 1)`, `k` in {2, 5}.
    SporadicNine,
    /// `L(4, 1)` with `L(k, 1)`, `k` in {3, 5}.
    SporadicFour,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyKind::General => "general",
            FamilyKind::SporadicNine => "sporadic-nine",
            FamilyKind::SporadicFour => "sporadic-four",
        };
        f.write_str(s)
    }
}

/// One parameterized family: the two lens summand types it combines.
#[derive(Debug, Clone)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub k: BigInt,
    /// Sign choice in the coupled `k +- 1` slot of the general family.
    pub plus: bool,
    pub diagonal: LensSpace,
    pub off_diagonal: LensSpace,
}

impl FamilyDescriptor {
    pub fn describe(&self) -> String {
        format!(
            "{} k={} {}: {} with {}",
            self.kind,
            self.k,
            if self.plus { "+" } else { "-" },
            self.diagonal,
            self.off_diagonal
        )
    }
}

/// Enumerate family descriptors for `|k| <= k_bound`.
pub fn vertical_families(k_bound: u64) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    let bound = k_bound as i128;
    for k in -bound..=bound {
        let kk = BigInt::from(k);
        let diagonal = LensSpace::new(&kk * &kk, &kk - BigInt::one()).expect("coprime");
        for plus in [true, false] {
            let off = if plus {
                LensSpace::new(&kk + BigInt::one(), BigInt::one())
            } else {
                LensSpace::new(&kk - BigInt::one(), BigInt::from(-1))
            }
            .expect("coprime");
            out.push(FamilyDescriptor {
                kind: FamilyKind::General,
                k: kk.clone(),
                plus,
                diagonal: diagonal.clone(),
                off_diagonal: off,
            });
        }
    }
    for k in [2i64, 5] {
        out.push(FamilyDescriptor {
            kind: FamilyKind::SporadicNine,
            k: BigInt::from(k),
            plus: true,
            diagonal: LensSpace::new(9, 2).unwrap(),
            off_diagonal: LensSpace::new(k, 1).unwrap(),
        });
    }
    for k in [3i64, 5] {
        out.push(FamilyDescriptor {
            kind: FamilyKind::SporadicFour,
            k: BigInt::from(k),
            plus: true,
            diagonal: LensSpace::new(4, 1).unwrap(),
            off_diagonal: LensSpace::new(k, 1).unwrap(),
        });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Maximum `|k|` tried in the general family.
    pub k_bound: u64,
    /// Maximum copies per summand type and maximum `S^1 x S^2` count.
    pub count_bound: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { k_bound: 50, count_bound: 5 }
    }
}

/// A successful membership certificate.
#[derive(Debug, Clone)]
pub struct RealizabilityWitness {
    pub kind: FamilyKind,
    pub k: BigInt,
    pub plus: bool,
    /// Copies of the diagonal type in its two orientations.
    pub diagonal_counts: (usize, usize),
    /// Copies of the off-diagonal type in its two orientations.
    pub off_diagonal_counts: (usize, usize),
    pub s1s2: usize,
    /// Whether the match is to the mirror of the input.
    pub mirrored: bool,
}

impl fmt::Display for RealizabilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family={} k={} sign={} diagonal={}+{} off={}+{} s1s2={} mirrored={}",
            self.kind,
            self.k,
            if self.plus { "+" } else { "-" },
            self.diagonal_counts.0,
            self.diagonal_counts.1,
            self.off_diagonal_counts.0,
            self.off_diagonal_counts.1,
            self.s1s2,
            self.mirrored
        )
    }
}

fn match_group(
    summands: &[&LensSpace],
    class: &LensSpace,
) -> Option<(usize, usize)> {
    // degenerate classes absorb nothing; only p >= 2 summands reach here
    if class.p() <= &BigInt::one() {
        return if summands.is_empty() { Some((0, 0)) } else { None };
    }
    let mirror = class.mirror();
    if class.is_oriented_diffeo(&mirror) {
        // amphichiral type: copies split freely between the orientations
        if summands.iter().all(|s| s.is_oriented_diffeo(class)) {
            let n = summands.len();
            return Some((n / 2, n - n / 2));
        }
        return None;
    }
    let mut plain = 0usize;
    let mut mirrored = 0usize;
    for s in summands {
        if s.is_oriented_diffeo(class) {
            plain += 1;
        } else if s.is_oriented_diffeo(&mirror) {
            mirrored += 1;
        } else {
            return None;
        }
    }
    if plain.abs_diff(mirrored) <= 1 {
        Some((plain, mirrored))
    } else {
        None
    }
}

fn match_against(
    m: &ThreeManifold,
    fam: &FamilyDescriptor,
    bounds: &SearchBounds,
    mirrored: bool,
) -> Option<RealizabilityWitness> {
    if m.s1s2_count() > bounds.count_bound {
        return None;
    }
    let mut diag_summands = Vec::new();
    let mut off_summands = Vec::new();
    for l in m.lens_summands() {
        // the two types never share an order, so assignment is forced
        if l.p() == fam.diagonal.p() {
            diag_summands.push(l);
        } else if l.p() == fam.off_diagonal.p() {
            off_summands.push(l);
        } else {
            return None;
        }
    }
    let diagonal_counts = match_group(&diag_summands, &fam.diagonal)?;
    let off_diagonal_counts = match_group(&off_summands, &fam.off_diagonal)?;
    let max = diagonal_counts
        .0
        .max(diagonal_counts.1)
        .max(off_diagonal_counts.0)
        .max(off_diagonal_counts.1);
    if max > bounds.count_bound {
        return None;
    }
    Some(RealizabilityWitness {
        kind: fam.kind,
        k: fam.k.clone(),
        plus: fam.plus,
        diagonal_counts,
        off_diagonal_counts,
        s1s2: m.s1s2_count(),
        mirrored,
    })
}

/// Search the families within `bounds` for the given normal form, up to a
/// global mirror, and return a witness if found.
pub fn is_vertical_realizable(
    m: &ThreeManifold,
    bounds: &SearchBounds,
) -> Option<RealizabilityWitness> {
    let families = vertical_families(bounds.k_bound);
    for (candidate, mirrored) in [(m.clone(), false), (m.mirror(), true)] {
        for fam in &families {
            if let Some(w) = match_against(&candidate, fam, bounds, mirrored) {
                return Some(w);
            }
        }
    }
    None
}
