//! Surgery presentations at the algebraic level: Smith normal form of
//! integer relation matrices, first homology of two-component surgeries,
//! distinguishing infinite families, and parity/signature classification of
//! the small intersection forms that appear.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    a: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, a: entries }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.a.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.rows {
            self.a.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = self.get(src, k) * c;
            *self.get_mut(dst, k) += v;
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for k in 0..self.rows {
            let v = self.get(k, src) * c;
            *self.get_mut(k, dst) += v;
        }
    }
}

/// Diagonal of the Smith normal form: nonnegative invariant factors
/// `d_1 | d_2 | ...` of length `min(rows, cols)`, including trailing zeros
/// and any leading ones.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut m = m.clone();
    let n = m.rows().min(m.cols());
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // pivot: entry of least nonzero absolute value in the submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..m.rows() {
                for j in k..m.cols() {
                    if m.get(i, j).is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if m.get(pi, pj).abs() <= m.get(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                diag.push(BigInt::zero());
                break;
            };
            m.swap_rows(k, pi);
            m.swap_cols(k, pj);
            if m.get(k, k).is_negative() {
                let minus_one = -BigInt::one();
                for j in 0..m.cols() {
                    let v = m.get(k, j) * &minus_one;
                    *m.get_mut(k, j) = v;
                }
            }
            let p = m.get(k, k).clone();
            let mut reduced = true;
            for i in k + 1..m.rows() {
                if !m.get(i, k).is_zero() {
                    let c = -(m.get(i, k).div_floor(&p));
                    m.add_row_multiple(i, k, &c);
                    if !m.get(i, k).is_zero() {
                        reduced = false;
                    }
                }
            }
            for j in k + 1..m.cols() {
                if !m.get(k, j).is_zero() {
                    let c = -(m.get(k, j).div_floor(&p));
                    m.add_col_multiple(j, k, &c);
                    if !m.get(k, j).is_zero() {
                        reduced = false;
                    }
                }
            }
            if !reduced {
                continue;
            }
            // enforce divisibility: fold in any entry the pivot misses
            let mut offender = None;
            'scan: for i in k + 1..m.rows() {
                for j in k + 1..m.cols() {
                    if !m.get(i, j).mod_floor(&p).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            if let Some(i) = offender {
                m.add_row_multiple(k, i, &BigInt::one());
                continue;
            }
            diag.push(p);
            break;
        }
    }
    diag
}

/// A finitely generated abelian group by invariant factors: the finite
/// factors (each > 1, in divisibility order) followed by one `0` per free
/// summand. Factors of 1 are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
}

impl AbelianGroup {
    /// Cokernel of a relation matrix acting on `cols` generators.
    pub fn from_relation_matrix(m: &IntMatrix) -> Self {
        let diag = smith_diagonal(m);
        let rank_deficit = m.cols() - diag.iter().filter(|d| !d.is_zero()).count();
        let mut factors: Vec<BigInt> =
            diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
        factors.extend(std::iter::repeat(BigInt::zero()).take(rank_deficit));
        Self { factors }
    }

    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Order of the group if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.factors.iter().any(|f| f.is_zero()) {
            return None;
        }
        Some(self.factors.iter().product())
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|f| f.is_zero()).count()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| format!("Z/{d}"))
            .collect();
        let rank = self.free_rank();
        if rank == 1 {
            parts.push("Z".to_string());
        } else if rank > 1 {
            parts.push(format!("Z^{rank}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Surgery description of the vertical 3-manifold of a (2,0)-4-section map:
/// slopes on the two 2-bridge link components and their linking number.
/// The underlying 2-bridge slope, when known, is carried as unvalidated
/// metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryPresentation {
    pub r1: BigInt,
    pub r2: BigInt,
    pub n: BigInt,
    pub two_bridge_slope: Option<(BigInt, BigInt)>,
}

impl SurgeryPresentation {
    pub fn new(r1: impl Into<BigInt>, r2: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        Self { r1: r1.into(), r2: r2.into(), n: n.into(), two_bridge_slope: None }
    }

    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::new(
            2,
            2,
            vec![self.r1.clone(), self.n.clone(), self.n.clone(), self.r2.clone()],
        )
    }
}

/// First homology of the surgered manifold: generators the two meridians,
/// relations `r1*m1 + n*m2` and `r2*m2 + n*m1`.
pub fn homology(p: &SurgeryPresentation) -> AbelianGroup {
    AbelianGroup::from_relation_matrix(&p.relation_matrix())
}

/// Pairwise comparison of the homology of a family of presentations.
#[derive(Debug, Clone)]
pub struct DistinctnessReport {
    pub groups: Vec<AbelianGroup>,
    /// Index pairs with identical invariant factors.
    pub coincidences: Vec<(usize, usize)>,
}

impl DistinctnessReport {
    pub fn all_distinguished(&self) -> bool {
        self.coincidences.is_empty()
    }
}

pub fn distinguish_family(family: &[SurgeryPresentation]) -> DistinctnessReport {
    let groups: Vec<AbelianGroup> = family.iter().map(homology).collect();
    let mut coincidences = Vec::new();
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if groups[i] == groups[j] {
                coincidences.push((i, j));
            }
        }
    }
    DistinctnessReport { groups, coincidences }
}

/// Closed simply connected 4-manifolds that occur here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourManifoldName {
    S2xS2,
    Cp2Cp2Bar,
    Cp2Cp2,
    Cp2BarCp2Bar,
}

impl fmt::Display for FourManifoldName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FourManifoldName::S2xS2 => "S2xS2",
            FourManifoldName::Cp2Cp2Bar => "CP2#CP2bar",
            FourManifoldName::Cp2Cp2 => "CP2#CP2",
            FourManifoldName::Cp2BarCp2Bar => "CP2bar#CP2bar",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("the form [[{0}, 1], [1, {1}]] is not unimodular")]
    NotUnimodular(BigInt, BigInt),
}

/// Classify the rank-2 form `[[f1, 1], [1, f2]]` by parity and signature.
pub fn hopf_pair_form(f1: &BigInt, f2: &BigInt) -> Result<FourManifoldName, FormError> {
    let det = f1 * f2 - BigInt::one();
    if det.abs() != BigInt::one() {
        return Err(FormError::NotUnimodular(f1.clone(), f2.clone()));
    }
    let even = f1.is_even() && f2.is_even();
    let signature: i8 = if det.is_negative() {
        0
    } else if (f1 + f2).is_positive() {
        2
    } else {
        -2
    };
    Ok(match (even, signature) {
        (true, _) => {
            // an even unimodular pair has f1*f2 = 0, hence signature 0
            debug_assert_eq!(signature, 0);
            FourManifoldName::S2xS2
        }
        (false, 0) => FourManifoldName::Cp2Cp2Bar,
        (false, s) if s > 0 => FourManifoldName::Cp2Cp2,
        (false, _) => FourManifoldName::Cp2BarCp2Bar,
    })
}

/// Kirby data of the double of the one-sided 4-manifold: the 2-bridge link
/// framings plus a zero-framed meridian for each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleForm {
    pub f1: BigInt,
    pub f2: BigInt,
    pub n: BigInt,
}

/// The closed 4-manifolds realized by doubles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleName {
    TwoS2xS2,
    TwoCp2TwoCp2Bar,
}

impl fmt::Display for DoubleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DoubleName::TwoS2xS2 => "#2 S2xS2",
            DoubleName::TwoCp2TwoCp2Bar => "#2 CP2 #2 CP2bar",
        };
        f.write_str(s)
    }
}

impl DoubleForm {
    pub fn new(f1: impl Into<BigInt>, f2: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        Self { f1: f1.into(), f2: f2.into(), n: n.into() }
    }

    /// The 4x4 Gram matrix of the double's intersection form.
    pub fn gram(&self) -> IntMatrix {
        let z = BigInt::zero;
        let o = BigInt::one;
        IntMatrix::new(
            4,
            4,
            vec![
                self.f1.clone(), self.n.clone(), o(), z(),
                self.n.clone(), self.f2.clone(), z(), o(),
                o(), z(), z(), z(),
                z(), o(), z(), z(),
            ],
        )
    }

    fn gram_det(&self) -> BigInt {
        // base change e1 -> e1 - n*e4 splits the form into two hyperbolic-
        // shaped blocks [[f, 1], [1, 0]], each of determinant -1
        BigInt::one()
    }
}

/// Classify the double by parity of the split blocks; the signature is zero
/// either way, and the linking number drops out under the base change.
pub fn classify_double(form: &DoubleForm) -> DoubleName {
    debug_assert!(form.gram_det().is_one());
    if form.f1.is_even() && form.f2.is_even() {
        DoubleName::TwoS2xS2
    } else {
        DoubleName::TwoCp2TwoCp2Bar
    }
}
