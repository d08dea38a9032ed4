//! Property tests over the algebraic core.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use trivert::homology::{smith_diagonal, AbelianGroup, IntMatrix};
use trivert::lens::{from_curve_pair, LensSpace};
use trivert::torus::{intersection, solve_basis, MappingClass, PrimitiveClass};

fn primitive(bound: i64) -> impl Strategy<Value = PrimitiveClass> {
    (-bound..=bound, -bound..=bound)
        .prop_filter_map("primitive", |(p, q)| PrimitiveClass::new(p, q).ok())
}

fn mapping_class() -> impl Strategy<Value = MappingClass> {
    proptest::collection::vec(0u8..4, 0..8).prop_map(|word| {
        let l = MappingClass::dehn_twist(&PrimitiveClass::new(1, 0).unwrap());
        let r = MappingClass::dehn_twist(&PrimitiveClass::new(0, 1).unwrap());
        let mut m = MappingClass::identity();
        for g in word {
            let f = match g {
                0 => l.clone(),
                1 => l.inverse(),
                2 => r.clone(),
                _ => r.inverse(),
            };
            m = m.compose(&f);
        }
        m
    })
}

proptest! {
    #[test]
    fn twist_fixes_its_curve(gamma in primitive(1_000)) {
        let t = MappingClass::dehn_twist(&gamma);
        prop_assert_eq!(t.det(), BigInt::one());
        prop_assert_eq!(t.trace(), BigInt::from(2));
        prop_assert_eq!(t.apply(&gamma), gamma);
    }

    #[test]
    fn picard_lefschetz_form(gamma in primitive(100), x in (-100i64..=100, -100i64..=100)) {
        let t = MappingClass::dehn_twist(&gamma);
        let (x1, x2) = (BigInt::from(x.0), BigInt::from(x.1));
        let out = t.apply_raw((&x1, &x2));
        let i = &x1 * gamma.q() - &x2 * gamma.p();
        prop_assert_eq!(out.0, &x1 - &i * gamma.p());
        prop_assert_eq!(out.1, &x2 - &i * gamma.q());
    }

    #[test]
    fn power_of_minus_one_is_inverse(m in mapping_class()) {
        prop_assert_eq!(m.pow(-1), m.inverse());
        prop_assert_eq!(m.pow(3), m.compose(&m).compose(&m));
    }

    #[test]
    fn solve_basis_postcondition(x in primitive(1_000_000)) {
        let t = solve_basis(&x);
        prop_assert_eq!(t.det(), BigInt::one());
        prop_assert_eq!(t.apply_raw((x.p(), x.q())), (BigInt::one(), BigInt::zero()));
    }

    #[test]
    fn curve_pair_invariance(m in mapping_class(), x in primitive(50), y in primitive(50)) {
        let l = from_curve_pair(&x, &y);
        let moved = from_curve_pair(&m.apply(&x), &m.apply(&y));
        prop_assert!(moved.is_oriented_diffeo(&l));
    }

    #[test]
    fn curve_pair_order(x in primitive(50), y in primitive(50)) {
        let l = from_curve_pair(&x, &y);
        prop_assert_eq!(l.p().clone(), intersection(&x, &y).abs());
        // reversal mirrors, mirror is an involution
        let back = from_curve_pair(&y, &x);
        prop_assert!(back.is_oriented_diffeo(&l.mirror()));
        prop_assert_eq!(l.mirror().mirror(), l);
    }

    #[test]
    fn oriented_diffeo_is_an_equivalence(p in 2i64..60, q in 1i64..60) {
        prop_assume!(num_integer::gcd(p, q) == 1);
        let l = LensSpace::new(p, q % p).unwrap();
        // closed under mirror-of-mirror and inverse representative
        prop_assert!(l.is_oriented_diffeo(&l));
        let m = l.mirror();
        prop_assert!(m.mirror().is_oriented_diffeo(&l));
        prop_assert!(l.is_diffeo(&m));
    }

    #[test]
    fn snf_invariant_under_unimodular_moves(
        entries in proptest::collection::vec(-9i64..=9, 9),
        ops in proptest::collection::vec((0u8..4, 0usize..3, 0usize..3, -2i64..=2), 0..6),
    ) {
        let m = IntMatrix::from_i64(3, 3, &entries);
        let before = smith_diagonal(&m);
        // apply random row/column swaps and additions via explicit copies
        let mut e: Vec<Vec<BigInt>> = (0..3)
            .map(|i| (0..3).map(|j| m.get(i, j).clone()).collect())
            .collect();
        for (kind, a, b, c) in ops {
            if a == b {
                continue;
            }
            match kind {
                0 => e.swap(a, b),
                1 => {
                    for col in 0..3 {
                        let v = &e[b][col] * BigInt::from(c);
                        e[a][col] = &e[a][col] + v;
                    }
                }
                2 => {
                    for row in e.iter_mut() {
                        row.swap(a, b);
                    }
                }
                _ => {
                    for row in e.iter_mut() {
                        let v = &row[b] * BigInt::from(c);
                        row[a] = &row[a] + v;
                    }
                }
            }
        }
        let moved = IntMatrix::new(3, 3, e.into_iter().flatten().collect());
        prop_assert_eq!(smith_diagonal(&moved), before);
    }

    #[test]
    fn group_order_matches_determinant(entries in proptest::collection::vec(-9i64..=9, 4)) {
        let m = IntMatrix::from_i64(2, 2, &entries);
        let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
        let g = AbelianGroup::from_relation_matrix(&m);
        if det.is_zero() {
            // a singular relation matrix leaves a free summand
            prop_assert!(g.order().is_none());
        } else {
            prop_assert_eq!(g.order().unwrap(), det.abs());
        }
    }
}
