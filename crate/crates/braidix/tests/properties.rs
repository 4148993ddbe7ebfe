//! Property tests for the word, polynomial and census invariants.

use braidix::census::{canonicalize, reduction_search, CanonicalPolicy};
use braidix::poly::{LaurentPoly1, LaurentPoly2};
use braidix::word::Move;
use braidix::BraidWord;
use proptest::prelude::*;

fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |strands| {
        proptest::collection::vec(
            (1..strands as i16, prop_oneof![Just(1i16), Just(-1i16)]),
            0..=max_len,
        )
        .prop_map(move |letters| {
            let vals: Vec<i16> = letters.iter().map(|&(i, s)| i * s).collect();
            BraidWord::from_values(&vals, Some(strands)).unwrap()
        })
    })
}

fn arb_positive_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |strands| {
        proptest::collection::vec(1..strands as i16, 1..=max_len)
            .prop_map(move |vals| BraidWord::from_values(&vals, Some(strands)).unwrap())
    })
}

proptest! {
    #[test]
    fn text_roundtrip(word in arb_word(7, 20)) {
        let text = word.to_string();
        prop_assert_eq!(BraidWord::parse(&text, None).unwrap(), word);
    }

    #[test]
    fn moves_preserve_exponent_sum_and_components(word in arb_word(6, 14)) {
        let kinds = [
            Move::YbForward,
            Move::YbBackward,
            Move::Commute,
            Move::CyclicShift,
            Move::Flip,
            Move::FreeCancel,
        ];
        for neighbor in word.neighbors(&kinds) {
            prop_assert_eq!(neighbor.exponent_sum(), word.exponent_sum());
            prop_assert_eq!(neighbor.closure_components(), word.closure_components());
        }
    }

    #[test]
    fn yb_neighbors_are_symmetric(word in arb_word(5, 12)) {
        let kinds = [Move::YbForward, Move::YbBackward];
        for neighbor in word.neighbors(&kinds) {
            prop_assert!(neighbor.neighbors(&kinds).contains(&word));
        }
    }

    #[test]
    fn permutation_sign_matches_length_parity(word in arb_word(7, 18)) {
        let sign = if word.len() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(word.permutation().sign(), sign);
    }

    #[test]
    fn min_rotation_is_a_rotation_and_idempotent(word in arb_word(6, 14)) {
        let normal = word.min_rotation();
        prop_assert_eq!(normal.min_rotation(), normal.clone());
        let mut found = false;
        for k in 0..word.len().max(1) {
            if word.rotated(k) == normal {
                found = true;
                break;
            }
        }
        prop_assert!(found);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn stabilize_destabilize_roundtrip(word in arb_word(6, 15), sign in prop_oneof![Just(1i8), Just(-1i8)]) {
        // the top index never occurs after stabilization except once
        let up = word.stabilize(sign);
        prop_assert_eq!(up.strands(), word.strands() + 1);
        prop_assert_eq!(up.destabilize().unwrap(), word);
    }
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(word in arb_positive_word(5, 10)) {
        for policy in [CanonicalPolicy::default(), CanonicalPolicy::cyclic_maximal()] {
            let c = canonicalize(&word, &policy).unwrap();
            prop_assert_eq!(canonicalize(&c, &policy).unwrap(), c);
        }
    }

    #[test]
    fn reduction_preserves_genus_offset(word in arb_positive_word(4, 9)) {
        prop_assume!(word.closure_components() == 1);
        let r = reduction_search(&word, 2_000).unwrap();
        // [β] − n is pinned by the closure's genus for positive words
        prop_assert_eq!(
            r.best_word.exponent_sum() - r.best_word.strands() as i64,
            word.exponent_sum() - word.strands() as i64
        );
        prop_assert!(r.best_word.is_positive());
    }
}

proptest! {
    #[test]
    fn poly2_ring_identities(
        a in proptest::collection::vec(((-6i32..6), (0i32..5), (-4i64..5)), 0..6),
        b in proptest::collection::vec(((-6i32..6), (0i32..5), (-4i64..5)), 0..6),
        c in proptest::collection::vec(((-6i32..6), (0i32..5), (-4i64..5)), 0..6),
    ) {
        let pa = LaurentPoly2::from_terms(&a.iter().map(|&(x, y, z)| (x, y, z)).collect::<Vec<_>>());
        let pb = LaurentPoly2::from_terms(&b.iter().map(|&(x, y, z)| (x, y, z)).collect::<Vec<_>>());
        let pc = LaurentPoly2::from_terms(&c.iter().map(|&(x, y, z)| (x, y, z)).collect::<Vec<_>>());
        let lhs = pa.add(&pb).unwrap().mul(&pc).unwrap();
        let rhs = pa.mul(&pc).unwrap().add(&pb.mul(&pc).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poly2_line_roundtrip(
        terms in proptest::collection::vec(((-9i32..9), (-3i32..9), (-99i64..99)), 0..8),
    ) {
        let p = LaurentPoly2::from_terms(&terms.iter().map(|&(x, y, z)| (x, y, z)).collect::<Vec<_>>());
        prop_assert_eq!(LaurentPoly2::from_lines(&p.to_lines()).unwrap(), p);
    }

    #[test]
    fn poly1_eval_bounded_by_coefficient_mass(
        terms in proptest::collection::vec(((-20i32..20), (-50i64..50)), 0..10),
        num in -12i64..12,
        den in 1i64..12,
    ) {
        let p = LaurentPoly1::from_terms(&terms.iter().map(|&(e, c)| (e, c)).collect::<Vec<_>>());
        let mass: f64 = p.terms().map(|(_, c)| c.unsigned_abs() as f64).sum();
        let value = p.eval_unit(num, den).norm();
        prop_assert!(value <= mass + 1e-9);
    }
}
