//! Dual-route verification of the skein engine against an independent
//! word-level oracle, with the derived base values frozen first.

mod common;

use braidix::invariants::{self, degree_stats, HomflyEngine};
use braidix::poly::LaurentPoly2;
use braidix::verify::Rng;
use braidix::BraidWord;
use common::oracle_homfly;

fn w(text: &str) -> BraidWord {
    text.parse().unwrap()
}

#[test]
fn oracle_base_values() {
    // values computed with the oracle and frozen here
    assert_eq!(oracle_homfly(&w("1")), LaurentPoly2::one());
    assert_eq!(
        oracle_homfly(&BraidWord::identity(2)),
        LaurentPoly2::from_terms(&[(-1, -1, 1), (1, -1, -1)])
    );
    assert_eq!(
        oracle_homfly(&w("1 1 1")),
        LaurentPoly2::from_terms(&[(4, 0, -1), (2, 0, 2), (2, 2, 1)])
    );
    // figure-eight: v^{-2} − 1 + v² − z²
    assert_eq!(
        oracle_homfly(&w("1 -2 1 -2")),
        LaurentPoly2::from_terms(&[(-2, 0, 1), (0, 0, -1), (2, 0, 1), (0, 2, -1)])
    );
}

#[test]
fn engine_agrees_with_frozen_oracle_values() {
    let mut engine = HomflyEngine::new();
    for text in ["1", "1 1 1", "1 -2 1 -2"] {
        let word = w(text);
        assert_eq!(
            engine.homfly(&word).unwrap(),
            oracle_homfly(&word),
            "{text}"
        );
    }
    assert_eq!(
        engine.homfly(&BraidWord::identity(2)).unwrap(),
        oracle_homfly(&BraidWord::identity(2))
    );
}

#[test]
fn degree_stats_from_oracle() {
    let stats = degree_stats(&oracle_homfly(&w("1 1 1"))).unwrap();
    assert_eq!(
        (
            stats.min_deg_v,
            stats.max_deg_v,
            stats.span_v,
            stats.max_deg_z
        ),
        (2, 4, 2, 2)
    );
}

#[test]
fn engine_matches_oracle_on_random_words() {
    let mut rng = Rng::new(0xa5a5_0001);
    let mut engine = HomflyEngine::new();
    for trial in 0..150 {
        let word = rng.word(5, 10, false);
        let fast = engine.homfly(&word).unwrap();
        let slow = oracle_homfly(&word);
        assert_eq!(fast, slow, "disagreement on {word} (trial {trial})");
    }
}

#[test]
fn jones_paths_agree_on_random_words() {
    let mut rng = Rng::new(0xa5a5_0002);
    let mut engine = HomflyEngine::new();
    for _ in 0..150 {
        let word = rng.word(5, 12, false);
        let via_skein = invariants::jones_from_homfly(&engine.homfly(&word).unwrap()).unwrap();
        let via_bracket = invariants::jones_bracket(&word).unwrap();
        assert_eq!(via_skein, via_bracket, "Jones paths disagree on {word}");
    }
}

#[test]
fn parity_invariants_of_computed_polynomials() {
    let mut rng = Rng::new(0xa5a5_0003);
    let mut engine = HomflyEngine::new();
    for _ in 0..100 {
        let word = rng.word(4, 10, false);
        let c = word.closure_components();
        let p = engine.homfly(&word).unwrap();
        let parity = ((c as i32 - 1) % 2 + 2) % 2;
        for (a, b, _) in p.terms() {
            assert_eq!(a.rem_euclid(2), parity, "v-parity of {word}");
            assert_eq!(b.rem_euclid(2), parity, "z-parity of {word}");
        }
    }
}

#[test]
fn alexander_symmetry_on_random_knots() {
    let mut rng = Rng::new(0xa5a5_0004);
    let mut engine = HomflyEngine::new();
    let mut found = 0;
    while found < 60 {
        let word = rng.word(5, 11, false);
        if word.closure_components() != 1 {
            continue;
        }
        found += 1;
        let d = invariants::alexander_from_homfly(&engine.homfly(&word).unwrap()).unwrap();
        assert!(d.is_palindromic(), "Δ not symmetric for {word}");
        assert_eq!(d.eval_at_one(), 1, "Δ(1) ≠ 1 for {word}");
        assert!(d.has_even_exponents_only());
    }
}
