//! Cross-module soundness checks: cable words against the skein engine,
//! positive-braid degree identities, and criterion soundness on random
//! closures.

use braidix::cabling::{cable_word, two_cable, CablePattern};
use braidix::criteria::{cabled_mwf_bound, mwf_bound, unity_root_test};
use braidix::genus::{bennequin_lower, canonical_genus_slack, positive_genus};
use braidix::invariants::{degree_stats, jones_from_homfly, HomflyEngine};
use braidix::verify::Rng;
use braidix::BraidWord;

#[test]
fn cable_polynomial_ignores_conjugation() {
    // replacing the companion word by a conjugate leaves the satellite
    let mut rng = Rng::new(0xcab1e);
    let mut engine = HomflyEngine::new();
    let mut done = 0;
    while done < 50 {
        let word = rng.word(3, 4, false);
        if word.closure_components() != 1 {
            // the zero-framed satellite formula is stated for knot companions
            continue;
        }
        let pattern = CablePattern::twisted(2, 1 + 2 * rng.below(3) as i64).unwrap();
        let base = cable_word(&word, &pattern).unwrap();
        let p = engine.homfly(&base).unwrap();
        let rotated = word.rotated(1 + rng.below(word.len().max(1) as u64) as usize);
        let other = cable_word(&rotated, &pattern).unwrap();
        assert_eq!(
            engine.homfly(&other).unwrap(),
            p,
            "cable polynomial changed under conjugation of {word}"
        );
        done += 1;
    }
}

#[test]
fn two_cable_mwf_stays_below_strand_count() {
    let mut rng = Rng::new(0xcab1e + 1);
    let mut engine = HomflyEngine::new();
    let mut done = 0;
    while done < 20 {
        let word = rng.word(3, 6, false);
        let writhe = 2 * word.exponent_sum() + 1; // odd: connected cable
        let cable = two_cable(&word, writhe).unwrap();
        assert_eq!(cable.closure_components() % 2, 1);
        let p = engine.homfly(&cable).unwrap();
        let bound = cabled_mwf_bound(&p, 2).unwrap();
        assert!(
            bound <= word.strands() as i64,
            "cabled bound {bound} exceeds strand count for {word}"
        );
        done += 1;
    }
}

#[test]
fn unity_root_never_fires_on_own_strand_count() {
    let mut rng = Rng::new(0xcab1e + 2);
    let mut engine = HomflyEngine::new();
    for _ in 0..60 {
        let word = rng.word(5, 10, false);
        let v = jones_from_homfly(&engine.homfly(&word).unwrap()).unwrap();
        for k in [3, 5, 6, 8, 10, 12] {
            let t = unity_root_test(&v, word.strands() as i64, k).unwrap();
            assert!(
                !t.excluded,
                "root test at k = {k} wrongly excludes {word} on its own strand count"
            );
        }
    }
}

#[test]
fn positive_braid_degree_identities() {
    // for positive knot closures, min deg_v P = max deg_z P = [β] − n + 1
    let mut rng = Rng::new(0xcab1e + 3);
    let mut engine = HomflyEngine::new();
    let mut done = 0;
    while done < 60 {
        let word = rng.word(4, 11, true);
        if word.closure_components() != 1 {
            continue;
        }
        done += 1;
        let p = engine.homfly(&word).unwrap();
        let stats = degree_stats(&p).unwrap();
        let expected = bennequin_lower(&word);
        assert_eq!(stats.min_deg_v as i64, expected, "min deg_v for {word}");
        assert_eq!(stats.max_deg_z as i64, expected, "max deg_z for {word}");
        assert_eq!(2 * positive_genus(&word).unwrap(), expected);
        // MWF can never beat the representation at hand
        assert!(mwf_bound(&p).unwrap() <= word.strands() as i64);
    }
}

#[test]
fn canonical_genus_slack_is_nonnegative() {
    let mut rng = Rng::new(0xcab1e + 4);
    let mut engine = HomflyEngine::new();
    for _ in 0..80 {
        let word = rng.word(5, 12, false);
        let p = engine.homfly(&word).unwrap();
        let slack = canonical_genus_slack(&word, &p).unwrap();
        assert!(slack >= 0, "negative slack for {word}");
    }
}

#[test]
fn cable_closure_component_arithmetic() {
    // the (2,7)-cable of the trefoil is a knot; even twisting numbers give
    // two components
    let trefoil: BraidWord = "1 1 1".parse().unwrap();
    for twists in 0..8 {
        let pattern = CablePattern::twisted(2, twists).unwrap();
        let cable = cable_word(&trefoil, &pattern).unwrap();
        let expected = if twists % 2 == 1 { 1 } else { 2 };
        assert_eq!(cable.closure_components(), expected, "twists = {twists}");
    }
}
