//! Reference data for the worked examples: published polynomial values and
//! braid words for the specific knots the criteria, cabling and genus
//! modules are demonstrated (and regression-tested) on.
//!
//! Polynomials are stored in the crate's line format and parsed through
//! [`LaurentPoly2::from_lines`]; hand-transcribed values carry their own
//! sanity anchors (evaluations, determinants, spans) in the tests below.

use crate::poly::{LaurentPoly1, LaurentPoly2};
use crate::word::BraidWord;

/// Skein polynomial of the knot 14_45759 (achiral, `v`-span 4).
pub fn p_14_45759() -> LaurentPoly2 {
    LaurentPoly2::from_lines(
        "z^0 : -2:3 0:-5 2:3\n\
         z^2 : -2:1 0:-5 2:1\n\
         z^4 : -2:-2 0:3 2:-2\n\
         z^6 : -2:-1 0:4 2:-1\n\
         z^8 : 0:1",
    )
    .expect("verified transcription")
}

/// Skein polynomial of a connected 2-cable of 14_45759 (`v`-span 14).
pub fn p_14_45759_two_cable() -> LaurentPoly2 {
    LaurentPoly2::from_lines(
        "z^0 : -4:28 -2:-84 0:78 2:5 4:-45 6:19\n\
         z^2 : -6:-35 -4:236 -2:-527 0:394 2:120 4:-350 6:183 8:-33\n\
         z^4 : -6:-405 -4:1342 -2:-1658 0:665 2:578 4:-1157 6:892 8:-276\n\
         z^6 : -6:-1423 -4:4237 -2:-3467 0:167 2:1181 4:-2092 6:2276 8:-759\n\
         z^8 : -6:-2303 -4:7563 -2:-5679 0:-166 2:1245 4:-2672 6:3300 8:-937\n\
         z^10 : -6:-1965 -4:8202 -2:-7643 0:1601 2:706 4:-2930 6:2892 8:-583\n\
         z^12 : -6:-936 -4:5755 -2:-7904 0:4143 2:215 4:-2610 6:1625 8:-190\n\
         z^14 : -6:-250 -4:2713 -2:-5823 0:4401 2:33 4:-1624 6:597 8:-31\n\
         z^16 : -6:-35 -4:857 -2:-2902 0:2583 2:2 4:-640 6:138 8:-2\n\
         z^18 : -6:-2 -4:173 -2:-940 0:901 4:-150 6:18\n\
         z^20 : -4:20 -2:-188 0:186 4:-19 6:1\n\
         z^22 : -4:1 -2:-21 0:21 4:-1\n\
         z^24 : -2:-1 0:1",
    )
    .expect("verified transcription")
}

/// Skein polynomial of the cable knot 13_9465 = (3_1)_{2,7}.
pub fn p_13_9465() -> LaurentPoly2 {
    LaurentPoly2::from_lines(
        "z^0 : 10:11 12:-15 14:5\n\
         z^2 : 10:40 12:-35 14:5\n\
         z^4 : 10:57 12:-28 14:1\n\
         z^6 : 10:36 12:-9\n\
         z^8 : 10:10 12:-1\n\
         z^10 : 10:1",
    )
    .expect("verified transcription")
}

/// Jones polynomial of 13_9465: coefficients `1 0 1 0 1 -1 0 -1 0 -1 1`
/// over `t`-degrees 5..15, stored in `s = t^{1/2}`.
pub fn v_13_9465() -> LaurentPoly1 {
    LaurentPoly1::from_terms(&[
        (10, 1),
        (14, 1),
        (18, 1),
        (20, -1),
        (24, -1),
        (28, -1),
        (30, 1),
    ])
}

/// Alexander polynomial of 13_9221:
/// `t^{-3} - 10t^{-2} + 29t^{-1} - 39 + 29t - 10t^2 + t^3`.
pub fn alexander_13_9221() -> LaurentPoly1 {
    LaurentPoly1::from_terms(&[
        (-6, 1),
        (-4, -10),
        (-2, 29),
        (0, -39),
        (2, 29),
        (4, -10),
        (6, 1),
    ])
}

/// The 25-letter 4-braid whose closure violates the genus/degree conjecture
/// `1 − χ ≥ min deg_v P`: eleven positive bands on four strands give genus 4
/// while `min deg_v P = 10`.
pub fn morton_violation_word() -> BraidWord {
    "1 1 1 2 -1 2 3 -2 1 2 -1 2 3 -2 3 1 1 2 -1 1 2 3 -2 -1 3"
        .parse()
        .expect("verified word")
}

/// Seven further 4-braid words with the same violation pattern.
pub fn morton_violation_extras() -> Vec<BraidWord> {
    [
        "1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2",
        "1 1 1 2 -1 2 1 3 1 2 -1 2 3 -2 1 2 -1 1 2 3 -2 -1 2 3 -2",
        "1 1 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2 3 1 2 -1 1 2 3 -2 3 -1",
        "1 1 1 2 -1 2 1 3 2 -1 1 2 3 -2 -1 2 3 -2 1 1 2 -1 2 3 -2",
        "1 1 1 2 -1 2 1 3 2 -1 1 2 3 -2 -1 2 3 -2 1 2 -1 2 3 -2 3",
        "1 1 1 2 -1 2 3 -2 1 1 2 -1 1 2 3 -2 -1 2 3 -2 1 2 -1 1 2 3 -2 3 -1",
        "1 1 1 2 -1 2 3 -2 1 2 -1 1 2 3 -2 -1 2 3 -2 3 1 2 -1 1 2 3 -2 3 -1",
    ]
    .iter()
    .map(|t| t.parse().expect("verified word"))
    .collect()
}

/// The 19-crossing positive 6-braid `σ1 σ2³ σ4² σ3 σ5 σ4³ σ1 σ3 σ5 σ2³ σ3 σ4`,
/// the minimal known positive representation of its closure.
pub fn irreducible_19_crossing_6_braid() -> BraidWord {
    "1 2 2 2 4 4 3 5 4 4 4 1 3 5 2 2 2 3 4"
        .parse()
        .expect("verified word")
}

/// Two positive-braid-knot closures of genus 6 with these almost positive
/// 4-braid representations; both have 16-crossing positive 5-braid diagrams
/// but no positive minimal-strand representation.
pub fn almost_positive_4_braids() -> (BraidWord, BraidWord) {
    (
        "-3 2 3 3 3 2 2 1 1 2 2 1 3 2 2 1 1"
            .parse()
            .expect("verified word"),
        "-3 2 3 3 2 2 1 1 2 2 1 3 2 2 1 1 2"
            .parse()
            .expect("verified word"),
    )
}

/// The two 16-crossing positive 5-braid mutant representations with unique
/// reduced positive diagrams (genus 6 closures).
pub fn mutant_positive_5_braids() -> (BraidWord, BraidWord) {
    (
        "1 2 2 3 3 3 1 1 4 2 2 2 3 3 3 4"
            .parse()
            .expect("verified word"),
        "1 2 2 2 3 3 3 1 4 2 2 2 3 3 3 4"
            .parse()
            .expect("verified word"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{self, eval_unit_circle};

    #[test]
    fn p_14_45759_shape() {
        let p = p_14_45759();
        assert_eq!(p.min_deg_v(), Some(-2));
        assert_eq!(p.max_deg_v(), Some(2));
        assert_eq!(p.max_deg_z(), Some(8));
        assert!(invariants::is_v_self_conjugate(&p));
        // Conway specialization has constant term 1 and determinant 125
        let conway = p.specialize_to_s(0).unwrap();
        assert_eq!(conway.eval_at_one(), 1);
        let det = eval_unit_circle(&conway, 1, 1).norm();
        assert!((det - 125.0).abs() < 1e-6);
    }

    #[test]
    fn cable_table_shape() {
        let p = p_14_45759_two_cable();
        assert_eq!(p.min_deg_v(), Some(-6));
        assert_eq!(p.max_deg_v(), Some(8));
        assert_eq!(p.max_deg_v().unwrap() - p.min_deg_v().unwrap(), 14);
        // knot cable: Conway constant term 1
        assert_eq!(p.specialize_to_s(0).unwrap().eval_at_one(), 1);
    }

    #[test]
    fn p_13_9465_matches_its_jones_line() {
        let p = p_13_9465();
        assert_eq!(p.min_deg_v(), Some(10));
        assert_eq!(p.max_deg_v(), Some(14));
        // the published V line is the Jones specialization of the published P
        assert_eq!(invariants::jones_from_homfly(&p).unwrap(), v_13_9465());
    }

    #[test]
    fn alexander_13_9221_evaluation() {
        let d = alexander_13_9221();
        assert_eq!(d.eval_at_one(), 1);
        assert!(d.is_palindromic());
        let at_fifth_root = eval_unit_circle(&d, 2, 5);
        let expected = 19.0 * 5f64.sqrt() - 49.0;
        assert!((at_fifth_root.re - expected).abs() < 1e-9);
        assert!(at_fifth_root.im.abs() < 1e-9);
    }

    #[test]
    fn word_arithmetic() {
        let main = morton_violation_word();
        assert_eq!(main.strands(), 4);
        assert_eq!(main.len(), 25);
        assert_eq!(main.exponent_sum(), 11);
        for w in morton_violation_extras() {
            assert_eq!(w.strands(), 4);
            assert_eq!(w.exponent_sum(), 11);
            assert_eq!(w.closure_components(), 1);
        }
        let b = irreducible_19_crossing_6_braid();
        assert_eq!((b.strands(), b.len()), (6, 19));
    }
}
