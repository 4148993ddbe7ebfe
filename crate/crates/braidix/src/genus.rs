//! Genus and Euler characteristic bookkeeping for braid closures.
//!
//! Positive braid words realize the Bennequin bound `1 − χ = [β] − n + 1`
//! exactly, which pins the genus of their closures. Band presentations
//! (factorizations into conjugates `u σ_i u^{-1}` of single positive
//! generators) extend the same bookkeeping to non-positive words: `n` discs
//! joined by `b` bands span a surface with `1 − χ = b − n + 1`.

use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;
use crate::word::{BraidWord, Letter};

/// Exact genus of the closure of a positive knot word,
/// `g = ([β] − n + 1)/2` (Bennequin sharpness for positive braids).
pub fn positive_genus(w: &BraidWord) -> Result<i64> {
    if !w.is_positive() {
        return Err(Error::Unsupported(
            "genus formula applies to positive words only".into(),
        ));
    }
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let doubled = w.exponent_sum() - w.strands() as i64 + 1;
    debug_assert!(doubled % 2 == 0);
    Ok(doubled / 2)
}

/// Bennequin's lower bound `[β] − n + 1 ≤ 1 − χ(closure)` for any word.
pub fn bennequin_lower(w: &BraidWord) -> i64 {
    w.exponent_sum() - w.strands() as i64 + 1
}

/// One band of a band presentation: `conjugator · σ_core^sign · conjugator^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    pub conjugator: Vec<Letter>,
    pub core_index: usize,
    pub sign: i8,
}

/// A factorization of a braid word into bands; reassembling the bands in
/// order reproduces the source word letter for letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandPresentation {
    pub strands: usize,
    pub bands: Vec<Band>,
}

impl BandPresentation {
    pub fn band_count(&self) -> usize {
        self.bands.len()
    }

    /// `1 − χ` of the band surface: bands minus discs plus one.
    pub fn one_minus_chi(&self) -> i64 {
        self.bands.len() as i64 - self.strands as i64 + 1
    }

    pub fn reassemble(&self) -> BraidWord {
        let mut letters = Vec::new();
        for band in &self.bands {
            letters.extend_from_slice(&band.conjugator);
            letters.push(Letter::new(band.core_index, band.sign));
            letters.extend(band.conjugator.iter().rev().map(|l| l.inverse()));
        }
        BraidWord::new(self.strands, letters).expect("bands reuse validated letters")
    }
}

/// Greedy parse of a word into positive bands `u σ_i u^{-1}`, longest
/// conjugator first, with a small backtracking budget. Bare positive letters
/// are bands with empty conjugator. Returns `None` when the word is not a
/// product of positive bands under this strategy.
pub fn band_parse(w: &BraidWord) -> Option<BandPresentation> {
    let letters = w.letters();
    let mut bands = Vec::new();
    let mut backtracks = 3usize;
    if parse_from(letters, 0, &mut bands, &mut backtracks) {
        Some(BandPresentation {
            strands: w.strands(),
            bands,
        })
    } else {
        None
    }
}

fn parse_from(
    letters: &[Letter],
    pos: usize,
    bands: &mut Vec<Band>,
    backtracks: &mut usize,
) -> bool {
    if pos == letters.len() {
        return true;
    }
    let remaining = letters.len() - pos;
    let max_u = (remaining - 1) / 2;
    for u_len in (0..=max_u).rev() {
        let core = letters[pos + u_len];
        if !core.is_positive() {
            continue;
        }
        let tail_matches = (0..u_len)
            .all(|j| letters[pos + u_len + 1 + j] == letters[pos + u_len - 1 - j].inverse());
        if !tail_matches {
            continue;
        }
        bands.push(Band {
            conjugator: letters[pos..pos + u_len].to_vec(),
            core_index: core.index(),
            sign: core.sign(),
        });
        if parse_from(letters, pos + 2 * u_len + 1, bands, backtracks) {
            return true;
        }
        bands.pop();
        if *backtracks == 0 {
            return false;
        }
        *backtracks -= 1;
    }
    false
}

/// Band parse up to conjugation: tries cyclic rotations and short
/// commutation rewritings of `w` (all of which leave the braid closure and
/// its band surfaces untouched) until one representative factors into
/// positive bands. Bounded breadth-first search over at most `budget`
/// representatives.
pub fn band_parse_search(w: &BraidWord, budget: usize) -> Option<BandPresentation> {
    use std::collections::{HashSet, VecDeque};
    let mut seen: HashSet<Vec<i16>> = HashSet::new();
    let mut queue: VecDeque<BraidWord> = VecDeque::new();
    seen.insert(w.values());
    queue.push_back(w.clone());
    let mut visited = 0usize;
    while let Some(word) = queue.pop_front() {
        visited += 1;
        if visited > budget {
            return None;
        }
        if let Some(b) = band_parse(&word) {
            return Some(b);
        }
        let push =
            |cand: BraidWord, seen: &mut HashSet<Vec<i16>>, queue: &mut VecDeque<BraidWord>| {
                if seen.insert(cand.values()) {
                    queue.push_back(cand);
                }
            };
        if !word.is_empty() {
            push(word.rotated(1), &mut seen, &mut queue);
        }
        for p in 0..word.len().saturating_sub(1) {
            if let Some(c) = word.commute_at(p) {
                push(c, &mut seen, &mut queue);
            }
        }
    }
    None
}

/// Verdict of the genus/degree comparison `1 − χ ≥ min deg_v P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MortonVerdict {
    /// `min deg_v P > 1 − χ`: the conjectured inequality fails.
    Violated {
        min_deg_v: i64,
        one_minus_chi: i64,
    },
    Consistent {
        min_deg_v: i64,
        one_minus_chi: i64,
    },
    /// The band parse failed or did not pin `1 − χ` exactly.
    Inconclusive {
        bennequin: i64,
        band_bound: Option<i64>,
    },
}

/// Compare `min deg_v P` with `1 − χ` of the closure, when the latter is
/// pinned between the Bennequin bound and a positive band surface.
pub fn morton_conjecture_check(w: &BraidWord, p: &LaurentPoly2) -> Result<MortonVerdict> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let bennequin = bennequin_lower(w);
    let Some(presentation) = band_parse_search(w, 5_000) else {
        return Ok(MortonVerdict::Inconclusive {
            bennequin,
            band_bound: None,
        });
    };
    if presentation.bands.iter().any(|b| b.sign < 0) {
        return Ok(MortonVerdict::Inconclusive {
            bennequin,
            band_bound: None,
        });
    }
    let upper = presentation.one_minus_chi();
    if upper != bennequin {
        return Ok(MortonVerdict::Inconclusive {
            bennequin,
            band_bound: Some(upper),
        });
    }
    let min_deg_v = p.min_deg_v().ok_or(Error::ZeroPolynomial)? as i64;
    if min_deg_v > bennequin {
        Ok(MortonVerdict::Violated {
            min_deg_v,
            one_minus_chi: bennequin,
        })
    } else {
        Ok(MortonVerdict::Consistent {
            min_deg_v,
            one_minus_chi: bennequin,
        })
    }
}

/// Morton's canonical genus inequality specialized to this braid diagram:
/// `max deg_z P ≤ letters − strands + 1`. Returns the slack, which is
/// never negative for honest inputs.
pub fn canonical_genus_slack(w: &BraidWord, p: &LaurentPoly2) -> Result<i64> {
    let bound = w.len() as i64 - w.strands() as i64 + 1;
    let max_z = p.max_deg_z().ok_or(Error::ZeroPolynomial)? as i64;
    Ok(bound - max_z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants;
    use crate::tables;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn genus_values() {
        assert_eq!(positive_genus(&w("1 1 1")).unwrap(), 1);
        let (m1, m2) = tables::mutant_positive_5_braids();
        assert_eq!(positive_genus(&m1).unwrap(), 6);
        assert_eq!(positive_genus(&m2).unwrap(), 6);
        // 18 letters on 5 strands
        let family = crate::census::dn_upper_family(5).unwrap();
        assert_eq!(positive_genus(&family).unwrap(), 7);
        assert!(positive_genus(&w("1 -2 1 -2")).is_err());
        assert!(positive_genus(&w("1 1")).is_err());
    }

    #[test]
    fn bennequin_values() {
        assert_eq!(bennequin_lower(&tables::morton_violation_word()), 8);
        assert_eq!(bennequin_lower(&BraidWord::identity(1)), 0);
        assert_eq!(bennequin_lower(&w("-1 -1 -1")), -4);
    }

    #[test]
    fn band_parse_trefoil() {
        let b = band_parse(&w("1 1 1")).unwrap();
        assert_eq!(b.band_count(), 3);
        assert_eq!(b.one_minus_chi(), 2);
        assert_eq!(b.reassemble(), w("1 1 1"));
    }

    #[test]
    fn band_parse_main_violation_word() {
        let word = tables::morton_violation_word();
        let b = band_parse(&word).unwrap();
        assert_eq!(b.band_count(), 11);
        assert_eq!(b.one_minus_chi(), 8);
        assert_eq!(b.reassemble(), word);
        assert!(b.bands.iter().all(|band| band.sign == 1));
    }

    #[test]
    fn band_parse_rejects_stray_negative() {
        assert!(band_parse(&w("-1 2")).is_none());
        assert!(band_parse_search(&w("-1 2"), 100).is_none());
    }

    #[test]
    fn band_search_handles_all_extra_words() {
        for word in tables::morton_violation_extras() {
            let b = band_parse_search(&word, 5_000).expect("band presentation");
            assert_eq!(b.band_count(), 11);
            assert_eq!(b.strands, 4);
            assert!(b.bands.iter().all(|band| band.sign == 1));
        }
    }

    #[test]
    fn morton_check_on_trefoil() {
        let tref = w("1 1 1");
        let p = invariants::homfly(&tref).unwrap();
        assert_eq!(
            morton_conjecture_check(&tref, &p).unwrap(),
            MortonVerdict::Consistent {
                min_deg_v: 2,
                one_minus_chi: 2
            }
        );
    }

    #[test]
    fn canonical_genus_slack_values() {
        let tref = w("1 1 1");
        let p = invariants::homfly(&tref).unwrap();
        assert_eq!(canonical_genus_slack(&tref, &p).unwrap(), 0);
        // a stabilized diagram changes neither side
        let stab = w("1 1 1 2");
        let ps = invariants::homfly(&stab).unwrap();
        assert_eq!(canonical_genus_slack(&stab, &ps).unwrap(), 0);
    }
}
