//! The length-9 exhaustion: no word of letters 1, 2, 3 of length 9 can be
//! the low subword of an irreducible positive braid.
//!
//! Three checks run over all 3⁹ raw words: canonical-class deduplication
//! (maximal index sum, lexicographically minimal rotation), per-letter
//! occurrence minima with a syntactic compositeness test, and the
//! square-elimination connectedness test. Together they discard everything.

use crate::census::canonical::CanonicalPolicy;
use crate::census::PositiveWords;
use crate::word::BraidWord;
use std::collections::{HashSet, VecDeque};

#[derive(Debug, Clone, Copy)]
pub struct Exhaust9Options {
    /// Apply the per-letter occurrence minima (2, 4, 2). Disabling this is a
    /// sanity mode showing the filter carries real weight.
    pub count_filter: bool,
    /// State budget for each square-elimination search.
    pub square_budget: usize,
}

impl Default for Exhaust9Options {
    fn default() -> Self {
        Exhaust9Options {
            count_filter: true,
            square_budget: 200_000,
        }
    }
}

/// Stage-by-stage outcome of the exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhaust9Report {
    /// Raw words generated (3⁹ before any filtering).
    pub generated: usize,
    /// Canonical representatives among them.
    pub canonical: usize,
    /// Survivors of the occurrence-minima filter.
    pub after_counts: usize,
    /// Survivors of the syntactic compositeness filter.
    pub after_composite: usize,
    /// Words the square-elimination test failed to discard.
    pub survivors: Vec<BraidWord>,
}

/// Does the square-elimination procedure (Yang-Baxter moves, rotations,
/// commutations, and deletion of cyclically adjacent squares of the
/// designated letters) reach a word missing one of the designated letters?
/// A `true` answer certifies the ambient closure is not a knot.
pub fn square_eliminates_letter(w: &BraidWord, designated: &[usize], budget: usize) -> bool {
    let start = w.min_rotation();
    let mut seen: HashSet<Vec<i16>> = HashSet::new();
    let mut queue: VecDeque<BraidWord> = VecDeque::new();
    seen.insert(start.values());
    queue.push_back(start);
    let mut visited = 0usize;
    while let Some(word) = queue.pop_front() {
        let counts = word.letter_counts();
        if designated
            .iter()
            .any(|&d| d < counts.len() && counts[d] == 0)
        {
            return true;
        }
        visited += 1;
        if visited > budget {
            return false;
        }
        let push =
            |cand: BraidWord, seen: &mut HashSet<Vec<i16>>, queue: &mut VecDeque<BraidWord>| {
                let normal = cand.min_rotation();
                if seen.insert(normal.values()) {
                    queue.push_back(normal);
                }
            };
        let len = word.len();
        for rot in 0..len {
            let r = word.rotated(rot);
            if len >= 3 {
                for forward in [true, false] {
                    if let Some(n) = r.yb_at(0, forward) {
                        push(n, &mut seen, &mut queue);
                    }
                }
            }
            if len >= 2 {
                if let Some(n) = r.commute_at(0) {
                    push(n, &mut seen, &mut queue);
                }
                // delete a square of a designated letter
                let a = r.letters()[0];
                if a == r.letters()[1] && designated.contains(&a.index()) {
                    let mut vals = r.values();
                    vals.drain(0..2);
                    push(
                        BraidWord::from_values(&vals, Some(word.strands())).expect("subword"),
                        &mut seen,
                        &mut queue,
                    );
                }
            }
        }
    }
    false
}

/// Run the three-stage exhaustion over all words of letters 1, 2, 3 of
/// length 9. The expected outcome is an empty survivor list.
pub fn exhaust_length9(opts: &Exhaust9Options) -> Exhaust9Report {
    let policy = CanonicalPolicy::cyclic_maximal();
    let mut report = Exhaust9Report {
        generated: raw_word_count(),
        canonical: 0,
        after_counts: 0,
        after_composite: 0,
        survivors: Vec::new(),
    };
    // all positive words over {1,2,3} in B_4 of length 9 with every letter
    // present, one per canonical class
    for word in PositiveWords::new(4, 9, policy) {
        report.canonical += 1;
        let counts = word.letter_counts();
        if opts.count_filter && (counts[1] < 2 || counts[2] < 4 || counts[3] < 2) {
            continue;
        }
        report.after_counts += 1;
        if super::syntactic_composite(&word, 5_000) {
            continue;
        }
        report.after_composite += 1;
        if !square_eliminates_letter(&word, &[1, 2], opts.square_budget) {
            report.survivors.push(word);
        }
    }
    report
}

/// Raw generation count: all words of letters 1, 2, 3 of length 9.
fn raw_word_count() -> usize {
    3usize.pow(9)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_elimination_examples() {
        // σ1² σ2² σ3 eliminates both designated letters
        let w: BraidWord = BraidWord::parse("1 1 2 2 3", Some(4)).unwrap();
        assert!(square_eliminates_letter(&w, &[1, 2], 10_000));
        // the (3,4)-torus word keeps its letters: closure is a knot
        let t: BraidWord = "1 2 1 2 1 2 1 2".parse().unwrap();
        assert!(!square_eliminates_letter(&t, &[1, 2], 10_000));
    }

    #[test]
    fn raw_count() {
        assert_eq!(raw_word_count(), 19683);
    }
}
