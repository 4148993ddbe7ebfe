//! Splitting a 6-strand positive word into its low and high subwords and
//! the canonical recomposition, the machinery behind generating 17-crossing
//! irreducible candidates from smaller searches.

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter};

/// Extract the `{1,2,3}`-subword and the `{3,4,5}`-subword of a positive
/// 6-strand word, preserving letter order; the letter 3 belongs to both.
pub fn subword_split(w: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    if !w.is_positive() || w.strands() != 6 {
        return Err(Error::Unsupported(
            "subword split expects a positive 6-strand word".into(),
        ));
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    for l in w.letters() {
        if l.index() <= 3 {
            low.push(l.value());
        }
        if l.index() >= 3 {
            high.push(l.value());
        }
    }
    Ok((
        BraidWord::from_values(&low, Some(4))?,
        BraidWord::from_values(&high, Some(6))?,
    ))
}

/// Compose a `{1,2}`/`3` word with a `{3,4,5}` word sharing the same count
/// of 3s: the `{1,2}` segment between consecutive 3s in `low` is
/// concatenated with the `{4,5}` segment between the same 3s in `high`
/// (those letters commute, so one interleaving is the only relevant word).
pub fn subword_compose(low: &BraidWord, high: &BraidWord) -> Result<BraidWord> {
    let ok_low = low.is_positive() && low.letters().iter().all(|l| l.index() <= 3);
    let ok_high = high.is_positive() && high.letters().iter().all(|l| (3..=5).contains(&l.index()));
    if !ok_low || !ok_high {
        return Err(Error::Unsupported(
            "compose expects positive words over {1,2,3} and {3,4,5}".into(),
        ));
    }
    let low_segments = segments_between_threes(low.letters());
    let high_segments = segments_between_threes(high.letters());
    if low_segments.len() != high_segments.len() {
        return Err(Error::Unsupported(format!(
            "mismatched counts of the shared letter 3: {} vs {}",
            low_segments.len() - 1,
            high_segments.len() - 1
        )));
    }
    let mut letters: Vec<i16> = Vec::with_capacity(low.len() + high.len());
    let last = low_segments.len() - 1;
    for (i, (ls, hs)) in low_segments.iter().zip(high_segments.iter()).enumerate() {
        letters.extend(ls.iter().map(|l| l.value()));
        letters.extend(hs.iter().map(|l| l.value()));
        if i != last {
            letters.push(3);
        }
    }
    BraidWord::from_values(&letters, Some(6))
}

/// Segments of non-3 letters delimited by the 3s (count = #threes + 1).
fn segments_between_threes(letters: &[Letter]) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for &l in letters {
        if l.index() == 3 {
            out.push(Vec::new());
        } else {
            out.last_mut().unwrap().push(l);
        }
    }
    out
}

/// The size profiles `([β₁], [β]_3, [β₂])` a 17-crossing irreducible
/// 6-braid word must fit, given the per-letter minima (at least 4 for the
/// letters 2 and 4, at least 2 for 1, 3 and 5) and both subword lengths
/// being at least 10: exactly three possibilities.
pub fn compose_profiles_17() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for shared in 2..=17 {
        for low_len in 10..=17 {
            let high_len = 17 + shared - low_len;
            if high_len < low_len || high_len < 10 {
                continue;
            }
            // the {1,2} part needs ≥ 6 letters, the {4,5} part likewise
            if low_len < shared + 6 || high_len < shared + 6 {
                continue;
            }
            out.push((low_len, shared, high_len));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w6(text: &str) -> BraidWord {
        BraidWord::parse(text, Some(6)).unwrap()
    }

    #[test]
    fn compose_merges_segments() {
        let low = BraidWord::parse("1 1 2 2 3 3", Some(4)).unwrap();
        let high = w6("3 3 4 4 5 5");
        let got = subword_compose(&low, &high).unwrap();
        assert_eq!(got, w6("1 1 2 2 3 3 4 4 5 5"));
        assert_eq!(got.len(), low.len() + high.len() - 2);
    }

    #[test]
    fn split_compose_roundtrip() {
        for text in [
            "1 2 3 4 5 1 2 3 4 5",
            "1 1 2 3 4 4 5 3 2 1",
            "2 4 3 1 5 3 2 4",
        ] {
            let word = w6(text);
            let (low, high) = subword_split(&word).unwrap();
            let back = subword_compose(&low, &high).unwrap();
            let (low2, high2) = subword_split(&back).unwrap();
            assert_eq!(low, low2);
            assert_eq!(high, high2);
            // recomposition shuffles only commuting letters
            assert_eq!(back.len(), word.len());
            assert_eq!(back.permutation(), word.permutation());
        }
    }

    #[test]
    fn mismatched_threes_rejected() {
        let low = BraidWord::parse("1 2 3", Some(4)).unwrap();
        let high = w6("3 3 4 5");
        assert!(subword_compose(&low, &high).is_err());
    }

    #[test]
    fn seventeen_crossing_profiles() {
        assert_eq!(
            compose_profiles_17(),
            vec![(10, 3, 10), (10, 4, 11), (11, 5, 11)]
        );
    }
}
