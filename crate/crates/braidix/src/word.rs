//! Braid words and the elementary rewriting moves.
//!
//! A braid word is a strand count together with a flat sequence of signed
//! Artin generator letters. Words never auto-normalize: every rewriting step
//! (Yang-Baxter, commutation, cyclic shift, flip, free cancellation,
//! stabilization) is an explicit operation producing a new word, so specific
//! representatives can be tracked through a search.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// One letter of a braid word: a signed Artin generator.
///
/// Encoded as a nonzero integer whose magnitude is the generator index and
/// whose sign is the crossing sign, matching the text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i16);

impl Letter {
    pub fn new(index: usize, sign: i8) -> Letter {
        assert!(
            index > 0 && index <= i16::MAX as usize,
            "bad generator index"
        );
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        Letter(index as i16 * sign as i16)
    }

    pub fn positive(index: usize) -> Letter {
        Letter::new(index, 1)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn sign(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Raw signed value (index times sign), as used in the text format.
    pub fn value(self) -> i16 {
        self.0
    }

    fn from_value(v: i16) -> Result<Letter> {
        if v == 0 {
            return Err(Error::InvalidWord("generator token 0".into()));
        }
        Ok(Letter(v))
    }
}

/// The elementary word moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// `σ_i σ_{i+1} σ_i → σ_{i+1} σ_i σ_{i+1}` on a uniformly signed triple.
    YbForward,
    /// `σ_{i+1} σ_i σ_{i+1} → σ_i σ_{i+1} σ_i` on a uniformly signed triple.
    YbBackward,
    /// Swap adjacent letters with `|i - j| > 1`.
    Commute,
    /// Rotate the word left by one letter (conjugation by the first letter).
    CyclicShift,
    /// Reverse the strand order: every index `i` becomes `n - i`.
    Flip,
    /// Append `σ_n^{±1}` viewed in one more strand.
    Stabilize,
    /// Remove a top generator occurring exactly once.
    Destabilize,
    /// Delete an adjacent `σ_i σ_i^{-1}` or `σ_i^{-1} σ_i` pair.
    FreeCancel,
}

impl Move {
    pub const ALL: [Move; 8] = [
        Move::YbForward,
        Move::YbBackward,
        Move::Commute,
        Move::CyclicShift,
        Move::Flip,
        Move::Stabilize,
        Move::Destabilize,
        Move::FreeCancel,
    ];
}

/// A braid word on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Build a word, checking every index lies in `1..strands`.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if strands < 1 {
            return Err(Error::InvalidWord("strand count must be at least 1".into()));
        }
        for l in &letters {
            if l.index() + 1 > strands {
                return Err(Error::IndexOutOfRange {
                    index: l.index(),
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> BraidWord {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    /// Build from signed index values, inferring the strand count as
    /// `1 + max |value|` unless given explicitly.
    pub fn from_values(values: &[i16], explicit_strands: Option<usize>) -> Result<BraidWord> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_value(v))
            .collect::<Result<Vec<_>>>()?;
        let needed = letters.iter().map(|l| l.index() + 1).max().unwrap_or(1);
        let strands = match explicit_strands {
            Some(n) => {
                if n < needed {
                    return Err(Error::IndexOutOfRange {
                        index: needed - 1,
                        strands: n,
                    });
                }
                n
            }
            None => needed,
        };
        BraidWord::new(strands, letters)
    }

    /// Parse the braid word text format: whitespace separated signed decimal
    /// integers, with an optional leading `n=<k>;` prefix pinning the strand
    /// count. An empty token stream with no prefix is the identity in `B_1`.
    pub fn parse(text: &str, explicit_strands: Option<usize>) -> Result<BraidWord> {
        let mut rest = text.trim();
        let mut strands = explicit_strands;
        if let Some(stripped) = rest.strip_prefix("n=") {
            let (head, tail) = stripped.split_once(';').ok_or(Error::Parse {
                what: "strand prefix",
                text: text.into(),
            })?;
            let n: usize = head.trim().parse().map_err(|_| Error::Parse {
                what: "strand count",
                text: head.into(),
            })?;
            strands = Some(n);
            rest = tail;
        }
        let values = rest
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i16>().map_err(|_| Error::Parse {
                    what: "generator token",
                    text: tok.into(),
                })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        BraidWord::from_values(&values, strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    /// Signed index values, the inverse of [`BraidWord::from_values`].
    pub fn values(&self) -> Vec<i16> {
        self.letters.iter().map(|l| l.value()).collect()
    }

    /// Concatenation in a common strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands, letters }
    }

    /// The group inverse: reversed letters with all signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Exponent sum `[β]`: invariant under every move except stabilization.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    /// Signed count `[β]_i` of the generator `σ_i` in this particular word.
    pub fn generator_exponent(&self, index: usize) -> Result<i64> {
        if index == 0 || index + 1 > self.strands {
            return Err(Error::IndexOutOfRange {
                index,
                strands: self.strands,
            });
        }
        Ok(self
            .letters
            .iter()
            .filter(|l| l.index() == index)
            .map(|l| l.sign() as i64)
            .sum())
    }

    /// Unsigned per-generator letter counts, indexed `1..strands`.
    pub fn letter_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.strands];
        for l in &self.letters {
            counts[l.index()] += 1;
        }
        counts
    }

    /// The underlying permutation (each `σ_i^{±1}` acts as the transposition
    /// of positions `i`, `i+1`).
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_positions(l.index() - 1, l.index());
        }
        p
    }

    /// Number of components of the braid closure; the closure is a knot
    /// exactly when this is 1.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// All words reachable by one application of each requested move.
    pub fn neighbors(&self, kinds: &[Move]) -> Vec<BraidWord> {
        let mut out = Vec::new();
        for kind in kinds {
            match kind {
                Move::YbForward => self.yb_moves(true, &mut out),
                Move::YbBackward => self.yb_moves(false, &mut out),
                Move::Commute => {
                    for p in 0..self.letters.len().saturating_sub(1) {
                        if let Some(w) = self.commute_at(p) {
                            out.push(w);
                        }
                    }
                }
                Move::CyclicShift => {
                    if !self.letters.is_empty() {
                        out.push(self.rotated(1));
                    }
                }
                Move::Flip => out.push(self.flipped()),
                Move::Stabilize => {
                    out.push(self.stabilize(1));
                    out.push(self.stabilize(-1));
                }
                Move::Destabilize => {
                    if let Some(w) = self.destabilize() {
                        out.push(w);
                    }
                }
                Move::FreeCancel => {
                    for p in 0..self.letters.len().saturating_sub(1) {
                        if self.letters[p].inverse() == self.letters[p + 1] {
                            let mut letters = self.letters.clone();
                            letters.drain(p..p + 2);
                            out.push(BraidWord {
                                strands: self.strands,
                                letters,
                            });
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn yb_moves(&self, forward: bool, out: &mut Vec<BraidWord>) {
        for p in 0..self.letters.len().saturating_sub(2) {
            if let Some(w) = self.yb_at(p, forward) {
                out.push(w);
            }
        }
    }

    /// Apply a Yang-Baxter move on the (non-cyclic) triple at `p`, if the
    /// pattern matches. Only uniformly signed triples are rewritten.
    pub fn yb_at(&self, p: usize, forward: bool) -> Option<BraidWord> {
        let [a, b, c] = [self.letters[p], self.letters[p + 1], self.letters[p + 2]];
        if a.sign() != b.sign() || b.sign() != c.sign() || a.index() != c.index() {
            return None;
        }
        let matches = if forward {
            b.index() == a.index() + 1
        } else {
            a.index() == b.index() + 1
        };
        if !matches {
            return None;
        }
        let mut letters = self.letters.clone();
        letters[p] = b;
        letters[p + 1] = a;
        letters[p + 2] = b;
        Some(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Swap the letters at `p`, `p+1` if their indices differ by more than 1.
    pub fn commute_at(&self, p: usize) -> Option<BraidWord> {
        let (a, b) = (self.letters[p], self.letters[p + 1]);
        if a.index().abs_diff(b.index()) <= 1 {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.swap(p, p + 1);
        Some(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Rotate left by `k` letters (the closure is unchanged).
    pub fn rotated(&self, k: usize) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The flip `σ_i ↦ σ_{n-i}` (turning the braid over).
    pub fn flipped(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(self.strands - l.index(), l.sign()))
                .collect(),
        }
    }

    /// Append `σ_n^{sign}`, viewing the word in `B_{n+1}`.
    pub fn stabilize(&self, sign: i8) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, sign));
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Remove the top generator if it occurs exactly once, rotating so the
    /// rest of the word survives intact; `None` if the condition fails.
    ///
    /// Occurrence counts are rotation invariant, so searching rotations means
    /// the unique `σ_{n-1}^{±1}` may sit anywhere in the cyclic word.
    pub fn destabilize(&self) -> Option<BraidWord> {
        if self.strands < 2 {
            return None;
        }
        let top = self.strands - 1;
        let mut hits = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.index() == top);
        let (pos, _) = hits.next()?;
        if hits.next().is_some() {
            return None;
        }
        let mut letters = Vec::with_capacity(self.letters.len() - 1);
        letters.extend_from_slice(&self.letters[pos + 1..]);
        letters.extend_from_slice(&self.letters[..pos]);
        Some(BraidWord {
            strands: self.strands - 1,
            letters,
        })
    }

    /// Remove a bottom generator `σ_1` occurring exactly once, shifting all
    /// other indices down; the flip-mirror of [`BraidWord::destabilize`].
    pub fn destabilize_bottom(&self) -> Option<BraidWord> {
        if self.strands < 2 {
            return None;
        }
        let mut hits = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.index() == 1);
        let (pos, _) = hits.next()?;
        if hits.next().is_some() {
            return None;
        }
        let mut letters = Vec::with_capacity(self.letters.len() - 1);
        for l in self.letters[pos + 1..].iter().chain(&self.letters[..pos]) {
            letters.push(Letter::new(l.index() - 1, l.sign()));
        }
        Some(BraidWord {
            strands: self.strands - 1,
            letters,
        })
    }

    /// Lexicographically minimal rotation, used as a dedup key for searches
    /// over cyclic words.
    pub fn min_rotation(&self) -> BraidWord {
        if self.letters.len() < 2 {
            return self.clone();
        }
        let mut best = 0usize;
        for k in 1..self.letters.len() {
            for j in 0..self.letters.len() {
                let a = self.letters[(k + j) % self.letters.len()];
                let b = self.letters[(best + j) % self.letters.len()];
                match a.cmp(&b) {
                    std::cmp::Ordering::Less => {
                        best = k;
                        break;
                    }
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => continue,
                }
            }
        }
        self.rotated(best)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let needed = self
            .letters
            .iter()
            .map(|l| l.index() + 1)
            .max()
            .unwrap_or(1);
        if self.strands != needed {
            write!(f, "n={};", self.strands)?;
            if !self.letters.is_empty() {
                write!(f, " ")?;
            }
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l.value())?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<BraidWord> {
        BraidWord::parse(s, None)
    }
}

/// A bijection of `{0, .., n-1}` stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidWord("not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Right-multiply by the transposition of positions `i`, `i+1`.
    pub fn swap_positions(&mut self, i: usize, j: usize) {
        self.images.swap(i, j);
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }

    pub fn sign(&self) -> i8 {
        // parity = n - number of cycles
        if (self.images.len() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn parse_basic() {
        let tref = w("1 1 1");
        assert_eq!(tref.strands(), 2);
        assert_eq!(tref.len(), 3);
        assert!(tref.is_positive());

        let mixed = BraidWord::parse("1 -2 1", Some(4)).unwrap();
        assert_eq!(mixed.strands(), 4);
        assert_eq!(mixed.exponent_sum(), 1);
    }

    #[test]
    fn parse_rejects_zero_and_overflow_index() {
        assert!(BraidWord::parse("1 0 2", None).is_err());
        assert!(BraidWord::parse("3", Some(3)).is_err());
        // empty stream with no explicit strands is the identity in B_1
        let id = BraidWord::parse("", None).unwrap();
        assert_eq!(id.strands(), 1);
        assert!(id.is_empty());
    }

    #[test]
    fn parse_strand_prefix_roundtrip() {
        let word = w("n=5; 1 2 -1");
        assert_eq!(word.strands(), 5);
        assert_eq!(word.to_string(), "n=5; 1 2 -1");
        assert_eq!(w(&word.to_string()), word);
        assert_eq!(w("1 2 -1").to_string(), "1 2 -1");
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(BraidWord::identity(3).exponent_sum(), 0);
        let beta7_prime = w("1 2 2 2 4 4 3 5 4 4 4 1 3 5 2 2 2 3 4");
        assert_eq!(beta7_prime.strands(), 6);
        assert_eq!(beta7_prime.len(), 19);
        assert_eq!(beta7_prime.exponent_sum(), 19);
        assert_eq!(beta7_prime.generator_exponent(1).unwrap(), 2);
        assert_eq!(beta7_prime.generator_exponent(2).unwrap(), 6);
        assert!(beta7_prime.generator_exponent(6).is_err());
        assert_eq!(BraidWord::identity(2).generator_exponent(1).unwrap(), 0);
    }

    #[test]
    fn morton_word_has_expected_counts() {
        let word = w("1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2");
        assert_eq!(word.strands(), 4);
        assert_eq!(word.len(), 21);
        assert_eq!(
            word.letters().iter().filter(|l| l.is_positive()).count(),
            16
        );
        assert_eq!(word.exponent_sum(), 11);
    }

    #[test]
    fn closure_components() {
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
        assert_eq!(w("1 2").closure_components(), 1);
        // σ1² induces the identity permutation: 3 cycles in B_3, not 2.
        assert_eq!(
            BraidWord::parse("1 1", Some(3))
                .unwrap()
                .closure_components(),
            3
        );
        assert_eq!(w("1 1").closure_components(), 2);
    }

    #[test]
    fn yb_neighbors() {
        let lhs = w("1 2 1");
        let got = lhs.neighbors(&[Move::YbForward]);
        assert_eq!(got, vec![w("2 1 2")]);
        assert!(lhs.neighbors(&[Move::YbBackward]).is_empty());

        let far = w("1 3");
        assert_eq!(far.neighbors(&[Move::Commute]), vec![w("3 1")]);

        // mixed signs do not match the uniform YB pattern
        let mixed = w("1 -2 1");
        assert!(mixed
            .neighbors(&[Move::YbForward, Move::YbBackward])
            .is_empty());
    }

    #[test]
    fn yb_symmetry() {
        let kinds = [Move::YbForward, Move::YbBackward];
        for text in ["1 2 1 2", "2 1 2 3 2", "1 1 2 1 1"] {
            let word = w(text);
            for u in word.neighbors(&kinds) {
                assert!(u.neighbors(&kinds).contains(&word), "asymmetric at {u}");
            }
        }
    }

    #[test]
    fn stabilize_destabilize() {
        let tref = w("1 1 1");
        let up = tref.stabilize(1);
        assert_eq!(up, w("1 1 1 2"));
        assert_eq!(up.destabilize().unwrap(), tref);
        assert_eq!(w("1 2 1 2").destabilize(), None);
        // the unique top letter may sit mid-word
        assert_eq!(w("1 2 1").destabilize().unwrap(), w("1 1"));
    }

    #[test]
    fn destabilize_bottom_shifts_indices() {
        let word = w("2 2 2 1");
        assert_eq!(word.destabilize_bottom().unwrap(), w("1 1 1"));
        assert_eq!(w("1 2 1 2").destabilize_bottom(), None);
    }

    #[test]
    fn flip_and_rotation() {
        let word = w("1 1 2");
        assert_eq!(word.flipped(), w("2 2 1"));
        assert_eq!(word.rotated(1), w("1 2 1"));
        assert_eq!(w("2 1 1").min_rotation(), w("1 1 2"));
    }

    #[test]
    fn permutation_sign_matches_length_parity() {
        for text in ["1", "1 2", "1 1 2 2", "1 2 1 3 2"] {
            let word = w(text);
            let parity = if word.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(word.permutation().sign(), parity);
        }
    }

    #[test]
    fn free_cancel() {
        let word = w("1 -1 2");
        assert_eq!(
            word.neighbors(&[Move::FreeCancel]),
            vec![BraidWord::parse("2", Some(3)).unwrap()]
        );
    }
}
