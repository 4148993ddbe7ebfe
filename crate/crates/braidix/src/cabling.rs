//! Satellite and cable braids.
//!
//! A closed-braid pattern `γ ∈ B_k` around the closure of `β ∈ B_n` has the
//! zero-framed braid representation `γ · {β}^k · Δ_k^{−2[β]}` in `B_{nk}`:
//! `{β}^k` replaces each crossing by a `k²`-crossing block, and the inverse
//! half-twist powers cancel the framing picked up by the blackboard cabling.

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter};

/// A closed-braid satellite pattern: a braid in `B_k` read in the solid
/// torus around the companion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CablePattern {
    braid: BraidWord,
}

impl CablePattern {
    pub fn new(braid: BraidWord) -> CablePattern {
        CablePattern { braid }
    }

    /// Pattern with `k` parallel strands and `twists` crossings between the
    /// first two, i.e. `σ_1^{twists}` in `B_k`.
    pub fn twisted(k: usize, twists: i64) -> Result<CablePattern> {
        if k < 1 {
            return Err(Error::Unsupported(
                "pattern needs at least one strand".into(),
            ));
        }
        if k == 1 {
            return Ok(CablePattern::new(BraidWord::identity(1)));
        }
        let sign = if twists >= 0 { 1 } else { -1 };
        let letters = (0..twists.unsigned_abs())
            .map(|_| Letter::new(1, sign))
            .collect();
        Ok(CablePattern::new(BraidWord::new(k, letters)?))
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }
}

/// The positive half twist `Δ_k = ∏_{j=1}^{k−1} ∏_{l=1}^{k−j} σ_l`, of
/// length `k(k−1)/2`; its square generates the center of `B_k`.
pub fn half_twist(k: usize) -> Result<BraidWord> {
    if k < 1 {
        return Err(Error::Unsupported(
            "half twist needs at least one strand".into(),
        ));
    }
    let mut letters = Vec::with_capacity(k * (k - 1) / 2);
    for j in 1..k {
        for l in 1..=(k - j) {
            letters.push(Letter::positive(l));
        }
    }
    BraidWord::new(k, letters)
}

/// The `k`-strand parallel `{β}^k` in `B_{nk}`: every letter `σ_i^ε` becomes
/// the block `∏_{n=1}^{2k−1} ∏_j σ_{2j}^ε` where `2j` runs from
/// `ik − min(n, 2k−n) + 1` to `ik + min(n, 2k−n) − 1` in steps of two.
/// For `k = 2` a letter `σ_i` becomes `σ_{2i} σ_{2i−1} σ_{2i+1} σ_{2i}`,
/// and in general the exponent sum scales by `k²`.
pub fn parallel_substitute(w: &BraidWord, k: usize) -> Result<BraidWord> {
    if k < 1 {
        return Err(Error::Unsupported("cable width must be at least 1".into()));
    }
    if k == 1 {
        return Ok(w.clone());
    }
    let mut letters = Vec::with_capacity(w.len() * k * k);
    for letter in w.letters() {
        let i = letter.index();
        for row in 1..=(2 * k - 1) {
            let m = row.min(2 * k - row);
            let lo = i * k - m + 1;
            for step in 0..m {
                letters.push(Letter::new(lo + 2 * step, letter.sign()));
            }
        }
    }
    BraidWord::new(w.strands() * k, letters)
}

/// The zero-framed satellite braid `γ · {β}^k · Δ_k^{−2[β]}` in `B_{nk}`;
/// `γ` and `Δ_k` are included through the lowest `k` strands. The half-twist
/// correction is emitted literally, without free reduction against `{β}^k`.
pub fn cable_word(w: &BraidWord, pattern: &CablePattern) -> Result<BraidWord> {
    let k = pattern.strands();
    let cabled = parallel_substitute(w, k)?;
    let strands = w.strands() * k;
    let mut letters: Vec<Letter> = pattern.braid().letters().to_vec();
    letters.extend_from_slice(cabled.letters());

    let writhe = w.exponent_sum();
    let twist = half_twist(k)?;
    let correction = if writhe >= 0 { twist.inverse() } else { twist };
    for _ in 0..(2 * writhe.unsigned_abs()) {
        letters.extend_from_slice(correction.letters());
    }
    BraidWord::new(strands, letters)
}

/// The 2-cable `{β}² · σ_1^{−2[β]+writhe}` in `B_{2n}`, whose closure is the
/// satellite `K_{2,writhe}`; it is connected exactly when `writhe` is odd.
pub fn two_cable(w: &BraidWord, writhe: i64) -> Result<BraidWord> {
    let doubled = parallel_substitute(w, 2)?;
    let exp = writhe - 2 * w.exponent_sum();
    let sign = if exp >= 0 { 1 } else { -1 };
    let mut letters = doubled.letters().to_vec();
    for _ in 0..exp.unsigned_abs() {
        letters.push(Letter::new(1, sign));
    }
    BraidWord::new(w.strands() * 2, letters)
}
