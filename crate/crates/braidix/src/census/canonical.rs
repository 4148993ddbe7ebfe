//! Canonical forms for positive braid words and canonical-class enumeration.
//!
//! A canonical representative is chosen in two stages: greedy Yang-Baxter
//! hill-climbing drives the generator-index sum to a local extremum (no full
//! conjugacy search), then the lexicographically minimal word over the
//! policy's orbit moves (cyclic rotations, optionally flips) is taken. The
//! two stages repeat until a fixpoint, which makes `canonicalize`
//! idempotent.

use crate::error::{Error, Result};
use crate::word::BraidWord;

/// Which way the Yang-Baxter hill-climb drives the index sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexSum {
    Minimal,
    #[default]
    Maximal,
}

/// Canonicalization policy: the index-sum direction and the orbit moves the
/// lexicographic minimum ranges over. At least one orbit move is required.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalPolicy {
    pub index_sum: IndexSum,
    pub cyclic: bool,
    pub flip: bool,
}

impl Default for CanonicalPolicy {
    /// Maximal index sum, cyclic + flip orbit.
    fn default() -> Self {
        CanonicalPolicy {
            index_sum: IndexSum::Maximal,
            cyclic: true,
            flip: true,
        }
    }
}

impl CanonicalPolicy {
    /// The exhaustive-search policy: maximal index sum, cyclic orbit only.
    pub fn cyclic_maximal() -> CanonicalPolicy {
        CanonicalPolicy {
            index_sum: IndexSum::Maximal,
            cyclic: true,
            flip: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.cyclic && !self.flip {
            return Err(Error::Unsupported("empty canonical orbit".into()));
        }
        Ok(())
    }
}

fn normalize(w: &BraidWord, policy: &CanonicalPolicy) -> BraidWord {
    if policy.cyclic {
        w.min_rotation()
    } else {
        w.clone()
    }
}

/// One improving Yang-Baxter step on the linear word, if one exists.
fn improving_yb(w: &BraidWord, goal: IndexSum) -> Option<BraidWord> {
    // forward YB (σ_i σ_{i+1} σ_i → σ_{i+1} σ_i σ_{i+1}) raises the index
    // sum by 1; backward lowers it
    let forward = matches!(goal, IndexSum::Maximal);
    for p in 0..w.len().saturating_sub(2) {
        if let Some(next) = w.yb_at(p, forward) {
            return Some(next);
        }
    }
    None
}

/// Greedy hill-climb of the word as written to a local index-sum extremum,
/// then orbit normalization. The index sum is strictly monotone along the
/// climb, so this terminates.
fn climb(w: &BraidWord, policy: &CanonicalPolicy) -> BraidWord {
    let mut current = w.clone();
    while let Some(next) = improving_yb(&current, policy.index_sum) {
        current = next;
    }
    normalize(&current, policy)
}

/// Canonical representative of a positive word under `policy`.
///
/// Flipping does not preserve the index sum, so climbing and orbit
/// minimization can alternate indefinitely; the representative is therefore
/// defined as the lexicographic minimum of the cycle the deterministic
/// climb-then-flip step eventually enters. Starting from any member of that
/// cycle reproduces the same cycle, which makes the form idempotent.
pub fn canonicalize(w: &BraidWord, policy: &CanonicalPolicy) -> Result<BraidWord> {
    policy.validate()?;
    if !w.is_positive() {
        return Err(Error::Unsupported(
            "canonical forms are defined for positive words".into(),
        ));
    }
    let step = |x: &BraidWord| -> BraidWord {
        let mut best = climb(x, policy);
        if policy.flip {
            let other = climb(&x.flipped(), policy);
            if other < best {
                best = other;
            }
        }
        best
    };
    let mut trajectory: Vec<BraidWord> = Vec::new();
    let mut current = step(&normalize(w, policy));
    loop {
        if let Some(pos) = trajectory.iter().position(|x| x == &current) {
            return Ok(trajectory[pos..].iter().min().unwrap().clone());
        }
        trajectory.push(current.clone());
        current = step(&current);
    }
}

/// Is `w` its own canonical representative?
pub fn is_canonical(w: &BraidWord, policy: &CanonicalPolicy) -> Result<bool> {
    Ok(canonicalize(w, policy)? == *w)
}

/// Stream of canonical positive words: every positive `strands`-strand word
/// of length `crossings` that uses each generator at least once, emitted
/// once per canonical class in lexicographic order of the representative.
pub struct PositiveWords {
    strands: usize,
    policy: CanonicalPolicy,
    /// odometer over generator indices, most significant first
    state: Option<Vec<usize>>,
}

impl PositiveWords {
    pub fn new(strands: usize, crossings: usize, policy: CanonicalPolicy) -> PositiveWords {
        let state = if strands >= 2 {
            Some(vec![1; crossings])
        } else {
            None
        };
        PositiveWords {
            strands,
            policy,
            state,
        }
    }

    fn advance(&mut self) {
        let top = self.strands - 1;
        if let Some(state) = &mut self.state {
            for slot in state.iter_mut().rev() {
                if *slot < top {
                    *slot += 1;
                    return;
                }
                *slot = 1;
            }
            self.state = None;
        }
    }
}

impl Iterator for PositiveWords {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        loop {
            let state = self.state.as_ref()?;
            let word = BraidWord::from_values(
                &state.iter().map(|&i| i as i16).collect::<Vec<_>>(),
                Some(self.strands),
            )
            .expect("odometer stays in range");
            self.advance();
            let counts = word.letter_counts();
            if (1..self.strands).any(|i| counts[i] == 0) {
                continue;
            }
            // canonical words are minimal rotations; reject cheaply first
            if self.policy.cyclic && word.min_rotation() != word {
                continue;
            }
            if is_canonical(&word, &self.policy).expect("positive by construction") {
                return Some(word);
            }
        }
    }
}

/// Collect all canonical positive words of the given size.
pub fn enumerate_positive(
    strands: usize,
    crossings: usize,
    policy: CanonicalPolicy,
) -> Vec<BraidWord> {
    PositiveWords::new(strands, crossings, policy).collect()
}
