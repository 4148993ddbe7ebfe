//! Explicit positive braid families with certified properties.

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter};

/// Irreducible positive `n`-braid knots realizing the upper bound
/// `d_n ≤ 9n/2 − (3/2)((n+1) mod 4 + 1)`: four explicit words by the residue
/// of `n` mod 4, each emptied by a sequence of `σ_i³` deletions (so the
/// sixth-root Jones certificate applies).
pub fn dn_upper_family(n: usize) -> Result<BraidWord> {
    if n < 4 {
        return Err(Error::Unsupported(
            "family words are defined for n at least 4".into(),
        ));
    }
    let mut letters: Vec<Letter> = Vec::new();
    // the body pattern: ascending generators, cubing either the odd- or the
    // even-indexed ones
    let cube_odd = n % 4 == 0 || n % 4 == 1;
    let mut body = Vec::new();
    for i in 1..n {
        let cubed = if cube_odd { i % 2 == 1 } else { i % 2 == 0 };
        let reps = if cubed { 3 } else { 1 };
        for _ in 0..reps {
            body.push(Letter::positive(i));
        }
    }
    letters.extend_from_slice(&body);
    letters.extend_from_slice(&body);
    // the tail by residue
    match n % 4 {
        0 => {
            // σ2 σ4 … σ_{n−2}
            for i in (2..=n - 2).step_by(2) {
                letters.push(Letter::positive(i));
            }
        }
        1 => {
            // σ2 σ4 … σ_{n−1}
            for i in (2..=n - 1).step_by(2) {
                letters.push(Letter::positive(i));
            }
        }
        2 => {
            // σ1 σ3 … σ_{n−1}
            for i in (1..=n - 1).step_by(2) {
                letters.push(Letter::positive(i));
            }
        }
        _ => {
            // σ1⁴ σ3 σ5 … σ_{n−2}
            for _ in 0..4 {
                letters.push(Letter::positive(1));
            }
            for i in (3..=n - 2).step_by(2) {
                letters.push(Letter::positive(i));
            }
        }
    }
    BraidWord::new(n, letters)
}

/// The length the family word must have: `9n/2 − (3/2)((n+1) mod 4 + 1)`.
pub fn dn_upper_length(n: usize) -> usize {
    (9 * n - 3 * ((n + 1) % 4 + 1)) / 2
}

/// The rigid family `((σ1 σ3 … σ_{n−4} σ_{n−2}³)(σ2³ σ4 … σ_{n−3} σ_{n−1}))²`
/// for odd `n ≥ 5`: positive words admitting no Yang-Baxter move at all.
pub fn rigid_family(n: usize) -> Result<BraidWord> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::Unsupported(
            "rigid family is defined for odd n at least 5".into(),
        ));
    }
    let mut half: Vec<Letter> = Vec::new();
    // odd indices 1, 3, …, n−4, then σ_{n−2} cubed
    let mut i = 1;
    while i + 4 <= n {
        half.push(Letter::positive(i));
        i += 2;
    }
    for _ in 0..3 {
        half.push(Letter::positive(n - 2));
    }
    // σ2 cubed, then even indices 4, 6, …, n−3, then σ_{n−1}
    for _ in 0..3 {
        half.push(Letter::positive(2));
    }
    let mut i = 4;
    while i + 3 <= n {
        half.push(Letter::positive(i));
        i += 2;
    }
    half.push(Letter::positive(n - 1));

    let mut letters = half.clone();
    letters.extend_from_slice(&half);
    BraidWord::new(n, letters)
}
