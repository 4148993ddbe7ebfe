//! Kauffman bracket evaluation of the Jones polynomial over the planar
//! (Temperley-Lieb) basis of non-crossing pairings.
//!
//! This is a second computation path for `V`, independent of the skein
//! engine: a braid generator acts as `A·1 + A^{-1}·e_i` on pairing diagrams,
//! the closure weights each diagram by `δ^{loops−1}` with `δ = −A² − A^{-2}`,
//! and the writhe correction `(−A)^{−3w}` recovers `V` at `t = A^{-4}`.
//! The state space has Catalan(n) diagrams, so it stays cheap on the strand
//! counts the census uses, and the numeric variant gives fast unit-circle
//! moduli for certificates.

use crate::error::{Error, Result};
use crate::poly::LaurentPoly1;
use crate::word::BraidWord;
use num_complex::Complex64;
use std::collections::HashMap;

/// Perfect non-crossing pairing of `2n` points: `0..n` on the top boundary,
/// `n..2n` on the current bottom boundary.
type Pairing = Vec<u8>;

fn identity_pairing(n: usize) -> Pairing {
    let mut p = vec![0u8; 2 * n];
    for i in 0..n {
        p[i] = (i + n) as u8;
        p[i + n] = i as u8;
    }
    p
}

/// Compose a cup-cap generator `e` at strand positions `pos`, `pos+1` onto
/// the bottom of the pairing; returns the new pairing and the number of
/// closed loops produced (0 or 1).
fn apply_e(pairing: &Pairing, n: usize, pos: usize) -> (Pairing, u32) {
    let b1 = n + pos;
    let b2 = n + pos + 1;
    let mut next = pairing.clone();
    if pairing[b1] as usize == b2 {
        // the two bottom points were already joined: a closed loop pops out
        return (next, 1);
    }
    let x = pairing[b1];
    let y = pairing[b2];
    next[x as usize] = y;
    next[y as usize] = x;
    next[b1] = b2 as u8;
    next[b2] = b1 as u8;
    (next, 0)
}

/// Loops formed when the braid closure joins top point `i` to bottom `n+i`.
fn closure_loops(pairing: &Pairing, n: usize) -> u32 {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            let partner = pairing[at] as usize;
            seen[partner] = true;
            // closure arc: top i ↔ bottom n+i
            at = if partner < n {
                partner + n
            } else {
                partner - n
            };
        }
    }
    loops
}

/// Exact Jones polynomial of the closure via the bracket, in `s = t^{1/2}`.
pub fn jones_bracket(w: &BraidWord) -> Result<LaurentPoly1> {
    let n = w.strands();
    // coefficients are Laurent polynomials in A
    let mut states: HashMap<Pairing, LaurentPoly1> = HashMap::new();
    states.insert(identity_pairing(n), LaurentPoly1::one());
    let delta = LaurentPoly1::from_terms(&[(2, -1), (-2, -1)]);
    for letter in w.letters() {
        let pos = letter.index() - 1;
        let mut next: HashMap<Pairing, LaurentPoly1> = HashMap::with_capacity(states.len() * 2);
        for (pairing, coeff) in states {
            // identity smoothing
            let ident = coeff.shift(letter.sign() as i32);
            merge(&mut next, pairing.clone(), ident)?;
            // cup-cap smoothing
            let (joined, loops) = apply_e(&pairing, n, pos);
            let mut hook = coeff.shift(-letter.sign() as i32);
            for _ in 0..loops {
                hook = hook.mul(&delta)?;
            }
            merge(&mut next, joined, hook)?;
        }
        states = next;
    }
    let mut bracket = LaurentPoly1::zero();
    for (pairing, coeff) in states {
        let loops = closure_loops(&pairing, n);
        let mut weighted = coeff;
        for _ in 1..loops {
            weighted = weighted.mul(&delta)?;
        }
        bracket = bracket.add(&weighted)?;
    }
    // writhe correction (−A)^{−3w}, then s = A^{-2}
    let writhe = w.exponent_sum();
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let corrected = bracket
        .shift(i32::try_from(-3 * writhe).map_err(|_| Error::Overflow)?)
        .scale(sign)?;
    if !corrected.has_even_exponents_only() {
        return Err(Error::Unsupported("odd bracket exponent".into()));
    }
    Ok(LaurentPoly1::from_terms(
        &corrected
            .terms()
            .map(|(e, c)| (-e / 2, c))
            .collect::<Vec<_>>(),
    ))
}

fn merge(map: &mut HashMap<Pairing, LaurentPoly1>, key: Pairing, val: LaurentPoly1) -> Result<()> {
    if val.is_zero() {
        return Ok(());
    }
    match map.entry(key) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&val)?;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(val);
        }
    }
    Ok(())
}

/// `|V(e^{iπ·num/den})|` of the closure, evaluated numerically through the
/// bracket. Double precision; intended for certificate comparisons with
/// tolerances of about 1e-6.
pub fn jones_modulus_at(w: &BraidWord, num: i64, den: i64) -> f64 {
    let n = w.strands();
    // t = e^{iθ}, A = t^{-1/4}
    let theta = std::f64::consts::PI * num as f64 / den as f64;
    let a = Complex64::from_polar(1.0, -theta / 4.0);
    let a_inv = Complex64::from_polar(1.0, theta / 4.0);
    let delta = -(a * a) - (a_inv * a_inv);
    let mut states: HashMap<Pairing, Complex64> = HashMap::new();
    states.insert(identity_pairing(n), Complex64::new(1.0, 0.0));
    for letter in w.letters() {
        let pos = letter.index() - 1;
        let (over, under) = if letter.sign() > 0 {
            (a, a_inv)
        } else {
            (a_inv, a)
        };
        let mut next: HashMap<Pairing, Complex64> = HashMap::with_capacity(states.len() * 2);
        for (pairing, coeff) in states {
            *next.entry(pairing.clone()).or_insert(Complex64::ZERO) += coeff * over;
            let (joined, loops) = apply_e(&pairing, n, pos);
            let mut hook = coeff * under;
            if loops > 0 {
                hook *= delta;
            }
            *next.entry(joined).or_insert(Complex64::ZERO) += hook;
        }
        states = next;
    }
    let mut bracket = Complex64::ZERO;
    for (pairing, coeff) in states {
        let loops = closure_loops(&pairing, n);
        bracket += coeff * delta.powi(loops as i32 - 1);
    }
    // |(−A)^{−3w}| = 1, so the modulus needs no writhe correction
    bracket.norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(text: &str) -> LaurentPoly1 {
        jones_bracket(&text.parse().unwrap()).unwrap()
    }

    #[test]
    fn unknot_and_trefoil() {
        assert_eq!(v("1"), LaurentPoly1::one());
        // V(right trefoil) = t + t³ − t⁴, stored in s = t^{1/2}
        assert_eq!(
            v("1 1 1"),
            LaurentPoly1::from_terms(&[(2, 1), (6, 1), (8, -1)])
        );
    }

    #[test]
    fn figure_eight_is_palindromic() {
        let f8 = v("1 -2 1 -2");
        assert!(f8.is_palindromic());
        assert_eq!(
            f8,
            LaurentPoly1::from_terms(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)])
        );
    }

    #[test]
    fn modulus_at_sixth_root() {
        // |V(e^{iπ/3})| = √3 for the trefoil
        let tref: BraidWord = "1 1 1".parse().unwrap();
        let m = jones_modulus_at(&tref, 1, 3);
        assert!((m - 3f64.sqrt()).abs() < 1e-9);
        // identity braid on 3 strands: 3-unlink, |(−t^{1/2}−t^{-1/2})²| = 3
        let id3 = BraidWord::identity(3);
        assert!((jones_modulus_at(&id3, 1, 3) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn exact_matches_numeric() {
        let w: BraidWord = "1 1 -2 1 -2 2 1".parse().unwrap();
        let exact = jones_bracket(&w).unwrap();
        let at = exact.eval_unit(1, 6).norm(); // s angle = t angle / 2
        let numeric = jones_modulus_at(&w, 1, 3);
        assert!((at - numeric).abs() < 1e-9);
    }
}
