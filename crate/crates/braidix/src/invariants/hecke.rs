//! Exact skein polynomial of a braid closure.
//!
//! A word is expanded into a linear combination of positive permutation
//! braids: the generators satisfy `σ_i² = vz·σ_i + v²` (the element form of
//! the skein relation `v^{-1}P(+) − vP(−) = zP(0)` with `P(unknot) = 1`),
//! so an arbitrary word resolves into at most `n!` basis terms. The closure
//! is then evaluated by the recursive Markov property: a basis braid either
//! fixes its top strand (contributing a split unknot factor `δ`) or contains
//! the top generator exactly once (dropping to one strand fewer).

use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;
use crate::word::BraidWord;
use std::collections::HashMap;

/// `δ = (v^{-1} − v)/z`, the value of a split unknot factor.
fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms(&[(-1, -1, 1), (1, -1, -1)])
}

type Perm = Vec<u8>;

fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// Linear combination of positive permutation braids on a fixed strand count.
type Combination = HashMap<Perm, LaurentPoly2>;

fn add_term(map: &mut Combination, perm: Perm, poly: LaurentPoly2) -> Result<()> {
    if poly.is_zero() {
        return Ok(());
    }
    match map.entry(perm) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            e.get_mut().add_assign(&poly)?;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(poly);
        }
    }
    Ok(())
}

/// Skein polynomial evaluator with a reusable trace cache.
///
/// The cache maps positive permutation braids to the polynomial of their
/// closure and is sound to reuse across words and strand counts. It is not
/// synchronized: share one engine per worker, or use the free function
/// [`crate::invariants::homfly`] for a confined evaluation.
pub struct HomflyEngine {
    trace_cache: HashMap<Perm, LaurentPoly2>,
    budget: usize,
}

impl Default for HomflyEngine {
    fn default() -> Self {
        HomflyEngine::new()
    }
}

impl HomflyEngine {
    /// Engine with the default resource budget (about 10^7 cache/term slots),
    /// overridable through the `BRAIDIX_MEMO_BUDGET` environment variable
    /// (interpreted as an approximate byte budget, 128 bytes per slot).
    pub fn new() -> HomflyEngine {
        let budget = std::env::var("BRAIDIX_MEMO_BUDGET")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
            .map(|bytes| (bytes / 128).max(1024))
            .unwrap_or(10_000_000);
        HomflyEngine::with_budget(budget)
    }

    pub fn with_budget(budget: usize) -> HomflyEngine {
        HomflyEngine {
            trace_cache: HashMap::new(),
            budget,
        }
    }

    fn check_budget(&self, extra: usize) -> Result<()> {
        let used = self.trace_cache.len() + extra;
        if used > self.budget {
            return Err(Error::Budget {
                used,
                limit: self.budget,
                unit: "basis terms",
            });
        }
        Ok(())
    }

    /// The skein polynomial `P` of the closure of `w`, under the convention
    /// `v^{-1}P(+) − vP(−) = zP(0)`, `P(unknot) = 1`; the closure of `σ_1³`
    /// therefore has minimal `v`-degree `+2`.
    pub fn homfly(&mut self, w: &BraidWord) -> Result<LaurentPoly2> {
        let mut elem: Combination = HashMap::new();
        elem.insert(identity_perm(w.strands()), LaurentPoly2::one());
        for letter in w.letters() {
            elem = self.mul_generator(elem, letter.index(), letter.sign())?;
        }
        let mut acc = LaurentPoly2::zero();
        for (perm, coeff) in elem {
            let t = self.trace(&perm)?;
            acc.add_assign(&coeff.mul(&t)?)?;
        }
        Ok(acc)
    }

    /// Right-multiply a combination by `σ_index^{sign}`.
    fn mul_generator(&self, elem: Combination, index: usize, sign: i8) -> Result<Combination> {
        let mut out: Combination = HashMap::with_capacity(elem.len() * 2);
        let (i, j) = (index - 1, index);
        for (perm, coeff) in elem {
            self.check_budget(out.len())?;
            let descent = perm[i] > perm[j];
            let mut swapped = perm.clone();
            swapped.swap(i, j);
            match (sign > 0, descent) {
                // T_π · T_i with l rising: just T_{πs_i}
                (true, false) => add_term(&mut out, swapped, coeff)?,
                // T_π · T_i with l falling: vz·T_π + v²·T_{πs_i}
                (true, true) => {
                    let mut a = coeff.clone();
                    a.mul_monomial_assign(1, 1, 1)?;
                    add_term(&mut out, perm, a)?;
                    let mut b = coeff;
                    b.mul_monomial_assign(2, 0, 1)?;
                    add_term(&mut out, swapped, b)?;
                }
                // T_π · T_i^{-1} with l rising: v^{-2}·T_{πs_i} − v^{-1}z·T_π
                (false, false) => {
                    let mut a = coeff.clone();
                    a.mul_monomial_assign(-2, 0, 1)?;
                    add_term(&mut out, swapped, a)?;
                    let mut b = coeff;
                    b.mul_monomial_assign(-1, 1, -1)?;
                    add_term(&mut out, perm, b)?;
                }
                // T_π · T_i^{-1} with l falling: exactly T_{πs_i}
                (false, true) => add_term(&mut out, swapped, coeff)?,
            }
        }
        self.check_budget(out.len())?;
        Ok(out)
    }

    /// Polynomial of the closure of the positive permutation braid `π`.
    fn trace(&mut self, perm: &Perm) -> Result<LaurentPoly2> {
        if perm.len() <= 1 {
            return Ok(LaurentPoly2::one());
        }
        if let Some(hit) = self.trace_cache.get(perm) {
            return Ok(hit.clone());
        }
        self.check_budget(0)?;
        let n = perm.len();
        let top = (n - 1) as u8;
        let result = if perm[n - 1] == top {
            // Fixed top strand: split unknot times the smaller closure.
            let inner: Perm = perm[..n - 1].to_vec();
            delta().mul(&self.trace(&inner)?)?
        } else {
            // π = π₁ · (σ_{n−1} σ_{n−2} … σ_j): the single top generator is
            // absorbed by the Markov property, leaving π₁·σ_{n−2}…σ_j one
            // strand down.
            let j = perm.iter().position(|&v| v == top).unwrap();
            let mut shrunk: Perm = Vec::with_capacity(n - 1);
            shrunk.extend_from_slice(&perm[..j]);
            shrunk.extend_from_slice(&perm[j + 1..]);
            let mut elem: Combination = HashMap::new();
            elem.insert(shrunk, LaurentPoly2::one());
            for gen in (j + 1..n - 1).rev() {
                elem = self.mul_generator(elem, gen, 1)?;
            }
            let mut acc = LaurentPoly2::zero();
            for (p, coeff) in elem {
                let t = self.trace(&p)?;
                acc.add_assign(&coeff.mul(&t)?)?;
            }
            acc
        };
        self.trace_cache.insert(perm.clone(), result.clone());
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> LaurentPoly2 {
        let w: BraidWord = text.parse().unwrap();
        HomflyEngine::new().homfly(&w).unwrap()
    }

    #[test]
    fn unknot_normalization() {
        assert_eq!(p("1"), LaurentPoly2::one());
        assert_eq!(p("-1"), LaurentPoly2::one());
    }

    #[test]
    fn two_component_unlink() {
        let id2 = BraidWord::identity(2);
        let got = HomflyEngine::new().homfly(&id2).unwrap();
        assert_eq!(got, delta());
    }

    #[test]
    fn positive_trefoil_sign_convention() {
        // the designed tripwire: min deg_v must be +2
        let tref = p("1 1 1");
        assert_eq!(
            tref,
            LaurentPoly2::from_terms(&[(4, 0, -1), (2, 0, 2), (2, 2, 1)])
        );
        assert_eq!(tref.min_deg_v(), Some(2));
    }

    #[test]
    fn mirror_trefoil() {
        let m = p("-1 -1 -1");
        assert_eq!(
            m,
            LaurentPoly2::from_terms(&[(-4, 0, -1), (-2, 0, 2), (-2, 2, 1)])
        );
    }

    #[test]
    fn markov_invariance_small() {
        let a = p("1 1 1");
        assert_eq!(a, p("1 1 1 2")); // stabilized
        assert_eq!(a, p("1 2 1 2")); // (σ1σ2)² also closes to the trefoil
    }

    #[test]
    fn budget_refusal() {
        let w: BraidWord = "1 1 1".parse().unwrap();
        let got = HomflyEngine::with_budget(1).homfly(&w);
        assert!(matches!(got, Err(Error::Budget { .. })));
    }
}
