//! Link invariants of braid closures: the skein polynomial `P(v, z)`, its
//! Jones and Alexander specializations, degree statistics, and the
//! polynomial shape tests used by the braid index criteria.

mod bracket;
mod hecke;

pub use bracket::{jones_bracket, jones_modulus_at};
pub use hecke::HomflyEngine;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly1, LaurentPoly2};
use crate::word::BraidWord;
use num_complex::Complex64;

/// One-shot skein polynomial with a confined cache.
pub fn homfly(w: &BraidWord) -> Result<LaurentPoly2> {
    HomflyEngine::new().homfly(w)
}

/// Jones polynomial `V(t) = P(v = t, z = t^{1/2} − t^{-1/2})`, stored in
/// `s = t^{1/2}`. Knot closures have only even `s`-exponents.
pub fn jones(w: &BraidWord) -> Result<LaurentPoly1> {
    jones_from_homfly(&homfly(w)?)
}

pub fn jones_from_homfly(p: &LaurentPoly2) -> Result<LaurentPoly1> {
    if let Some(b) = p.min_deg_z() {
        if b < 0 {
            // split closures carry z^{-1} powers; multiply them out through
            // the identity z·δ = v^{-1} − v before specializing
            return specialize_split(p, 1);
        }
    }
    p.specialize_to_s(1)
}

/// Alexander polynomial of a knot closure, normalized so that `Δ(1) = 1`
/// and `Δ(t) = Δ(1/t)`; stored in `s = t^{1/2}` (even exponents only).
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly1> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    alexander_from_homfly(&homfly(w)?)
}

pub fn alexander_from_homfly(p: &LaurentPoly2) -> Result<LaurentPoly1> {
    normalize_alexander(&p.specialize_to_s(0)?)
}

/// Renormalize a (possibly hand-transcribed) Alexander polynomial by a unit
/// `±t^{k/2}` so it is palindromic with value 1 at `t = 1`.
pub fn normalize_alexander(raw: &LaurentPoly1) -> Result<LaurentPoly1> {
    if raw.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (lo, hi) = (raw.min_exp().unwrap(), raw.max_exp().unwrap());
    if (lo + hi) % 2 != 0 {
        return Err(Error::Unsupported(
            "degree span admits no symmetric normalization".into(),
        ));
    }
    let mut p = raw.shift(-(lo + hi) / 2);
    match p.eval_at_one() {
        1 => {}
        -1 => p = p.neg(),
        other => {
            return Err(Error::Unsupported(format!(
                "Alexander normalization needs value ±1 at t = 1, found {other}"
            )))
        }
    }
    if !p.is_palindromic() {
        return Err(Error::Unsupported("polynomial is not symmetric".into()));
    }
    Ok(p)
}

fn specialize_split(p: &LaurentPoly2, v_scale: i32) -> Result<LaurentPoly1> {
    // clear z^{-k} terms by multiplying with z^k and dividing the result by
    // (s − s^{-1})^k afterwards; only exact divisions occur for honest P's
    let k = (-p.min_deg_z().unwrap_or(0)) as u32;
    let mut shifted = p.clone();
    shifted.mul_monomial_assign(0, k as i32, 1)?;
    let num = shifted.specialize_to_s(v_scale)?;
    let den = LaurentPoly1::from_terms(&[(1, 1), (-1, -1)]).pow(k)?;
    divide_exact(&num, &den)
}

fn divide_exact(num: &LaurentPoly1, den: &LaurentPoly1) -> Result<LaurentPoly1> {
    if den.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rem = num.clone();
    let mut out = LaurentPoly1::zero();
    let dh = den.max_exp().unwrap();
    let dc = den.coeff(dh);
    while !rem.is_zero() {
        let rh = rem.max_exp().unwrap();
        let rc = rem.coeff(rh);
        if rc % dc != 0 {
            return Err(Error::Unsupported("inexact polynomial division".into()));
        }
        let q = LaurentPoly1::monomial(rh - dh, rc / dc);
        out = out.add(&q)?;
        rem = rem.sub(&q.mul(den)?)?;
    }
    Ok(out)
}

/// Evaluate a one-variable polynomial in `s = t^{1/2}` at `t = e^{iπ·num/den}`.
///
/// Double precision; relative accuracy is comfortably below 1e-9 for
/// coefficients up to 10^6 and degrees up to 100.
pub fn eval_unit_circle(p: &LaurentPoly1, num: i64, den: i64) -> Complex64 {
    p.eval_unit(num, 2 * den)
}

/// Degree statistics of a skein polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_deg_v: i32,
    pub max_deg_v: i32,
    pub span_v: i32,
    pub max_deg_z: i32,
    /// Coefficient of the top `z`-power, a polynomial in `v`.
    pub max_cf_z: LaurentPoly1,
    /// Coefficient of the top `v`-power, a polynomial in `z`.
    pub lead_v_coeff: LaurentPoly1,
}

pub fn degree_stats(p: &LaurentPoly2) -> Result<DegreeStats> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let min_deg_v = p.min_deg_v().unwrap();
    let max_deg_v = p.max_deg_v().unwrap();
    let max_deg_z = p.max_deg_z().unwrap();
    Ok(DegreeStats {
        min_deg_v,
        max_deg_v,
        span_v: max_deg_v - min_deg_v,
        max_deg_z,
        max_cf_z: p.z_coefficient(max_deg_z),
        lead_v_coeff: p.v_coefficient(max_deg_v),
    })
}

/// Mirror symmetry test: `P(v, z) = P(v^{-1}, z)` coefficientwise. Mirroring
/// a link inverts `v`, so an achiral knot always passes.
pub fn is_v_self_conjugate(p: &LaurentPoly2) -> bool {
    *p == p.invert_v()
}

/// Which reading of the leading-coefficient condition the braid positivity
/// filter uses; see [`braid_positive_filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CfReading {
    /// The top `z`-coefficient must be the single monomial `v^{min deg_v}`.
    /// Matches the positive trefoil and cinquefoil, hence the default.
    #[default]
    MaxCfZ,
    /// The top `v`-coefficient must be the single monomial `z^{min deg_v}`.
    MaxCfV,
}

/// Necessary condition on `P` for the closure to be a positive braid knot:
/// `max deg_z P = min deg_v P (= 2g)` together with a monomial condition on
/// a leading coefficient.
pub fn braid_positive_filter(p: &LaurentPoly2, reading: CfReading) -> Result<bool> {
    let stats = degree_stats(p)?;
    if stats.max_deg_z != stats.min_deg_v {
        return Ok(false);
    }
    let ok = match reading {
        CfReading::MaxCfZ => stats.max_cf_z == LaurentPoly1::monomial(stats.min_deg_v, 1),
        CfReading::MaxCfV => stats.lead_v_coeff == LaurentPoly1::monomial(stats.min_deg_v, 1),
    };
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(text: &str) -> LaurentPoly2 {
        homfly(&text.parse().unwrap()).unwrap()
    }

    #[test]
    fn jones_paths_agree_on_samples() {
        for text in ["1", "1 1 1", "1 -2 1 -2", "1 1 2 2", "1 2 -1 3 2 2"] {
            let w: BraidWord = text.parse().unwrap();
            assert_eq!(
                jones(&w).unwrap(),
                jones_bracket(&w).unwrap(),
                "paths disagree on {text}"
            );
        }
    }

    #[test]
    fn split_jones_is_exact() {
        let id2 = BraidWord::identity(2);
        // V(2-unlink) = −s − s^{-1} (in s = t^{1/2})
        assert_eq!(
            jones(&id2).unwrap(),
            LaurentPoly1::from_terms(&[(1, -1), (-1, -1)])
        );
    }

    #[test]
    fn alexander_of_trefoil() {
        let tref: BraidWord = "1 1 1".parse().unwrap();
        let d = alexander(&tref).unwrap();
        // t^{-1} − 1 + t in s-exponents
        assert_eq!(d, LaurentPoly1::from_terms(&[(-2, 1), (0, -1), (2, 1)]));
        assert_eq!(d.eval_at_one(), 1);
        // determinant |Δ(−1)| = 3
        let det = eval_unit_circle(&d, 1, 1).norm();
        assert!((det - 3.0).abs() < 1e-9);
    }

    #[test]
    fn alexander_rejects_links() {
        let hopf: BraidWord = "1 1".parse().unwrap();
        assert!(matches!(
            alexander(&hopf),
            Err(Error::NotAKnot { components: 2 })
        ));
    }

    #[test]
    fn degree_stats_trefoil() {
        let stats = degree_stats(&hp("1 1 1")).unwrap();
        assert_eq!(stats.min_deg_v, 2);
        assert_eq!(stats.max_deg_v, 4);
        assert_eq!(stats.span_v, 2);
        assert_eq!(stats.max_deg_z, 2);
        assert_eq!(stats.max_cf_z, LaurentPoly1::monomial(2, 1));
        assert_eq!(stats.lead_v_coeff, LaurentPoly1::monomial(0, -1));
        assert!(degree_stats(&LaurentPoly2::zero()).is_err());
    }

    #[test]
    fn unknot_stats_all_zero() {
        let stats = degree_stats(&LaurentPoly2::one()).unwrap();
        assert_eq!(
            (
                stats.min_deg_v,
                stats.max_deg_v,
                stats.span_v,
                stats.max_deg_z
            ),
            (0, 0, 0, 0)
        );
    }

    #[test]
    fn self_conjugacy() {
        assert!(is_v_self_conjugate(&LaurentPoly2::one()));
        assert!(!is_v_self_conjugate(&hp("1 1 1")));
        // figure-eight is achiral
        assert!(is_v_self_conjugate(&hp("1 -2 1 -2")));
    }

    #[test]
    fn positivity_filter_readings() {
        let tref = hp("1 1 1");
        assert!(braid_positive_filter(&tref, CfReading::MaxCfZ).unwrap());
        assert!(!braid_positive_filter(&tref, CfReading::MaxCfV).unwrap());
        // cinquefoil supports the same default reading
        let cinq = hp("1 1 1 1 1");
        assert!(braid_positive_filter(&cinq, CfReading::MaxCfZ).unwrap());
        // figure-eight fails: it is not a positive braid closure
        let f8 = hp("1 -2 1 -2");
        assert!(!braid_positive_filter(&f8, CfReading::MaxCfZ).unwrap());
        // unknot passes vacuously
        assert!(braid_positive_filter(&LaurentPoly2::one(), CfReading::MaxCfZ).unwrap());
    }
}
