//! Exact Laurent polynomial arithmetic with integer coefficients.
//!
//! [`LaurentPoly2`] is the two-variable ring for the skein polynomial in
//! `(v, z)`; [`LaurentPoly1`] is the one-variable ring used for the Jones and
//! Alexander polynomials in `s = t^{1/2}` (and, structurally, for any other
//! single-variable coefficient polynomial). All arithmetic is
//! overflow-checked: an overflowing operation returns an error instead of a
//! wrong answer.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// One-variable Laurent polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly1 {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly1 {
    pub fn zero() -> LaurentPoly1 {
        LaurentPoly1::default()
    }

    pub fn one() -> LaurentPoly1 {
        LaurentPoly1::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> LaurentPoly1 {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly1 { coeffs }
    }

    pub fn from_terms(terms: &[(i32, i64)]) -> LaurentPoly1 {
        let mut p = LaurentPoly1::zero();
        for &(e, c) in terms {
            let entry = p.coeffs.entry(e).or_insert(0);
            *entry += c;
            if *entry == 0 {
                p.coeffs.remove(&e);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &LaurentPoly1) -> Result<LaurentPoly1> {
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            let v = checked_add(out.coeff(e), c)?;
            if v == 0 {
                out.coeffs.remove(&e);
            } else {
                out.coeffs.insert(e, v);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly1) -> Result<LaurentPoly1> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly1 {
        LaurentPoly1 {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly1) -> Result<LaurentPoly1> {
        let mut out = LaurentPoly1::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                let e = e1 + e2;
                let v = checked_add(out.coeff(e), checked_mul(c1, c2)?)?;
                if v == 0 {
                    out.coeffs.remove(&e);
                } else {
                    out.coeffs.insert(e, v);
                }
            }
        }
        Ok(out)
    }

    pub fn shift(&self, by: i32) -> LaurentPoly1 {
        LaurentPoly1 {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + by, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Result<LaurentPoly1> {
        if k == 0 {
            return Ok(LaurentPoly1::zero());
        }
        let mut coeffs = BTreeMap::new();
        for (&e, &c) in &self.coeffs {
            coeffs.insert(e, checked_mul(c, k)?);
        }
        Ok(LaurentPoly1 { coeffs })
    }

    pub fn pow(&self, n: u32) -> Result<LaurentPoly1> {
        let mut out = LaurentPoly1::one();
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Substitute the variable by its inverse.
    pub fn invert_variable(&self) -> LaurentPoly1 {
        LaurentPoly1 {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// True when `p(x) = p(1/x)`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_variable()
    }

    /// True when every exponent is even (a polynomial in the variable's
    /// square, e.g. integer `t`-powers for a poly in `s = t^{1/2}`).
    pub fn has_even_exponents_only(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// Reindex a polynomial in `s` with only even exponents as one in
    /// `t = s^2`.
    pub fn halve_exponents(&self) -> Result<LaurentPoly1> {
        if !self.has_even_exponents_only() {
            return Err(Error::Unsupported(
                "polynomial has odd half-integer exponents".into(),
            ));
        }
        Ok(LaurentPoly1 {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e / 2, c)).collect(),
        })
    }

    /// Reindex a polynomial in `t` as one in `s = t^{1/2}`.
    pub fn double_exponents(&self) -> LaurentPoly1 {
        LaurentPoly1 {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e * 2, c)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Render with a chosen variable name (`Display` uses `x`).
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            if first {
                if c < 0 {
                    out.push('-');
                }
                first = false;
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = c.unsigned_abs();
            match e {
                0 => out.push_str(&a.to_string()),
                1 if a == 1 => out.push_str(var),
                1 => out.push_str(&format!("{a}*{var}")),
                _ if a == 1 => out.push_str(&format!("{var}^{e}")),
                _ => out.push_str(&format!("{a}*{var}^{e}")),
            }
        }
        out
    }

    /// Evaluate at `x = e^{iθ}` with `θ = π·num/den`.
    pub fn eval_unit(&self, num: i64, den: i64) -> Complex64 {
        let theta = std::f64::consts::PI * num as f64 / den as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (&e, &c) in &self.coeffs {
            acc += Complex64::from_polar(c as f64, theta * e as f64);
        }
        acc
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

/// Two-variable Laurent polynomial in `(v, z)` with integer coefficients.
///
/// For the closure of a braid with `c` components, every stored `v`- and
/// `z`-exponent is congruent to `c - 1` mod 2; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    coeffs: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> LaurentPoly2 {
        LaurentPoly2::default()
    }

    pub fn one() -> LaurentPoly2 {
        LaurentPoly2::monomial(0, 0, 1)
    }

    /// The monomial `coeff · v^a z^b`.
    pub fn monomial(v_exp: i32, z_exp: i32, coeff: i64) -> LaurentPoly2 {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert((v_exp, z_exp), coeff);
        }
        LaurentPoly2 { coeffs }
    }

    pub fn from_terms(terms: &[(i32, i32, i64)]) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for &(a, b, c) in terms {
            let entry = p.coeffs.entry((a, b)).or_insert(0);
            *entry += c;
            if *entry == 0 {
                p.coeffs.remove(&(a, b));
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, v_exp: i32, z_exp: i32) -> i64 {
        self.coeffs.get(&(v_exp, z_exp)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.coeffs.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &LaurentPoly2) -> Result<LaurentPoly2> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &LaurentPoly2) -> Result<()> {
        for (&k, &c) in &other.coeffs {
            let v = checked_add(self.coeffs.get(&k).copied().unwrap_or(0), c)?;
            if v == 0 {
                self.coeffs.remove(&k);
            } else {
                self.coeffs.insert(k, v);
            }
        }
        Ok(())
    }

    pub fn sub(&self, other: &LaurentPoly2) -> Result<LaurentPoly2> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly2 {
        LaurentPoly2 {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly2) -> Result<LaurentPoly2> {
        let mut out = LaurentPoly2::zero();
        for (&(a1, b1), &c1) in &self.coeffs {
            for (&(a2, b2), &c2) in &other.coeffs {
                let k = (a1 + a2, b1 + b2);
                let v = checked_add(
                    out.coeffs.get(&k).copied().unwrap_or(0),
                    checked_mul(c1, c2)?,
                )?;
                if v == 0 {
                    out.coeffs.remove(&k);
                } else {
                    out.coeffs.insert(k, v);
                }
            }
        }
        Ok(out)
    }

    /// Multiply by the monomial `coeff · v^a z^b` in place.
    pub fn mul_monomial_assign(&mut self, v_exp: i32, z_exp: i32, coeff: i64) -> Result<()> {
        if coeff == 0 {
            self.coeffs.clear();
            return Ok(());
        }
        let mut coeffs = BTreeMap::new();
        for (&(a, b), &c) in &self.coeffs {
            coeffs.insert((a + v_exp, b + z_exp), checked_mul(c, coeff)?);
        }
        self.coeffs = coeffs;
        Ok(())
    }

    pub fn pow(&self, n: u32) -> Result<LaurentPoly2> {
        let mut out = LaurentPoly2::one();
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn min_deg_v(&self) -> Option<i32> {
        self.coeffs.keys().map(|&(a, _)| a).min()
    }

    pub fn max_deg_v(&self) -> Option<i32> {
        self.coeffs.keys().map(|&(a, _)| a).max()
    }

    pub fn min_deg_z(&self) -> Option<i32> {
        self.coeffs.keys().map(|&(_, b)| b).min()
    }

    pub fn max_deg_z(&self) -> Option<i32> {
        self.coeffs.keys().map(|&(_, b)| b).max()
    }

    /// Substitute `v ↦ v^{-1}`.
    pub fn invert_v(&self) -> LaurentPoly2 {
        LaurentPoly2 {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), &c)| ((-a, b), c))
                .collect(),
        }
    }

    /// The coefficient of `z^k`, as a one-variable polynomial in `v`.
    pub fn z_coefficient(&self, z_exp: i32) -> LaurentPoly1 {
        LaurentPoly1::from_terms(
            &self
                .coeffs
                .iter()
                .filter(|(&(_, b), _)| b == z_exp)
                .map(|(&(a, _), &c)| (a, c))
                .collect::<Vec<_>>(),
        )
    }

    /// The coefficient of `v^k`, as a one-variable polynomial in `z`.
    pub fn v_coefficient(&self, v_exp: i32) -> LaurentPoly1 {
        LaurentPoly1::from_terms(
            &self
                .coeffs
                .iter()
                .filter(|(&(a, _), _)| a == v_exp)
                .map(|(&(_, b), &c)| (b, c))
                .collect::<Vec<_>>(),
        )
    }

    /// Substitute `v ↦ s^{2p}, z ↦ (s - s^{-1})·s-power…` — concretely, map
    /// each term `c·v^a z^b` to `c · s^{2·v_scale·a} · (s - s^{-1})^b`,
    /// which covers the Jones (`v_scale = 1`) and Alexander (`v_scale = 0`)
    /// specializations. Fails if a negative `z`-power would be needed.
    pub fn specialize_to_s(&self, v_scale: i32) -> Result<LaurentPoly1> {
        let bracket = LaurentPoly1::from_terms(&[(1, 1), (-1, -1)]); // s - s^{-1}
        let mut out = LaurentPoly1::zero();
        let mut bracket_pows: Vec<LaurentPoly1> = vec![LaurentPoly1::one()];
        for (&(a, b), &c) in &self.coeffs {
            if b < 0 {
                return Err(Error::Unsupported(
                    "negative z-degree under specialization".into(),
                ));
            }
            while bracket_pows.len() <= b as usize {
                let next = bracket_pows.last().unwrap().mul(&bracket)?;
                bracket_pows.push(next);
            }
            let term = bracket_pows[b as usize].shift(2 * v_scale * a).scale(c)?;
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Serialize in the line format `z^k : v_exp:coeff v_exp:coeff …`,
    /// one line per `z`-degree, degrees ascending.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        let (Some(lo), Some(hi)) = (self.min_deg_z(), self.max_deg_z()) else {
            return "z^0 :".into();
        };
        for b in lo..=hi {
            let row = self.z_coefficient(b);
            if row.is_zero() {
                continue;
            }
            out.push_str(&format!("z^{b} :"));
            for (e, c) in row.terms() {
                out.push_str(&format!(" {e}:{c}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parse the [`LaurentPoly2::to_lines`] format. Blank lines and lines
    /// starting with `#` are ignored; repeated entries accumulate.
    pub fn from_lines(text: &str) -> Result<LaurentPoly2> {
        let mut terms = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or(Error::Parse {
                what: "polynomial line",
                text: line.into(),
            })?;
            let head = head.trim();
            let z_exp: i32 = head
                .strip_prefix("z^")
                .and_then(|s| s.trim().parse().ok())
                .ok_or(Error::Parse {
                    what: "z-degree",
                    text: head.into(),
                })?;
            for pair in tail.split_whitespace() {
                let (e, c) = pair.split_once(':').ok_or(Error::Parse {
                    what: "v-exponent:coefficient pair",
                    text: pair.into(),
                })?;
                let v_exp: i32 = e.parse().map_err(|_| Error::Parse {
                    what: "v-exponent",
                    text: e.into(),
                })?;
                let coeff: i64 = c.parse().map_err(|_| Error::Parse {
                    what: "coefficient",
                    text: c.into(),
                })?;
                terms.push((v_exp, z_exp, coeff));
            }
        }
        Ok(LaurentPoly2::from_terms(&terms))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), &c) in self.coeffs.iter() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            let mut needs_star = false;
            if mag != 1 || (a == 0 && b == 0) {
                write!(f, "{mag}")?;
                needs_star = true;
            }
            if a != 0 {
                if needs_star {
                    write!(f, "*")?;
                }
                if a == 1 {
                    write!(f, "v")?;
                } else {
                    write!(f, "v^{a}")?;
                }
                needs_star = true;
            }
            if b != 0 {
                if needs_star {
                    write!(f, "*")?;
                }
                if b == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{b}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_p() -> LaurentPoly2 {
        LaurentPoly2::from_terms(&[(4, 0, -1), (2, 0, 2), (2, 2, 1)])
    }

    #[test]
    fn arithmetic_basics() {
        let p = trefoil_p();
        let q = p.sub(&p).unwrap();
        assert!(q.is_zero());
        let two_p = p.add(&p).unwrap();
        assert_eq!(two_p.coeff(2, 0), 4);
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq.coeff(8, 0), 1);
        assert_eq!(sq.coeff(4, 4), 1);
        assert_eq!(sq.max_deg_z(), Some(4));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = LaurentPoly2::monomial(0, 0, i64::MAX);
        assert_eq!(big.mul(&big), Err(Error::Overflow));
        assert_eq!(big.add(&big), Err(Error::Overflow));
    }

    #[test]
    fn line_format_roundtrip() {
        let p = trefoil_p();
        let text = p.to_lines();
        assert_eq!(LaurentPoly2::from_lines(&text).unwrap(), p);
        let with_comment = format!("# trefoil skein polynomial\n{text}\n");
        assert_eq!(LaurentPoly2::from_lines(&with_comment).unwrap(), p);
    }

    #[test]
    fn specialization_of_trefoil_gives_jones_and_conway() {
        let p = trefoil_p();
        // V(t) = -t^4 + t^3 + t, in s = t^{1/2}
        let v = p.specialize_to_s(1).unwrap();
        assert_eq!(v, LaurentPoly1::from_terms(&[(8, -1), (6, 1), (2, 1)]));
        // Alexander route: v = 1 leaves ∇(z) = z^2 + 1 ↦ t - 1 + 1/t
        let d = p.specialize_to_s(0).unwrap();
        assert_eq!(d, LaurentPoly1::from_terms(&[(2, 1), (0, -1), (-2, 1)]));
        assert!(d.is_palindromic());
        assert_eq!(d.eval_at_one(), 1);
    }

    #[test]
    fn unit_circle_eval() {
        let one = LaurentPoly1::one();
        let z = one.eval_unit(2, 5);
        assert!((z.re - 1.0).abs() < 1e-12 && z.im.abs() < 1e-12);

        // |V(trefoil)(e^{iπ/3})| = √3: s-exponents double the t-angle
        let v = trefoil_p().specialize_to_s(1).unwrap();
        let val = v.eval_unit(1, 3 * 2); // s = e^{iθ/2} with θ = π/3
        assert!((val.norm() - 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn poly1_display() {
        let p = LaurentPoly1::from_terms(&[(-2, 1), (0, -3), (1, 2)]);
        assert_eq!(p.to_string(), "x^-2 - 3 + 2*x");
    }
}
