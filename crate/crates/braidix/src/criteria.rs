//! Braid index lower bound criteria and writhe bookkeeping.
//!
//! Everything here consumes polynomial data: the Morton-Williams-Franks
//! bound and its cabled versions from `v`-spans, admissible writhe windows
//! from the `v`-degree bounds `min deg_v P ≥ [β] − n + 1` and
//! `max deg_v P ≤ [β] + n − 1`, unity-root tests on the Jones polynomial,
//! the corrected 4-braid Alexander test, and the writhe-uniqueness
//! inequalities that tie cabled spans to the Jones conjecture.

use crate::error::{Error, Result};
use crate::invariants::eval_unit_circle;
use crate::poly::{LaurentPoly1, LaurentPoly2};

/// Numeric criteria fire only when an inequality is violated by more than
/// this tolerance, so rounding can never produce a false exclusion.
pub const NUMERIC_TOLERANCE: f64 = 1e-6;

/// MWF inequality: the braid index is at least `span_v(P)/2 + 1`
/// (rounded up should an odd span ever appear).
pub fn mwf_bound(p: &LaurentPoly2) -> Result<i64> {
    let span = span_v(p)?;
    Ok((span + span % 2) / 2 + 1)
}

fn span_v(p: &LaurentPoly2) -> Result<i64> {
    match (p.min_deg_v(), p.max_deg_v()) {
        (Some(lo), Some(hi)) => Ok((hi - lo) as i64),
        _ => Err(Error::ZeroPolynomial),
    }
}

/// MWF applied to the polynomial of a `k`-cable: `⌈(span_v/2 + 1)/k⌉` bounds
/// the companion's braid index.
pub fn cabled_mwf_bound(p_cable: &LaurentPoly2, k: i64) -> Result<i64> {
    if k < 1 {
        return Err(Error::Unsupported("cable width must be at least 1".into()));
    }
    let inner = mwf_bound(p_cable)?;
    Ok((inner + k - 1) / k)
}

/// The writhes an `n`-strand representation could have, given `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WritheWindow {
    pub min_writhe: i64,
    pub max_writhe: i64,
    /// Residue of every admitted writhe mod 2.
    pub parity: i64,
}

impl WritheWindow {
    pub fn is_empty(&self) -> bool {
        self.min_writhe > self.max_writhe
    }

    pub fn contains(&self, writhe: i64) -> bool {
        !self.is_empty()
            && writhe >= self.min_writhe
            && writhe <= self.max_writhe
            && writhe.rem_euclid(2) == self.parity
    }

    pub fn values(&self) -> Vec<i64> {
        (self.min_writhe..=self.max_writhe)
            .filter(|w| w.rem_euclid(2) == self.parity)
            .collect()
    }
}

/// Exponent-sum window `[max deg_v − n + 1, min deg_v + n − 1]` for a
/// hypothetical `n`-strand representation, intersected with the parity class
/// forced by the component count (read off the polynomial's exponent
/// parity). An empty window rules the strand count out entirely.
pub fn admissible_writhes(p: &LaurentPoly2, n: i64) -> Result<WritheWindow> {
    if n < 1 {
        return Err(Error::Unsupported("strand count must be at least 1".into()));
    }
    let lo = p.min_deg_v().ok_or(Error::ZeroPolynomial)? as i64;
    let hi = p.max_deg_v().unwrap() as i64;
    // v-exponents are ≡ c − 1 (mod 2); an n-braid word with c closure
    // components has length ≡ n − c, so writhe ≡ n − 1 + (c − 1) (mod 2).
    let c_parity = hi.rem_euclid(2);
    let parity = (n - 1 + c_parity).rem_euclid(2);
    let mut min_writhe = hi - n + 1;
    let mut max_writhe = lo + n - 1;
    if min_writhe.rem_euclid(2) != parity {
        min_writhe += 1;
    }
    if max_writhe.rem_euclid(2) != parity {
        max_writhe -= 1;
    }
    Ok(WritheWindow {
        min_writhe,
        max_writhe,
        parity,
    })
}

/// Outcome of a numeric exclusion test, with the compared quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootTest {
    /// `|V|` at the tested root of unity.
    pub value: f64,
    /// The representation-theoretic ceiling `(2 cos π/k)^{n−1}`.
    pub bound: f64,
    /// `value − bound`; the test fails (excludes) when this exceeds the
    /// tolerance.
    pub margin: f64,
    pub excluded: bool,
}

/// Unity-root criterion: an `n`-braid closure satisfies
/// `|V(e^{2πi/k})| ≤ (2 cos π/k)^{n−1}` for every `k ≥ 3`; exceeding the
/// bound rules out any `n`-strand representation.
pub fn unity_root_test(v: &LaurentPoly1, n: i64, k: i64) -> Result<RootTest> {
    if k < 3 || n < 1 {
        return Err(Error::Unsupported(
            "unity-root test needs k ≥ 3 and n ≥ 1".into(),
        ));
    }
    let value = eval_unit_circle(v, 2, k).norm();
    let bound = (2.0 * (std::f64::consts::PI / k as f64).cos()).powi(n as i32 - 1);
    let margin = value - bound;
    Ok(RootTest {
        value,
        bound,
        margin,
        excluded: margin > NUMERIC_TOLERANCE,
    })
}

/// Verdicts of the 4-braid Alexander tests at `t = e^{2πi/5}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaTest {
    pub value: f64,
    /// `|Δ| > 6 + 2√5 ≈ 10.472136` rules out closed 4-braids.
    pub modulus_excludes: bool,
    /// One-sided refinement: `Δ > (9 + 5√5)/2 ≈ 10.09017` also excludes.
    pub refined_excludes: bool,
    /// Whether the historical (incorrect) bound 6.5 would have fired; kept
    /// for regression documentation, never used for exclusion.
    pub historical_bound_fires: bool,
}

impl DeltaTest {
    pub fn excludes_four_braid(&self) -> bool {
        self.modulus_excludes || self.refined_excludes
    }
}

/// Corrected 4-braid criterion on `Δ(e^{2πi/5})` (a real number by the
/// symmetry of Δ).
pub fn four_braid_delta_test(delta_at_root: f64) -> DeltaTest {
    let modulus_bound = 6.0 + 2.0 * 5f64.sqrt();
    let refined_bound = (9.0 + 5.0 * 5f64.sqrt()) / 2.0;
    DeltaTest {
        value: delta_at_root,
        modulus_excludes: delta_at_root.abs() > modulus_bound + NUMERIC_TOLERANCE,
        refined_excludes: delta_at_root > refined_bound + NUMERIC_TOLERANCE,
        historical_bound_fires: delta_at_root.abs() > 6.5,
    }
}

/// Exact 4-braid relation between `V` and `Δ` for a knot closure of
/// exponent sum `e`:
/// `t^{−e}V(t) + t^{e}V(1/t) =
///  (t^{−3/2}+t^{−1/2}+t^{1/2}+t^{3/2})(t^{−e/2}+t^{e/2})
///  − (t^{−2}+t^{−1}+2+t+t²)·Δ(t)`.
/// Checked symbolically in `s = t^{1/2}`. A knot whose invariants violate
/// this for every admissible `e` is not a 4-braid closure.
pub fn four_braid_identity_check(v: &LaurentPoly1, delta: &LaurentPoly1, e: i64) -> Result<bool> {
    if e.rem_euclid(2) != 1 {
        return Err(Error::Unsupported(
            "knot closures of 4-braids have odd exponent sum".into(),
        ));
    }
    let e = i32::try_from(e).map_err(|_| Error::Overflow)?;
    let lhs = v.shift(-2 * e).add(&v.invert_variable().shift(2 * e))?;
    let spine = LaurentPoly1::from_terms(&[(-3, 1), (-1, 1), (1, 1), (3, 1)]);
    let cusp = LaurentPoly1::from_terms(&[(-e, 1), (e, 1)]);
    let corr = LaurentPoly1::from_terms(&[(-4, 1), (-2, 1), (0, 2), (2, 1), (4, 1)]);
    let rhs = spine.mul(&cusp)?.sub(&corr.mul(delta)?)?;
    Ok(lhs == rhs)
}

/// Maximal `|[β] − [β']|` two `n`-strand representations may exhibit:
/// `2(n − span_v/2 − 1)`, floored at 0. Zero means the Jones conjecture
/// holds for this knot at strand count `n` (sharp MWF).
pub fn writhe_spread_bound(p: &LaurentPoly2, n: i64) -> Result<i64> {
    let span = span_v(p)?;
    Ok((2 * n - span - 2).max(0))
}

/// Test whether a `k`-cable span contradicts the coexistence of two
/// `n`-strand representations with writhes `w1 ≠ w2`: contradiction exactly
/// when `(span_v(P_cable)/2 + 1)/k > n − |w1 − w2|/2`, evaluated in exact
/// integer arithmetic (both sides doubled).
pub fn cable_contradiction_test(
    p_cable: &LaurentPoly2,
    k: i64,
    n: i64,
    w1: i64,
    w2: i64,
) -> Result<bool> {
    if w1 == w2 {
        return Ok(false);
    }
    if k < 1 {
        return Err(Error::Unsupported("cable width must be at least 1".into()));
    }
    let span = span_v(p_cable)?;
    // (span/2 + 1)/k > n − |Δw|/2  ⟺  span + 2 > k(2n − |Δw|)
    Ok(span + 2 > k * (2 * n - (w1 - w2).abs()))
}

/// Bounds on `d_{k,K}`, the number of distinct writhes of `k`-strand
/// representations: `k − b + 1 ≤ d_{k,K} ≤ k − best_cable_bound + 1`, where
/// `b` is the braid index (or its best upper estimate) and
/// `best_cable_bound` the strongest cabled MWF lower bound known.
pub fn writhe_count_bounds(k: i64, b: i64, best_cable_bound: i64) -> Result<(i64, i64)> {
    if k < b {
        return Err(Error::Unsupported(
            "strand count below the braid index".into(),
        ));
    }
    Ok((k - b + 1, k - best_cable_bound + 1))
}

/// One line of a criterion report.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionEntry {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    /// This criterion certifies the braid index is at least the value.
    LowerBound(i64),
    /// Informational only (windows, identities, external verdicts).
    Info,
}

/// Aggregated braid index lower bounds with per-criterion provenance.
#[derive(Debug, Clone, Default)]
pub struct CriterionReport {
    pub entries: Vec<CriterionEntry>,
}

impl CriterionReport {
    pub fn push_bound(&mut self, name: &str, bound: i64, detail: String, tol: Option<f64>) {
        self.entries.push(CriterionEntry {
            name: name.into(),
            outcome: Outcome::LowerBound(bound),
            detail,
            tolerance: tol,
        });
    }

    pub fn push_info(&mut self, name: &str, detail: String) {
        self.entries.push(CriterionEntry {
            name: name.into(),
            outcome: Outcome::Info,
            detail,
            tolerance: None,
        });
    }

    /// The best certified lower bound: the maximum over all entries.
    pub fn aggregate_lower_bound(&self) -> i64 {
        self.entries
            .iter()
            .filter_map(|e| match e.outcome {
                Outcome::LowerBound(b) => Some(b),
                Outcome::Info => None,
            })
            .max()
            .unwrap_or(1)
    }

    /// Aligned text rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.entries {
            let head = match e.outcome {
                Outcome::LowerBound(b) => format!("braid index >= {b}"),
                Outcome::Info => "info".into(),
            };
            let tol = e
                .tolerance
                .map(|t| format!(" (tolerance {t:.0e})"))
                .unwrap_or_default();
            out.push_str(&format!("{:width$}  {head}  {}{tol}\n", e.name, e.detail));
        }
        out.push_str(&format!(
            "{:width$}  braid index >= {}\n",
            "aggregate",
            self.aggregate_lower_bound()
        ));
        out
    }

    /// Line-oriented `key=value` rendering for scripting.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let bound = match e.outcome {
                Outcome::LowerBound(b) => b.to_string(),
                Outcome::Info => "-".into(),
            };
            out.push_str(&format!(
                "criterion={} bound={} detail={:?}\n",
                e.name.replace(' ', "-"),
                bound,
                e.detail
            ));
        }
        out.push_str(&format!("aggregate={}\n", self.aggregate_lower_bound()));
        out
    }
}

/// Options for [`report_for_invariants`].
#[derive(Debug, Clone)]
pub struct ReportOptions {
    /// Roots of unity swept by the Jones criterion.
    pub unity_roots: std::ops::RangeInclusive<i64>,
    /// Largest strand count probed by the sweeps.
    pub max_strands: i64,
    /// Externally supplied 3-braid exclusion (e.g. from a published 3-braid
    /// formula); recorded verbatim, never computed here.
    pub external_three_braid_excluded: Option<bool>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            unity_roots: 3..=12,
            max_strands: 9,
            external_three_braid_excluded: None,
        }
    }
}

/// Build the full criterion report from a knot's invariants.
pub fn report_for_invariants(
    p: &LaurentPoly2,
    v: &LaurentPoly1,
    delta: Option<&LaurentPoly1>,
    opts: &ReportOptions,
) -> Result<CriterionReport> {
    let mut report = CriterionReport::default();
    let mwf = mwf_bound(p)?;
    report.push_bound("mwf", mwf, format!("v-span {} of P", span_v(p)?), None);

    // unity-root sweep: find the largest n excluded at any k
    let mut best_excluded = 0;
    let mut best_detail = None;
    for k in opts.unity_roots.clone() {
        for n in 1..=opts.max_strands {
            let t = unity_root_test(v, n, k)?;
            if t.excluded && n > best_excluded {
                best_excluded = n;
                best_detail = Some(format!(
                    "|V(e^{{2πi/{k}}})| = {:.6} > {:.6} rules out {n} strands",
                    t.value, t.bound
                ));
            }
        }
    }
    if let Some(detail) = best_detail {
        report.push_bound(
            "unity-root",
            best_excluded + 1,
            detail,
            Some(NUMERIC_TOLERANCE),
        );
    } else {
        report.push_info("unity-root", "no exclusion on the swept roots".into());
    }

    if let Some(delta) = delta {
        let at_root = eval_unit_circle(delta, 2, 5);
        let t = four_braid_delta_test(at_root.re);
        if t.excludes_four_braid() {
            report.push_bound(
                "four-braid-alexander",
                5,
                format!("Δ(e^{{2πi/5}}) = {:.6} exceeds the 4-braid range", t.value),
                Some(NUMERIC_TOLERANCE),
            );
        } else {
            report.push_info(
                "four-braid-alexander",
                format!(
                    "Δ(e^{{2πi/5}}) = {:.6}; no exclusion{}",
                    t.value,
                    if t.historical_bound_fires {
                        " (historical 6.5 bound would have fired)"
                    } else {
                        ""
                    }
                ),
            );
        }
        // 4-braid V/Δ identity over the admissible writhe window
        let window = admissible_writhes(p, 4)?;
        let admissible: Vec<i64> = window.values();
        if admissible.is_empty() {
            report.push_bound(
                "four-braid-writhe-window",
                5,
                "empty 4-strand writhe window".into(),
                None,
            );
        } else {
            let any_ok = admissible
                .iter()
                .filter(|e| e.rem_euclid(2) == 1)
                .map(|&e| four_braid_identity_check(v, delta, e))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .any(|b| b);
            if any_ok {
                report.push_info(
                    "four-braid-identity",
                    format!("holds for some e in {admissible:?}"),
                );
            } else {
                report.push_bound(
                    "four-braid-identity",
                    5,
                    format!("fails for every admissible e in {admissible:?}"),
                    None,
                );
            }
        }
    }

    for n in 1..=opts.max_strands {
        let w = admissible_writhes(p, n)?;
        if !w.is_empty() {
            report.push_info(
                "writhe-window",
                format!(
                    "n={n}: writhes in [{}, {}] with parity {}",
                    w.min_writhe, w.max_writhe, w.parity
                ),
            );
            break;
        }
        report.push_bound(
            "writhe-window",
            n + 1,
            format!("no admissible writhe on {n} strands"),
            None,
        );
    }

    if let Some(excluded) = opts.external_three_braid_excluded {
        if excluded {
            report.push_bound(
                "external-three-braid",
                4,
                "external 3-braid exclusion supplied".into(),
                None,
            );
        } else {
            report.push_info(
                "external-three-braid",
                "external verdict: not excluded".into(),
            );
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants;
    use crate::tables;

    fn trefoil_p() -> LaurentPoly2 {
        LaurentPoly2::from_terms(&[(4, 0, -1), (2, 0, 2), (2, 2, 1)])
    }

    #[test]
    fn mwf_values() {
        assert_eq!(mwf_bound(&LaurentPoly2::one()).unwrap(), 1);
        assert_eq!(mwf_bound(&tables::p_14_45759()).unwrap(), 3);
        assert_eq!(mwf_bound(&tables::p_13_9465()).unwrap(), 3);
        assert!(mwf_bound(&LaurentPoly2::zero()).is_err());
    }

    #[test]
    fn cabled_mwf_values() {
        let cable = tables::p_14_45759_two_cable();
        assert_eq!(cabled_mwf_bound(&cable, 2).unwrap(), 4);
        // k = 1 degenerates to plain MWF
        assert_eq!(
            cabled_mwf_bound(&tables::p_14_45759(), 1).unwrap(),
            mwf_bound(&tables::p_14_45759()).unwrap()
        );
        assert!(cabled_mwf_bound(&cable, 0).is_err());
    }

    #[test]
    fn writhe_windows() {
        let w = admissible_writhes(&tables::p_14_45759(), 4).unwrap();
        assert_eq!(w.values(), vec![-1, 1]);

        let t = admissible_writhes(&trefoil_p(), 2).unwrap();
        assert_eq!(t.values(), vec![3]);

        let u = admissible_writhes(&LaurentPoly2::one(), 1).unwrap();
        assert_eq!(u.values(), vec![0]);
    }

    #[test]
    fn unity_root_on_13_9465() {
        let v = tables::v_13_9465();
        let three = unity_root_test(&v, 3, 10).unwrap();
        assert!(three.excluded);
        // the squared quantities match the closed forms 9+2√5 and (15+5√5)/2
        let lhs_sq = three.value * three.value;
        let rhs_sq = three.bound * three.bound;
        assert!((lhs_sq - (9.0 + 2.0 * 5f64.sqrt())).abs() < 1e-9);
        assert!((rhs_sq - (15.0 + 5.0 * 5f64.sqrt()) / 2.0).abs() < 1e-9);

        let four = unity_root_test(&v, 4, 10).unwrap();
        assert!(!four.excluded);

        let unknot = unity_root_test(&LaurentPoly1::one(), 1, 5).unwrap();
        assert!(!unknot.excluded);
    }

    #[test]
    fn delta_test_cases() {
        let counterexample = 19.0 * 5f64.sqrt() - 49.0;
        let t = four_braid_delta_test(counterexample);
        assert!(!t.excludes_four_braid());
        assert!(t.historical_bound_fires);

        let zero = four_braid_delta_test(0.0);
        assert!(!zero.excludes_four_braid() && !zero.historical_bound_fires);

        let eleven = four_braid_delta_test(11.0);
        assert!(eleven.modulus_excludes && eleven.refined_excludes);
    }

    #[test]
    fn four_braid_identity_unknot() {
        // unknot as σ1σ2σ3: V = Δ = 1, e = 3: both sides equal t^{-3} + t^3
        let one = LaurentPoly1::one();
        assert!(four_braid_identity_check(&one, &one, 3).unwrap());
        assert!(four_braid_identity_check(&one, &one, 2).is_err());
    }

    #[test]
    fn four_braid_identity_trefoil_on_four_strands() {
        let w: crate::word::BraidWord = "1 1 1 2 3".parse().unwrap();
        let v = invariants::jones(&w).unwrap();
        let d = invariants::alexander(&w).unwrap();
        assert_eq!(w.exponent_sum(), 5);
        assert!(four_braid_identity_check(&v, &d, 5).unwrap());
        // e = 3 and e = 1 are realized too (stabilize with mixed signs),
        // but far outside the writhe window the identity must break
        assert!(four_braid_identity_check(&v, &d, 3).unwrap());
        assert!(!four_braid_identity_check(&v, &d, 9).unwrap());
    }

    #[test]
    fn spread_and_contradiction() {
        assert_eq!(writhe_spread_bound(&tables::p_14_45759(), 4).unwrap(), 2);
        assert_eq!(writhe_spread_bound(&LaurentPoly2::one(), 1).unwrap(), 0);
        // sharp MWF forces spread 0
        assert_eq!(writhe_spread_bound(&trefoil_p(), 2).unwrap(), 0);

        let cable = tables::p_14_45759_two_cable();
        assert!(cable_contradiction_test(&cable, 2, 4, 1, -1).unwrap());
        assert!(!cable_contradiction_test(&cable, 2, 4, 1, 1).unwrap());
        // k = 1 reduces to the plain spread inequality
        assert!(cable_contradiction_test(&tables::p_14_45759(), 1, 3, 1, -3).unwrap());
    }

    #[test]
    fn writhe_counts() {
        assert_eq!(writhe_count_bounds(5, 5, 5).unwrap(), (1, 1));
        assert_eq!(writhe_count_bounds(6, 5, 5).unwrap(), (2, 2));
        assert_eq!(writhe_count_bounds(5, 5, 4).unwrap(), (1, 2));
        assert!(writhe_count_bounds(4, 5, 5).is_err());
    }

    #[test]
    fn aggregate_monotone() {
        let p = tables::p_13_9465();
        let v = tables::v_13_9465();
        let base = report_for_invariants(&p, &v, None, &ReportOptions::default()).unwrap();
        assert_eq!(base.aggregate_lower_bound(), 4); // unity-root beats MWF here
        let fewer = report_for_invariants(
            &p,
            &v,
            None,
            &ReportOptions {
                unity_roots: 3..=3,
                ..ReportOptions::default()
            },
        )
        .unwrap();
        assert!(fewer.aggregate_lower_bound() <= base.aggregate_lower_bound());
    }
}
