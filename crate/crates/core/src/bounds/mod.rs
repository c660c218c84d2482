//! Zero-bound theorems of Enestrom-Kakeya type for octonionic polynomials.
//!
//! Every theorem has a hypothesis check and a radius. Inclusion radii say
//! that all zeros satisfy `|q| <= r`; the exclusion radius says `|q| >= r`.
//!
//! | id          | hypothesis                                                | radius                                   |
//! |-------------|-----------------------------------------------------------|------------------------------------------|
//! | `ek`        | real `0 < a_0 a^n <= a_1 a^{n-1} <= ... <= a_n`           | `1 / a`                                  |
//! | `moduli`    | `|a_k| a^{n-k}` nondecreasing over nonzero coefficients   | `K_1(n) / a`                             |
//! | `angle`     | `|a_k|` nondecreasing, every `a_k` within `alpha` of `+-1` | `cos a + sin a + 2 sin a sum_{k<n}|a_k| / |a_n|` |
//! | `exclusion` | `|a_k|` nonincreasing, same cone condition                | reciprocal of `angle` on the reversal    |
//! | `realpart`  | `0 <= Re a_0 <= ... <= Re a_n`, `Re a_n != 0`             | `1 + 2 sum |Im parts|_1 / Re a_n`        |
//!
//! The scale `a` is always chosen as the largest admissible value, which
//! gives the smallest radius the hypothesis allows.

mod trinomial;

use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::octonion::Octonion;
use crate::poly::OctPolynomial;

pub use trinomial::{trinomial_root, TrinomialRoot, DEFAULT_TRINOMIAL_TOL};

/// Slack for the hypothesis inequalities `x <= y`.
pub const CHAIN_SLACK: f64 = 1e-12;

fn le(x: f64, y: f64) -> bool {
    x <= y + CHAIN_SLACK * 1f64.max(x.abs()).max(y.abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    Ek,
    Moduli,
    Angle,
    Exclusion,
    Realpart,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] =
        [TheoremId::Ek, TheoremId::Moduli, TheoremId::Angle, TheoremId::Exclusion, TheoremId::Realpart];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Ek => "ek",
            TheoremId::Moduli => "moduli",
            TheoremId::Angle => "angle",
            TheoremId::Exclusion => "exclusion",
            TheoremId::Realpart => "realpart",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Inclusion,
    Exclusion,
}

/// Which hypothesis failed, and where.
#[derive(Clone, Debug, PartialEq, Error)]
pub enum Violation {
    #[error("coefficient {index} is not real")]
    NonReal { index: usize },
    #[error("coefficient {index} must be positive, got {value}")]
    NonPositive { index: usize, value: f64 },
    #[error("chain broken between indices {index} and {next}: {left} > {right}")]
    ChainBroken { index: usize, next: usize, left: f64, right: f64 },
    #[error("moduli nonincreasing chain broken between indices {index} and {next}: {left} < {right}")]
    ChainNotDecreasing { index: usize, next: usize, left: f64, right: f64 },
    #[error("angle to the real axis is {alpha} > pi/2")]
    AngleCap { alpha: f64 },
    #[error("leading real part is zero")]
    ZeroLeadingRealPart,
    #[error("only one nonzero coefficient; every zero is at the origin")]
    Monomial,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum BoundError {
    #[error("polynomial must have degree at least 1")]
    DegreeZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{theorem} hypothesis fails: {violation}")]
    Hypothesis { theorem: TheoremId, violation: Violation },
}

fn fail(theorem: TheoremId, violation: Violation) -> BoundError {
    BoundError::Hypothesis { theorem, violation }
}

/// The parameters a theorem was applied with.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BoundParameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_sign: Option<i8>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub gap_indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<f64>,
    /// For `ek`: whether the unscaled chain `a_0 <= ... <= a_n` already held.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unscaled_chain: Option<bool>,
    /// For `realpart`: `Re a_n`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leading_real: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundResult {
    pub theorem: TheoremId,
    pub kind: BoundKind,
    pub radius: f64,
    pub parameters: BoundParameters,
}

impl BoundResult {
    /// True if a zero at modulus `m` is consistent with this bound, given
    /// an absolute slack.
    pub fn admits(&self, m: f64, slack: f64) -> bool {
        match self.kind {
            BoundKind::Inclusion => m <= self.radius + slack,
            BoundKind::Exclusion => m >= self.radius - slack,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisEntry {
    pub theorem: TheoremId,
    pub applies: bool,
    pub parameters: BoundParameters,
    pub failure_reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisReport {
    pub entries: Vec<HypothesisEntry>,
}

impl HypothesisReport {
    pub fn get(&self, theorem: TheoremId) -> &HypothesisEntry {
        self.entries.iter().find(|e| e.theorem == theorem).expect("report covers every theorem")
    }

    pub fn applies(&self, theorem: TheoremId) -> bool {
        self.get(theorem).applies
    }
}

fn require_degree(p: &OctPolynomial) -> Result<usize, BoundError> {
    if p.is_zero() {
        return Err(BoundError::ZeroPolynomial);
    }
    match p.degree() {
        0 => Err(BoundError::DegreeZero),
        n => Ok(n),
    }
}

pub fn bound_for(theorem: TheoremId, p: &OctPolynomial) -> Result<BoundResult, BoundError> {
    match theorem {
        TheoremId::Ek => ek_bound(p),
        TheoremId::Moduli => moduli_bound(p),
        TheoremId::Angle => angle_bound(p),
        TheoremId::Exclusion => angle_exclusion_bound(p),
        TheoremId::Realpart => realpart_bound(p),
    }
}

/// Runs every theorem's hypothesis check.
pub fn check_hypotheses(p: &OctPolynomial) -> Result<HypothesisReport, BoundError> {
    require_degree(p)?;
    let entries = TheoremId::ALL
        .iter()
        .map(|&theorem| match bound_for(theorem, p) {
            Ok(b) => HypothesisEntry { theorem, applies: true, parameters: b.parameters, failure_reason: None },
            Err(e) => HypothesisEntry {
                theorem,
                applies: false,
                parameters: BoundParameters::default(),
                failure_reason: Some(e.to_string()),
            },
        })
        .collect();
    Ok(HypothesisReport { entries })
}

/// Real positive coefficients with a monotone scaled chain.
///
/// The best scale is `a* = min_k a_{k+1} / a_k`, for which the chain
/// `a_k a*^{n-k}` is nondecreasing by construction; the radius is `1/a*`.
/// If the unscaled chain holds the radius is also capped at 1.
pub fn ek_bound(p: &OctPolynomial) -> Result<BoundResult, BoundError> {
    const T: TheoremId = TheoremId::Ek;
    let n = require_degree(p)?;
    let c = p.coeffs();
    for (index, a) in c.iter().enumerate() {
        if !a.is_real() {
            return Err(fail(T, Violation::NonReal { index }));
        }
        if a.re() <= 0.0 {
            return Err(fail(T, Violation::NonPositive { index, value: a.re() }));
        }
    }
    let r: Vec<f64> = c.iter().map(Octonion::re).collect();
    let a_star = r.windows(2).map(|w| w[1] / w[0]).fold(f64::INFINITY, f64::min);
    let unscaled = r.windows(2).all(|w| le(w[0], w[1]));
    // scaled chain with a = a*, checked explicitly
    for k in 0..n {
        let left = r[k] * a_star.powi((n - k) as i32);
        let right = r[k + 1] * a_star.powi((n - k - 1) as i32);
        if !le(left, right) {
            return Err(fail(T, Violation::ChainBroken { index: k, next: k + 1, left, right }));
        }
    }
    let mut radius = 1.0 / a_star;
    if unscaled {
        radius = radius.min(1.0);
    }
    Ok(BoundResult {
        theorem: T,
        kind: BoundKind::Inclusion,
        radius,
        parameters: BoundParameters { a: Some(a_star), unscaled_chain: Some(unscaled), ..Default::default() },
    })
}

/// Best scale for the gap-aware moduli chain: over consecutive nonzero
/// coefficients `j < k`, `a* = min (|a_k| / |a_j|)^{1/(k-j)}`.
fn moduli_scale(moduli: &[f64]) -> Option<(f64, Vec<usize>)> {
    let nonzero: Vec<usize> = (0..moduli.len()).filter(|&k| moduli[k] > 0.0).collect();
    let gaps: Vec<usize> = (0..moduli.len()).filter(|&k| moduli[k] == 0.0).collect();
    let a = nonzero
        .windows(2)
        .map(|w| (moduli[w[1]] / moduli[w[0]]).powf(1.0 / (w[1] - w[0]) as f64))
        .fold(f64::INFINITY, f64::min);
    a.is_finite().then_some((a, gaps))
}

/// Moduli theorem with the gap rule: radius `K_1(n) / a*`.
pub fn moduli_bound(p: &OctPolynomial) -> Result<BoundResult, BoundError> {
    const T: TheoremId = TheoremId::Moduli;
    let n = require_degree(p)?;
    let moduli: Vec<f64> = p.coeffs().iter().map(Octonion::norm).collect();
    let (a_star, gaps) = moduli_scale(&moduli).ok_or_else(|| fail(T, Violation::Monomial))?;
    let nonzero: Vec<usize> = (0..=n).filter(|&k| moduli[k] > 0.0).collect();
    for w in nonzero.windows(2) {
        let (j, k) = (w[0], w[1]);
        let left = moduli[j] * a_star.powi((n - j) as i32);
        let right = moduli[k] * a_star.powi((n - k) as i32);
        if !le(left, right) {
            return Err(fail(T, Violation::ChainBroken { index: j, next: k, left, right }));
        }
    }
    let k1 = trinomial_root(n, DEFAULT_TRINOMIAL_TOL).value;
    Ok(BoundResult {
        theorem: T,
        kind: BoundKind::Inclusion,
        radius: k1 / a_star,
        parameters: BoundParameters { a: Some(a_star), k1: Some(k1), gap_indices: gaps, ..Default::default() },
    })
}

/// Smallest cone half-angle around `+1` or `-1` containing every nonzero
/// coefficient. Zero coefficients impose no angle constraint.
fn cone_angle(coeffs: &[Octonion]) -> (f64, i8) {
    let widest = |sign: f64| {
        coeffs
            .iter()
            .filter(|a| !a.is_zero())
            .map(|a| a.angle(&Octonion::real(sign)).expect("nonzero"))
            .fold(0.0f64, f64::max)
    };
    let (plus, minus) = (widest(1.0), widest(-1.0));
    if minus < plus {
        (minus, -1)
    } else {
        (plus, 1)
    }
}

fn angle_parts(
    theorem: TheoremId,
    coeffs: &[Octonion],
    moduli_order: impl Fn(usize, f64, f64) -> Option<Violation>,
) -> Result<(f64, BoundParameters), BoundError> {
    let moduli: Vec<f64> = coeffs.iter().map(Octonion::norm).collect();
    for k in 0..moduli.len() - 1 {
        if let Some(v) = moduli_order(k, moduli[k], moduli[k + 1]) {
            return Err(fail(theorem, v));
        }
    }
    let (mut alpha, sign) = cone_angle(coeffs);
    if alpha > FRAC_PI_2 {
        if le(alpha, FRAC_PI_2) {
            alpha = FRAC_PI_2;
        } else {
            return Err(fail(theorem, Violation::AngleCap { alpha }));
        }
    }
    Ok((alpha, BoundParameters { alpha: Some(alpha), beta_sign: Some(sign), ..Default::default() }))
}

/// `cos a + sin a + (2 sin a / |lead|) sum |rest|`, with the coefficients
/// ordered so the last one plays the role of `a_n`.
fn angle_radius(alpha: f64, coeffs: &[Octonion]) -> f64 {
    let (lead, rest) = coeffs.split_last().expect("nonempty");
    let sum: f64 = rest.iter().map(Octonion::norm).sum();
    let (s, c) = alpha.sin_cos();
    c + s + 2.0 * s * sum / lead.norm()
}

pub fn angle_bound(p: &OctPolynomial) -> Result<BoundResult, BoundError> {
    const T: TheoremId = TheoremId::Angle;
    require_degree(p)?;
    let (alpha, parameters) = angle_parts(T, p.coeffs(), |k, x, y| {
        (!le(x, y)).then_some(Violation::ChainBroken { index: k, next: k + 1, left: x, right: y })
    })?;
    Ok(BoundResult { theorem: T, kind: BoundKind::Inclusion, radius: angle_radius(alpha, p.coeffs()), parameters })
}

/// Exclusion form, obtained from [`angle_bound`] applied to `q^n p(1/q)`;
/// computed on the reversed coefficient list so the two agree exactly.
pub fn angle_exclusion_bound(p: &OctPolynomial) -> Result<BoundResult, BoundError> {
    const T: TheoremId = TheoremId::Exclusion;
    require_degree(p)?;
    let (alpha, parameters) = angle_parts(T, p.coeffs(), |k, x, y| {
        (!le(y, x)).then_some(Violation::ChainNotDecreasing { index: k, next: k + 1, left: x, right: y })
    })?;
    let reversed: Vec<Octonion> = p.coeffs().iter().rev().copied().collect();
    Ok(BoundResult {
        theorem: T,
        kind: BoundKind::Exclusion,
        radius: 1.0 / angle_radius(alpha, &reversed),
        parameters,
    })
}

/// Real parts nonnegative and nondecreasing, leading real part nonzero.
pub fn realpart_bound(p: &OctPolynomial) -> Result<BoundResult, BoundError> {
    const T: TheoremId = TheoremId::Realpart;
    let n = require_degree(p)?;
    let c = p.coeffs();
    let re: Vec<f64> = c.iter().map(Octonion::re).collect();
    if !le(0.0, re[0]) {
        return Err(fail(T, Violation::NonPositive { index: 0, value: re[0] }));
    }
    for k in 0..n {
        if !le(re[k], re[k + 1]) {
            return Err(fail(T, Violation::ChainBroken { index: k, next: k + 1, left: re[k], right: re[k + 1] }));
        }
    }
    if re[n] == 0.0 {
        return Err(fail(T, Violation::ZeroLeadingRealPart));
    }
    let imag: f64 = c.iter().map(Octonion::imag_l1).sum();
    Ok(BoundResult {
        theorem: T,
        kind: BoundKind::Inclusion,
        radius: 1.0 + 2.0 * imag / re[n],
        parameters: BoundParameters { leading_real: Some(re[n]), ..Default::default() },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BestBounds {
    /// Inclusions by increasing radius, then exclusions by decreasing radius.
    pub results: Vec<BoundResult>,
    pub hypotheses: HypothesisReport,
}

impl BestBounds {
    pub fn tightest_inclusion(&self) -> Option<&BoundResult> {
        self.results.iter().find(|b| b.kind == BoundKind::Inclusion)
    }

    pub fn tightest_exclusion(&self) -> Option<&BoundResult> {
        self.results.iter().find(|b| b.kind == BoundKind::Exclusion)
    }
}

/// Every applicable theorem, tightest first.
pub fn best_bound(p: &OctPolynomial) -> Result<BestBounds, BoundError> {
    let hypotheses = check_hypotheses(p)?;
    let mut results: Vec<BoundResult> =
        TheoremId::ALL.iter().filter_map(|&t| bound_for(t, p).ok()).collect();
    results.sort_by(|x, y| match (x.kind, y.kind) {
        (BoundKind::Inclusion, BoundKind::Exclusion) => Ordering::Less,
        (BoundKind::Exclusion, BoundKind::Inclusion) => Ordering::Greater,
        (BoundKind::Inclusion, BoundKind::Inclusion) => x.radius.total_cmp(&y.radius).then(x.theorem.cmp(&y.theorem)),
        (BoundKind::Exclusion, BoundKind::Exclusion) => y.radius.total_cmp(&x.radius).then(x.theorem.cmp(&y.theorem)),
    });
    Ok(BestBounds { results, hypotheses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn one() -> Octonion {
        Octonion::ONE
    }

    fn real(c: &[f64]) -> OctPolynomial {
        OctPolynomial::from_real(c)
    }

    fn golden() -> f64 {
        (1.0 + 5f64.sqrt()) / 2.0
    }

    #[test]
    fn hypothesis_report() {
        let r = check_hypotheses(&real(&[1.0, 2.0, 3.0])).unwrap();
        assert!(r.applies(TheoremId::Ek));
        assert_eq!(r.get(TheoremId::Ek).parameters.unscaled_chain, Some(true));

        let r = check_hypotheses(&real(&[3.0, 2.0, 1.0])).unwrap();
        assert_eq!(r.get(TheoremId::Ek).parameters.unscaled_chain, Some(false));
        assert!(r.applies(TheoremId::Exclusion));
        assert!(!r.applies(TheoremId::Angle));
        assert!(!r.applies(TheoremId::Realpart));

        let p = OctPolynomial::new(vec![e(1), one() + e(1)]);
        let r = check_hypotheses(&p).unwrap();
        assert!(r.applies(TheoremId::Realpart));
        assert_eq!(r.get(TheoremId::Realpart).parameters.leading_real, Some(1.0));
        assert!(!r.applies(TheoremId::Ek));
        assert!(r.get(TheoremId::Ek).failure_reason.as_ref().unwrap().contains("not real"));

        assert_eq!(check_hypotheses(&real(&[1.0])), Err(BoundError::DegreeZero));
    }

    #[test]
    fn ek_examples() {
        assert_eq!(ek_bound(&real(&[1.0, 1.0, 1.0])).unwrap().radius, 1.0);
        let b = ek_bound(&real(&[4.0, 2.0, 1.0])).unwrap();
        assert_eq!(b.parameters.a, Some(0.5));
        assert_eq!(b.radius, 2.0);
        let b = ek_bound(&real(&[1.0, 2.0, 4.0])).unwrap();
        assert_eq!(b.parameters.a, Some(2.0));
        assert_eq!(b.radius, 0.5);
    }

    #[test]
    fn ek_rejections() {
        assert!(matches!(
            ek_bound(&real(&[0.0, 1.0])),
            Err(BoundError::Hypothesis { violation: Violation::NonPositive { index: 0, .. }, .. })
        ));
        assert!(matches!(
            ek_bound(&real(&[1.0, -1.0, 2.0])),
            Err(BoundError::Hypothesis { violation: Violation::NonPositive { index: 1, .. }, .. })
        ));
        assert!(matches!(
            ek_bound(&OctPolynomial::new(vec![one(), e(2)])),
            Err(BoundError::Hypothesis { violation: Violation::NonReal { index: 1 }, .. })
        ));
    }

    #[test]
    fn moduli_examples() {
        let b = moduli_bound(&real(&[1.0, 1.0])).unwrap();
        assert_eq!(b.radius, 1.0);
        let b = moduli_bound(&real(&[1.0, 0.0, 1.0])).unwrap();
        assert_eq!(b.parameters.gap_indices, vec![1]);
        assert_eq!(b.parameters.a, Some(1.0));
        assert!((b.radius - golden()).abs() < 1e-15);
        let p = OctPolynomial::new(vec![e(3), e(5) * 2.0, one() * 4.0]);
        let b = moduli_bound(&p).unwrap();
        assert_eq!(b.parameters.a, Some(2.0));
        assert!((b.radius - golden() / 2.0).abs() < 1e-15);
        assert!(matches!(
            moduli_bound(&OctPolynomial::monomial(3, e(1))),
            Err(BoundError::Hypothesis { violation: Violation::Monomial, .. })
        ));
    }

    #[test]
    fn angle_examples() {
        let b = angle_bound(&real(&[1.0, 2.0, 2.0, 5.0])).unwrap();
        assert_eq!(b.radius, 1.0);
        assert_eq!(b.parameters.alpha, Some(0.0));

        let b = angle_bound(&OctPolynomial::new(vec![one(), one() + e(1)])).unwrap();
        assert!((b.parameters.alpha.unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!((b.radius - (SQRT_2 + 1.0)).abs() < 1e-12);

        let b = angle_bound(&OctPolynomial::new(vec![one(), e(1)])).unwrap();
        assert!((b.radius - 3.0).abs() < 1e-15);

        // negative reals pick beta = -1
        let b = angle_bound(&real(&[-1.0, -2.0])).unwrap();
        assert_eq!(b.parameters.beta_sign, Some(-1));
        assert_eq!(b.radius, 1.0);

        assert!(matches!(
            angle_bound(&real(&[2.0, 1.0])),
            Err(BoundError::Hypothesis { violation: Violation::ChainBroken { .. }, .. })
        ));
        // 1 and -1 + e1 cannot share a cone of half-angle <= pi/2
        assert!(matches!(
            angle_bound(&OctPolynomial::new(vec![one(), -one() * 2.0 + e(1)])),
            Err(BoundError::Hypothesis { violation: Violation::AngleCap { .. }, .. })
        ));
    }

    #[test]
    fn exclusion_examples() {
        let b = angle_exclusion_bound(&OctPolynomial::new(vec![one() + e(1), one()])).unwrap();
        assert_eq!(b.kind, BoundKind::Exclusion);
        assert!((b.radius - (SQRT_2 - 1.0)).abs() < 1e-12);
        assert_eq!(angle_exclusion_bound(&real(&[1.0, 1.0])).unwrap().radius, 1.0);
        assert!(angle_exclusion_bound(&real(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn realpart_examples() {
        assert_eq!(realpart_bound(&real(&[1.0, 2.0, 2.0])).unwrap().radius, 1.0);
        assert_eq!(realpart_bound(&OctPolynomial::new(vec![e(1), one()])).unwrap().radius, 3.0);
        assert_eq!(realpart_bound(&OctPolynomial::new(vec![e(1) + e(2), one(), one()])).unwrap().radius, 5.0);
        assert!(matches!(
            realpart_bound(&OctPolynomial::new(vec![one(), e(1)])),
            Err(BoundError::Hypothesis { violation: Violation::ChainBroken { .. }, .. })
        ));
        assert!(matches!(
            realpart_bound(&OctPolynomial::new(vec![e(2), e(1)])),
            Err(BoundError::Hypothesis { violation: Violation::ZeroLeadingRealPart, .. })
        ));
    }

    #[test]
    fn best_bound_ordering() {
        let b = best_bound(&real(&[1.0, 1.0, 1.0])).unwrap();
        let inc: Vec<_> = b.results.iter().filter(|r| r.kind == BoundKind::Inclusion).collect();
        assert_eq!(b.tightest_inclusion().unwrap().radius, 1.0);
        assert!(inc.windows(2).all(|w| w[0].radius <= w[1].radius));
        let moduli = b.results.iter().find(|r| r.theorem == TheoremId::Moduli).unwrap();
        assert!((moduli.radius - golden()).abs() < 1e-15);

        let b = best_bound(&OctPolynomial::new(vec![e(1), e(2)])).unwrap();
        let get = |t| b.results.iter().find(|r| r.theorem == t).map(|r| r.radius);
        assert_eq!(get(TheoremId::Moduli), Some(1.0));
        assert!((get(TheoremId::Angle).unwrap() - 3.0).abs() < 1e-15);
        assert!((get(TheoremId::Exclusion).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(get(TheoremId::Ek), None);
        assert_eq!(b.tightest_inclusion().unwrap().theorem, TheoremId::Moduli);

        // nothing applies: moduli up, cone too wide, real parts down, not real
        let p = OctPolynomial::new(vec![one() * 2.0 + e(1), -one() * 3.0 + e(2) * 3.0, Octonion::ZERO, e(1) * 10.0]);
        let b = best_bound(&p).unwrap();
        assert!(b.results.iter().all(|r| r.theorem == TheoremId::Moduli));
    }
}
