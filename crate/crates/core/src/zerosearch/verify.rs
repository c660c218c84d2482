//! Multistart search for zeros that contradict a bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use super::{minimize::levenberg_marquardt, SearchError, ZeroCertificate, ZeroOrigin};
use crate::bounds::{BoundKind, BoundResult, TheoremId};
use crate::octonion::Octonion;
use crate::poly::OctPolynomial;

/// Absolute slack on a bound radius before a certificate counts against it.
pub const BOUND_SLACK: f64 = 1e-6;

pub const DEFAULT_CERTIFY_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_ITERS: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    pub starts: usize,
    pub seed: u64,
    pub search_radius: f64,
    pub certify_tol: f64,
    pub max_iters: usize,
}

impl SearchConfig {
    pub fn new(starts: usize, seed: u64, search_radius: f64) -> Self {
        SearchConfig { starts, seed, search_radius, certify_tol: DEFAULT_CERTIFY_TOL, max_iters: DEFAULT_MAX_ITERS }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.starts == 0 {
            return Err(SearchError::Config("starts must be at least 1".into()));
        }
        if !(self.search_radius.is_finite() && self.search_radius > 0.0) {
            return Err(SearchError::Config(format!("search_radius must be positive, got {}", self.search_radius)));
        }
        if !(self.certify_tol.is_finite() && self.certify_tol > 0.0) {
            return Err(SearchError::Config(format!("certify_tol must be positive, got {}", self.certify_tol)));
        }
        Ok(())
    }

    /// Residual threshold for `p`: `certify_tol * max(1, max |a_k|)`.
    pub fn threshold(&self, p: &OctPolynomial) -> f64 {
        self.certify_tol * p.max_coeff_norm().max(1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationStatus {
    Consistent,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationVerdict {
    pub theorem: TheoremId,
    pub kind: BoundKind,
    pub radius: f64,
    pub status: VerificationStatus,
    pub starts: usize,
    pub search_radius: f64,
    pub threshold: f64,
    /// Accepted certificates, sorted by modulus then start index.
    pub certificates: Vec<ZeroCertificate>,
    pub min_modulus: Option<f64>,
    pub max_modulus: Option<f64>,
    /// The accepted certificate furthest on the wrong side of the bound.
    pub offending: Option<ZeroCertificate>,
    pub total_iterations: usize,
}

impl VerificationVerdict {
    pub fn is_consistent(&self) -> bool {
        self.status == VerificationStatus::Consistent
    }
}

/// Start point for run `index`: Gaussian direction, radius uniform in
/// `[lo, hi]`. Each start has its own stream so the schedule is irrelevant.
fn start_point(seed: u64, index: usize, lo: f64, hi: f64) -> Octonion {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let dir = loop {
        let g: [f64; 8] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let n = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-300 {
            break g.map(|x| x / n);
        }
    };
    let r = lo + (hi - lo) * rng.random::<f64>();
    Octonion::from_coords(dir.map(|x| x * r))
}

/// Runs `cfg.starts` minimizations from the region where a violation of
/// `bound` would sit and checks every accepted certificate against it.
pub fn multistart_verify(
    p: &OctPolynomial,
    bound: &BoundResult,
    cfg: &SearchConfig,
) -> Result<VerificationVerdict, SearchError> {
    cfg.validate()?;
    let (lo, hi) = match bound.kind {
        BoundKind::Inclusion => (bound.radius.min(cfg.search_radius), cfg.search_radius),
        BoundKind::Exclusion => (0.0, bound.radius.min(cfg.search_radius)),
    };
    let threshold = cfg.threshold(p);
    let runs: Vec<(usize, ZeroCertificate, usize)> = (0..cfg.starts)
        .into_par_iter()
        .map(|i| {
            let q0 = start_point(cfg.seed, i, lo, hi);
            let (q, iters) = levenberg_marquardt(p, &q0, cfg.max_iters);
            (i, ZeroCertificate::evaluate(p, q, ZeroOrigin::Minimization), iters)
        })
        .collect();

    let total_iterations = runs.iter().map(|r| r.2).sum();
    let mut accepted: Vec<(usize, ZeroCertificate)> =
        runs.into_iter().filter(|(_, c, _)| c.is_certified(threshold)).map(|(i, c, _)| (i, c)).collect();
    accepted.sort_by(|a, b| a.1.modulus.total_cmp(&b.1.modulus).then(a.0.cmp(&b.0)));
    let certificates: Vec<ZeroCertificate> = accepted.into_iter().map(|(_, c)| c).collect();

    let mut bad = certificates.iter().filter(|c| !bound.admits(c.modulus, BOUND_SLACK));
    let offending = match bound.kind {
        BoundKind::Inclusion => bad.next_back().copied(),
        BoundKind::Exclusion => bad.min_by(|a, b| a.modulus.total_cmp(&b.modulus)).copied(),
    };
    Ok(VerificationVerdict {
        theorem: bound.theorem,
        kind: bound.kind,
        radius: bound.radius,
        status: if offending.is_some() { VerificationStatus::Violated } else { VerificationStatus::Consistent },
        starts: cfg.starts,
        search_radius: cfg.search_radius,
        threshold,
        min_modulus: certificates.first().map(|c| c.modulus),
        max_modulus: certificates.last().map(|c| c.modulus),
        offending,
        certificates,
        total_iterations,
    })
}
