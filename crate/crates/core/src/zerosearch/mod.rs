//! Locating zeros numerically and certifying them by direct evaluation.
//!
//! Two tiers: when every coefficient lies in one slice `R + R I` the zeros
//! on that slice come from a complex root finder and are complete; for
//! general coefficients a multistart minimization of `|p(q)|^2` finds zeros
//! but may miss some. Either way a [`ZeroCertificate`] carries the residual
//! of a fresh evaluation, never a number reported by the solver.

mod aberth;
mod minimize;
mod verify;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::octonion::{ImaginaryUnit, Octonion};
use crate::poly::{OctPolynomial, PolyError};

pub use aberth::polynomial_roots;
pub use minimize::{gradient, levenberg_marquardt, linearize, objective, Jacobian};
pub use verify::{
    multistart_verify, SearchConfig, VerificationStatus, VerificationVerdict, BOUND_SLACK, DEFAULT_CERTIFY_TOL,
    DEFAULT_MAX_ITERS,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("root {index} at {point} has residual {residual:e} above {threshold:e}")]
    Uncertified { index: usize, point: Octonion, residual: f64, threshold: f64 },
    #[error("sphere expansion needs real coefficients")]
    NonRealCoefficients,
    #[error("invalid search configuration: {0}")]
    Config(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroOrigin {
    SliceRoot,
    Minimization,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZeroCertificate {
    pub point: Octonion,
    /// `|p(point)|` from a fresh evaluation.
    pub residual: f64,
    pub modulus: f64,
    pub origin: ZeroOrigin,
}

impl ZeroCertificate {
    pub fn evaluate(p: &OctPolynomial, point: Octonion, origin: ZeroOrigin) -> Self {
        ZeroCertificate { point, residual: p.eval(&point).norm(), modulus: point.norm(), origin }
    }

    pub fn is_certified(&self, threshold: f64) -> bool {
        self.residual <= threshold
    }
}

/// Threshold for a root of `p` at modulus `r`: `tol` times the size of the
/// terms being summed, `sum |a_k| r^k`, but never below `tol * max |a_k|`.
pub fn slice_threshold(p: &OctPolynomial, r: f64, tol: f64) -> f64 {
    tol * p.modulus_scale(r).max(p.max_coeff_norm())
}

/// All zeros of `p` on the slice through `unit`, with multiplicity.
pub fn slice_roots(p: &OctPolynomial, unit: &ImaginaryUnit, tol: f64) -> Result<Vec<ZeroCertificate>, SearchError> {
    let restricted = p.restrict_to_slice(unit)?;
    polynomial_roots(&restricted.coeffs)
        .into_iter()
        .enumerate()
        .map(|(index, z)| {
            let cert = ZeroCertificate::evaluate(p, restricted.embed(z), ZeroOrigin::SliceRoot);
            let threshold = slice_threshold(p, cert.modulus, tol);
            if cert.is_certified(threshold) {
                Ok(cert)
            } else {
                Err(SearchError::Uncertified { index, point: cert.point, residual: cert.residual, threshold })
            }
        })
        .collect()
}

/// Default relative tolerance for [`slice_roots`].
pub const SLICE_ROOT_TOL: f64 = 1e-12;

/// Largest modulus among the slice zeros; 0 when there are none.
pub fn max_zero_modulus(p: &OctPolynomial, unit: &ImaginaryUnit) -> Result<f64, SearchError> {
    Ok(slice_roots(p, unit, SLICE_ROOT_TOL)?.iter().map(|c| c.modulus).fold(0.0, f64::max))
}

/// A real-coefficient polynomial that vanishes at `x + y I` vanishes on the
/// whole sphere `x + y S`. For each nonreal certificate this adds `samples`
/// points `x + y J` with random `J`, each re-evaluated.
pub fn expand_real_zero_spheres(
    certs: &[ZeroCertificate],
    p: &OctPolynomial,
    samples: usize,
    seed: u64,
) -> Result<Vec<ZeroCertificate>, SearchError> {
    if !p.is_real() {
        return Err(SearchError::NonRealCoefficients);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(certs.len() * (samples + 1));
    for cert in certs {
        out.push(*cert);
        let y = cert.point.imag().norm();
        if y == 0.0 {
            continue;
        }
        let x = cert.point.re();
        for _ in 0..samples {
            let j = ImaginaryUnit::random_with(&mut rng);
            out.push(ZeroCertificate::evaluate(p, j.point(x, y), cert.origin));
        }
    }
    Ok(out)
}

/// Levenberg-Marquardt from `start`; the result is a certificate only if
/// its residual passes the caller's threshold.
pub fn minimize_modulus(p: &OctPolynomial, start: &Octonion, max_iters: usize) -> ZeroCertificate {
    let (point, _) = levenberg_marquardt(p, start, max_iters);
    ZeroCertificate::evaluate(p, point, ZeroOrigin::Minimization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    #[test]
    fn slice_roots_of_real_polynomials() {
        let u = ImaginaryUnit::random(3);
        let roots = slice_roots(&OctPolynomial::from_real(&[1.0, 1.0, 1.0]), &u, 1e-12).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!((r.modulus - 1.0).abs() < 1e-14);
            assert_eq!(r.origin, ZeroOrigin::SliceRoot);
        }
        let roots = slice_roots(&OctPolynomial::from_real(&[1.0, 1.0]), &u, 1e-12).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].point, Octonion::real(-1.0));
        let roots = slice_roots(&OctPolynomial::from_real(&[4.0, 2.0, 1.0]), &u, 1e-12).unwrap();
        assert!(roots.iter().all(|r| (r.modulus - 2.0).abs() < 1e-14));
    }

    #[test]
    fn slice_roots_need_slice_coefficients() {
        let p = OctPolynomial::new(vec![e(2), Octonion::ONE]);
        assert!(matches!(slice_roots(&p, &ImaginaryUnit::basis(1), 1e-12), Err(SearchError::Poly(_))));
        let p = OctPolynomial::new(vec![e(1), Octonion::ONE]);
        let r = slice_roots(&p, &ImaginaryUnit::basis(1), 1e-12).unwrap();
        assert_eq!(r[0].point, -e(1));
    }

    #[test]
    fn max_modulus_examples() {
        let u = ImaginaryUnit::basis(5);
        let m = |c: &[f64]| max_zero_modulus(&OctPolynomial::from_real(c), &u).unwrap();
        assert!((m(&[1.0, 1.0, 1.0]) - 1.0).abs() < 1e-14);
        assert!((m(&[4.0, 2.0, 1.0]) - 2.0).abs() < 1e-14);
        assert_eq!(m(&[1.0, 1.0]), 1.0);
        assert_eq!(m(&[5.0]), 0.0);
    }

    #[test]
    fn slice_moduli_do_not_depend_on_the_unit() {
        let p = OctPolynomial::from_real(&[0.3, 1.0, 1.2, 2.0, 2.5, 4.0]);
        let mut base: Vec<f64> =
            slice_roots(&p, &ImaginaryUnit::basis(1), 1e-12).unwrap().iter().map(|c| c.modulus).collect();
        base.sort_by(f64::total_cmp);
        for seed in 0..10 {
            let mut m: Vec<f64> =
                slice_roots(&p, &ImaginaryUnit::random(seed), 1e-12).unwrap().iter().map(|c| c.modulus).collect();
            m.sort_by(f64::total_cmp);
            for (a, b) in base.iter().zip(&m) {
                assert!((a - b).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn sphere_expansion() {
        let p = OctPolynomial::from_real(&[1.0, 0.0, 1.0]);
        let certs = slice_roots(&p, &ImaginaryUnit::basis(1), 1e-12).unwrap();
        let out = expand_real_zero_spheres(&certs, &p, 5, 9).unwrap();
        assert_eq!(out.len(), 12);
        for c in &out {
            assert!(c.residual <= 1e-12);
            assert!(c.point.re().abs() < 1e-15);
            assert!((c.modulus - 1.0).abs() < 1e-15);
        }
        assert_eq!(expand_real_zero_spheres(&certs, &p, 0, 9).unwrap(), certs);

        let lin = OctPolynomial::from_real(&[1.0, 1.0]);
        let real_root = slice_roots(&lin, &ImaginaryUnit::basis(1), 1e-12).unwrap();
        assert_eq!(expand_real_zero_spheres(&real_root, &lin, 4, 0).unwrap(), real_root);

        let q = OctPolynomial::new(vec![e(1), Octonion::ONE]);
        assert_eq!(expand_real_zero_spheres(&[], &q, 1, 0), Err(SearchError::NonRealCoefficients));
    }

    #[test]
    fn minimization_examples() {
        let c = minimize_modulus(&OctPolynomial::monomial(1, Octonion::ONE), &e(7), 200);
        assert!(c.residual <= 1e-10);
        assert_eq!(c.origin, ZeroOrigin::Minimization);

        let p = OctPolynomial::new(vec![Octonion::ONE, Octonion::ONE + e(1)]);
        let target = -(Octonion::ONE - e(1)) * 0.5;
        let start = target + (e(3) + e(1)) * 0.05;
        let c = minimize_modulus(&p, &start, 200);
        assert!((c.point - target).norm() < 1e-12);
        assert!((c.modulus - FRAC_1_SQRT_2).abs() < 1e-12);
    }
}
