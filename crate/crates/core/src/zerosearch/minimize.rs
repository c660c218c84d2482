//! Local minimization of `F(q) = |p(q)|^2` over R^8.
//!
//! `p` is a polynomial map R^8 -> R^8, so its Jacobian is available in
//! closed form and the minimizer is Levenberg-Marquardt on the residual
//! `p(q)`. With `q^k = q q^{k-1}` the directional derivatives obey
//! `D(q^k)[h] = h q^{k-1} + q D(q^{k-1})[h]`.

use nalgebra::{SMatrix, SVector};

use crate::octonion::{Octonion, StructureTable};
use crate::poly::OctPolynomial;

pub type Jacobian = SMatrix<f64, 8, 8>;
type Vec8 = SVector<f64, 8>;

const LAMBDA_MIN: f64 = 1e-14;
const LAMBDA_MAX: f64 = 1e16;

/// `p(q)` together with its Jacobian; column `i` is the derivative along `e_i`.
pub fn linearize(p: &OctPolynomial, q: &Octonion) -> (Octonion, Jacobian) {
    let table = StructureTable::corrected();
    let coeffs = p.coeffs();
    let mut power = Octonion::ONE;
    let mut dpow = [Octonion::ZERO; 8];
    let mut value = table.mul(&power, &coeffs[0]);
    let mut cols = [Octonion::ZERO; 8];
    for a in &coeffs[1..] {
        for (i, d) in dpow.iter_mut().enumerate() {
            *d = table.mul_basis_left(i, &power) + table.mul(q, d);
        }
        power = table.mul(q, &power);
        value += table.mul(&power, a);
        if !a.is_zero() {
            for (col, d) in cols.iter_mut().zip(dpow.iter()) {
                *col += table.mul(d, a);
            }
        }
    }
    let jac = Jacobian::from_fn(|r, c| cols[c].coords()[r]);
    (value, jac)
}

pub fn objective(p: &OctPolynomial, q: &Octonion) -> f64 {
    p.eval(q).norm_sqr()
}

/// Analytic gradient of [`objective`]: `2 J^T p(q)`.
pub fn gradient(p: &OctPolynomial, q: &Octonion) -> [f64; 8] {
    let (value, jac) = linearize(p, q);
    let g = jac.transpose() * Vec8::from_column_slice(value.coords()) * 2.0;
    std::array::from_fn(|i| g[i])
}

fn to_vec(q: &Octonion) -> Vec8 {
    Vec8::from_column_slice(q.coords())
}

fn from_vec(v: &Vec8) -> Octonion {
    Octonion::from_coords(std::array::from_fn(|i| v[i]))
}

/// Levenberg-Marquardt from `start`. Returns the best point and the number
/// of outer iterations taken.
pub fn levenberg_marquardt(p: &OctPolynomial, start: &Octonion, max_iters: usize) -> (Octonion, usize) {
    let mut q = *start;
    let (mut value, mut jac) = linearize(p, &q);
    let mut f = value.norm_sqr();
    let mut lambda = 1e-3;
    let mut iters = 0;
    while iters < max_iters {
        if !f.is_finite() || f == 0.0 {
            break;
        }
        // residual already at rounding level for this |q|
        if f.sqrt() <= 4.0 * f64::EPSILON * p.modulus_scale(q.norm()) {
            break;
        }
        iters += 1;
        let a = jac.transpose() * jac;
        let g = jac.transpose() * to_vec(&value);
        let diag = (0..8).map(|i| a[(i, i)]).fold(0.0f64, f64::max).max(f64::MIN_POSITIVE);
        let mut accepted = None;
        while lambda <= LAMBDA_MAX {
            let m = a + Jacobian::identity() * (lambda * diag);
            let Some(chol) = m.cholesky() else {
                lambda *= 10.0;
                continue;
            };
            let step = -chol.solve(&g);
            let trial = from_vec(&(to_vec(&q) + step));
            let trial_f = p.eval(&trial).norm_sqr();
            if trial_f < f {
                lambda = (lambda / 10.0).max(LAMBDA_MIN);
                accepted = Some((trial, step.norm()));
                break;
            }
            lambda *= 10.0;
        }
        let Some((next, step_norm)) = accepted else {
            break;
        };
        q = next;
        (value, jac) = linearize(p, &q);
        f = value.norm_sqr();
        if step_norm <= f64::EPSILON * (1.0 + q.norm()) {
            break;
        }
    }
    (q, iters)
}
