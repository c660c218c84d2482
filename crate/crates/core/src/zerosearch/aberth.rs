//! Simultaneous complex root finding (Aberth-Ehrlich iteration).

use num_complex::Complex64;

const MAX_ITERS: usize = 1000;

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    coeffs.iter().rev().fold((zero, zero), |(p, dp), c| (p * z + c, dp * z + p))
}

fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// All roots of `sum c_k z^k` (ascending coefficients, nonzero leading
/// term), with multiplicity. Exact zero low-order coefficients are split off
/// as roots at the origin.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.len() > 1 && c.last() == Some(&zero) {
        c.pop();
    }
    let mut roots = Vec::new();
    let lead_zeros = c.iter().take_while(|x| **x == zero).count().min(c.len() - 1);
    roots.extend(std::iter::repeat_n(zero, lead_zeros));
    let c = &c[lead_zeros..];
    let n = c.len() - 1;
    match n {
        0 => return roots,
        1 => {
            roots.push(-c[0] / c[1]);
            return roots;
        }
        _ => {}
    }

    // Starting circle: radius is the geometric mean of the root moduli.
    let radius = (c[0].norm() / c[n].norm()).powf(1.0 / n as f64);
    let radius = if radius.is_finite() && radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERS {
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = eval_with_derivative(c, z[k]);
            if p == zero {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !w.is_finite() {
                done[k] = true;
                continue;
            }
            z[k] -= w;
            if w.norm() <= 4.0 * f64::EPSILON * z[k].norm().max(f64::MIN_POSITIVE) {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    // Newton polish, keeping a step only when it lowers |p|.
    for root in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(c, *root);
            if dp == zero {
                break;
            }
            let candidate = *root - p / dp;
            if eval(c, candidate).norm() < p.norm() {
                *root = candidate;
            } else {
                break;
            }
        }
    }
    roots.extend(z);
    roots
}
