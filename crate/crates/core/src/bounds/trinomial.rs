//! Largest positive root of `K^{n+1} - 2 K^n + 1`.
//!
//! For large `n` the root sits a few ulps below 2 while the derivative there
//! is about `2^n`, so no `f64` has a residual anywhere near `1e-12` once
//! `n` passes 13 or so. The root is therefore bracketed with exact dyadic
//! rationals `m / 2^b` and the residual is evaluated exactly; the `f64`
//! value handed to callers is that bracket end rounded upward, which keeps
//! any radius built from it conservative.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub const DEFAULT_TRINOMIAL_TOL: f64 = 1e-13;

#[derive(Clone, Debug, Serialize)]
pub struct TrinomialRoot {
    pub n: usize,
    /// Upper end of the final bracket, rounded toward `+inf`.
    pub value: f64,
    /// `|K^{n+1} - 2K^n + 1|` at the exact dyadic bracket end.
    pub residual: f64,
    /// The same quantity at `value` itself.
    pub value_residual: f64,
    /// Width of the final bracket.
    pub bracket_width: f64,
}

/// Exact `K^{n+1} - 2K^n + 1` for `K = m / 2^bits`, scaled by `2^{bits (n+1)}`.
fn scaled_trinomial(m: &BigInt, bits: u64, n: usize) -> BigInt {
    let mn = num_traits::pow(m.clone(), n);
    let one_shift = BigInt::one() << (bits as usize);
    &mn * m - ((&mn * &one_shift) << 1usize) + num_traits::pow(one_shift, n + 1)
}

fn exact_residual(k: &BigRational, n: usize) -> BigRational {
    let kn = num_traits::pow(k.clone(), n);
    let two = BigRational::from_integer(BigInt::from(2));
    &kn * k - &kn * two + BigRational::one()
}

fn round_up(x: &BigRational) -> f64 {
    let v = x.to_f64().expect("bracket lies in [1, 2]");
    match BigRational::from_float(v) {
        Some(exact) if &exact < x => v.next_up(),
        _ => v,
    }
}

/// Largest positive root `K_1` of `K^{n+1} - 2K^n + 1 = 0`.
///
/// `n <= 1` returns 1 (for `n = 1` the polynomial is `(K - 1)^2`). For
/// `n >= 2` bisection runs on `[1 + 2^-30, 2]`, where the polynomial changes
/// sign, until the exact residual at the upper end is at most `tol` and the
/// bracket is narrower than one `f64` ulp near 2.
pub fn trinomial_root(n: usize, tol: f64) -> TrinomialRoot {
    if n <= 1 {
        return TrinomialRoot { n, value: 1.0, residual: 0.0, value_residual: 0.0, bracket_width: 0.0 };
    }
    let bits = 128 + 2 * n as u64;
    let unit = BigInt::one() << (bits as usize);
    let mut lo = &unit + (BigInt::one() << (bits as usize - 30));
    let mut hi = &unit << 1usize;
    debug_assert!(scaled_trinomial(&lo, bits, n).is_negative());
    let denom = BigRational::from_integer(unit.clone());
    let min_width = BigInt::one() << (bits as usize - 60);
    loop {
        let width = &hi - &lo;
        if width <= BigInt::one() {
            break;
        }
        if width <= min_width {
            let k = BigRational::from_integer(hi.clone()) / &denom;
            let r = exact_residual(&k, n).abs().to_f64().unwrap_or(f64::INFINITY);
            if r <= tol {
                break;
            }
        }
        let mid: BigInt = (&lo + &hi) >> 1usize;
        let f = scaled_trinomial(&mid, bits, n);
        if f.is_zero() {
            lo = mid.clone();
            hi = mid;
            break;
        } else if f.is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let k = BigRational::from_integer(hi.clone()) / &denom;
    let residual = exact_residual(&k, n).abs().to_f64().unwrap_or(f64::INFINITY);
    let value = round_up(&k);
    let value_exact = BigRational::from_float(value).expect("finite");
    let value_residual = exact_residual(&value_exact, n).abs().to_f64().unwrap_or(f64::INFINITY);
    let bracket_width = (BigRational::from_integer(&hi - &lo) / &denom).to_f64().unwrap_or(0.0);
    TrinomialRoot { n, value, residual, value_residual, bracket_width }
}
