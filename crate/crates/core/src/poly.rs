//! Octonionic polynomials `p(q) = a_0 + q a_1 + ... + q^n a_n` with the
//! coefficients written on the right.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::octonion::{ImaginaryUnit, Octonion, StructureTable};

/// Per-coordinate tolerance for deciding that a coefficient lies in `R + R I`.
pub const SLICE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("argument scale must be positive and finite, got {0}")]
    BadScale(f64),
    #[error("coefficient {index} is not in the slice of the given unit (off by {distance:e})")]
    OffSlice { index: usize, distance: f64 },
    #[error("polynomial has no coefficients")]
    Empty,
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },
    #[error("expected exactly one of \"coeffs\" or \"real_coeffs\"")]
    AmbiguousForm,
    #[error("invalid polynomial document: {0}")]
    Parse(String),
}

/// A polynomial over the octonions. Trailing zero coefficients are trimmed
/// exactly (no tolerance), so the degree is the index of the last nonzero
/// coefficient. The zero polynomial is stored as `[0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct OctPolynomial {
    coeffs: Vec<Octonion>,
}

impl OctPolynomial {
    pub fn new(mut coeffs: Vec<Octonion>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Octonion::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Octonion::ZERO);
        }
        OctPolynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&r| Octonion::real(r)).collect())
    }

    pub fn constant(c: Octonion) -> Self {
        Self::new(vec![c])
    }

    /// `q^k a`.
    pub fn monomial(k: usize, a: Octonion) -> Self {
        let mut c = vec![Octonion::ZERO; k + 1];
        c[k] = a;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Octonion] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Octonion {
        *self.coeffs.last().expect("never empty")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Octonion::is_real)
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(Octonion::norm).fold(0.0, f64::max)
    }

    /// `sum_k |a_k| r^k`, the natural size of `p(q)` on `|q| = r`.
    pub fn modulus_scale(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
    }

    pub fn eval(&self, q: &Octonion) -> Octonion {
        self.eval_with(q, StructureTable::corrected())
    }

    /// `sum_k q^k a_k` with `q^k` formed first and multiplied by `a_k` on the
    /// right. Horner's rule is not used: it regroups products, which is not
    /// allowed without associativity.
    pub fn eval_with(&self, q: &Octonion, table: &StructureTable) -> Octonion {
        let mut power = Octonion::ONE;
        let mut acc = Octonion::ZERO;
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = table.mul(q, &power);
            }
            acc += table.mul(&power, a);
        }
        acc
    }

    pub fn star(&self, other: &OctPolynomial) -> OctPolynomial {
        self.star_with(other, StructureTable::corrected())
    }

    /// Regular product: `c_m = sum_{k=0}^{m} a_k b_{m-k}`.
    pub fn star_with(&self, other: &OctPolynomial, table: &StructureTable) -> OctPolynomial {
        let (a, b) = (&self.coeffs, &other.coeffs);
        let mut out = vec![Octonion::ZERO; a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                out[i + j] += table.mul(ai, bj);
            }
        }
        OctPolynomial::new(out)
    }

    /// The polynomial `1 - q`.
    pub fn one_minus_q() -> OctPolynomial {
        OctPolynomial::new(vec![Octonion::ONE, -Octonion::ONE])
    }

    /// `p * (1 - q)`, i.e. `(a_0, a_1 - a_0, ..., a_n - a_{n-1}, -a_n)`.
    pub fn one_minus_q_transform(&self) -> OctPolynomial {
        let c = &self.coeffs;
        let mut out = Vec::with_capacity(c.len() + 1);
        out.push(c[0]);
        for k in 1..c.len() {
            out.push(c[k] - c[k - 1]);
        }
        out.push(-self.leading());
        OctPolynomial::new(out)
    }

    /// `q^n p(1/q)`: the coefficient list reversed.
    pub fn reverse(&self) -> OctPolynomial {
        OctPolynomial::new(self.coeffs.iter().rev().copied().collect())
    }

    /// `p(q / a)`: coefficient `k` becomes `a_k a^{-k}`.
    pub fn scale_arg(&self, a: f64) -> Result<OctPolynomial, PolyError> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(PolyError::BadScale(a));
        }
        let mut factor = 1.0;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(*c * factor);
            factor /= a;
        }
        Ok(OctPolynomial::new(out))
    }

    /// Restriction to the complex line `R + R I`. Every coefficient must lie
    /// on that line to within [`SLICE_TOL`] per coordinate.
    pub fn restrict_to_slice(&self, unit: &ImaginaryUnit) -> Result<SlicePolynomial, PolyError> {
        let u = unit.as_octonion();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (index, a) in self.coeffs.iter().enumerate() {
            let im = a.imag();
            let y = im.dot(&u);
            let rest = im - u * y;
            let distance = rest.coords().iter().fold(0.0f64, |m, x| m.max(x.abs()));
            if distance > SLICE_TOL {
                return Err(PolyError::OffSlice { index, distance });
            }
            coeffs.push(Complex64::new(a.re(), y));
        }
        Ok(SlicePolynomial { coeffs, unit: *unit })
    }
}

/// Restriction of an [`OctPolynomial`] to a slice `L_I`, written as a complex
/// polynomial via `x + y I <-> x + i y`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlicePolynomial {
    pub coeffs: Vec<Complex64>,
    pub unit: ImaginaryUnit,
}

impl SlicePolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Maps `x + iy` to `x + y I`.
    pub fn embed(&self, z: Complex64) -> Octonion {
        self.unit.point(z.re, z.im)
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coeffs: Option<Vec<[f64; 8]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    real_coeffs: Option<Vec<f64>>,
}

/// Parses `{"coeffs": [[8 reals], ...]}` or `{"real_coeffs": [r0, ...]}`,
/// ascending degree. Fields other than these two are ignored.
pub fn parse_polynomial_json(text: &str) -> Result<OctPolynomial, PolyError> {
    let doc: PolynomialDoc = serde_json::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))?;
    let coeffs: Vec<Octonion> = match (doc.coeffs, doc.real_coeffs) {
        (Some(c), None) => c
            .into_iter()
            .enumerate()
            .map(|(index, x)| Octonion::new(x).map_err(|_| PolyError::NonFinite { index }))
            .collect::<Result<_, _>>()?,
        (None, Some(r)) => r.into_iter().map(Octonion::real).collect(),
        _ => return Err(PolyError::AmbiguousForm),
    };
    if coeffs.is_empty() {
        return Err(PolyError::Empty);
    }
    Ok(OctPolynomial::new(coeffs))
}

/// Writes the `{"coeffs": ...}` form.
pub fn polynomial_to_json(p: &OctPolynomial) -> String {
    let doc = PolynomialDoc { coeffs: Some(p.coeffs.iter().map(|c| c.into_coords()).collect()), real_coeffs: None };
    serde_json::to_string(&doc).expect("finite floats serialize")
}
