//! Octonion arithmetic over `f64`.
//!
//! An [`Octonion`] is stored as its eight real coordinates in the basis
//! `1, e1, ..., e7`. Multiplication is table driven: every product goes
//! through a [`StructureTable`], and the operator `*` uses the table built
//! by Cayley-Dickson doubling (see [`StructureTable::corrected`]).

mod table;
mod validate;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use table::{
    cayley_dickson_mul, StructureTable, TableError, TableFlavor, Triple, CORRECTED_TRIPLES, PRINTED_TRIPLES,
};
pub use validate::{
    validate_table, validate_triples, CheckOutcome, CompositionWitness, ValidationReport, ValidationTolerances,
};

/// Tolerance used when a value is required to be a unit or purely imaginary.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("non-finite value in octonion arithmetic")]
    NonFinite,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("angle is undefined for a zero octonion")]
    ZeroAngle,
    #[error("not a purely imaginary nonzero octonion")]
    NotImaginary,
}

/// An element `x0 + x1 e1 + ... + x7 e7` of the octonions.
#[derive(Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion([f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    /// Builds an octonion from coordinates, rejecting NaN and infinities.
    pub fn new(coords: [f64; 8]) -> Result<Self, AlgebraError> {
        if coords.iter().all(|x| x.is_finite()) {
            Ok(Octonion(coords))
        } else {
            Err(AlgebraError::NonFinite)
        }
    }

    /// Internal constructor for values known to be finite.
    pub(crate) const fn from_coords(coords: [f64; 8]) -> Self {
        Octonion(coords)
    }

    pub const fn real(r: f64) -> Self {
        Octonion([r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    }

    /// The basis element `e_i` (`e_0 = 1`).
    ///
    /// Panics if `i > 7`.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index {i} out of range");
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion(c)
    }

    pub fn coords(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn into_coords(self) -> [f64; 8] {
        self.0
    }

    pub fn re(&self) -> f64 {
        self.0[0]
    }

    /// Imaginary part as an octonion with zero real coordinate.
    pub fn imag(&self) -> Octonion {
        let mut c = self.0;
        c[0] = 0.0;
        Octonion(c)
    }

    pub fn is_real(&self) -> bool {
        self.0[1..].iter().all(|&x| x == 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn conj(&self) -> Octonion {
        let mut c = self.0.map(|x| -x);
        c[0] = self.0[0];
        Octonion(c)
    }

    /// Euclidean inner product of the coordinate vectors in R^8.
    pub fn dot(&self, other: &Octonion) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// Squared norm, the sum of all eight squared coordinates.
    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        // hypot-style scaling keeps tiny and huge inputs from under/overflowing
        let m = self.0.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if m == 0.0 {
            return 0.0;
        }
        let s: f64 = self.0.iter().map(|x| (x / m) * (x / m)).sum();
        m * s.sqrt()
    }

    /// Sum of the absolute values of the imaginary coordinates.
    pub fn imag_l1(&self) -> f64 {
        self.0[1..].iter().map(|x| x.abs()).sum()
    }

    /// Real scaling that rejects a non-finite factor or result.
    pub fn scaled(&self, s: f64) -> Result<Octonion, AlgebraError> {
        let out = *self * s;
        if s.is_finite() && out.is_finite() {
            Ok(out)
        } else {
            Err(AlgebraError::NonFinite)
        }
    }

    /// `conj(a) / |a|^2`.
    pub fn inverse(&self) -> Result<Octonion, AlgebraError> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(AlgebraError::ZeroInverse);
        }
        let inv = self.conj() / n2;
        if inv.is_finite() {
            Ok(inv)
        } else {
            Err(AlgebraError::NonFinite)
        }
    }

    pub fn mul_with(&self, rhs: &Octonion, table: &StructureTable) -> Octonion {
        table.mul(self, rhs)
    }

    /// `q^k`, computed as `q (q (... q))`. Power associativity makes the
    /// grouping irrelevant for a composition table.
    pub fn pow_with(&self, k: u32, table: &StructureTable) -> Octonion {
        let mut acc = Octonion::ONE;
        for _ in 0..k {
            acc = table.mul(self, &acc);
        }
        acc
    }

    pub fn powi(&self, k: u32) -> Octonion {
        self.pow_with(k, StructureTable::corrected())
    }

    /// Angle between two nonzero octonions viewed as vectors in R^8.
    pub fn angle(&self, other: &Octonion) -> Result<f64, AlgebraError> {
        let (na, nb) = (self.norm(), other.norm());
        if na == 0.0 || nb == 0.0 {
            return Err(AlgebraError::ZeroAngle);
        }
        // Same angle as arccos of the normalized dot product, but accurate
        // near 0 and pi where arccos loses half the digits.
        let (u, v) = (self / na, other / nb);
        Ok(2.0 * (u - v).norm().atan2((u + v).norm()))
    }

    /// Splits `h1 + h2 e4` into its two quaternion halves over `1, e1, e2, e3`.
    pub fn to_quaternion_pair(&self) -> ([f64; 4], [f64; 4]) {
        let c = &self.0;
        ([c[0], c[1], c[2], c[3]], [c[4], c[5], c[6], c[7]])
    }

    pub fn from_quaternion_pair(h1: [f64; 4], h2: [f64; 4]) -> Octonion {
        Octonion([h1[0], h1[1], h1[2], h1[3], h2[0], h2[1], h2[2], h2[3]])
    }

    /// Four complex coordinates `(z0, z1, z2, z3)` with
    /// `x = z0 + z1 e2 + (z2 + z3 e2) e4`, each `z = a + b e1`.
    pub fn to_complex_quad(&self) -> [(f64, f64); 4] {
        let c = &self.0;
        // e3 = e1 e2, e7 = e3 e4, so the e1-partner of e2 is e3 and of e6 is e7.
        [(c[0], c[1]), (c[2], c[3]), (c[4], c[5]), (c[6], c[7])]
    }

    /// A standard-normal vector in R^8; used for random test inputs.
    pub fn random_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
        Octonion(std::array::from_fn(|_| rng.sample(StandardNormal)))
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion({:?})", self.0)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &x) in self.0.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if x < 0.0 { '-' } else { '+' })?;
            } else if x < 0.0 {
                write!(f, "-")?;
            }
            if i == 0 {
                write!(f, "{}", x.abs())?;
            } else if x.abs() == 1.0 {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{}e{i}", x.abs())?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl From<f64> for Octonion {
    fn from(r: f64) -> Self {
        Octonion::real(r)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(self.0.map(|x| -x))
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        Octonion(self.0.map(|x| x * s))
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, o: Octonion) -> Octonion {
        o * self
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;
    fn div(self, s: f64) -> Octonion {
        Octonion(self.0.map(|x| x / s))
    }
}

impl Div<f64> for &Octonion {
    type Output = Octonion;
    fn div(self, s: f64) -> Octonion {
        *self / s
    }
}

/// Octonion product under the default (Cayley-Dickson) table.
impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        StructureTable::corrected().mul(&self, &rhs)
    }
}

/// A purely imaginary unit octonion; every such `I` satisfies `I^2 = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ImaginaryUnit(Octonion);

impl ImaginaryUnit {
    /// Accepts an octonion that is already a purely imaginary unit (within
    /// [`UNIT_TOL`]) and renormalizes it exactly.
    pub fn new(o: Octonion) -> Result<Self, AlgebraError> {
        if o.re().abs() > UNIT_TOL || (o.norm() - 1.0).abs() > UNIT_TOL {
            return Err(AlgebraError::NotImaginary);
        }
        Self::from_direction(o)
    }

    /// Normalizes the imaginary part of `o`.
    pub fn from_direction(o: Octonion) -> Result<Self, AlgebraError> {
        let im = o.imag();
        let n = im.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(AlgebraError::NotImaginary);
        }
        Ok(ImaginaryUnit(im / n))
    }

    /// `e_i` for `1 <= i <= 7`.
    pub fn basis(i: usize) -> Self {
        assert!((1..8).contains(&i), "imaginary basis index {i} out of range");
        ImaginaryUnit(Octonion::basis(i))
    }

    /// Uniform sample from the unit sphere of imaginary octonions,
    /// deterministic in `seed`.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(&mut rng)
    }

    pub fn random_with<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let mut c = [0.0; 8];
            for x in c[1..].iter_mut() {
                *x = rng.sample(StandardNormal);
            }
            if let Ok(u) = Self::from_direction(Octonion(c)) {
                return u;
            }
        }
    }

    pub fn as_octonion(&self) -> Octonion {
        self.0
    }

    /// The point `x + y I` of the slice through this unit.
    pub fn point(&self, x: f64, y: f64) -> Octonion {
        Octonion::real(x) + self.0 * y
    }
}
