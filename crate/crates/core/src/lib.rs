//! Octonion arithmetic, octonionic polynomials with the regular product,
//! Enestrom-Kakeya type zero bounds, and a numerical zero locator that
//! checks those bounds against actual zeros.

pub mod bounds;
pub mod octonion;
pub mod poly;
pub mod zerosearch;

pub use bounds::{BoundKind, BoundResult, TheoremId};
pub use octonion::{ImaginaryUnit, Octonion, StructureTable, TableFlavor};
pub use poly::OctPolynomial;
