//! Checks that a signed-triple table really defines a composition algebra.
//!
//! Structural checks (Fano pair coverage, antisymmetry of `psi`) run first.
//! An exact scan over products `(e_i + e_j)(e_k + e_l)` comes next because it
//! finds zero divisors deterministically. Randomized checks of norm
//! multiplicativity, the alternative laws and two-generator associativity
//! close the report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::table::check_structure;
use super::{Octonion, StructureTable, TableFlavor, Triple};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ValidationTolerances {
    pub composition: f64,
    pub alternative: f64,
    pub artin: f64,
}

impl Default for ValidationTolerances {
    fn default() -> Self {
        ValidationTolerances { composition: 1e-12, alternative: 1e-12, artin: 1e-11 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub samples: usize,
    /// Largest relative error seen (0 for purely structural checks).
    pub max_error: f64,
    pub tolerance: f64,
}

/// A pair whose product violates `|ab| = |a||b|`.
#[derive(Clone, Debug, Serialize)]
pub struct CompositionWitness {
    pub a: Octonion,
    pub b: Octonion,
    pub product: Octonion,
    pub product_norm: f64,
    pub norm_product: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub flavor: TableFlavor,
    pub triples: Vec<Triple>,
    pub passed: bool,
    pub structural_error: Option<String>,
    pub checks: Vec<CheckOutcome>,
    pub witness: Option<CompositionWitness>,
}

/// Validates a table with the default tolerances.
pub fn validate_table(table: &StructureTable, trials: usize, seed: u64) -> ValidationReport {
    run(table, trials, seed, &ValidationTolerances::default())
}

/// Validates raw triples. A structurally malformed list fails before any
/// sampling happens.
pub fn validate_triples(
    triples: &[Triple],
    flavor: TableFlavor,
    trials: usize,
    seed: u64,
    tol: &ValidationTolerances,
) -> ValidationReport {
    if let Err(e) = check_structure(triples) {
        return ValidationReport {
            flavor,
            triples: triples.to_vec(),
            passed: false,
            structural_error: Some(e.to_string()),
            checks: vec![CheckOutcome {
                name: "fano_pair_coverage",
                passed: false,
                samples: 0,
                max_error: 0.0,
                tolerance: 0.0,
            }],
            witness: None,
        };
    }
    let table = StructureTable::from_triples(triples, flavor).expect("structure already checked");
    run(&table, trials, seed, tol)
}

fn rel(err: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        err
    } else {
        err / scale
    }
}

fn run(table: &StructureTable, trials: usize, seed: u64, tol: &ValidationTolerances) -> ValidationReport {
    let mut checks = Vec::new();
    checks.push(CheckOutcome {
        name: "fano_pair_coverage",
        passed: check_structure(table.triples()).is_ok(),
        samples: 21,
        max_error: 0.0,
        tolerance: 0.0,
    });

    let mut antisym = true;
    for a in 1..8 {
        for b in 1..8 {
            for c in 1..8 {
                let p = table.psi(a, b, c);
                antisym &= p == -table.psi(b, a, c) && p == -table.psi(a, c, b);
            }
        }
    }
    checks.push(CheckOutcome {
        name: "total_antisymmetry",
        passed: antisym,
        samples: 343,
        max_error: 0.0,
        tolerance: 0.0,
    });

    let (scan, mut witness) = basis_pair_scan(table, tol.composition);
    checks.push(scan);

    if trials > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut max_comp = 0.0f64;
        let mut max_alt = 0.0f64;
        let mut max_artin = 0.0f64;
        for _ in 0..trials {
            let a = Octonion::random_gaussian(&mut rng);
            let b = Octonion::random_gaussian(&mut rng);
            let ab = table.mul(&a, &b);
            let np = a.norm() * b.norm();
            let err = rel((ab.norm() - np).abs(), np);
            if err > tol.composition && witness.is_none() {
                witness = Some(CompositionWitness { a, b, product: ab, product_norm: ab.norm(), norm_product: np });
            }
            max_comp = max_comp.max(err);

            let aa = table.mul(&a, &a);
            let bb = table.mul(&b, &b);
            let scale = a.norm_sqr() * b.norm();
            let left = table.mul(&aa, &b) - table.mul(&a, &ab);
            let right = table.mul(&ab, &b) - table.mul(&a, &bb);
            max_alt = max_alt.max(rel(left.norm(), scale));
            max_alt = max_alt.max(rel(right.norm(), a.norm() * b.norm_sqr()));

            let words = two_generator_words(table, &a, &b);
            let w: [Octonion; 3] = std::array::from_fn(|_| words[rng.random_range(0..words.len())]);
            let lhs = table.mul(&table.mul(&w[0], &w[1]), &w[2]);
            let rhs = table.mul(&w[0], &table.mul(&w[1], &w[2]));
            let scale = w[0].norm() * w[1].norm() * w[2].norm();
            max_artin = max_artin.max(rel((lhs - rhs).norm(), scale));
        }
        checks.push(CheckOutcome {
            name: "norm_multiplicativity",
            passed: max_comp <= tol.composition,
            samples: trials,
            max_error: max_comp,
            tolerance: tol.composition,
        });
        checks.push(CheckOutcome {
            name: "alternative_laws",
            passed: max_alt <= tol.alternative,
            samples: trials,
            max_error: max_alt,
            tolerance: tol.alternative,
        });
        checks.push(CheckOutcome {
            name: "two_generator_associativity",
            passed: max_artin <= tol.artin,
            samples: trials,
            max_error: max_artin,
            tolerance: tol.artin,
        });
    }

    ValidationReport {
        flavor: table.flavor(),
        triples: table.triples().to_vec(),
        passed: checks.iter().all(|c| c.passed),
        structural_error: None,
        checks,
        witness,
    }
}

/// All words of length 1..=3 in `a` and `b`, each evaluated left to right.
fn two_generator_words(table: &StructureTable, a: &Octonion, b: &Octonion) -> Vec<Octonion> {
    let mut words = vec![*a, *b];
    let mut last = words.clone();
    for _ in 1..3 {
        let next: Vec<Octonion> = last
            .iter()
            .flat_map(|w| [table.mul(w, a), table.mul(w, b)])
            .collect();
        words.extend_from_slice(&next);
        last = next;
    }
    words
}

/// Exact scan over `(e_i + e_j)(e_k + e_l)`, `1 <= i < j <= 7`,
/// `1 <= k < l <= 7`; the first composition failure becomes the witness.
fn basis_pair_scan(table: &StructureTable, tol: f64) -> (CheckOutcome, Option<CompositionWitness>) {
    let mut witness = None;
    let mut max_err = 0.0f64;
    let mut samples = 0;
    for i in 1..8 {
        for j in i + 1..8 {
            for k in 1..8 {
                for l in k + 1..8 {
                    let a = Octonion::basis(i) + Octonion::basis(j);
                    let b = Octonion::basis(k) + Octonion::basis(l);
                    let ab = table.mul(&a, &b);
                    let np = a.norm() * b.norm();
                    let err = rel((ab.norm() - np).abs(), np);
                    samples += 1;
                    if err > tol && witness.is_none() {
                        witness = Some(CompositionWitness {
                            a,
                            b,
                            product: ab,
                            product_norm: ab.norm(),
                            norm_product: np,
                        });
                    }
                    max_err = max_err.max(err);
                }
            }
        }
    }
    (
        CheckOutcome {
            name: "basis_pair_composition",
            passed: max_err <= tol,
            samples,
            max_error: max_err,
            tolerance: tol,
        },
        witness,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::{CORRECTED_TRIPLES, PRINTED_TRIPLES};

    #[test]
    fn corrected_table_passes() {
        let r = validate_table(StructureTable::corrected(), 2000, 1);
        assert!(r.passed, "{r:#?}");
        assert!(r.witness.is_none());
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn printed_table_fails_with_exact_witness() {
        let r = validate_table(StructureTable::printed(), 100, 1);
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!(w.a, Octonion::basis(1) + Octonion::basis(2));
        assert_eq!(w.b, Octonion::basis(4) + Octonion::basis(7));
        assert_eq!(w.product, Octonion::ZERO);
        assert_eq!(w.product_norm, 0.0);
        assert!((w.norm_product - 2.0).abs() < 1e-15);
    }

    #[test]
    fn zero_trials_runs_structural_checks_only() {
        let r = validate_table(StructureTable::corrected(), 0, 0);
        assert!(r.passed);
        assert_eq!(r.checks.len(), 3);
    }

    #[test]
    fn missing_pair_fails_before_sampling() {
        let mut t = CORRECTED_TRIPLES.to_vec();
        t.pop();
        let r = validate_triples(&t, TableFlavor::Custom, 1000, 0, &ValidationTolerances::default());
        assert!(!r.passed);
        assert!(r.structural_error.is_some());
        assert_eq!(r.checks.len(), 1);

        let r = validate_triples(&PRINTED_TRIPLES, TableFlavor::Printed, 10, 0, &ValidationTolerances::default());
        assert!(r.structural_error.is_none());
        assert!(!r.passed);
    }
}
