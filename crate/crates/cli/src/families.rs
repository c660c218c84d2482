//! Random polynomials satisfying one theorem's hypotheses by construction.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use clap::ValueEnum;
use octoek::bounds::bound_for;
use octoek::{ImaginaryUnit, OctPolynomial, Octonion, TheoremId};
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Ek,
    Moduli,
    Angle,
    Realpart,
}

impl Family {
    pub fn theorem(self) -> TheoremId {
        match self {
            Family::Ek => TheoremId::Ek,
            Family::Moduli => TheoremId::Moduli,
            Family::Angle => TheoremId::Angle,
            Family::Realpart => TheoremId::Realpart,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.theorem().as_str())
    }
}

fn sorted_moduli<R: Rng>(rng: &mut R, count: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut m: Vec<f64> = (0..count).map(|_| rng.random_range(lo..hi)).collect();
    m.sort_by(f64::total_cmp);
    m
}

/// Coefficients for `family` at degree `n >= 1`.
pub fn sample<R: Rng>(family: Family, n: usize, rng: &mut R) -> OctPolynomial {
    match family {
        Family::Ek => OctPolynomial::from_real(&sorted_moduli(rng, n + 1, 0.1, 10.0)),
        Family::Moduli => {
            let moduli = sorted_moduli(rng, n + 1, 0.1, 10.0);
            OctPolynomial::new(
                moduli
                    .into_iter()
                    .map(|r| {
                        let d = loop {
                            let g = Octonion::random_gaussian(rng);
                            if g.norm() > 1e-6 {
                                break g;
                            }
                        };
                        d * (r / d.norm())
                    })
                    .collect(),
            )
        }
        Family::Angle => {
            // cone around beta = +-1 with half-angle below pi/2
            let beta = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            let alpha_max = rng.random_range(0.0..0.99 * FRAC_PI_2);
            let moduli = sorted_moduli(rng, n + 1, 0.1, 10.0);
            OctPolynomial::new(
                moduli
                    .into_iter()
                    .map(|r| {
                        let theta = rng.random_range(0.0..=alpha_max);
                        ImaginaryUnit::random_with(rng).point(beta * r * theta.cos(), r * theta.sin())
                    })
                    .collect(),
            )
        }
        Family::Realpart => {
            let mut re = sorted_moduli(rng, n + 1, 0.0, 5.0);
            re[n] += 0.1;
            OctPolynomial::new(
                re.into_iter()
                    .map(|x| Octonion::real(x) + Octonion::random_gaussian(rng).imag() * 0.5)
                    .collect(),
            )
        }
    }
}

/// Draws until the theorem's own hypothesis check accepts the sample.
pub fn sample_checked<R: Rng>(family: Family, n: usize, rng: &mut R) -> Result<OctPolynomial, String> {
    const MAX_TRIES: usize = 100;
    let mut last = String::new();
    for _ in 0..MAX_TRIES {
        let p = sample(family, n, rng);
        match bound_for(family.theorem(), &p) {
            Ok(_) => return Ok(p),
            Err(e) => last = e.to_string(),
        }
    }
    Err(format!("no admissible {family} polynomial of degree {n} after {MAX_TRIES} draws: {last}"))
}
