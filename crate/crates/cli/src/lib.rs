//! Command-line front end: bounds, verification, the algebra self-test and
//! random test families. Reports are JSON on stdout, diagnostics on stderr.

pub mod families;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use octoek::bounds::{best_bound, BoundParameters};
use octoek::octonion::validate_table;
use octoek::poly::{parse_polynomial_json, polynomial_to_json};
use octoek::zerosearch::{multistart_verify, SearchConfig, VerificationStatus, DEFAULT_CERTIFY_TOL};
use octoek::{BoundKind, BoundResult, OctPolynomial, StructureTable, TableFlavor, TheoremId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use families::{sample_checked, Family};
use report::{sha256_hex, RunReport, Verification};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NO_BOUND: i32 = 2;
pub const EXIT_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "octoek", version, about = "Zero bounds for octonionic polynomials")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableArg {
    Corrected,
    Paper,
}

impl TableArg {
    fn table(self) -> &'static StructureTable {
        match self {
            TableArg::Corrected => StructureTable::corrected(),
            TableArg::Paper => StructureTable::printed(),
        }
    }

    fn flavor(self) -> TableFlavor {
        self.table().flavor()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    All,
    Ek,
    Moduli,
    Angle,
    Realpart,
    Exclusion,
}

impl TheoremArg {
    fn selects(self, t: TheoremId) -> bool {
        match self {
            TheoremArg::All => true,
            TheoremArg::Ek => t == TheoremId::Ek,
            TheoremArg::Moduli => t == TheoremId::Moduli,
            TheoremArg::Angle => t == TheoremId::Angle,
            TheoremArg::Realpart => t == TheoremId::Realpart,
            TheoremArg::Exclusion => t == TheoremId::Exclusion,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every theorem's hypotheses and print the resulting radii.
    Bound {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        theorem: TheoremArg,
        /// Recorded in the report; bounds use only coefficient moduli,
        /// angles and real parts, never products.
        #[arg(long, value_enum, default_value = "corrected")]
        table: TableArg,
    },
    /// Search for zeros that contradict any applicable bound.
    Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 500)]
        starts: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Search out to this multiple of each inclusion radius.
        #[arg(long = "radius-mult", default_value_t = 1.5)]
        radius_mult: f64,
        /// Residual threshold for accepting a zero, scaled by max(1, max |a_k|).
        #[arg(long, default_value_t = DEFAULT_CERTIFY_TOL)]
        tol: f64,
    },
    /// Validate a multiplication table.
    Selftest {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "corrected")]
        table: TableArg,
    },
    /// Write random polynomial files satisfying a theorem's hypotheses.
    Random {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// An error that ends the run with exit code 1.
#[derive(Debug)]
pub struct InputError(pub String);

fn entropy_seed() -> u64 {
    rand::rng().random()
}

/// Extra bounds a fixture can carry alongside its coefficients, for
/// exercising the verifier with radii known to be wrong.
#[derive(Deserialize)]
struct Fixture {
    #[serde(default)]
    injected_bounds: Vec<InjectedBound>,
}

#[derive(Deserialize)]
struct InjectedBound {
    theorem: String,
    kind: String,
    radius: f64,
}

fn parse_injected(text: &str) -> Result<Vec<BoundResult>, String> {
    let fixture: Fixture = serde_json::from_str(text).map_err(|e| e.to_string())?;
    fixture
        .injected_bounds
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            let theorem = TheoremId::ALL
                .into_iter()
                .find(|t| t.as_str() == b.theorem)
                .ok_or_else(|| format!("injected_bounds[{i}].theorem: unknown theorem {:?}", b.theorem))?;
            let kind = match b.kind.as_str() {
                "inclusion" => BoundKind::Inclusion,
                "exclusion" => BoundKind::Exclusion,
                other => return Err(format!("injected_bounds[{i}].kind: expected inclusion or exclusion, got {other:?}")),
            };
            if !(b.radius.is_finite() && b.radius > 0.0) {
                return Err(format!("injected_bounds[{i}].radius: must be positive, got {}", b.radius));
            }
            Ok(BoundResult { theorem, kind, radius: b.radius, parameters: BoundParameters::default() })
        })
        .collect()
}

struct Input {
    poly: OctPolynomial,
    digest: String,
    injected: Vec<BoundResult>,
}

fn read_input(path: &Path) -> Result<Input, InputError> {
    let fail = |msg: String| InputError(format!("{}: {msg}", path.display()));
    let bytes = fs::read(path).map_err(|e| fail(e.to_string()))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| fail(e.to_string()))?;
    let poly = parse_polynomial_json(text).map_err(|e| fail(e.to_string()))?;
    let injected = parse_injected(text).map_err(fail)?;
    Ok(Input { poly, digest: sha256_hex(&bytes), injected })
}

fn cmd_bound(input: &Path, theorem: TheoremArg, table: TableArg) -> Result<(RunReport, i32), InputError> {
    let Input { poly, digest, .. } = read_input(input)?;
    let best = best_bound(&poly).map_err(|e| InputError(format!("{}: {e}", input.display())))?;
    let mut report = RunReport::new("bound", table.flavor());
    report.input_sha256 = Some(digest);
    report.bounds = best.results.into_iter().filter(|b| theorem.selects(b.theorem)).collect();
    report.timing.bounds_evaluated = TheoremId::ALL.len();
    report.hypotheses = Some(best.hypotheses);
    let code = if report.bounds.is_empty() { EXIT_NO_BOUND } else { EXIT_OK };
    Ok((report, code))
}

fn cmd_verify(
    input: &Path,
    starts: usize,
    seed: Option<u64>,
    radius_mult: f64,
    tol: f64,
) -> Result<(RunReport, i32), InputError> {
    if !(radius_mult.is_finite() && radius_mult > 0.0) {
        return Err(InputError(format!("--radius-mult must be positive, got {radius_mult}")));
    }
    let Input { poly, digest, injected } = read_input(input)?;
    let best = best_bound(&poly).map_err(|e| InputError(format!("{}: {e}", input.display())))?;
    let seed = seed.unwrap_or_else(entropy_seed);
    let mut report = RunReport::new("verify", TableFlavor::Corrected);
    report.input_sha256 = Some(digest);
    report.seed = Some(seed);
    report.timing.bounds_evaluated = TheoremId::ALL.len();
    report.hypotheses = Some(best.hypotheses);
    report.bounds = best.results.into_iter().chain(injected).collect();
    if report.bounds.is_empty() {
        return Ok((report, EXIT_NO_BOUND));
    }
    let mut verdicts = Vec::with_capacity(report.bounds.len());
    for b in &report.bounds {
        let cfg = SearchConfig { certify_tol: tol, ..SearchConfig::new(starts, seed, radius_mult * b.radius) };
        let v = multistart_verify(&poly, b, &cfg).map_err(|e| InputError(e.to_string()))?;
        report.timing.minimization_starts += v.starts;
        report.timing.minimization_iterations += v.total_iterations;
        verdicts.push(v);
    }
    let status = if verdicts.iter().all(|v| v.is_consistent()) {
        VerificationStatus::Consistent
    } else {
        VerificationStatus::Violated
    };
    for v in verdicts.iter().filter(|v| !v.is_consistent()) {
        let c = v.offending.expect("violated verdicts carry a certificate");
        eprintln!(
            "violated: {} radius {} but zero at modulus {} (residual {:e})",
            v.theorem, v.radius, c.modulus, c.residual
        );
    }
    report.verification = Some(Verification { status, starts, radius_mult, certify_tol: tol, verdicts });
    let code = if status == VerificationStatus::Consistent { EXIT_OK } else { EXIT_FAILED };
    Ok((report, code))
}

fn cmd_selftest(trials: usize, seed: Option<u64>, table: TableArg) -> (RunReport, i32) {
    let seed = seed.unwrap_or_else(entropy_seed);
    let result = validate_table(table.table(), trials, seed);
    if let Some(w) = &result.witness {
        eprintln!(
            "composition fails: a = {:?}, b = {:?}, ab = {:?}, |ab| = {}, |a||b| = {}",
            w.a.coords(),
            w.b.coords(),
            w.product.coords(),
            w.product_norm,
            w.norm_product
        );
    }
    for c in result.checks.iter().filter(|c| !c.passed) {
        eprintln!("check {} failed: max error {:e} > {:e}", c.name, c.max_error, c.tolerance);
    }
    let mut report = RunReport::new("selftest", table.flavor());
    report.seed = Some(seed);
    report.timing.validation_samples = result.checks.iter().map(|c| c.samples).sum();
    let code = if result.passed { EXIT_OK } else { EXIT_FAILED };
    report.selftest = Some(result);
    (report, code)
}

fn real_json(p: &OctPolynomial) -> String {
    let c: Vec<f64> = p.coeffs().iter().map(|a| a.re()).collect();
    serde_json::json!({ "real_coeffs": c }).to_string()
}

fn cmd_random(family: Family, degree: usize, count: usize, seed: Option<u64>, out: &Path) -> Result<String, InputError> {
    if degree == 0 {
        return Err(InputError("--degree must be at least 1".into()));
    }
    if count == 0 {
        return Err(InputError("--count must be at least 1".into()));
    }
    let seed = seed.unwrap_or_else(entropy_seed);
    fs::create_dir_all(out).map_err(|e| InputError(format!("{}: {e}", out.display())))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut files = Vec::with_capacity(count);
    for i in 0..count {
        let p = sample_checked(family, degree, &mut rng).map_err(InputError)?;
        let text = if family == Family::Ek { real_json(&p) } else { polynomial_to_json(&p) };
        let path = out.join(format!("{family}_{degree}_{i:04}.json"));
        fs::write(&path, &text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        files.push(serde_json::json!({ "path": path.display().to_string(), "sha256": sha256_hex(text.as_bytes()) }));
    }
    let summary = serde_json::json!({
        "schema": report::SCHEMA_VERSION,
        "command": "random",
        "family": family.to_string(),
        "degree": degree,
        "count": count,
        "seed": seed,
        "files": files,
    });
    Ok(serde_json::to_string_pretty(&summary).expect("summary serializes"))
}

/// Parses `args`, runs the command, prints the report and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let started = Instant::now();
    let outcome = match cli.command {
        Command::Bound { input, theorem, table } => cmd_bound(&input, theorem, table).map(|(r, c)| (r.to_json(), c)),
        Command::Verify { input, starts, seed, radius_mult, tol } => {
            cmd_verify(&input, starts, seed, radius_mult, tol).map(|(r, c)| (r.to_json(), c))
        }
        Command::Selftest { trials, seed, table } => {
            let (r, c) = cmd_selftest(trials, seed, table);
            Ok((r.to_json(), c))
        }
        Command::Random { family, degree, count, seed, out } => {
            cmd_random(family, degree, count, seed, &out).map(|s| (s, EXIT_OK))
        }
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match outcome {
        Ok((json, code)) => {
            // a closed pipe is the reader's choice, not an error here
            let _ = writeln!(std::io::stdout().lock(), "{json}");
            code
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}
