use octoek::bounds::HypothesisReport;
use octoek::octonion::ValidationReport;
use octoek::zerosearch::{VerificationStatus, VerificationVerdict};
use octoek::{BoundResult, TableFlavor};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: &str = "octoek.run-report/1";

/// Deterministic work counters. Wall-clock time goes to stderr only, so
/// reports for identical runs are byte-identical.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub bounds_evaluated: usize,
    pub minimization_starts: usize,
    pub minimization_iterations: usize,
    pub validation_samples: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub status: VerificationStatus,
    pub starts: usize,
    pub radius_mult: f64,
    pub certify_tol: f64,
    pub verdicts: Vec<VerificationVerdict>,
}

/// Every field is always emitted; fields that do not apply to a command
/// are `null`.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input_sha256: Option<String>,
    /// Table flag as given: `corrected` or `paper`.
    pub table: String,
    pub seed: Option<u64>,
    pub hypotheses: Option<HypothesisReport>,
    pub bounds: Vec<BoundResult>,
    pub verification: Option<Verification>,
    pub selftest: Option<ValidationReport>,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(command: &'static str, table: TableFlavor) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command,
            input_sha256: None,
            table: table.to_string(),
            seed: None,
            hypotheses: None,
            bounds: Vec::new(),
            verification: None,
            selftest: None,
            timing: Timing::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn every_field_is_present() {
        let v: serde_json::Value = serde_json::from_str(&RunReport::new("bound", TableFlavor::Corrected).to_json()).unwrap();
        for key in
            ["schema", "command", "input_sha256", "table", "seed", "hypotheses", "bounds", "verification", "selftest", "timing"]
        {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["table"], "corrected");
    }
}
