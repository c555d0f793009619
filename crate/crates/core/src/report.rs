//! Check results and the versioned report format emitted by the CLI.

use serde::{Deserialize, Serialize};

/// Bumped whenever a field is removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of one named identity or constraint check.
///
/// A failed report always carries a witness: the first basis element (or
/// index pattern) on which the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub statement: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl IdentityReport {
    pub fn pass(name: impl Into<String>, statement: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            statement: statement.into(),
            passed: true,
            max_degree: None,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        statement: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            statement: statement.into(),
            passed: false,
            max_degree: None,
            witness: Some(witness.into()),
            detail: None,
        }
    }

    pub fn from_outcome(
        name: impl Into<String>,
        statement: impl Into<String>,
        failure: Option<String>,
    ) -> Self {
        match failure {
            None => Self::pass(name, statement),
            Some(w) => Self::fail(name, statement, w),
        }
    }

    pub fn with_max_degree(mut self, degree: usize) -> Self {
        self.max_degree = Some(degree);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn status_word(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Accumulates sub-checks of one identity and keeps the first failure.
#[derive(Debug)]
pub(crate) struct CheckBuilder {
    name: String,
    statement: String,
    failure: Option<(String, String)>,
    max_degree: Option<usize>,
}

impl CheckBuilder {
    pub fn new(name: &str, statement: &str) -> Self {
        Self {
            name: name.to_string(),
            statement: statement.to_string(),
            failure: None,
            max_degree: None,
        }
    }

    pub fn fail(&mut self, witness: impl Into<String>, detail: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some((witness.into(), detail.into()));
        }
    }

    pub fn max_degree(&mut self, degree: usize) {
        self.max_degree = Some(self.max_degree.map_or(degree, |d| d.max(degree)));
    }

    pub fn finish(self) -> IdentityReport {
        let mut report = match self.failure {
            None => IdentityReport::pass(self.name, self.statement),
            Some((witness, detail)) => {
                IdentityReport::fail(self.name, self.statement, witness).with_detail(detail)
            }
        };
        report.max_degree = self.max_degree;
        report
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Top-level report of one CLI invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    pub checks: Vec<IdentityReport>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub betti: Option<BettiSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub homology: Option<HomologySummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub so41: Option<So41Summary>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub s_k_ranks: Vec<SkRankSummary>,
    pub status: Status,
}

impl Report {
    pub fn new(command: impl Into<String>, n: Option<usize>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            n,
            checks: Vec::new(),
            warnings: Vec::new(),
            betti: None,
            homology: None,
            so41: None,
            s_k_ranks: Vec::new(),
            status: Status::Pass,
        }
    }

    /// Recomputes `status` from the checks; in strict mode warnings fail too.
    pub fn finalize(&mut self, strict: bool) {
        if strict {
            for w in &self.warnings {
                self.checks
                    .push(IdentityReport::fail("strict_warning", "no warnings in strict mode", w));
            }
        }
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.status = if self.checks.iter().all(|c| c.passed) {
            Status::Pass
        } else {
            Status::Fail
        };
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `value ≥ required`, with `margin = value − required`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarginEntry {
    pub k: usize,
    pub value: u64,
    pub required: u64,
    pub margin: i64,
    pub passed: bool,
}

/// `value mod modulus`; passes when the residue is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityEntry {
    pub k: usize,
    pub value: u64,
    pub modulus: u64,
    pub residue: u64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSummary {
    pub n: usize,
    pub horizontal: Vec<u64>,
    pub betti: Vec<u64>,
    pub series: String,
    pub divisibility: Vec<DivisibilityEntry>,
    pub bounds: Vec<MarginEntry>,
    pub horizontal_divisibility: Vec<DivisibilityEntry>,
    pub horizontal_bounds: Vec<MarginEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: usize,
    pub cells: usize,
    pub boundary_rank: usize,
    pub betti: usize,
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub coefficients: String,
    pub degrees: Vec<DegreeHomology>,
    pub betti: Vec<usize>,
    pub oracle_horizontal: Vec<u64>,
    pub oracle_betti: Vec<u64>,
    pub euler_characteristic: i64,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheckSummary {
    pub left: String,
    pub right: String,
    pub bracket: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct So41Summary {
    pub span_rank: usize,
    pub image_rank: usize,
    pub pairs: Vec<PairCheckSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkRankSummary {
    pub n: usize,
    pub k: usize,
    pub rank: usize,
    pub expected: u64,
    pub leading_blades_distinct: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_report_carries_witness() {
        let r = IdentityReport::from_outcome("x", "a = b", Some("e0".into()));
        assert!(!r.passed);
        assert_eq!(r.witness.as_deref(), Some("e0"));
    }

    #[test]
    fn builder_keeps_first_failure() {
        let mut b = CheckBuilder::new("x", "a = b");
        b.fail("first", "d1");
        b.fail("second", "d2");
        b.max_degree(3);
        let r = b.finish();
        assert_eq!(r.witness.as_deref(), Some("first"));
        assert_eq!(r.max_degree, Some(3));
    }

    #[test]
    fn strict_turns_warnings_into_failures() {
        let mut r = Report::new("betti", Some(1));
        r.checks.push(IdentityReport::pass("a", "a"));
        r.warnings.push("w".into());
        r.finalize(false);
        assert!(r.passed());
        r.finalize(true);
        assert!(!r.passed());
    }
}
