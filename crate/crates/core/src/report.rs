//! Report records shared by validators, pipelines and oracles.

use serde::Serialize;

/// Outcome of one axiom or identity, evaluated over a finite set of cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub failures: u64,
    /// First failing case, when any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Accumulates cases for a single [`CheckResult`].
#[derive(Debug)]
pub struct Checker {
    name: String,
    cases: u64,
    failures: u64,
    witness: Option<String>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Checker { name: name.into(), cases: 0, failures: 0, witness: None }
    }

    /// Records one case; `witness` is only evaluated for the first failure.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.failures == 0,
            cases: self.cases,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Checker) {
        self.checks.push(c.finish());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub degree: usize,
    pub dim: usize,
}

/// Homology or cohomology dimensions of one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub complex: String,
    pub field: String,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn new(complex: impl Into<String>, field: impl Into<String>, dims: &[usize]) -> Self {
        BettiTable {
            complex: complex.into(),
            field: field.into(),
            entries: dims.iter().enumerate().map(|(degree, &dim)| BettiEntry { degree, dim }).collect(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.dim).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub oracle: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    pub tables: Vec<BettiTable>,
    pub notes: Vec<String>,
}

impl OracleReport {
    pub fn new(oracle: impl Into<String>) -> Self {
        OracleReport {
            oracle: oracle.into(),
            passed: true,
            checks: Vec::new(),
            tables: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Checker) {
        self.push_result(c.finish());
    }

    pub fn push_result(&mut self, r: CheckResult) {
        self.passed &= r.passed;
        self.checks.push(r);
    }

    /// Records a single boolean fact.
    pub fn assert(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let mut c = Checker::new(name);
        c.case(ok, witness);
        self.push(c);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}
