//! The verification suite: a registry of named checks, each comparing a
//! computed value with the published one.

mod checks;

use std::time::Instant;

use serde::Serialize;

pub use checks::{default_checks, prose_verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Outcome {
    pub fn compare<T: std::fmt::Debug + PartialEq>(expected: T, computed: T) -> Self {
        Outcome {
            pass: expected == computed,
            expected: format!("{expected:?}"),
            computed: format!("{computed:?}"),
        }
    }

    pub fn failed(expected: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Outcome { expected: expected.into(), computed: format!("error: {err}"), pass: false }
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    /// Acceptance criterion the check belongs to.
    fn criterion(&self) -> u8;
    fn description(&self) -> &'static str;
    fn run(&self) -> Outcome;
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub criterion: u8,
    pub description: &'static str,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

pub struct Registry {
    checks: Vec<Box<dyn Check>>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry { checks: default_checks() }
    }
}

impl Registry {
    pub fn empty() -> Self {
        Registry { checks: Vec::new() }
    }

    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.push(check);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    /// Runs the selected checks (all when `only` is empty) on separate
    /// threads. Results keep registry order.
    pub fn run(&self, only: &[String], timing: bool) -> SuiteResult {
        let start = Instant::now();
        let selected: Vec<&dyn Check> = self
            .checks
            .iter()
            .map(|c| c.as_ref())
            .filter(|c| only.is_empty() || only.iter().any(|n| n == c.name()))
            .collect();
        let checks: Vec<CheckResult> = std::thread::scope(|s| {
            let handles: Vec<_> = selected
                .iter()
                .map(|&c| {
                    s.spawn(move || {
                        let t = Instant::now();
                        let outcome = c.run();
                        CheckResult {
                            name: c.name(),
                            criterion: c.criterion(),
                            description: c.description(),
                            outcome,
                            millis: timing.then(|| t.elapsed().as_millis()),
                        }
                    })
                })
                .collect();
            handles
                .into_iter()
                .zip(&selected)
                .map(|(h, c)| {
                    h.join().unwrap_or_else(|_| CheckResult {
                        name: c.name(),
                        criterion: c.criterion(),
                        description: c.description(),
                        outcome: Outcome::failed("completion", "check panicked"),
                        millis: None,
                    })
                })
                .collect()
        });
        let passed = checks.iter().filter(|c| c.outcome.pass).count();
        let failed = checks.len() - passed;
        SuiteResult {
            pass: failed == 0,
            passed,
            failed,
            checks,
            millis: timing.then(|| start.elapsed().as_millis()),
        }
    }
}
