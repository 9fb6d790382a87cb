//! Pass/fail records for identity checks.

use serde::Serialize;

use crate::exact::{multi_indices, Scalar};

/// First failing basis tuple of an identity and the residual there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Vec<String>,
    /// Lowest power of the deformation parameter `t` at which the residual
    /// is nonzero (0 for constant residuals).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Witness>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            witness,
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, None)
        }
    }
}

/// Ordered collection of named checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Evaluates `residual` on every multi-index of `shape` and records the
/// first one where it is not identically zero.
pub fn check_identity<S: Scalar>(
    name: &str,
    shape: &[usize],
    mut residual: impl FnMut(&[usize]) -> Vec<S>,
) -> CheckResult {
    for idx in multi_indices(shape) {
        let r = residual(&idx);
        if r.iter().any(|x| !x.is_zero()) {
            return CheckResult::fail(
                name,
                Some(Witness {
                    tuple: idx,
                    residual: r.iter().map(|x| x.to_string()).collect(),
                    t_order: r.iter().filter_map(|x| x.t_order()).min(),
                }),
            );
        }
    }
    CheckResult::pass(name)
}
