//! Machine-readable outcomes of identity checks.

use serde::Serialize;

/// One counterexample: the inputs that were substituted and the nonzero
/// residual they produced, all in canonical text form.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityFailure {
    pub inputs: Vec<(String, String)>,
    pub residual: String,
}

/// Outcome of checking one identity over a number of trials. The check
/// passes exactly when no failures were recorded; with exact arithmetic any
/// recorded failure is a certified counterexample.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>) -> Self {
        IdentityReport {
            name: name.into(),
            trials: 0,
            failures: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, inputs: Vec<(String, String)>, residual: String) {
        self.failures.push(IdentityFailure { inputs, residual });
    }
}

/// True when every report in the slice passes.
pub fn all_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::pass)
}
