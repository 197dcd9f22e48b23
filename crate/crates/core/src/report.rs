//! Verification records shared by the library checks and the command line.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub group: String,
    pub parameters: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, group: impl Into<String>, parameters: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            group: group.into(),
            parameters: parameters.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn with(mut self, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if !ok {
            self.status = Status::Fail;
            self.witness = Some(witness());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::passed)
}
