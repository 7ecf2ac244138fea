use std::fmt::Display;

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of checking one identity instance: both sides rendered exactly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub parameters: Map<String, Value>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl IdentityReport {
    pub fn compare<T: PartialEq + Display>(identity: &str, lhs: T, rhs: T) -> Self {
        let pass = lhs == rhs;
        IdentityReport {
            identity: identity.to_owned(),
            parameters: Map::new(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
            skipped: None,
        }
    }

    /// A check that was refused (work bound, size guard) rather than run.
    pub fn skipped(identity: &str, reason: impl Into<String>) -> Self {
        IdentityReport {
            identity: identity.to_owned(),
            parameters: Map::new(),
            lhs: String::new(),
            rhs: String::new(),
            pass: false,
            skipped: Some(reason.into()),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn failed(&self) -> bool {
        !self.pass && self.skipped.is_none()
    }
}

/// Reports as a JSON array.
pub fn to_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string(reports).expect("reports serialize")
}
