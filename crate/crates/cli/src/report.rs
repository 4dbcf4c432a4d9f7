use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Top-level JSON document written by `verify` and `grid`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ReportFile<I, R> {
    pub schema_version: String,
    /// Every parameter the run used, defaults included.
    pub invocation: I,
    pub results: Vec<R>,
}

impl<I, R> ReportFile<I, R> {
    pub fn new(invocation: I, results: Vec<R>) -> Self {
        Self { schema_version: SCHEMA_VERSION.to_string(), invocation, results }
    }
}
