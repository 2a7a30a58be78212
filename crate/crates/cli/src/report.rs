//! Machine-readable pass/fail records.

use serde::Serialize;
use serde_json::Value;
use std::time::Instant;

/// One verification result. The pass flag is derivable from the evidence
/// payload alone, so reports can be audited without re-running the check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    pub evidence: Value,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn new(
        check: &str,
        params: Value,
        pass: bool,
        evidence: Value,
        started: Instant,
    ) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            params,
            pass,
            evidence,
            runtime_ms: started.elapsed().as_millis() as u64,
        }
    }

    /// Stable sort key: check id, then canonical parameter rendering.
    pub fn sort_key(&self) -> (String, String) {
        (self.check.clone(), self.params.to_string())
    }

    pub fn human_line(&self) -> String {
        format!(
            "{} {} {} ({} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.params,
            self.runtime_ms
        )
    }
}

/// Sort reports into their canonical order (order-independent set semantics).
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by_key(|r| r.sort_key());
}
