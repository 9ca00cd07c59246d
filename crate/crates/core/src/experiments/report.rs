use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Observation on an open question; never fails a run.
    ReportOnly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub status: ClaimStatus,
    /// For report-only claims, whether the observation agreed with the
    /// statement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistent: Option<bool>,
    pub witness: Value,
}

impl Claim {
    pub fn hard(id: &str, anchor: &str, ok: bool, witness: Value) -> Self {
        Claim {
            id: id.to_owned(),
            anchor: anchor.to_owned(),
            status: if ok { ClaimStatus::Pass } else { ClaimStatus::Fail },
            consistent: None,
            witness,
        }
    }

    pub fn report(id: &str, anchor: &str, consistent: bool, witness: Value) -> Self {
        Claim {
            id: id.to_owned(),
            anchor: anchor.to_owned(),
            status: ClaimStatus::ReportOnly,
            consistent: Some(consistent),
            witness,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == ClaimStatus::Fail
    }
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub claims: Vec<Claim>,
    /// Wall time; left out of [`payload`](Self::payload).
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        VerifyReport {
            suite: suite.to_owned(),
            seed,
            claims: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn push(&mut self, claim: Claim) {
        if claim.failed() {
            log::warn!("{}: claim {} failed: {}", self.suite, claim.id, claim.witness);
        }
        self.claims.push(claim);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        for c in other.claims {
            self.push(c);
        }
    }

    pub fn finish(&mut self, started: Instant) {
        self.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    }

    /// No hard claim failed.
    pub fn passed(&self) -> bool {
        !self.claims.iter().any(Claim::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.failed())
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// The seed-determined part of the report, as canonical JSON.
    pub fn payload(&self) -> String {
        serde_json::to_string(&serde_json::json!({
            "suite": self.suite,
            "seed": self.seed,
            "claims": self.claims,
        }))
        .expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `id,status,consistent` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,id,status,consistent\n");
        for c in &self.claims {
            let status = match c.status {
                ClaimStatus::Pass => "pass",
                ClaimStatus::Fail => "fail",
                ClaimStatus::ReportOnly => "report-only",
            };
            let consistent = c.consistent.map_or(String::new(), |b| b.to_string());
            out.push_str(&format!("{},{},{},{}\n", self.suite, c.id, status, consistent));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn status_and_payload() {
        let mut r = VerifyReport::new("demo", 3);
        r.push(Claim::report("open", "somewhere", false, json!(null)));
        assert!(r.passed());
        r.push(Claim::hard("x", "somewhere", false, json!({"v": 1})));
        assert!(!r.passed());
        let mut again = r.clone();
        again.elapsed_ms = 99.0;
        assert_eq!(r.payload(), again.payload());
        let parsed: VerifyReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed, r);
        assert!(r.payload().contains("\"report-only\""));
        assert_eq!(r.to_csv().lines().count(), 3);
    }
}
