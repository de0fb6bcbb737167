use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

/// Instances of one module skipped for one reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipEntry {
    pub spec: String,
    pub reason: String,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Module expression of the failing instance.
    pub spec: String,
    pub instance: String,
    pub detail: String,
    /// Module the failure was first seen on, when shrinking moved it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shrunk_from: Option<String>,
    /// Set when an independent rerun on `spec` reproduces the failure.
    pub revalidated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    /// Instances whose hypotheses held.
    pub instances: u64,
    pub skipped: Vec<SkipEntry>,
    pub verdict: Verdict,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Wall time; zero unless timing was requested.
    pub millis: u64,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Pretty JSON; field order is fixed, so equal reports give equal bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn skipped_total(&self) -> u64 {
        self.skipped.iter().map(|s| s.count).sum()
    }

    /// One line: id, verdict, instance and skip counts.
    pub fn summary(&self) -> String {
        let v = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
        };
        format!(
            "{:<12} {:<8} instances={} skipped={} failures={}",
            self.theorem,
            v,
            self.instances,
            self.skipped_total(),
            self.failures
        )
    }
}
