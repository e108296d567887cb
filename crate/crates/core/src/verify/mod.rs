//! Theorem audit: every checked identity becomes one [`AuditCase`], grouped
//! into suites that the command-line driver can run concurrently.

mod suites;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

pub use suites::{clifford_audit, peak_theorem_cases, peak_theorem_check, run_suite, Suite};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Agreement depends on the reading of `K_(1,P)`; never a failure.
    VariantDependent,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::VariantDependent => "variant-dependent",
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct AuditCase {
    /// Acceptance criterion this case belongs to.
    pub criterion: u8,
    pub theorem: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub details: String,
}

impl AuditCase {
    pub fn new(criterion: u8, theorem: &str, status: Status) -> Self {
        AuditCase {
            criterion,
            theorem: theorem.to_string(),
            params: BTreeMap::new(),
            status,
            details: String::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn details(mut self, text: impl Into<String>) -> Self {
        self.details = text.into();
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditConfig {
    pub max_n: usize,
    pub max_partition: usize,
    pub seed: u64,
    pub random_sets: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_n: 4,
            max_partition: 10,
            seed: 20240917,
            random_sets: 200,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AuditReport {
    pub cases: Vec<AuditCase>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub variant_dependent: usize,
}

impl AuditReport {
    /// Sorted so the report does not depend on how suites were scheduled.
    pub fn new(mut cases: Vec<AuditCase>) -> Self {
        cases.sort();
        AuditReport { cases }
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for case in &self.cases {
            match case.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::VariantDependent => c.variant_dependent += 1,
            }
        }
        c
    }

    pub fn has_failures(&self) -> bool {
        self.cases.iter().any(|c| c.status == Status::Fail)
    }

    pub fn criterion(&self, k: u8) -> impl Iterator<Item = &AuditCase> {
        self.cases.iter().filter(move |c| c.criterion == k)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            let params: Vec<String> = case
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!(
                "[{}] {:<18} {:<28} {}",
                case.criterion,
                case.status.name(),
                case.theorem,
                params.join(" ")
            ));
            if !case.details.is_empty() {
                out.push_str(&format!("  ({})", case.details));
            }
            out.push('\n');
        }
        let c = self.counts();
        out.push_str(&format!(
            "pass {} fail {} variant-dependent {}\n",
            c.pass, c.fail, c.variant_dependent
        ));
        out
    }
}

/// Every suite, one after the other.
pub fn run_all(config: &AuditConfig) -> AuditReport {
    AuditReport::new(
        Suite::ALL
            .iter()
            .flat_map(|&s| run_suite(s, config))
            .collect(),
    )
}
