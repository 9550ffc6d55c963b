//! One JSON object per line; field order below is the canonical key order.

use cyclodet_core::{Identity, Quantity, Status, VerificationReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub identity: Identity,
    pub q: u64,
    pub p: u64,
    pub deg: u32,
    pub modulus: Vec<u32>,
    /// `pass`, `fail` or `skipped`.
    pub status: String,
    /// Why a record was skipped; null otherwise.
    pub reason: Option<String>,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub witness: Option<Quantity>,
    pub divergence_notes: Vec<String>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl ResultRecord {
    pub fn from_report(report: VerificationReport, seed: u64, keep_timing: bool) -> Self {
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            identity: report.identity,
            q: report.q,
            p: report.p,
            deg: report.n,
            modulus: report.modulus,
            status: report.status.label().to_string(),
            reason: report.status.reason().map(str::to_string),
            lhs: report.lhs,
            rhs: report.rhs,
            witness: report.witness,
            divergence_notes: report.notes,
            seed: report.seed.unwrap_or(seed),
            elapsed_ms: if keep_timing { report.elapsed_ms } else { 0 },
        }
    }

    pub fn status(&self) -> Status {
        match self.status.as_str() {
            "pass" => Status::Pass,
            "fail" => Status::Fail,
            _ => Status::Skipped(self.reason.clone().unwrap_or_default()),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == "fail"
    }

    pub fn key(&self) -> (Identity, u64) {
        (self.identity, self.q)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_line(line: &str) -> Result<Self, serde_json::Error> {
        let rec: ResultRecord = serde_json::from_str(line)?;
        if !matches!(rec.status.as_str(), "pass" | "fail" | "skipped") {
            return Err(serde::de::Error::custom(format!("unknown status {:?}", rec.status)));
        }
        Ok(rec)
    }
}

/// 0 when no record failed, 1 otherwise.
pub fn exit_code<'a>(records: impl IntoIterator<Item = &'a ResultRecord>) -> i32 {
    if records.into_iter().any(ResultRecord::is_fail) {
        1
    } else {
        0
    }
}
