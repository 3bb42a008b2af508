//! Machine-readable check results.

use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::permgroup::Permutation;

pub(crate) fn ser_perm<S: Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub(crate) fn ser_opt_perm<S: Serializer>(p: &Option<Permutation>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_some(&p.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Not decided, e.g. incomplete input data or a cap was hit.
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub status: Status,
    pub details: serde_json::Value,
    pub elapsed_ms: u64,
}

impl ClaimReport {
    /// Times `f`, which returns the status and a details object.
    pub fn run<F>(claim_id: impl Into<String>, f: F) -> ClaimReport
    where
        F: FnOnce() -> (Status, serde_json::Value),
    {
        let start = Instant::now();
        let (status, details) = f();
        ClaimReport {
            claim_id: claim_id.into(),
            status,
            details,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn line(&self) -> String {
        format!("{} {} ({} ms)", self.status, self.claim_id, self.elapsed_ms)
    }
}

/// Overall status: any FAIL fails, otherwise any SKIP skips.
pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
    let mut out = Status::Pass;
    for s in statuses {
        match s {
            Status::Fail => return Status::Fail,
            Status::Skip => out = Status::Skip,
            Status::Pass => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_shape() {
        let r = ClaimReport {
            claim_id: "x".into(),
            status: Status::Skip,
            details: serde_json::json!({"a": 1}),
            elapsed_ms: 3,
        };
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v, serde_json::json!({"claim_id": "x", "status": "SKIP", "details": {"a": 1}, "elapsed_ms": 3}));
    }

    #[test]
    fn combine_statuses() {
        assert_eq!(combine([Status::Pass, Status::Skip]), Status::Skip);
        assert_eq!(combine([Status::Skip, Status::Fail]), Status::Fail);
        assert_eq!(combine([]), Status::Pass);
    }
}
