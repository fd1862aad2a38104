//! Outcome of a verification run, serialized with a stable field order.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    KnownFalseConfirmed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    XSeries,
    QSeries,
    Finite,
    Congruence,
    NumericBound,
    KnownFalse,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::XSeries => "x-series",
            Mode::QSeries => "q-series",
            Mode::Finite => "finite",
            Mode::Congruence => "congruence",
            Mode::NumericBound => "numeric-bound",
            Mode::KnownFalse => "known-false",
        }
    }
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::KnownFalseConfirmed => "known-false-confirmed",
        }
    }
}

/// `pass` carries the verified range in `witness["range"]`; `fail` carries
/// the first failing location and the values seen there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub status: Status,
    pub mode: Mode,
    pub params: BTreeMap<String, Value>,
    pub first_failure: Option<String>,
    pub witness: BTreeMap<String, String>,
    pub elapsed_ms: Option<u64>,
}

impl Verdict {
    pub fn new(id: &str, mode: Mode) -> Self {
        Verdict {
            id: id.to_string(),
            status: Status::Pass,
            mode,
            params: BTreeMap::new(),
            first_failure: None,
            witness: BTreeMap::new(),
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn passed(mut self, range: impl Into<String>) -> Self {
        self.status = Status::Pass;
        self.first_failure = None;
        self.witness = BTreeMap::from([("range".to_string(), range.into())]);
        self
    }

    pub fn failed<K: Into<String>, V: ToString>(
        mut self,
        at: impl Into<String>,
        witness: impl IntoIterator<Item = (K, V)>,
    ) -> Self {
        self.status = Status::Fail;
        self.first_failure = Some(at.into());
        self.witness = witness.into_iter().map(|(k, v)| (k.into(), v.to_string())).collect();
        self
    }

    /// Pass, or a known-false record failing exactly where recorded.
    pub fn is_ok(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines sub-checks: the first failing one wins, otherwise `self`.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.is_pass() {
            next()
        } else {
            self
        }
    }
}
