//! JSON output conventions shared by the command-line tool.
//!
//! Payloads are plain `serde_json` documents. Rationals inside vectors are
//! written as `"p"` or `"p/q"` strings; everything else is an ordinary JSON
//! number. Object keys are emitted in sorted order, so output is stable.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;

/// Outcome class of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Infeasible,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Infeasible => 2,
            Status::Error => 1,
        }
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

/// `{"status": …, "payload": …}`.
pub fn envelope(status: Status, payload: Value) -> Value {
    json!({ "status": status, "payload": payload })
}

pub fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    } else {
        serde_json::to_string(v).expect("JSON values serialize")
    }
}
