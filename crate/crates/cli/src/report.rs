use std::fmt;

use serde_json::{json, Value};

/// Outcome of one command: human text, machine JSON, and whether every
/// check it ran passed.
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(ok: bool, text: impl Into<String>, json: Value) -> Self {
        Report {
            ok,
            text: text.into(),
            json,
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut body = json!({ "v": 1, "ok": self.ok });
            if let (Value::Object(dst), Value::Object(src)) = (&mut body, &self.json) {
                for (k, v) in src {
                    dst.insert(k.clone(), v.clone());
                }
            }
            format!("{}\n", serde_json::to_string_pretty(&body).expect("serializable report"))
        } else {
            let mut t = self.text.clone();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
    }
}

/// Bad flags, unreadable input, or malformed files (exit code 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub type CmdResult = Result<Report, UsageError>;

pub fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
