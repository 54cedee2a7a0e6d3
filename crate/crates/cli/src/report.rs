use std::fmt::Write as _;

use coalc::format::{to_value, StructureFile};
use coalc::{DenseTensor, Rational, ValidationReport};
use serde_json::{json, Map, Value};

/// Most violations listed in one report; the full count is always given.
const MAX_LISTED: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid,
    Holds,
    Violated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Valid => "valid",
            Verdict::Invalid => "invalid",
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Valid | Verdict::Holds => 0,
            Verdict::Invalid | Verdict::Violated => 1,
        }
    }

    pub fn validity(ok: bool) -> Self {
        if ok {
            Verdict::Valid
        } else {
            Verdict::Invalid
        }
    }

    pub fn truth(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }
}

pub struct Report {
    pub command: String,
    pub inputs: Vec<Value>,
    pub verdict: Verdict,
    pub details: Map<String, Value>,
    brief: bool,
}

impl Report {
    pub fn new(command: impl Into<String>, verdict: Verdict) -> Self {
        let brief = std::env::var("COALC_REPORT").is_ok_and(|v| v == "brief");
        Self {
            command: command.into(),
            inputs: Vec::new(),
            verdict,
            details: Map::new(),
            brief,
        }
    }

    pub fn input(mut self, arg: &str, kind: &str, name: &str) -> Self {
        self.inputs.push(json!({"arg": arg, "kind": kind, "name": name}));
        self
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// Bulky details (bases, full structures) are dropped when
    /// `COALC_REPORT=brief`.
    pub fn bulky(self, key: &str, value: impl Into<Value>) -> Self {
        if self.brief {
            self
        } else {
            self.detail(key, value)
        }
    }

    pub fn violations(mut self, report: &ValidationReport) -> Self {
        let listed: Vec<Value> = report
            .violations
            .iter()
            .take(MAX_LISTED)
            .map(|v| {
                json!({
                    "axiom": v.axiom,
                    "index": v.index,
                    "lhs": rat(&v.lhs),
                    "rhs": rat(&v.rhs),
                })
            })
            .collect();
        let total = report.violations.len()
            + self.details.get("violation_count").and_then(Value::as_u64).unwrap_or(0) as usize;
        let entry = self
            .details
            .entry("violations")
            .or_insert_with(|| Value::Array(Vec::new()));
        if let Value::Array(list) = entry {
            list.extend(listed);
            list.truncate(MAX_LISTED);
        }
        self.details.insert("violation_count".into(), total.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict.as_str(),
            "details": self.details,
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serialisable");
        s.push('\n');
        s
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command  {}", self.command);
        for i in &self.inputs {
            let _ = writeln!(
                out,
                "input    {} ({} {})",
                i["arg"].as_str().unwrap_or(""),
                i["kind"].as_str().unwrap_or(""),
                i["name"].as_str().unwrap_or("")
            );
        }
        let _ = writeln!(out, "verdict  {}", self.verdict.as_str());
        let width = self.details.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.details {
            let text = match v {
                Value::String(s) => s.clone(),
                Value::Array(items) if items.is_empty() => "none".to_string(),
                Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
                    items.iter().map(compact).collect::<Vec<_>>().join(" ")
                }
                Value::Array(items) => {
                    let mut s = String::new();
                    for item in items {
                        let _ = write!(s, "\n  {:width$}  {}", "", compact(item));
                    }
                    s
                }
                other => compact(other),
            };
            let _ = writeln!(out, "{k:width$}  {text}");
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn rat(r: &Rational) -> String {
    coalc::rational::to_canonical_string(r)
}

/// Sparse `[i, j, …, "p/q"]` entry list.
pub fn sparse(t: &DenseTensor) -> Value {
    Value::Array(
        t.nonzeros()
            .map(|(idx, v)| {
                let mut e: Vec<Value> = idx.into_iter().map(Value::from).collect();
                e.push(rat(v).into());
                Value::Array(e)
            })
            .collect(),
    )
}

pub fn structure(file: &StructureFile) -> Value {
    to_value(file)
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::from(rat(r))).collect())
}
