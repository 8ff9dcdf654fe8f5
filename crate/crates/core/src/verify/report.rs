use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Value};

use crate::error::Error;
use crate::numerics::{format_sci, Real};

use super::{IdentityResult, Status};

/// An entry whose evaluation raised an error instead of producing residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct EntryFailure {
    pub id: String,
    pub label: String,
    pub status: Status,
    pub error: Error,
}

/// Outcome of a catalogue run, ordered by id.
#[derive(Debug, Clone)]
pub struct Report {
    pub digits: u32,
    pub results: Vec<IdentityResult>,
    pub errors: Vec<EntryFailure>,
    pub wall: Duration,
}

impl Report {
    pub fn total(&self) -> usize {
        self.results.len() + self.errors.len()
    }

    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.total() - self.passed()
    }

    /// Failed or errored entries of the given status.
    pub fn failed_with_status(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status && !r.passed()).count()
            + self.errors.iter().filter(|e| e.status == status).count()
    }

    /// Largest residual per status.
    pub fn worst_residuals(&self) -> BTreeMap<Status, Real> {
        let mut worst: BTreeMap<Status, Real> = BTreeMap::new();
        for r in &self.results {
            match worst.get(&r.status) {
                Some(w) if *w >= r.residual => {}
                _ => {
                    worst.insert(r.status, r.residual.clone());
                }
            }
        }
        worst
    }

    /// JSON array of results. Without `timing`, elapsed_ms is written as 0
    /// so that equal runs serialize identically.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut items: Vec<(String, Value)> =
            self.results.iter().map(|r| (r.id.clone(), result_json(r, self.digits, timing))).collect();
        for e in &self.errors {
            let v = json!({
                "id": e.id,
                "paper_eq": e.label,
                "lhs": Value::Null,
                "rhs": Value::Null,
                "residual": Value::Null,
                "tol": Value::Null,
                "status": e.status.to_string(),
                "elapsed_ms": 0,
                "passed": false,
                "error": e.error.to_string(),
            });
            items.push((e.id.clone(), v));
        }
        items.sort_by(|a, b| a.0.cmp(&b.0));
        Value::Array(items.into_iter().map(|(_, v)| v).collect())
    }

    /// Plain-text table followed by totals.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<40} {:<6} {:<20} {:<12} {:<12} {:<5}{}", "id", "eq", "status", "residual", "tol", "pass", if timing { "   ms" } else { "" });
        let mut rows: Vec<(String, String)> = self
            .results
            .iter()
            .map(|r| {
                let ms = if timing { format!(" {:>5}", r.elapsed.as_millis()) } else { String::new() };
                let row = format!(
                    "{:<40} {:<6} {:<20} {:<12} {:<12} {:<5}{}",
                    r.id,
                    r.label,
                    r.status.to_string(),
                    format_sci(&r.residual, 3),
                    format_sci(&r.tol, 1),
                    if r.passed() { "yes" } else { "NO" },
                    ms
                );
                (r.id.clone(), row)
            })
            .collect();
        for e in &self.errors {
            rows.push((e.id.clone(), format!("{:<40} {:<6} {:<20} error: {}", e.id, e.label, e.status.to_string(), e.error)));
        }
        rows.sort();
        for (_, row) in rows {
            let _ = writeln!(out, "{row}");
        }
        let _ = writeln!(out, "\n{} entries at {} digits: {} passed, {} failed", self.total(), self.digits, self.passed(), self.failed());
        for (status, w) in self.worst_residuals() {
            let _ = writeln!(out, "worst {status} residual: {}", format_sci(&w, 3));
        }
        if timing {
            let _ = writeln!(out, "wall time: {:.2} s", self.wall.as_secs_f64());
        }
        out
    }
}

fn result_json(r: &IdentityResult, digits: u32, timing: bool) -> Value {
    let sig = digits as usize;
    let mut v = json!({
        "id": r.id,
        "paper_eq": r.label,
        "lhs": format_sci(&r.lhs, sig),
        "rhs": format_sci(&r.rhs, sig),
        "residual": format_sci(&r.residual, 6),
        "tol": format_sci(&r.tol, 3),
        "status": r.status.to_string(),
        "elapsed_ms": if timing { r.elapsed.as_millis() as u64 } else { 0 },
        "passed": r.passed(),
    });
    if let Some(p) = &r.printed {
        v["printed_rhs"] = Value::String(format_sci(&p.value, sig));
        v["printed_residual"] = Value::String(format_sci(&p.residual, 6));
    }
    v
}
