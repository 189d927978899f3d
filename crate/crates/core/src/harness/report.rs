use crate::error::{Error, Result};

use super::{Axis, Report};

pub const CSV_HEADER: [&str; 13] =
    ["case", "n", "d", "r", "s", "p", "k", "modulus", "status", "reason", "witness", "strategy", "ms"];

/// Pretty-printed JSON array of reports.
pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_from_json(text: &str) -> Result<Vec<Report>> {
    serde_json::from_str(text).map_err(|e| Error::Constraint(format!("malformed report JSON: {e}")))
}

/// CSV with one row per report; strategy lines are joined with `"; "`.
pub fn to_csv(reports: &[Report]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    let opt = |v: Option<i64>| v.map(|v| v.to_string()).unwrap_or_default();
    for r in reports {
        let p = &r.params;
        let mut row = vec![r.case.clone(), p.n.to_string()];
        row.extend([Axis::D, Axis::R, Axis::S, Axis::P, Axis::K].map(|a| opt(p.get(a))));
        row.extend([
            r.modulus.clone(),
            r.status.to_string(),
            r.reason.clone().unwrap_or_default(),
            r.witness.clone().unwrap_or_default(),
            r.strategy.join("; "),
            r.ms.to_string(),
        ]);
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
