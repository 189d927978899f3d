//! Case registry, sweeps over parameter grids, and the report model.

mod registry;
mod report;

pub use registry::{lookup, registry, Axis, CongruenceCase, Evaluation, Provenance};
pub use report::{reports_from_json, to_csv, to_json, CSV_HEADER};

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::congruence::{Status, VerifyOutcome};
use crate::error::{Error, Result};

/// One parameter tuple. `n` is always present; for integer cases it equals `p`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
}

impl Params {
    pub fn get(&self, axis: Axis) -> Option<i64> {
        match axis {
            Axis::N => Some(self.n),
            Axis::D => self.d,
            Axis::R => self.r,
            Axis::S => self.s,
            Axis::P => self.p,
            Axis::K => self.k,
        }
    }

    pub fn set(&mut self, axis: Axis, v: i64) {
        match axis {
            Axis::N => self.n = v,
            Axis::D => self.d = Some(v),
            Axis::R => self.r = Some(v),
            Axis::S => self.s = Some(v),
            Axis::P => {
                self.p = Some(v);
                self.n = v;
            }
            Axis::K => self.k = Some(v),
        }
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={}", self.n)?;
        for axis in [Axis::D, Axis::R, Axis::S, Axis::P, Axis::K] {
            if let Some(v) = self.get(axis) {
                write!(f, ", {}={v}", axis.name())?;
            }
        }
        Ok(())
    }
}

/// Replacement value lists per axis. Axes a case does not use are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    pub n: Option<Vec<i64>>,
    pub d: Option<Vec<i64>>,
    pub r: Option<Vec<i64>>,
    pub s: Option<Vec<i64>>,
    pub p: Option<Vec<i64>>,
    pub k: Option<Vec<i64>>,
    /// Adds `q` (or 1) to every expected side, to exercise failure paths.
    pub perturb_rhs: bool,
}

impl Overrides {
    pub fn get(&self, axis: Axis) -> Option<&[i64]> {
        match axis {
            Axis::N => self.n.as_deref(),
            Axis::D => self.d.as_deref(),
            Axis::R => self.r.as_deref(),
            Axis::S => self.s.as_deref(),
            Axis::P => self.p.as_deref(),
            Axis::K => self.k.as_deref(),
        }
    }

    pub fn set(&mut self, axis: Axis, values: Vec<i64>) {
        let slot = match axis {
            Axis::N => &mut self.n,
            Axis::D => &mut self.d,
            Axis::R => &mut self.r,
            Axis::S => &mut self.s,
            Axis::P => &mut self.p,
            Axis::K => &mut self.k,
        };
        *slot = Some(values);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub params: Params,
    pub modulus: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub strategy: Vec<String>,
    pub ms: u64,
}

impl Report {
    pub fn is_expected_skip(&self) -> bool {
        self.outcome().is_expected_skip()
    }

    pub fn outcome(&self) -> VerifyOutcome {
        VerifyOutcome {
            status: self.status,
            witness: self.witness.clone(),
            reason: self.reason.clone(),
            strategy: self.strategy.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Skips not explained by an out-of-domain parameter.
    pub unexpected_skips: usize,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Verified => s.verified += 1,
                Status::Failed => s.failed += 1,
                Status::Skipped => {
                    s.skipped += 1;
                    if !r.is_expected_skip() {
                        s.unexpected_skips += 1;
                    }
                }
            }
        }
        s
    }

    /// No failures and no unexplained skips.
    pub fn is_success(&self) -> bool {
        self.failed == 0 && self.unexpected_skips == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub reports: Vec<Report>,
    pub summary: Summary,
}

/// A generated tuple, or a partial tuple with the axis that had no value.
enum Item {
    Run(Params),
    Empty(Params, Axis),
}

fn expand(case: &CongruenceCase, overrides: &Overrides) -> Vec<Item> {
    let mut out = Vec::new();
    expand_from(case, overrides, 0, Params::default(), &mut out);
    out
}

fn expand_from(case: &CongruenceCase, o: &Overrides, i: usize, partial: Params, out: &mut Vec<Item>) {
    let Some(&axis) = case.axes.get(i) else {
        out.push(Item::Run(partial));
        return;
    };
    let values = match o.get(axis) {
        Some(v) => v.to_vec(),
        None => case.default_values(axis, &partial),
    };
    if values.is_empty() {
        out.push(Item::Empty(partial, axis));
        return;
    }
    for v in values {
        let mut p = partial.clone();
        p.set(axis, v);
        expand_from(case, o, i + 1, p, out);
    }
}

fn evaluate(case: &CongruenceCase, item: &Item, perturb: bool) -> Report {
    let start = Instant::now();
    let (params, modulus, outcome) = match item {
        Item::Empty(p, axis) => {
            let reason = format!("no admissible value of {} for {p}", axis.name());
            (p.clone(), String::new(), VerifyOutcome::out_of_domain(reason))
        }
        Item::Run(p) => match case.evaluate(p, perturb) {
            Ok(e) => (p.clone(), e.modulus, e.outcome),
            Err(Error::Constraint(msg)) => (p.clone(), String::new(), VerifyOutcome::out_of_domain(msg)),
            Err(e) => (p.clone(), String::new(), VerifyOutcome::skipped(e.to_string(), "evaluation aborted")),
        },
    };
    Report {
        case: case.id.to_string(),
        params,
        modulus,
        status: outcome.status,
        reason: outcome.reason,
        witness: outcome.witness,
        strategy: outcome.strategy,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs every tuple of the named cases on up to `workers` threads (`0` for
/// all cores). Reports come back sorted by case id and parameters.
pub fn run_sweep(ids: &[&str], overrides: &Overrides, workers: usize) -> Result<Sweep> {
    let cases = ids.iter().map(|id| lookup(id)).collect::<Result<Vec<_>>>()?;
    let items: Vec<(&CongruenceCase, Item)> =
        cases.iter().flat_map(|&c| expand(c, overrides).into_iter().map(move |i| (c, i))).collect();
    let mut reports = crate::par::map(&items, workers, |(c, item)| evaluate(c, item, overrides.perturb_rhs));
    reports.sort_by(|a, b| (&a.case, &a.params).cmp(&(&b.case, &b.params)));
    let summary = Summary::of(&reports);
    Ok(Sweep { reports, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only_n(ns: &[i64]) -> Overrides {
        Overrides { n: Some(ns.to_vec()), ..Overrides::default() }
    }

    #[test]
    fn single_parameter_sweep() {
        let sweep = run_sweep(&["thm1.5"], &only_n(&[1, 3, 5, 7]), 1).unwrap();
        assert_eq!(sweep.reports.len(), 4);
        assert!(sweep.reports.iter().all(|r| r.status == Status::Verified));
        assert_eq!(sweep.summary, Summary { verified: 4, ..Summary::default() });
    }

    #[test]
    fn no_admissible_shift() {
        let sweep = run_sweep(&["thm1.1"], &only_n(&[1]), 1).unwrap();
        assert!(!sweep.reports.is_empty());
        assert!(sweep.reports.iter().all(|r| r.is_expected_skip()));
        assert!(sweep.summary.is_success());
    }

    #[test]
    fn empty_sweep() {
        let sweep = run_sweep(&[], &Overrides::default(), 0).unwrap();
        assert!(sweep.reports.is_empty());
        assert_eq!(sweep.summary, Summary::default());
    }

    #[test]
    fn unknown_case() {
        assert_eq!(run_sweep(&["nope"], &Overrides::default(), 1).unwrap_err(), Error::UnknownCase("nope".into()));
    }

    #[test]
    fn even_n_is_out_of_domain() {
        let sweep = run_sweep(&["thm1.5"], &only_n(&[1, 2, 3, 4, 5, 6, 7, 8, 9]), 2).unwrap();
        assert_eq!(sweep.summary.verified, 5);
        assert_eq!(sweep.summary.skipped, 4);
        assert!(sweep.summary.is_success());
    }

    #[test]
    fn perturbation_fails_closed() {
        let o = Overrides { perturb_rhs: true, ..only_n(&[3]) };
        let sweep = run_sweep(&["thm1.5"], &o, 1).unwrap();
        let r = &sweep.reports[0];
        assert_eq!(r.status, Status::Failed);
        assert!(r.witness.as_deref().is_some_and(|w| !w.is_empty() && w != "0"));
    }

    #[test]
    fn params_ordering_and_display() {
        let mut p = Params::default();
        p.set(Axis::P, 7);
        p.set(Axis::K, 2);
        assert_eq!(p.to_string(), "n=7, p=7, k=2");
        let a = Params { n: 3, d: Some(2), ..Params::default() };
        let b = Params { n: 3, d: Some(3), ..Params::default() };
        assert!(a < b);
    }
}
