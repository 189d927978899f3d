//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! criterion fails or exceeds its time budget.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;

use qcongruence::congruence::Status;
use qcongruence::exact::{ratio, Frac, Mono, Term};
use qcongruence::harness::{run_sweep, Overrides, Report, Sweep};
use qcongruence::sums::{integer_sum, ramanujan_q_value, reciprocal_value, IntegerSum, SumCaseParams};

type Outcome = Result<String, String>;

fn odd_up_to(hi: i64) -> Vec<i64> {
    (1..=hi).step_by(2).collect()
}

fn sweep(ids: &[&str], overrides: Overrides) -> Result<Sweep, String> {
    run_sweep(ids, &overrides, 0).map_err(|e| e.to_string())
}

fn with_n(ns: Vec<i64>) -> Overrides {
    Overrides { n: Some(ns), ..Overrides::default() }
}

fn first_problem(reports: &[Report]) -> Option<String> {
    reports.iter().find(|r| r.status != Status::Verified && !r.is_expected_skip()).map(|r| {
        format!("{} {}: {} {}", r.case, r.params, r.status, r.witness.as_deref().or(r.reason.as_deref()).unwrap_or(""))
    })
}

/// Every report verified, and exactly `expected` of them per case.
fn all_verified(s: &Sweep, expected: &[(&str, usize)]) -> Outcome {
    if let Some(p) = first_problem(&s.reports) {
        return Err(p);
    }
    for &(case, want) in expected {
        let got = s.reports.iter().filter(|r| r.case == case && r.status == Status::Verified).count();
        if got != want {
            return Err(format!("{case}: {got} verified, expected {want}"));
        }
    }
    Ok(format!("{} verified", s.summary.verified))
}

/// `<-r/d>_n` by search.
fn neg_ratio_by_search(r: i64, d: i64, n: i64) -> Option<i64> {
    (0..n).find(|t| (d * t + r).rem_euclid(n) == 0)
}

/// `(n, d, r)` with `n` odd, `d <= d_max`, `gcd(d, n) = 1`, `1 <= r <= d`.
fn dnr_grid(n_max: i64, d_max: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for n in odd_up_to(n_max) {
        for d in (1..=d_max).filter(|d| d.gcd(&n) == 1) {
            for r in 1..=d {
                out.push((n, d, r));
            }
        }
    }
    out
}

fn q_rv_parametric() -> Outcome {
    let s = sweep(&["thm1.5", "gz-rv"], with_n(odd_up_to(15)))?;
    all_verified(&s, &[("thm1.5", 8), ("gz-rv", 8)])
}

fn shifted_central() -> Outcome {
    // Admissible s: 0 <= s <= n-1 with s = <-r/d>_n + 1 (mod 2).
    let tuples: usize = dnr_grid(9, 4)
        .into_iter()
        .map(|(n, d, r)| {
            let rho = neg_ratio_by_search(r, d, n).expect("d invertible mod n");
            (0..n).filter(|s| (s - rho - 1).rem_euclid(2) == 0).count()
        })
        .sum();
    let s = sweep(&["thm1.1", "cor1.2"], with_n(odd_up_to(9)))?;
    all_verified(&s, &[("thm1.1", tuples), ("cor1.2", tuples)])
}

fn abx_family() -> Outcome {
    let grid = dnr_grid(7, 3);
    let below: Vec<_> = grid.iter().filter(|(_, d, r)| r < d).collect();
    let s = sweep(&["thm1.3", "cor1.4", "cor1.5", "cor1.6", "prop3.2"], with_n(odd_up_to(7)))?;
    let d2 = odd_up_to(7).len();
    let out = all_verified(
        &s,
        &[("thm1.3", grid.len()), ("cor1.4", grid.len()), ("cor1.5", below.len()), ("cor1.6", d2), ("prop3.2", below.len())],
    )?;
    // Exponent agreement and the reciprocal-case sign, by search.
    for &&(n, d, r) in &below {
        let lhs = r + d * neg_ratio_by_search(r, d, n).unwrap();
        let t = (0..d).find(|t| (n * t - r).rem_euclid(d) == 0).unwrap();
        if lhs != n * t {
            return Err(format!("exponent mismatch at n={n}, d={d}, r={r}: {lhs} vs {}", n * t));
        }
    }
    for &(n, d, r) in &grid {
        let sign = if neg_ratio_by_search(r, d, n).unwrap() % 2 == 0 { 1 } else { -1 };
        let v = reciprocal_value(&SumCaseParams::new(n, d, r, 0)).map_err(|e| e.to_string())?;
        if v != Frac::constant(ratio(sign, 1)) {
            return Err(format!("reciprocal value at n={n}, d={d}, r={r} is {v}"));
        }
    }
    Ok(out)
}

fn ramanujan_type() -> Outcome {
    let ns = vec![1, 5, 7, 11, 13];
    let s = sweep(&["eq-q4a-new", "eq-q4a"], with_n(ns))?;
    let out = all_verified(&s, &[("eq-q4a-new", 5), ("eq-q4a", 5)])?;
    // rhs at n = 5: -q^-2 (1 + q + q^2 + q^3 + q^4).
    let five = (0..5).fold(Frac::zero(), |acc, e| acc.add(&Frac::from_term(Term::int(-1, Mono::q_pow(e - 2)))));
    if ramanujan_q_value(5).map_err(|e| e.to_string())? != five {
        return Err("value at n=5 differs from -q^-2 [5]".into());
    }
    Ok(out)
}

fn symmetry_lemma() -> Outcome {
    let s = sweep(&["lem3.1"], with_n((0..=8).collect()))?;
    all_verified(&s, &[("lem3.1", 9)])
}

fn section_four() -> Outcome {
    let a = sweep(&["thm4.1", "thm4.2", "cor4.3"], with_n(odd_up_to(9)))?;
    let a = all_verified(&a, &[("thm4.1", 5), ("thm4.2", 5), ("cor4.3", 5)])?;
    let shifts: usize = odd_up_to(13).iter().map(|n| ((n - 1) / 2 + 1) as usize).sum();
    let b = sweep(&["thm4.4"], with_n(odd_up_to(13)))?;
    let b = all_verified(&b, &[("thm4.4", shifts)])?;
    let pairs: usize = (0..=6).map(|big_n| big_n as usize + 1).sum();
    let c = sweep(&["id5.1"], Overrides::default())?;
    let c = all_verified(&c, &[("id5.1", pairs)])?;
    Ok(format!("{a}; {b}; {c}"))
}

fn pair_sums() -> Outcome {
    let s = sweep(&["thm4.6-plus", "thm4.6-minus", "thm4.6-limit"], with_n(odd_up_to(15)))?;
    all_verified(&s, &[("thm4.6-plus", 8), ("thm4.6-minus", 8), ("thm4.6-limit", 8)])
}

fn central_binomial() -> Outcome {
    let s = sweep(&["conj4.5"], with_n((3..=15).step_by(2).collect()))?;
    let out = all_verified(&s, &[("conj4.5", 7)])?;
    let agreed = s.reports.iter().all(|r| r.strategy.iter().any(|l| l.contains("equals pochhammer form exactly")));
    if !agreed {
        return Err("form agreement check missing from a report".into());
    }
    Ok(out)
}

/// Sum of `C(2k,k)^2 / 16^k`, with binomials from Pascal's rule.
fn rv_by_pascal(p: usize) -> num_rational::BigRational {
    let mut row = vec![BigInt::from(1)];
    let mut central = Vec::new();
    for n in 0..2 * p {
        if n % 2 == 0 {
            central.push(row[n / 2].clone());
        }
        let mut next = vec![BigInt::from(1); n + 2];
        for i in 1..=n {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    central
        .iter()
        .enumerate()
        .map(|(k, c)| num_rational::BigRational::new(c * c, BigInt::from(16).pow(k as u32)))
        .sum()
}

fn integer_supercongruences() -> Outcome {
    let s = sweep(&["rv-int", "ram1a", "sun-tauraso"], Overrides::default())?;
    let out = all_verified(&s, &[("rv-int", 11), ("ram1a", 4), ("sun-tauraso", 10)])?;
    let rv3 = integer_sum(IntegerSum::Rv, 3, 0).map_err(|e| e.to_string())?;
    if rv3 != ratio(89, 64) || rv3 != rv_by_pascal(3) {
        return Err(format!("rv(3) = {rv3}"));
    }
    // 64 = 1 (mod 9), so rv(3) reduces to its numerator: 89 = 8 = -1 (mod 9).
    let nine = BigInt::from(9);
    let (num, den) = (rv3.numer().mod_floor(&nine), rv3.denom().mod_floor(&nine));
    if den != BigInt::from(1) || num != BigInt::from(8) {
        return Err(format!("rv(3) mod 9: numerator {num}, denominator {den}"));
    }
    for p in [5usize, 7, 11, 13, 17, 37] {
        if integer_sum(IntegerSum::Rv, p as u64, 0).map_err(|e| e.to_string())? != rv_by_pascal(p) {
            return Err(format!("rv({p}) disagrees with Pascal's rule"));
        }
    }
    Ok(out)
}

fn runner_error<T: std::fmt::Debug>(e: proptest::test_runner::TestError<T>) -> String {
    e.to_string()
}

fn property_suites() -> Outcome {
    use common::*;
    runner(256).run(&(mpoly(), mpoly(), mpoly()), |(a, b, c)| ring_laws(&a, &b, &c)).map_err(runner_error)?;
    runner(256).run(&(mpoly(), mpoly()), |(a, b)| exact_division(&a, &b)).map_err(runner_error)?;
    runner(128).run(&(frac(), frac()), |(f, g)| frac_laws(&f, &g)).map_err(runner_error)?;
    for check in [residues_by_search(50), cyclotomic_products(60), legendre_expansions(8), classical_identities(8)] {
        check.map_err(|e| e.to_string())?;
    }
    Ok("ring laws, normalization, residues m <= 50, cyclotomic n <= 60, Legendre n <= 8, classical n <= 8".into())
}

/// The CLI binary next to this test executable, when the workspace built it.
fn cli_binary() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?;
    let bin = dir.join(format!("qcong{}", std::env::consts::EXE_SUFFIX));
    bin.exists().then_some(bin)
}

fn fail_closed() -> Outcome {
    let perturbed = Overrides { perturb_rhs: true, ..with_n(vec![3, 5]) };
    let s = sweep(&["thm1.5", "cor1.2", "rv-int", "lem3.1"], perturbed)?;
    for r in &s.reports {
        let witness = r.witness.as_deref().unwrap_or("");
        if r.status != Status::Failed || witness.is_empty() || witness == "0" {
            return Err(format!("{} {} not failed with a witness: {:?}", r.case, r.params, r.status));
        }
    }
    if s.summary.is_success() {
        return Err("summary reports success".into());
    }
    let bin = cli_binary().ok_or("qcong binary not built; run the workspace tests")?;
    let status = Command::new(&bin)
        .args(["verify", "--case", "thm1.5", "--n", "3", "--perturb-rhs"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    if status.code() != Some(1) {
        return Err(format!("CLI exit code {:?}, expected 1", status.code()));
    }
    Ok(format!("{} perturbed reports failed, CLI exit 1", s.reports.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "parametric q-RV congruence and its a = 1 limit", limit: secs(30), run: q_rv_parametric },
        Criterion { id: 2, name: "shifted central sums, parametric and at a = b = 1", limit: secs(300), run: shifted_central },
        Criterion { id: 3, name: "x/-x sums, reciprocal case, residue exponents", limit: None, run: abx_family },
        Criterion { id: 4, name: "Ramanujan-type sums, parametric and mod Phi_n^3", limit: secs(120), run: ramanujan_type },
        Criterion { id: 5, name: "F_n symmetry in x", limit: None, run: symmetry_lemma },
        Criterion { id: 6, name: "Legendre, dual and shifted sums; binomial identity", limit: None, run: section_four },
        Criterion { id: 7, name: "pair sums modulo (1 - aq^n)(a +/- q^n) and a = 1", limit: None, run: pair_sums },
        Criterion { id: 8, name: "central q-binomial sum in both forms", limit: None, run: central_binomial },
        Criterion { id: 9, name: "integer supercongruences", limit: None, run: integer_supercongruences },
        Criterion { id: 10, name: "property suites", limit: secs(120), run: property_suites },
        Criterion { id: 11, name: "fail-closed perturbation", limit: None, run: fail_closed },
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| c.id.to_string() == *f) {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let over = c.limit.is_some_and(|l| elapsed > l);
        let budget = c.limit.map(|l| format!(", limit {} s", l.as_secs())).unwrap_or_default();
        let (mark, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over time budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if mark == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {mark} [{:.2} s{budget}] {}: {detail}", c.id, elapsed.as_secs_f64(), c.name);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
