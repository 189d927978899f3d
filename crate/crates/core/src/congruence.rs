//! Congruence moduli and the verification engine.
//!
//! A congruence `A = B (mod M)` between rational functions means that
//! `A - B`, written over its factored denominator, has every denominator
//! factor coprime to `M` and a numerator divisible by `M`. For cyclotomic
//! moduli this is checked through valuations: the numerator's `Phi_n`-adic
//! valuation must exceed the denominator's by at least the power.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Frac, MPoly, Mono, Rat, SignedPower, SubstValue, Term, UPoly, Var};
use crate::qkit::cyclotomic;
use crate::sums::{Modes, ParamMode};

/// One factor of a modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Factor {
    /// Linear in `param`, vanishing at `param = root`.
    ParamLinear { param: Var, root: SignedPower },
    CyclotomicPower { n: u64, k: u32 },
    IntegerPrimePower { p: u64, k: u32 },
}

impl Factor {
    /// `1 - param * q^e`.
    pub fn one_minus(param: Var, e: i64) -> Factor {
        Factor::ParamLinear { param, root: SignedPower::plus(-e as i32) }
    }

    /// `param - q^e`.
    pub fn minus_power(param: Var, e: i64) -> Factor {
        Factor::ParamLinear { param, root: SignedPower::plus(e as i32) }
    }

    /// `param + q^e`.
    pub fn plus_power(param: Var, e: i64) -> Factor {
        Factor::ParamLinear { param, root: SignedPower::minus(e as i32) }
    }

    pub fn cyclotomic(n: u64, k: u32) -> Factor {
        Factor::CyclotomicPower { n, k }
    }

    pub fn prime_power(p: u64, k: u32) -> Factor {
        Factor::IntegerPrimePower { p, k }
    }

    /// The factor as a polynomial, for parameter-linear factors.
    pub fn polynomial(&self) -> Option<MPoly> {
        match self {
            Factor::ParamLinear { param, root } => {
                let v = MPoly::var(*param);
                let r = MPoly::from_term(root.as_term());
                Some(if root.sign > 0 && root.exponent <= 0 {
                    // 1 - param * q^-e
                    MPoly::one().sub(&v.mul_term(&Term::monomial(Mono::q_pow(-root.exponent))))
                } else {
                    v.sub(&r)
                })
            }
            _ => None,
        }
    }

    /// Whether the factor's `param -> 1` limit is divisible by `Phi_n(q)`.
    pub fn limit_divisible_by(&self, n: u64) -> bool {
        match self {
            Factor::ParamLinear { root, .. } => {
                root.sign > 0 && root.exponent != 0 && (root.exponent.unsigned_abs() as u64) % n == 0
            }
            Factor::CyclotomicPower { n: m, .. } => *m == n,
            Factor::IntegerPrimePower { .. } => false,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::ParamLinear { param, root } => {
                let qp = |e: i32| Mono::q_pow(e).to_string();
                let e = root.exponent;
                if root.sign > 0 && e <= 0 {
                    if e == 0 {
                        write!(f, "(1 - {param})")
                    } else {
                        write!(f, "(1 - {param}*{})", qp(-e))
                    }
                } else {
                    let op = if root.sign > 0 { '-' } else { '+' };
                    write!(f, "({param} {op} {})", if e == 0 { "1".into() } else { qp(e) })
                }
            }
            Factor::CyclotomicPower { n, k } => {
                if *k == 1 {
                    write!(f, "Phi_{n}(q)")
                } else {
                    write!(f, "Phi_{n}(q)^{k}")
                }
            }
            Factor::IntegerPrimePower { p, k } => {
                if *k == 1 {
                    write!(f, "{p}")
                } else {
                    write!(f, "{p}^{k}")
                }
            }
        }
    }
}

/// A product of pairwise coprime factors. The empty modulus stands for exact
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Modulus {
    factors: Vec<Factor>,
}

impl Modulus {
    pub fn new(factors: Vec<Factor>) -> Result<Modulus> {
        let cyc = factors.iter().filter(|f| matches!(f, Factor::CyclotomicPower { .. })).count();
        let int = factors.iter().filter(|f| matches!(f, Factor::IntegerPrimePower { .. })).count();
        if cyc > 1 {
            return Err(Error::InvalidModulus("more than one cyclotomic factor".into()));
        }
        if int > 1 {
            return Err(Error::InvalidModulus("more than one integer prime power".into()));
        }
        for (i, f) in factors.iter().enumerate() {
            if factors[..i].contains(f) {
                return Err(Error::InvalidModulus(format!("repeated factor {f}")));
            }
            match f {
                Factor::CyclotomicPower { n, k } if *n == 0 || *k == 0 => {
                    return Err(Error::InvalidModulus(format!("bad cyclotomic power ({n}, {k})")));
                }
                Factor::IntegerPrimePower { p, k } if *p < 2 || *k == 0 => {
                    return Err(Error::InvalidModulus(format!("bad prime power ({p}, {k})")));
                }
                Factor::ParamLinear { param: Var::Q, .. } => {
                    return Err(Error::InvalidModulus("q is not a parameter".into()));
                }
                _ => {}
            }
        }
        Ok(Modulus { factors })
    }

    pub fn exact() -> Modulus {
        Modulus::default()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_exact(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("exact");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        })
    }
}

/// Reason prefix for skips caused by out-of-domain parameters, as opposed to
/// guard failures during a check.
pub const CONSTRAINT_PREFIX: &str = "constraint: ";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub status: Status,
    /// Nonzero residual of a failed check.
    pub witness: Option<String>,
    /// Why a check was skipped.
    pub reason: Option<String>,
    /// One line per factor check performed.
    pub strategy: Vec<String>,
}

impl VerifyOutcome {
    pub fn verified(strategy: impl Into<String>) -> Self {
        VerifyOutcome { status: Status::Verified, witness: None, reason: None, strategy: vec![strategy.into()] }
    }

    pub fn failed(witness: impl Into<String>, strategy: impl Into<String>) -> Self {
        VerifyOutcome { status: Status::Failed, witness: Some(witness.into()), reason: None, strategy: vec![strategy.into()] }
    }

    pub fn skipped(reason: impl Into<String>, strategy: impl Into<String>) -> Self {
        VerifyOutcome { status: Status::Skipped, witness: None, reason: Some(reason.into()), strategy: vec![strategy.into()] }
    }

    /// Skip for parameters outside the statement's domain.
    pub fn out_of_domain(reason: impl fmt::Display) -> Self {
        VerifyOutcome {
            status: Status::Skipped,
            witness: None,
            reason: Some(format!("{CONSTRAINT_PREFIX}{reason}")),
            strategy: Vec::new(),
        }
    }

    /// Fail-closed aggregation: any failure fails, otherwise any skip skips.
    pub fn combine(parts: impl IntoIterator<Item = VerifyOutcome>) -> Self {
        let mut out = VerifyOutcome { status: Status::Verified, witness: None, reason: None, strategy: Vec::new() };
        for p in parts {
            out.strategy.extend(p.strategy);
            match (out.status, p.status) {
                (Status::Failed, _) => {}
                (_, Status::Failed) => {
                    out.status = Status::Failed;
                    out.witness = p.witness;
                    out.reason = None;
                }
                (Status::Verified, Status::Skipped) => {
                    out.status = Status::Skipped;
                    out.reason = p.reason;
                }
                _ => {}
            }
        }
        out
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// True for skips caused by out-of-domain parameters.
    pub fn is_expected_skip(&self) -> bool {
        self.status == Status::Skipped && self.reason.as_deref().is_some_and(|r| r.starts_with(CONSTRAINT_PREFIX))
    }
}

fn compare(lhs: &Frac, rhs: &Frac, strategy: String) -> VerifyOutcome {
    let diff = lhs.sub(rhs);
    if diff.is_zero() {
        VerifyOutcome::verified(strategy)
    } else {
        VerifyOutcome::failed(diff.to_string(), strategy)
    }
}

fn root_strategy(param: Var, root: &SignedPower, f: &Factor) -> String {
    format!("{param} := {root} (root of {f})")
}

/// Checks `lhs = rhs` modulo a parameter-linear factor by substituting its
/// root. A denominator vanishing at the root yields `Skipped`.
pub fn check_param_factor(lhs: &Frac, rhs: &Frac, f: &Factor) -> VerifyOutcome {
    let Factor::ParamLinear { param, root } = f else {
        return VerifyOutcome::skipped(format!("{f} is not parameter-linear"), f.to_string());
    };
    let strategy = root_strategy(*param, root, f);
    let value = SubstValue::Power(*root);
    let sides = lhs.substitute(*param, &value).and_then(|l| Ok((l, rhs.substitute(*param, &value)?)));
    match sides {
        Ok((l, r)) => compare(&l, &r, strategy),
        Err(e) => VerifyOutcome::skipped(e.to_string(), strategy),
    }
}

/// `Phi`-adic valuation of a factored denominator.
fn den_valuation(f: &Frac, phi: &UPoly) -> Result<u32> {
    let mut v = 0;
    for (b, m) in f.den() {
        let p = UPoly::from_mpoly(&b.to_mpoly())?;
        v += p.valuation_at(phi)?.0 * m;
    }
    Ok(v)
}

/// Checks `lhs = rhs (mod Phi_n(q)^k)` for univariate rational functions.
pub fn check_cyclotomic(lhs: &Frac, rhs: &Frac, n: u64, k: u32) -> Result<VerifyOutcome> {
    let factor = Factor::cyclotomic(n, k);
    let diff = lhs.sub(rhs);
    if diff.is_zero() {
        return Ok(VerifyOutcome::verified(format!("{factor}: difference is zero")));
    }
    if !diff.is_univariate_q() {
        return Err(Error::NonUnivariate);
    }
    let phi = cyclotomic(n);
    let v = den_valuation(&diff, &phi)?;
    let num = UPoly::from_mpoly(&diff.numerator())?;
    let num = num.shift(-num.valuation());
    let (w, _) = num.valuation_at(&phi)?;
    let strategy = format!("{factor}: numerator valuation {w}, denominator valuation {v}");
    if w < v {
        return Ok(VerifyOutcome::skipped(format!("denominator not coprime to Phi_{n}(q)"), strategy));
    }
    if w - v >= k {
        return Ok(VerifyOutcome::verified(strategy));
    }
    let (_, rem) = num.divrem(&phi.pow(v + k))?;
    Ok(VerifyOutcome::failed(format!("numerator mod Phi_{n}(q)^{}: {rem}", v + k), strategy))
}

fn p_valuation(x: &BigInt, p: &BigInt) -> u32 {
    let mut v = 0;
    let mut x = x.abs();
    while !x.is_zero() && (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

/// Checks `value = expected (mod p^k)` in the integers localized at `p`.
pub fn check_integer_mod(value: &Rat, expected: &BigInt, p: u64, k: u32) -> VerifyOutcome {
    let factor = Factor::prime_power(p, k);
    let pb = BigInt::from(p);
    let strategy = format!("{factor}: denominator inverted mod {factor}");
    if p_valuation(value.denom(), &pb) > 0 {
        return VerifyOutcome::skipped(format!("denominator {} not invertible mod {p}", value.denom()), strategy);
    }
    let m = pb.pow(k);
    let diff = value - Rat::from_integer(expected.clone());
    let num = diff.numer().mod_floor(&m);
    if num.is_zero() {
        return VerifyOutcome::verified(strategy);
    }
    let inv = value.denom().modinv(&m).expect("denominator is a unit mod p^k");
    let residue = (value.numer() * inv).mod_floor(&m);
    VerifyOutcome::failed(format!("value = {residue} (mod {factor}), expected {}", expected.mod_floor(&m)), strategy)
}

fn substitute_all(f: &Frac, vars: &[Var], value: &SubstValue) -> Result<Frac> {
    let mut f = f.clone();
    for &v in vars {
        f = f.substitute(v, value)?;
    }
    Ok(f)
}

/// Verifies `lhs = rhs (mod m)` on symbolic sums: parameter-linear factors by
/// root substitution, the cyclotomic factor after setting every remaining
/// parameter to 1, and the empty modulus by exact comparison.
pub fn verify(lhs: &Frac, rhs: &Frac, m: &Modulus) -> Result<VerifyOutcome> {
    if m.is_exact() {
        return Ok(compare(lhs, rhs, "exact equality".into()));
    }
    let mut parts = Vec::new();
    for f in m.factors() {
        let part = match f {
            Factor::ParamLinear { .. } => check_param_factor(lhs, rhs, f),
            Factor::CyclotomicPower { n, k } => {
                let params = [Var::A, Var::B, Var::X];
                let sides = substitute_all(lhs, &params, &SubstValue::one())
                    .and_then(|l| Ok((l, substitute_all(rhs, &params, &SubstValue::one())?)));
                match sides {
                    Ok((l, r)) => {
                        let mut o = check_cyclotomic(&l, &r, *n, *k)?;
                        o.strategy = o.strategy.into_iter().map(|s| format!("a, b, x := 1; {s}")).collect();
                        o
                    }
                    Err(e) => VerifyOutcome::skipped(e.to_string(), format!("a, b, x := 1 for {f}")),
                }
            }
            Factor::IntegerPrimePower { .. } => {
                return Err(Error::InvalidModulus(format!("{f} applies to rational numbers, not q-series")));
            }
        };
        parts.push(part);
    }
    Ok(VerifyOutcome::combine(parts))
}

/// Verifies by building each side already specialized: for a parameter-linear
/// factor `build` receives `base` with that parameter set to the root; for a
/// cyclotomic factor it receives every parameter set to 1. Equivalent to
/// [`verify`] on the symbolic sums, with the denominator guard applied term
/// by term.
pub fn verify_specialized(
    build: &dyn Fn(&Modes) -> Result<(Frac, Frac)>,
    base: &Modes,
    m: &Modulus,
) -> Result<VerifyOutcome> {
    let guarded = |modes: &Modes, strategy: String, check: &dyn Fn(Frac, Frac, String) -> Result<VerifyOutcome>| {
        match build(modes) {
            Ok((l, r)) => check(l, r, strategy),
            Err(e @ (Error::DenominatorVanishes(_) | Error::DivisionByZero)) => {
                Ok(VerifyOutcome::skipped(e.to_string(), strategy))
            }
            Err(e) => Err(e),
        }
    };
    if m.is_exact() {
        return guarded(base, "exact equality".into(), &|l, r, s| Ok(compare(&l, &r, s)));
    }
    let mut parts = Vec::new();
    for f in m.factors() {
        let part = match f {
            Factor::ParamLinear { param, root } => {
                let modes = base.clone().with(*param, ParamMode::power(*root));
                guarded(&modes, root_strategy(*param, root, f), &|l, r, s| Ok(compare(&l, &r, s)))?
            }
            Factor::CyclotomicPower { n, k } => {
                let one = Modes { a: ParamMode::one(), b: ParamMode::one(), x: ParamMode::one() };
                guarded(&one, String::new(), &|l, r, _| {
                    let mut o = check_cyclotomic(&l, &r, *n, *k)?;
                    o.strategy = o.strategy.into_iter().map(|s| format!("a, b, x := 1; {s}")).collect();
                    Ok(o)
                })?
            }
            Factor::IntegerPrimePower { .. } => {
                return Err(Error::InvalidModulus(format!("{f} applies to rational numbers, not q-series")));
            }
        };
        parts.push(part);
    }
    Ok(VerifyOutcome::combine(parts))
}

/// `Phi_n(q)^j` where `j` counts the factors whose `param -> 1` limit is
/// divisible by `Phi_n(q)`.
pub fn implied_cyclotomic_power(m: &Modulus, n: u64) -> u32 {
    m.factors().iter().filter(|f| f.limit_divisible_by(n)).map(|f| match f {
        Factor::CyclotomicPower { k, .. } => *k,
        _ => 1,
    }).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::sums::{ramanujan_q_sum, ramanujan_q_value, rv_q_sum, rv_q_value, shifted_central_sum, SumCaseParams};

    fn qt(c: i64, e: i32) -> Frac {
        Frac::from_term(Term::int(c, Mono::q_pow(e)))
    }

    #[test]
    fn factor_display() {
        assert_eq!(Factor::one_minus(Var::A, 3).to_string(), "(1 - a*q^3)");
        assert_eq!(Factor::one_minus(Var::B, 1).to_string(), "(1 - b*q)");
        assert_eq!(Factor::minus_power(Var::A, 5).to_string(), "(a - q^5)");
        assert_eq!(Factor::plus_power(Var::A, 5).to_string(), "(a + q^5)");
        assert_eq!(Factor::one_minus(Var::B, 0).to_string(), "(1 - b)");
        assert_eq!(Factor::cyclotomic(5, 2).to_string(), "Phi_5(q)^2");
        assert_eq!(Factor::prime_power(3, 2).to_string(), "3^2");
    }

    #[test]
    fn factor_polynomials_vanish_at_roots() {
        for f in [Factor::one_minus(Var::A, 3), Factor::minus_power(Var::A, 2), Factor::plus_power(Var::B, 4)] {
            let Factor::ParamLinear { param, root } = &f else { unreachable!() };
            let p = f.polynomial().unwrap();
            assert!(p.substitute(*param, &SubstValue::Power(*root)).is_zero(), "{f}");
        }
    }

    #[test]
    fn modulus_invariants() {
        assert!(Modulus::new(vec![Factor::cyclotomic(3, 1), Factor::cyclotomic(5, 1)]).is_err());
        assert!(Modulus::new(vec![Factor::prime_power(3, 1), Factor::prime_power(5, 1)]).is_err());
        assert!(Modulus::new(vec![Factor::one_minus(Var::A, 3), Factor::one_minus(Var::A, 3)]).is_err());
        let m = Modulus::new(vec![Factor::cyclotomic(5, 1), Factor::one_minus(Var::A, 5), Factor::minus_power(Var::A, 5)]).unwrap();
        assert_eq!(m.to_string(), "Phi_5(q)*(1 - a*q^5)*(a - q^5)");
        assert_eq!(implied_cyclotomic_power(&m, 5), 3);
        assert_eq!(Modulus::exact().to_string(), "exact");
    }

    #[test]
    fn param_factor_examples() {
        let f = Factor::one_minus(Var::A, 3);
        let x = Frac::from_poly(MPoly::var(Var::A));
        assert!(check_param_factor(&x, &x, &f).is_verified());
        let lhs = rv_q_sum(3, &ParamMode::Symbolic).unwrap();
        assert!(check_param_factor(&lhs, &rv_q_value(3).unwrap(), &f).is_verified());
        let pole = Frac::new(MPoly::one(), [f.polynomial().unwrap()]).unwrap();
        let o = check_param_factor(&pole, &Frac::zero(), &f);
        assert_eq!(o.status, Status::Skipped);
        assert!(!o.is_expected_skip());
    }

    #[test]
    fn cyclotomic_examples() {
        assert!(check_cyclotomic(&Frac::zero(), &Frac::zero(), 7, 3).unwrap().is_verified());
        let phi3 = cyclotomic(3).to_mpoly();
        let num = phi3.pow(2).mul(&MPoly::one().add(&MPoly::monomial(Mono::q_pow(1))));
        assert!(check_cyclotomic(&Frac::from_poly(num.clone()), &Frac::zero(), 3, 2).unwrap().is_verified());
        let o = check_cyclotomic(&Frac::from_poly(num), &Frac::zero(), 3, 3).unwrap();
        assert_eq!(o.status, Status::Failed);
        assert!(o.witness.is_some());
        let pole = Frac::new(MPoly::one(), [MPoly::one_minus(&Term::monomial(Mono::q_pow(3)))]).unwrap();
        assert_eq!(check_cyclotomic(&pole, &Frac::zero(), 3, 1).unwrap().status, Status::Skipped);
        let param = Frac::from_poly(MPoly::var(Var::A));
        assert_eq!(check_cyclotomic(&param, &Frac::zero(), 3, 1), Err(Error::NonUnivariate));
    }

    #[test]
    fn cyclotomic_cancels_common_factor() {
        // (1 - q^3) / (1 - q^6): Phi_3 appears once on each side.
        let f = Frac::new(
            MPoly::one_minus(&Term::monomial(Mono::q_pow(3))).mul(&MPoly::one_minus(&Term::monomial(Mono::q_pow(3)))),
            [MPoly::one_minus(&Term::monomial(Mono::q_pow(6)))],
        )
        .unwrap();
        assert!(check_cyclotomic(&f, &Frac::zero(), 3, 1).unwrap().is_verified());
        assert_eq!(check_cyclotomic(&f, &Frac::zero(), 3, 2).unwrap().status, Status::Failed);
    }

    #[test]
    fn shifted_central_limit_is_divisible() {
        let p = SumCaseParams::new(3, 2, 1, 0).with_modes(Modes { a: ParamMode::one(), b: ParamMode::one(), x: ParamMode::Symbolic });
        let s = shifted_central_sum(&p).unwrap();
        assert!(check_cyclotomic(&s, &Frac::zero(), 3, 2).unwrap().is_verified());
    }

    #[test]
    fn integer_examples() {
        assert!(check_integer_mod(&ratio(89, 64), &BigInt::from(-1), 3, 2).is_verified());
        assert!(check_integer_mod(&rat(1), &BigInt::from(1), 7, 3).is_verified());
        assert_eq!(check_integer_mod(&ratio(1, 3), &BigInt::from(0), 3, 2).status, Status::Skipped);
        let o = check_integer_mod(&ratio(89, 64), &BigInt::from(1), 3, 2);
        assert_eq!(o.status, Status::Failed);
        assert_eq!(o.witness.as_deref(), Some("value = 8 (mod 3^2), expected 1"));
    }

    #[test]
    fn verify_examples() {
        let m = Modulus::new(vec![Factor::one_minus(Var::A, 3), Factor::minus_power(Var::A, 3)]).unwrap();
        let lhs = rv_q_sum(3, &ParamMode::Symbolic).unwrap();
        assert!(verify(&lhs, &rv_q_value(3).unwrap(), &m).unwrap().is_verified());

        let m5 = Modulus::new(vec![Factor::cyclotomic(5, 1), Factor::one_minus(Var::A, 5), Factor::minus_power(Var::A, 5)]).unwrap();
        let lhs = ramanujan_q_sum(5, &ParamMode::Symbolic).unwrap();
        let o = verify(&lhs, &ramanujan_q_value(5).unwrap(), &m5).unwrap();
        assert!(o.is_verified(), "{o:?}");
        assert_eq!(o.strategy.len(), 3);

        let lim = ramanujan_q_sum(5, &ParamMode::one()).unwrap();
        let cube = Modulus::new(vec![Factor::cyclotomic(5, 3)]).unwrap();
        assert!(verify(&lim, &ramanujan_q_value(5).unwrap(), &cube).unwrap().is_verified());
    }

    #[test]
    fn perturbed_rhs_fails_closed() {
        let m = Modulus::new(vec![Factor::one_minus(Var::A, 3), Factor::minus_power(Var::A, 3)]).unwrap();
        let lhs = rv_q_sum(3, &ParamMode::Symbolic).unwrap();
        let rhs = rv_q_value(3).unwrap().add(&qt(1, 1));
        let o = verify(&lhs, &rhs, &m).unwrap();
        assert_eq!(o.status, Status::Failed);
        assert_eq!(o.witness.as_deref(), Some("-q"));
    }

    #[test]
    fn combine_is_fail_closed() {
        let v = VerifyOutcome::verified("a");
        let s = VerifyOutcome::skipped("why", "b");
        let f = VerifyOutcome::failed("w", "c");
        assert_eq!(VerifyOutcome::combine([v.clone(), s.clone()]).status, Status::Skipped);
        assert_eq!(VerifyOutcome::combine([s.clone(), f.clone(), v.clone()]).status, Status::Failed);
        assert_eq!(VerifyOutcome::combine([v.clone(), v]).status, Status::Verified);
        assert_eq!(VerifyOutcome::combine([]).status, Status::Verified);
    }

    #[test]
    fn specialized_matches_symbolic() {
        let m = Modulus::new(vec![Factor::one_minus(Var::A, 5), Factor::minus_power(Var::A, 5), Factor::cyclotomic(5, 2)]).unwrap();
        let build = |modes: &Modes| Ok((rv_q_sum(5, &modes.a)?, rv_q_value(5)?));
        let fast = verify_specialized(&build, &Modes::symbolic(), &m).unwrap();
        let slow = verify(&rv_q_sum(5, &ParamMode::Symbolic).unwrap(), &rv_q_value(5).unwrap(), &m).unwrap();
        assert_eq!(fast, slow);
        assert!(fast.is_verified());
    }
}
