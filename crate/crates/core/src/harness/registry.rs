use num_bigint::BigInt;
use num_integer::Integer;

use crate::congruence::{verify, verify_specialized, Factor, Modulus, VerifyOutcome};
use crate::error::{Error, Result};
use crate::exact::{rat, ratio, Frac, Mono, Term, Var};
use crate::qkit::{kronecker, least_nonneg_residue, neg_ratio_residue, parity_sign};
use crate::sums::{
    abx_sign, abx_sum, alternating_binomial_sides, central_binomial_sum, central_binomial_value, dual_rv_sum,
    dual_rv_value, dual_x_side, integer_sum, legendre_side, pair_sum, pair_value, parametric_exponents,
    ramanujan_q_sum, ramanujan_q_value, reciprocal_sum, reciprocal_value, rv_q_sum, rv_q_value, shifted_central_sum,
    shifted_rv_sum, symmetric_fn, x_rv_sum, CentralForm, IntegerSum, Modes, PairSign, SumCaseParams,
};

use super::Params;

/// A parameter axis of a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    N,
    D,
    R,
    S,
    P,
    K,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::N => "n",
            Axis::D => "d",
            Axis::R => "r",
            Axis::S => "s",
            Axis::P => "p",
            Axis::K => "k",
        }
    }
}

/// Where a case comes from: what it states and a verbatim anchor from the
/// source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub statement: &'static str,
    pub quote: &'static str,
    /// Set for statements that were open when written down.
    pub label: Option<&'static str>,
}

/// Modulus text and outcome of one evaluated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub modulus: String,
    pub outcome: VerifyOutcome,
}

/// One registered congruence or identity.
pub struct CongruenceCase {
    pub id: &'static str,
    pub provenance: Provenance,
    /// Axes in generation order; later defaults may depend on earlier values.
    pub axes: &'static [Axis],
    default: fn(Axis, &Params) -> Vec<i64>,
    run: fn(&Params, bool) -> Result<Evaluation>,
}

impl std::fmt::Debug for CongruenceCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CongruenceCase").field("id", &self.id).field("axes", &self.axes).finish()
    }
}

impl CongruenceCase {
    /// Default values of `axis` given the values already chosen.
    pub fn default_values(&self, axis: Axis, partial: &Params) -> Vec<i64> {
        (self.default)(axis, partial)
    }

    /// Evaluates one instance. `perturb_rhs` adds `q` (or 1 for rational
    /// and integer checks) to the expected side.
    pub fn evaluate(&self, params: &Params, perturb_rhs: bool) -> Result<Evaluation> {
        (self.run)(params, perturb_rhs)
    }

    /// Whether `params` lies in the default domain.
    pub fn admits(&self, params: &Params) -> bool {
        let mut partial = Params::default();
        self.axes.iter().all(|&axis| {
            let v = params.get(axis);
            let ok = v.is_some_and(|v| self.default_values(axis, &partial).contains(&v));
            if let Some(v) = v {
                partial.set(axis, v);
            }
            ok
        })
    }
}

pub fn registry() -> &'static [CongruenceCase] {
    &REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static CongruenceCase> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCase(id.to_string()))
}

fn odd(hi: i64) -> Vec<i64> {
    (1..=hi).step_by(2).collect()
}

fn primes(lo: i64, hi: i64) -> Vec<i64> {
    (lo.max(2)..=hi).filter(|&p| (2..).take_while(|i| i * i <= p).all(|i| p % i != 0)).collect()
}

fn coprime_d(n: i64, lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|d| d.gcd(&n) == 1).collect()
}

fn dnr_domain(axis: Axis, p: &Params, n_max: i64, d_min: i64, d_max: i64, r_below_d: bool) -> Vec<i64> {
    match axis {
        Axis::N => odd(n_max),
        Axis::D => coprime_d(p.n, d_min, d_max),
        Axis::R => {
            let d = p.d.unwrap_or(0);
            (1..=if r_below_d { d - 1 } else { d }).collect()
        }
        _ => Vec::new(),
    }
}

fn shifted_domain(axis: Axis, p: &Params) -> Vec<i64> {
    match axis {
        Axis::S => {
            let (d, r) = (p.d.unwrap_or(0), p.r.unwrap_or(0));
            match neg_ratio_residue(r, d, p.n) {
                Ok(rho) => (0..p.n).filter(|s| (s - rho - 1).rem_euclid(2) == 0).collect(),
                Err(_) => Vec::new(),
            }
        }
        _ => dnr_domain(axis, p, 9, 1, 4, false),
    }
}

fn abx_domain(axis: Axis, p: &Params) -> Vec<i64> {
    dnr_domain(axis, p, 7, 1, 3, false)
}

fn below_d_domain(axis: Axis, p: &Params) -> Vec<i64> {
    dnr_domain(axis, p, 7, 2, 3, true)
}

fn d2r1_domain(axis: Axis, _: &Params) -> Vec<i64> {
    match axis {
        Axis::N => odd(9),
        Axis::D => vec![2],
        Axis::R => vec![1],
        _ => Vec::new(),
    }
}

fn odd15(axis: Axis, _: &Params) -> Vec<i64> {
    if axis == Axis::N { odd(15) } else { Vec::new() }
}

fn odd9(axis: Axis, _: &Params) -> Vec<i64> {
    if axis == Axis::N { odd(9) } else { Vec::new() }
}

fn coprime_six(axis: Axis, _: &Params) -> Vec<i64> {
    if axis == Axis::N { (1..=13).filter(|n: &i64| n.gcd(&6) == 1).collect() } else { Vec::new() }
}

fn half_shift_domain(axis: Axis, p: &Params) -> Vec<i64> {
    match axis {
        Axis::N => odd(15),
        Axis::S => (0..=(p.n - 1) / 2).collect(),
        _ => Vec::new(),
    }
}

fn lemma_domain(axis: Axis, _: &Params) -> Vec<i64> {
    if axis == Axis::N { (0..=8).collect() } else { Vec::new() }
}

fn binomial_identity_domain(axis: Axis, p: &Params) -> Vec<i64> {
    match axis {
        Axis::N => (0..=6).collect(),
        Axis::S => (0..=p.n).collect(),
        _ => Vec::new(),
    }
}

fn rv_int_domain(axis: Axis, _: &Params) -> Vec<i64> {
    match axis {
        Axis::P => primes(3, 37),
        Axis::K => vec![2],
        _ => Vec::new(),
    }
}

fn ram_int_domain(axis: Axis, _: &Params) -> Vec<i64> {
    match axis {
        Axis::P => primes(5, 13),
        Axis::K => vec![3],
        _ => Vec::new(),
    }
}

fn sun_tauraso_domain(axis: Axis, _: &Params) -> Vec<i64> {
    match axis {
        Axis::P => primes(3, 13),
        Axis::R => vec![1, 2],
        Axis::K => vec![1],
        _ => Vec::new(),
    }
}

fn need(v: Option<i64>, axis: Axis) -> Result<i64> {
    v.ok_or_else(|| Error::Constraint(format!("missing parameter {}", axis.name())))
}

fn sum_params(p: &Params) -> Result<SumCaseParams> {
    Ok(SumCaseParams::new(p.n, need(p.d, Axis::D)?, need(p.r, Axis::R)?, p.s.unwrap_or(0)))
}

fn perturbed(rhs: Frac, perturb: bool) -> Frac {
    if perturb {
        rhs.add(&Frac::from_term(Term::monomial(Mono::q_pow(1))))
    } else {
        rhs
    }
}

fn modulus(factors: Vec<Factor>) -> Result<Modulus> {
    Modulus::new(factors)
}

fn u(n: i64) -> Result<u64> {
    u64::try_from(n).map_err(|_| Error::Constraint(format!("{n} must be non-negative")))
}

/// Runs the factor checks with the sides built already specialized.
fn specialized(
    m: Modulus,
    perturb: bool,
    build: impl Fn(&Modes) -> Result<(Frac, Frac)>,
) -> Result<Evaluation> {
    let b = |modes: &Modes| build(modes).map(|(l, r)| (l, perturbed(r, perturb)));
    let outcome = verify_specialized(&b, &Modes::symbolic(), &m)?;
    Ok(Evaluation { modulus: m.to_string(), outcome })
}

fn exact(lhs: Frac, rhs: Frac, perturb: bool) -> Result<Evaluation> {
    let m = Modulus::exact();
    let outcome = verify(&lhs, &perturbed(rhs, perturb), &m)?;
    Ok(Evaluation { modulus: m.to_string(), outcome })
}

fn cyclotomic_sq(n: i64) -> Result<Factor> {
    Ok(Factor::cyclotomic(u(n)?, 2))
}

fn run_shifted(p: &Params, perturb: bool) -> Result<Evaluation> {
    let sp = sum_params(p)?;
    let (ea, eb) = parametric_exponents(sp.n, sp.d, sp.r)?;
    let m = modulus(vec![Factor::one_minus(Var::A, ea), Factor::one_minus(Var::B, eb)])?;
    specialized(m, perturb, |modes| Ok((shifted_central_sum(&sp.clone().with_modes(modes.clone()))?, Frac::zero())))
}

fn run_shifted_limit(p: &Params, perturb: bool) -> Result<Evaluation> {
    let sp = sum_params(p)?;
    shifted_central_sum(&sp)?;
    let m = modulus(vec![cyclotomic_sq(sp.n)?])?;
    specialized(m, perturb, |modes| Ok((shifted_central_sum(&sp.clone().with_modes(modes.clone()))?, Frac::zero())))
}

fn abx_sides(sp: &SumCaseParams, modes: &Modes) -> Result<(Frac, Frac)> {
    let sp = sp.clone().with_modes(modes.clone());
    let sign = abx_sign(sp.n, sp.d, sp.r)?;
    let rhs = abx_sum(&sp, -1)?.mul(&Frac::constant(rat(sign)));
    Ok((abx_sum(&sp, 1)?, rhs))
}

fn run_abx(p: &Params, perturb: bool) -> Result<Evaluation> {
    let sp = sum_params(p)?;
    let (ea, eb) = parametric_exponents(sp.n, sp.d, sp.r)?;
    let m = modulus(vec![Factor::one_minus(Var::A, ea), Factor::one_minus(Var::B, eb)])?;
    specialized(m, perturb, |modes| abx_sides(&sp, modes))
}

fn run_reciprocal(p: &Params, perturb: bool) -> Result<Evaluation> {
    let sp = sum_params(p)?;
    let (ea, eb) = parametric_exponents(sp.n, sp.d, sp.r)?;
    let m = modulus(vec![Factor::one_minus(Var::A, ea), Factor::minus_power(Var::A, eb), cyclotomic_sq(sp.n)?])?;
    specialized(m, perturb, |modes| {
        let sp = sp.clone().with_modes(modes.clone());
        Ok((reciprocal_sum(&sp)?, reciprocal_value(&sp)?))
    })
}

fn require_r_below_d(sp: &SumCaseParams) -> Result<()> {
    if sp.r < sp.d {
        Ok(())
    } else {
        Err(Error::Constraint(format!("need r < d, got r={}, d={}", sp.r, sp.d)))
    }
}

/// `(n<r/n>_d, n<(d-r)/n>_d)`.
fn residue_exponents(n: i64, d: i64, r: i64) -> Result<(i64, i64)> {
    let dm = u(d)?;
    let a = least_nonneg_residue(&ratio(r, n), dm)? as i64;
    let b = least_nonneg_residue(&ratio(d - r, n), dm)? as i64;
    Ok((n * a, n * b))
}

fn run_abx_residue(p: &Params, perturb: bool) -> Result<Evaluation> {
    let sp = sum_params(p)?;
    require_r_below_d(&sp)?;
    parametric_exponents(sp.n, sp.d, sp.r)?;
    let (ea, eb) = residue_exponents(sp.n, sp.d, sp.r)?;
    let m = modulus(vec![Factor::one_minus(Var::A, ea), Factor::one_minus(Var::B, eb)])?;
    specialized(m, perturb, |modes| abx_sides(&sp, modes))
}

fn run_abx_d2(p: &Params, perturb: bool) -> Result<Evaluation> {
    let sp = sum_params(p)?;
    if (sp.d, sp.r) != (2, 1) {
        return Err(Error::Constraint(format!("fixed at d=2, r=1, got d={}, r={}", sp.d, sp.r)));
    }
    parametric_exponents(sp.n, sp.d, sp.r)?;
    let m = modulus(vec![Factor::one_minus(Var::A, sp.n), Factor::one_minus(Var::B, sp.n)])?;
    specialized(m, perturb, |modes| {
        let sp = sp.clone().with_modes(modes.clone());
        let rhs = abx_sum(&sp, -1)?.mul(&Frac::constant(rat(parity_sign((sp.n - 1) / 2))));
        Ok((abx_sum(&sp, 1)?, rhs))
    })
}

fn single_param(n: i64) -> Result<Modulus> {
    modulus(vec![Factor::one_minus(Var::A, n), Factor::minus_power(Var::A, n)])
}

fn run_rv(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    let m = single_param(n)?;
    specialized(m, perturb, |modes| Ok((rv_q_sum(n, &modes.a)?, rv_q_value(n)?)))
}

fn run_rv_limit(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    rv_q_value(n)?;
    let m = modulus(vec![cyclotomic_sq(n)?])?;
    specialized(m, perturb, |modes| Ok((rv_q_sum(n, &modes.a)?, rv_q_value(n)?)))
}

fn run_ramanujan(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    let value = ramanujan_q_value(n)?;
    let m = modulus(vec![Factor::cyclotomic(u(n)?, 1), Factor::one_minus(Var::A, n), Factor::minus_power(Var::A, n)])?;
    specialized(m, perturb, |modes| Ok((ramanujan_q_sum(n, &modes.a)?, value.clone())))
}

fn run_ramanujan_limit(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    let value = ramanujan_q_value(n)?;
    let m = modulus(vec![Factor::cyclotomic(u(n)?, 3)])?;
    specialized(m, perturb, |modes| Ok((ramanujan_q_sum(n, &modes.a)?, value.clone())))
}

fn run_legendre(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    let m = single_param(n)?;
    specialized(m, perturb, |modes| Ok((x_rv_sum(n, &modes.a, &modes.x)?, legendre_side(n, &modes.x)?)))
}

fn run_dual_x(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    let m = single_param(n)?;
    specialized(m, perturb, |modes| Ok((x_rv_sum(n, &modes.a, &modes.x)?, dual_x_side(n, &modes.a, &modes.x)?)))
}

fn run_dual(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    let m = single_param(n)?;
    specialized(m, perturb, |modes| Ok((dual_rv_sum(n, &modes.a)?, dual_rv_value(n)?)))
}

fn run_shifted_rv(p: &Params, perturb: bool) -> Result<Evaluation> {
    let (n, s) = (p.n, need(p.s, Axis::S)?);
    shifted_rv_sum(n, s, &Default::default())?;
    let m = single_param(n)?;
    specialized(m, perturb, |modes| Ok((shifted_rv_sum(n, s, &modes.a)?, rv_q_value(n)?)))
}

fn run_pair(p: &Params, perturb: bool, sign: PairSign) -> Result<Evaluation> {
    let n = p.n;
    let second = match sign {
        PairSign::Plus => Factor::plus_power(Var::A, n),
        PairSign::Minus => Factor::minus_power(Var::A, n),
    };
    let m = modulus(vec![Factor::one_minus(Var::A, n), second])?;
    specialized(m, perturb, |modes| Ok((pair_sum(n, &modes.a, sign)?, pair_value(n, sign)?)))
}

fn run_pair_plus(p: &Params, perturb: bool) -> Result<Evaluation> {
    run_pair(p, perturb, PairSign::Plus)
}

fn run_pair_minus(p: &Params, perturb: bool) -> Result<Evaluation> {
    run_pair(p, perturb, PairSign::Minus)
}

fn run_pair_limit(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    pair_value(n, PairSign::Minus)?;
    let m = modulus(vec![cyclotomic_sq(n)?])?;
    specialized(m, perturb, |modes| Ok((pair_sum(n, &modes.a, PairSign::Minus)?, pair_value(n, PairSign::Minus)?)))
}

fn run_central(p: &Params, perturb: bool) -> Result<Evaluation> {
    let n = p.n;
    let m = modulus(vec![cyclotomic_sq(n)?])?;
    let mut parts = Vec::new();
    let mut forms = Vec::new();
    for form in [CentralForm::Binomial, CentralForm::Pochhammer] {
        let sum = central_binomial_sum(n, form)?;
        let mut o = verify(&sum, &perturbed(central_binomial_value(n, form)?, perturb), &m)?;
        let label = match form {
            CentralForm::Binomial => "binomial form",
            CentralForm::Pochhammer => "pochhammer form",
        };
        o.strategy = o.strategy.into_iter().map(|s| format!("{label}: {s}")).collect();
        parts.push(o);
        forms.push(sum);
    }
    let mut agree = verify(&forms[0].dilate_q(1, 2)?, &forms[1], &Modulus::exact())?;
    agree.strategy = vec!["binomial form at q^2 equals pochhammer form exactly".into()];
    parts.push(agree);
    Ok(Evaluation { modulus: m.to_string(), outcome: VerifyOutcome::combine(parts) })
}

fn run_symmetry(p: &Params, perturb: bool) -> Result<Evaluation> {
    let f = symmetric_fn(p.n)?;
    let mirrored = f.rescale(Var::X, &rat(-1), 0)?.mul(&Frac::constant(rat(parity_sign(p.n))));
    exact(f, mirrored, perturb)
}

fn run_binomial_identity(p: &Params, perturb: bool) -> Result<Evaluation> {
    let big_n = p.n;
    let (l, r) = alternating_binomial_sides(big_n, big_n + need(p.s, Axis::S)?)?;
    exact(l, r, perturb)
}

fn run_exponents(p: &Params, perturb: bool) -> Result<Evaluation> {
    let sp = sum_params(p)?;
    require_r_below_d(&sp)?;
    let (ea, eb) = parametric_exponents(sp.n, sp.d, sp.r)?;
    let (ra, rb) = residue_exponents(sp.n, sp.d, sp.r)?;
    let bump = i64::from(perturb);
    let parts = [("a", ea, ra + bump), ("b", eb, rb + bump)].map(|(v, lhs, rhs)| {
        let strategy = format!("exponent of {v}: {lhs} against {rhs}");
        if lhs == rhs {
            VerifyOutcome::verified(strategy)
        } else {
            VerifyOutcome::failed(format!("difference {}", lhs - rhs), strategy)
        }
    });
    Ok(Evaluation { modulus: Modulus::exact().to_string(), outcome: VerifyOutcome::combine(parts) })
}

fn run_integer(p: &Params, perturb: bool, which: IntegerSum) -> Result<Evaluation> {
    let prime = need(p.p, Axis::P)?;
    let k = need(p.k, Axis::K)?;
    let k = u32::try_from(k).ok().filter(|&k| k >= 1).ok_or_else(|| Error::Constraint(format!("k must be positive, got {k}")))?;
    let extra = match which {
        IntegerSum::SunTauraso => need(p.r, Axis::R)?,
        _ => 0,
    };
    let extra = u32::try_from(extra).map_err(|_| Error::Constraint(format!("r must be non-negative, got {extra}")))?;
    let pu = u(prime)?;
    let value = integer_sum(which, pu, extra)?;
    let expected = match which {
        IntegerSum::Rv => parity_sign((prime - 1) / 2),
        IntegerSum::Ram1a => prime * i64::from(kronecker(-3, pu)),
        IntegerSum::SunTauraso => parity_sign((prime.pow(extra) - 1) / 2),
    } + i64::from(perturb);
    let m = modulus(vec![Factor::prime_power(pu, k)])?;
    let outcome = crate::congruence::check_integer_mod(&value, &BigInt::from(expected), pu, k);
    Ok(Evaluation { modulus: m.to_string(), outcome })
}

fn run_rv_int(p: &Params, perturb: bool) -> Result<Evaluation> {
    run_integer(p, perturb, IntegerSum::Rv)
}

fn run_ram_int(p: &Params, perturb: bool) -> Result<Evaluation> {
    run_integer(p, perturb, IntegerSum::Ram1a)
}

fn run_sun_tauraso(p: &Params, perturb: bool) -> Result<Evaluation> {
    run_integer(p, perturb, IntegerSum::SunTauraso)
}

const DNR: &[Axis] = &[Axis::N, Axis::D, Axis::R];
const DNRS: &[Axis] = &[Axis::N, Axis::D, Axis::R, Axis::S];
const N: &[Axis] = &[Axis::N];
const NS: &[Axis] = &[Axis::N, Axis::S];
const PK: &[Axis] = &[Axis::P, Axis::K];
const PRK: &[Axis] = &[Axis::P, Axis::R, Axis::K];

const fn prov(statement: &'static str, quote: &'static str) -> Provenance {
    Provenance { statement, quote, label: None }
}

static REGISTRY: [CongruenceCase; 24] = [
    CongruenceCase {
        id: "thm1.1",
        provenance: prov(
            "shifted central sum with parameters a, b vanishes modulo two parameter-linear factors",
            r"s\equiv \langle -r/d\rangle_n+1\pmod 2",
        ),
        axes: DNRS,
        default: shifted_domain,
        run: run_shifted,
    },
    CongruenceCase {
        id: "cor1.2",
        provenance: prov("shifted central sum at a = b = 1 vanishes modulo Phi_n(q)^2", "we are led to the following result"),
        axes: DNRS,
        default: shifted_domain,
        run: run_shifted_limit,
    },
    CongruenceCase {
        id: "thm1.3",
        provenance: prov(
            "sums with (x;q^d)_k and (-x;q^d)_k agree up to sign modulo two parameter-linear factors",
            r"\equiv (-1)^{\langle -r/d\rangle_n}\sum_{k=0}^{n-1}\frac{(aq^r;q^d)_k (bq^{d-r};q^d)_k",
        ),
        axes: DNR,
        default: abx_domain,
        run: run_abx,
    },
    CongruenceCase {
        id: "cor1.4",
        provenance: prov("reciprocal-parameter sum with b = 1/a and x = -1 is congruent to a sign", "letting $b=1/a$ and $x=-1$"),
        axes: DNR,
        default: abx_domain,
        run: run_reciprocal,
    },
    CongruenceCase {
        id: "cor1.5",
        provenance: prov(
            "x and -x sums agree up to sign with modulus exponents written as n<r/n>_d",
            r"Then, modulo $(1-aq^{n\langle r/n\rangle_d})(1-bq^{n\langle(d-r)/n\rangle_d})$,",
        ),
        axes: DNR,
        default: below_d_domain,
        run: run_abx_residue,
    },
    CongruenceCase {
        id: "cor1.6",
        provenance: prov("x and -x sums at d = 2, r = 1 agree up to (-1)^((n-1)/2)", r"is the $d=2$ and $r=1$ case of"),
        axes: DNR,
        default: d2r1_domain,
        run: run_abx_d2,
    },
    CongruenceCase {
        id: "thm1.5",
        provenance: prov(
            "parametric q-analogue of the Rodriguez-Villegas sum modulo (1 - aq^n)(a - q^n)",
            "we shall give some new parameter-generalizations of",
        ),
        axes: N,
        default: odd15,
        run: run_rv,
    },
    CongruenceCase {
        id: "gz-rv",
        provenance: prov(
            "q-analogue of the Rodriguez-Villegas sum at a = 1 modulo Phi_n(q)^2",
            r"\equiv (-1)^{(p-1)/2}q^{(1-p^2)/4}\pmod{[p]^2}\quad\text{for odd prime $p$},",
        ),
        axes: N,
        default: odd15,
        run: run_rv_limit,
    },
    CongruenceCase {
        id: "eq-q4a-new",
        provenance: prov(
            "parametric Ramanujan-type sum modulo Phi_n(q)(1 - aq^n)(a - q^n)",
            "can be established modulo these three polynomials individually",
        ),
        axes: N,
        default: coprime_six,
        run: run_ramanujan,
    },
    CongruenceCase {
        id: "eq-q4a",
        provenance: prov(
            "Ramanujan-type sum at a = 1 modulo Phi_n(q)^3",
            r"&\equiv q^{-(n-1)/2}[n]\left(\frac{-3}{n}\right) \pmod{\Phi_n(q)^3},",
        ),
        axes: N,
        default: coprime_six,
        run: run_ramanujan_limit,
    },
    CongruenceCase {
        id: "thm4.1",
        provenance: prov(
            "x-weighted parametric sum is congruent to a little q-Legendre polynomial",
            r"q^{k^2-nk} (-x)^k (x;q^2)_{(n-1)/2-k}.",
        ),
        axes: N,
        default: odd9,
        run: run_legendre,
    },
    CongruenceCase {
        id: "thm4.2",
        provenance: prov(
            "x-weighted parametric sum is congruent to the dual sum with (x;q^2)_k",
            r"\frac{(aq;q^2)_k (q/a;q^2)_k}{(q^2;q^2)_k^2} q^{2k}(x;q^2)_k.",
        ),
        axes: N,
        default: odd9,
        run: run_dual_x,
    },
    CongruenceCase {
        id: "cor4.3",
        provenance: prov("dual form with weight q^2k modulo (1 - aq^n)(a - q^n)", "we obtain the following dual form of"),
        axes: N,
        default: odd9,
        run: run_dual,
    },
    CongruenceCase {
        id: "thm4.4",
        provenance: prov(
            "half-length sum with shifted Pochhammer symbol modulo (1 - aq^n)(a - q^n)",
            r"Let $n$ be a positive odd integer and let $0\leqslant s\leqslant (n-1)/2$.",
        ),
        axes: NS,
        default: half_shift_domain,
        run: run_shifted_rv,
    },
    CongruenceCase {
        id: "thm4.6-plus",
        provenance: prov(
            "pair sum with (-q/a;q^2)_k modulo (1 - aq^n)(a + q^n)",
            r"\equiv (-1)^{(n-1)/2} q^{(n^2-1)/2} \pmod{(1-aq^n)(a+q^n)}",
        ),
        axes: N,
        default: odd15,
        run: run_pair_plus,
    },
    CongruenceCase {
        id: "thm4.6-minus",
        provenance: prov(
            "pair sum with (q/a;q^2)_k modulo (1 - aq^n)(a - q^n)",
            r"\equiv q^{(n^2-1)/2} \pmod{(1-aq^n)(a-q^n)}",
        ),
        axes: N,
        default: odd15,
        run: run_pair_minus,
    },
    CongruenceCase {
        id: "thm4.6-limit",
        provenance: prov("pair sum with (q/a;q^2)_k at a = 1 modulo Phi_n(q)^2", r"the $a\to 1$ case of"),
        axes: N,
        default: odd15,
        run: run_pair_limit,
    },
    CongruenceCase {
        id: "conj4.5",
        provenance: Provenance {
            statement: "central q-binomial sum over (-q;q)_k modulo Phi_n(q)^2, in both equivalent forms",
            quote: r"is also true modulo $\Phi_n(q)^2$ for",
            label: Some("conjectured, proved elsewhere"),
        },
        axes: N,
        default: odd15,
        run: run_central,
    },
    CongruenceCase {
        id: "lem3.1",
        provenance: prov(
            "F_n(x, b, q) = (-1)^n F_n(-x, b, q) exactly",
            r"The symmetry/antisymmetry under the replacement of $x$ by $-x$ is now obvious.",
        ),
        axes: N,
        default: lemma_domain,
        run: run_symmetry,
    },
    CongruenceCase {
        id: "prop3.2",
        provenance: prov(
            "r + d<-r/d>_n = n<r/n>_d for r < d, for both parameter exponents",
            r"Then $r+d\langle -r/d\rangle_n=n\langle r/n\rangle_d$.",
        ),
        axes: DNR,
        default: below_d_domain,
        run: run_exponents,
    },
    CongruenceCase {
        id: "id5.1",
        provenance: prov(
            "alternating q-binomial sum equals (-1)^N q^(-C(N+1,2)) for M = N + s, 0 <= s <= N",
            "By the easily proved identity",
        ),
        axes: NS,
        default: binomial_identity_domain,
        run: run_binomial_identity,
    },
    CongruenceCase {
        id: "rv-int",
        provenance: prov(
            "sum of C(2k,k)^2/16^k is congruent to (-1)^((p-1)/2) modulo p^2",
            r"\equiv (-1)^{(p-1)/2}\pmod{p^2}\quad\text{for any odd prime $p$.}",
        ),
        axes: PK,
        default: rv_int_domain,
        run: run_rv_int,
    },
    CongruenceCase {
        id: "ram1a",
        provenance: prov(
            "Ramanujan-type sum with (8k+1) is congruent to p(-3/p) modulo p^3",
            r"\quad\text{for $p>3$ prime},",
        ),
        axes: PK,
        default: ram_int_domain,
        run: run_ram_int,
    },
    CongruenceCase {
        id: "sun-tauraso",
        provenance: prov(
            "sum of C(2k,k)/2^k up to p^r - 1 is congruent to (-1)^((p^r-1)/2) modulo p",
            r"where $p$ is an odd prime and $r$ is a positive integer.",
        ),
        axes: PRK,
        default: sun_tauraso_domain,
        run: run_sun_tauraso,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::Status;

    fn params(n: i64) -> Params {
        Params { n, ..Params::default() }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn lookup_by_id() {
        let c = lookup("thm1.5").unwrap();
        let e = c.evaluate(&params(5), false).unwrap();
        assert_eq!(e.modulus, "(1 - a*q^5)*(a - q^5)");
        assert_eq!(lookup("nonexistent").unwrap_err(), Error::UnknownCase("nonexistent".into()));
    }

    #[test]
    fn restricted_case_fixes_d_and_r() {
        let c = lookup("cor1.6").unwrap();
        assert_eq!(c.default_values(Axis::D, &params(3)), [2]);
        assert_eq!(c.default_values(Axis::R, &params(3)), [1]);
        let p = Params { n: 3, d: Some(3), r: Some(1), ..Params::default() };
        assert!(matches!(c.evaluate(&p, false), Err(Error::Constraint(_))));
    }

    #[test]
    fn shifted_domain_respects_parity() {
        let c = lookup("thm1.1").unwrap();
        let p = Params { n: 3, d: Some(2), r: Some(1), ..Params::default() };
        assert_eq!(c.default_values(Axis::S, &p), [0, 2]);
        let p = Params { n: 1, d: Some(2), r: Some(1), ..Params::default() };
        assert!(c.default_values(Axis::S, &p).is_empty());
    }

    #[test]
    fn integer_fixture() {
        let c = lookup("rv-int").unwrap();
        let p = Params { n: 3, p: Some(3), k: Some(2), ..Params::default() };
        assert_eq!(c.evaluate(&p, false).unwrap().outcome.status, Status::Verified);
        let bad = c.evaluate(&p, true).unwrap().outcome;
        assert_eq!(bad.status, Status::Failed);
        assert_eq!(bad.witness.as_deref(), Some("value = 8 (mod 3^2), expected 0"));
    }

    #[test]
    fn admits_default_domain() {
        let c = lookup("thm1.5").unwrap();
        assert!(c.admits(&params(7)));
        assert!(!c.admits(&params(8)));
    }
}
