use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{rat, Frac, MPoly, Mono, Term, Var};
use crate::qkit::{half_exponent, kronecker, neg_ratio_residue, parity_sign, q_integer, qbinom, quarter_exponent};

use super::{Modes, ParamMode, Poch, Series, SumCaseParams};

pub(crate) fn q(e: i64) -> Term {
    Term::monomial(Mono::q_pow(e as i32))
}

/// `sign * var * q^e`.
pub(crate) fn vq(sign: i64, var: Var, e: i64) -> Term {
    Term::int(sign, Mono::var(var) + Mono::q_pow(e as i32))
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Constraint(msg()))
    }
}

fn require_odd(n: i64) -> Result<()> {
    require(n >= 1 && n % 2 == 1, || format!("n must be a positive odd integer, got {n}"))
}

fn require_dnr(n: i64, d: i64, r: i64) -> Result<()> {
    require_odd(n)?;
    require(d >= 1 && r >= 1, || format!("d and r must be positive, got d={d}, r={r}"))?;
    require(d.gcd(&n) == 1, || format!("gcd(d, n) = {} != 1", d.gcd(&n)))
}

fn modes_a(a: &ParamMode) -> Modes {
    Modes::symbolic().with(Var::A, a.clone())
}

fn constant(c: i64) -> Frac {
    Frac::constant(rat(c))
}

/// `(E_a, E_b) = (r + d<-r/d>_n, d - r + d<(r-d)/d>_n)`, the exponents of the
/// two parameter-linear factors `1 - a q^E_a` and `1 - b q^E_b`.
pub fn parametric_exponents(n: i64, d: i64, r: i64) -> Result<(i64, i64)> {
    require_dnr(n, d, r)?;
    let ea = r + d * neg_ratio_residue(r, d, n)?;
    let eb = d - r + d * neg_ratio_residue(d - r, d, n)?;
    Ok((ea, eb))
}

/// `sum_{k=s}^{n-1} (aq^r;q^d)_k (bq^(d-r);q^d)_k (q^d;q^2d)_k q^dk
///   / ((q^d;q^d)_(k-s) (q^d;q^d)_(k+s) (abq^2d;q^2d)_k)`.
///
/// Requires `n` odd, `gcd(d, n) = 1`, `0 <= s <= n-1` and
/// `s = <-r/d>_n + 1 (mod 2)`.
pub fn shifted_central_sum(p: &SumCaseParams) -> Result<Frac> {
    let SumCaseParams { n, d, r, s, .. } = *p;
    require_dnr(n, d, r)?;
    require(0 <= s && s < n, || format!("need 0 <= s <= n-1, got s={s}, n={n}"))?;
    let rho = neg_ratio_residue(r, d, n)?;
    require((s - rho - 1).rem_euclid(2) == 0, || {
        format!("s={s} violates s = <-r/d>_n + 1 = {} (mod 2)", rho + 1)
    })?;
    let di = d as i32;
    let ab = Term::monomial(Mono::var(Var::A) + Mono::var(Var::B) + Mono::q_pow(2 * di));
    Series::new(s, n - 1)
        .num(Poch::k(vq(1, Var::A, r), di))
        .num(Poch::k(vq(1, Var::B, d - r), di))
        .num(Poch::k(q(d), 2 * di))
        .den(Poch::len(q(d), di, 1, -s))
        .den(Poch::len(q(d), di, 1, s))
        .den(Poch::k(ab, 2 * di))
        .extra(move |k| Ok(Frac::from_term(q(d * k))))
        .build(&p.modes)
}

/// `sum_{k=0}^{n-1} (aq^r;q^d)_k (bq^(d-r);q^d)_k (sign*x;q^d)_k q^dk
///   / ((q^d;q^d)_k (abq^2d;q^2d)_k)`.
pub fn abx_sum(p: &SumCaseParams, x_sign: i64) -> Result<Frac> {
    let SumCaseParams { n, d, r, .. } = *p;
    require_dnr(n, d, r)?;
    require(x_sign == 1 || x_sign == -1, || format!("x sign must be +1 or -1, got {x_sign}"))?;
    let di = d as i32;
    let ab = Term::monomial(Mono::var(Var::A) + Mono::var(Var::B) + Mono::q_pow(2 * di));
    Series::new(0, n - 1)
        .num(Poch::k(vq(1, Var::A, r), di))
        .num(Poch::k(vq(1, Var::B, d - r), di))
        .num(Poch::k(Term::int(x_sign, Mono::var(Var::X)), di))
        .den(Poch::k(q(d), di))
        .den(Poch::k(ab, 2 * di))
        .extra(move |k| Ok(Frac::from_term(q(d * k))))
        .build(&p.modes)
}

/// `(-1)^<-r/d>_n`, the sign relating the `x` and `-x` sums.
pub fn abx_sign(n: i64, d: i64, r: i64) -> Result<i64> {
    require_dnr(n, d, r)?;
    Ok(parity_sign(neg_ratio_residue(r, d, n)?))
}

/// `sum_{k=0}^{n-1} 2 (aq^r;q^d)_k (q^(d-r)/a;q^d)_k q^dk
///   / ((q^d;q^d)_k^2 (1 + q^dk))`.
pub fn reciprocal_sum(p: &SumCaseParams) -> Result<Frac> {
    let SumCaseParams { n, d, r, .. } = *p;
    require_dnr(n, d, r)?;
    let di = d as i32;
    let over_a = Term::monomial(Mono::q_pow((d - r) as i32) - Mono::var(Var::A));
    Series::new(0, n - 1)
        .num(Poch::k(vq(1, Var::A, r), di))
        .num(Poch::k(over_a, di))
        .den(Poch::k(q(d), di))
        .den(Poch::k(q(d), di))
        .extra(move |k| {
            let mut f = Frac::from_term(Term::int(2, Mono::q_pow((d * k) as i32)));
            f.divide_by_small(&MPoly::one().add(&MPoly::from_term(q(d * k))))?;
            Ok(f)
        })
        .build(&p.modes)
}

/// `(-1)^<-r/d>_n` as a constant.
pub fn reciprocal_value(p: &SumCaseParams) -> Result<Frac> {
    Ok(constant(abx_sign(p.n, p.d, p.r)?))
}

fn require_coprime_to_six(n: i64) -> Result<()> {
    require(n >= 1 && n.gcd(&6) == 1, || format!("n must be positive and coprime to 6, got {n}"))
}

/// `sum_{k=0}^{n-1} (aq;q^2)_k (q/a;q^2)_k (q;q^2)_2k [8k+1] q^(2k^2)
///   / ((q^2;q^2)_2k (aq^6;q^6)_k (q^6/a;q^6)_k)`.
pub fn ramanujan_q_sum(n: i64, a: &ParamMode) -> Result<Frac> {
    require_coprime_to_six(n)?;
    let inv_a = |e: i64| Term::monomial(Mono::q_pow(e as i32) - Mono::var(Var::A));
    Series::new(0, n - 1)
        .num(Poch::k(vq(1, Var::A, 1), 2))
        .num(Poch::k(inv_a(1), 2))
        .num(Poch::len(q(1), 2, 2, 0))
        .den(Poch::len(q(2), 2, 2, 0))
        .den(Poch::k(vq(1, Var::A, 6), 6))
        .den(Poch::k(inv_a(6), 6))
        .extra(|k| {
            let mut f = Frac::from_poly(MPoly::one_minus(&q(8 * k + 1)).mul_term(&q(2 * k * k)));
            f.divide_by_small(&MPoly::one_minus(&q(1)))?;
            Ok(f)
        })
        .build(&modes_a(a))
}

/// `q^(-(n-1)/2) [n] (-3/n)`.
pub fn ramanujan_q_value(n: i64) -> Result<Frac> {
    require_coprime_to_six(n)?;
    let sign = kronecker(-3, n as u64) as i64;
    Ok(Frac::from_poly(q_integer(n as u64).to_mpoly().mul_term(&Term::int(sign, Mono::q_pow((-(n - 1) / 2) as i32)))))
}

fn rv_series<'a>(hi: i64) -> Series<'a> {
    Series::new(0, hi)
        .num(Poch::k(vq(1, Var::A, 1), 2))
        .num(Poch::k(Term::monomial(Mono::q_pow(1) - Mono::var(Var::A)), 2))
        .den(Poch::k(q(2), 2))
}

/// `sum_{k=0}^{n-1} (aq;q^2)_k (q/a;q^2)_k / (q^2;q^2)_k^2`.
pub fn rv_q_sum(n: i64, a: &ParamMode) -> Result<Frac> {
    require_odd(n)?;
    rv_series(n - 1).den(Poch::k(q(2), 2)).build(&modes_a(a))
}

/// `(-1)^((n-1)/2) q^((1-n^2)/4)`.
pub fn rv_q_value(n: i64) -> Result<Frac> {
    require_odd(n)?;
    Ok(Frac::from_term(Term::int(parity_sign((n - 1) / 2), Mono::q_pow(quarter_exponent(n) as i32))))
}

/// `sum_{k=0}^{n-1} (aq;q^2)_k (q/a;q^2)_k x^k / (q^2;q^2)_k^2`.
pub fn x_rv_sum(n: i64, a: &ParamMode, x: &ParamMode) -> Result<Frac> {
    require_odd(n)?;
    rv_series(n - 1)
        .den(Poch::k(q(2), 2))
        .extra(|k| Ok(Frac::from_term(Term::monomial(Mono::var_pow(Var::X, k as i32)))))
        .build(&modes_a(a).with(Var::X, x.clone()))
}

/// `sum_{k=0}^{m} [m,k]_{q^2}^2 q^(k^2-nk) (-x)^k (x;q^2)_(m-k)` with
/// `m = (n-1)/2`; this is the little q-Legendre polynomial `P_m(x/q^2 | q^2)`.
pub fn legendre_side(n: i64, x: &ParamMode) -> Result<Frac> {
    require_odd(n)?;
    let m = (n - 1) / 2;
    let xv = Term::monomial(Mono::var(Var::X));
    let mut sum = MPoly::zero();
    for k in 0..=m {
        let mut poch = MPoly::one();
        for j in 0..(m - k) {
            poch = poch.mul(&MPoly::one_minus(&xv.mul(&q(2 * j))));
        }
        let coef = Term::int(parity_sign(k), Mono::q_pow((k * k - n * k) as i32) + Mono::var_pow(Var::X, k as i32));
        sum.add_assign(qbinom(m, k, 2).pow(2).to_mpoly().mul_term(&coef).mul(&poch));
    }
    Modes::symbolic().with(Var::X, x.clone()).apply(&Frac::from_poly(sum))
}

/// `(-1)^((n-1)/2) q^((1-n^2)/4) sum_{k=0}^{n-1} (aq;q^2)_k (q/a;q^2)_k
///   q^2k (x;q^2)_k / (q^2;q^2)_k^2`.
pub fn dual_x_side(n: i64, a: &ParamMode, x: &ParamMode) -> Result<Frac> {
    require_odd(n)?;
    let sum = rv_series(n - 1)
        .den(Poch::k(q(2), 2))
        .num(Poch::k(Term::monomial(Mono::var(Var::X)), 2))
        .extra(|k| Ok(Frac::from_term(q(2 * k))))
        .build(&modes_a(a).with(Var::X, x.clone()))?;
    Ok(sum.mul(&rv_q_value(n)?))
}

/// `sum_{k=0}^{n-1} (aq;q^2)_k (q/a;q^2)_k q^2k / (q^2;q^2)_k^2`.
pub fn dual_rv_sum(n: i64, a: &ParamMode) -> Result<Frac> {
    require_odd(n)?;
    rv_series(n - 1)
        .den(Poch::k(q(2), 2))
        .extra(|k| Ok(Frac::from_term(q(2 * k))))
        .build(&modes_a(a))
}

/// `(-1)^((n-1)/2) q^((n^2-1)/4)`.
pub fn dual_rv_value(n: i64) -> Result<Frac> {
    require_odd(n)?;
    Ok(Frac::from_term(Term::int(parity_sign((n - 1) / 2), Mono::q_pow(-quarter_exponent(n) as i32))))
}

/// `sum_{k=0}^{(n-1)/2} (aq;q^2)_k (q/a;q^2)_(k+s) / ((q^2;q^2)_k (q^2;q^2)_(k+s))`
/// for `0 <= s <= (n-1)/2`.
pub fn shifted_rv_sum(n: i64, s: i64, a: &ParamMode) -> Result<Frac> {
    require_odd(n)?;
    require(0 <= s && s <= (n - 1) / 2, || format!("need 0 <= s <= (n-1)/2, got s={s}, n={n}"))?;
    Series::new(0, (n - 1) / 2)
        .num(Poch::k(vq(1, Var::A, 1), 2))
        .num(Poch::len(Term::monomial(Mono::q_pow(1) - Mono::var(Var::A)), 2, 1, s))
        .den(Poch::k(q(2), 2))
        .den(Poch::len(q(2), 2, 1, s))
        .build(&modes_a(a))
}

/// Both sides of
/// `sum_{k=0}^{N} (-1)^k [N,k] [M+k,N] q^(C(k,2) - Nk) = (-1)^N q^(-C(N+1,2))`
/// for `N <= M <= 2N`.
pub fn alternating_binomial_sides(big_n: i64, big_m: i64) -> Result<(Frac, Frac)> {
    require(0 <= big_n && big_n <= big_m && big_m <= 2 * big_n, || {
        format!("need 0 <= N <= M <= 2N, got N={big_n}, M={big_m}")
    })?;
    let mut sum = MPoly::zero();
    for k in 0..=big_n {
        let t = Term::int(parity_sign(k), Mono::q_pow((k * (k - 1) / 2 - big_n * k) as i32));
        sum.add_assign(qbinom(big_n, k, 1).mul(&qbinom(big_m + k, big_n, 1)).to_mpoly().mul_term(&t));
    }
    let rhs = Term::int(parity_sign(big_n), Mono::q_pow((-big_n * (big_n + 1) / 2) as i32));
    Ok((Frac::from_poly(sum), Frac::from_term(rhs)))
}

pub fn alternating_binomial_check(big_n: i64, big_m: i64) -> Result<bool> {
    let (l, r) = alternating_binomial_sides(big_n, big_m)?;
    Ok(l == r)
}

/// Sign of the second parameter in the `(aq;q^2)_k (±q/a;q^2)_k` pair sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairSign {
    Plus,
    Minus,
}

/// Plus: `sum_{k=0}^{n-1} (aq;q^2)_k (-q/a;q^2)_k q^2k / (q^2;q^2)_k`;
/// minus: the same with `(q/a;q^2)_k`.
pub fn pair_sum(n: i64, a: &ParamMode, sign: PairSign) -> Result<Frac> {
    require_odd(n)?;
    let c = match sign {
        PairSign::Plus => -1,
        PairSign::Minus => 1,
    };
    Series::new(0, n - 1)
        .num(Poch::k(vq(1, Var::A, 1), 2))
        .num(Poch::k(Term::int(c, Mono::q_pow(1) - Mono::var(Var::A)), 2))
        .den(Poch::k(q(2), 2))
        .extra(|k| Ok(Frac::from_term(q(2 * k))))
        .build(&modes_a(a))
}

/// Plus: `(-1)^((n-1)/2) q^((n^2-1)/2)`; minus: `q^((n^2-1)/2)`.
pub fn pair_value(n: i64, sign: PairSign) -> Result<Frac> {
    require_odd(n)?;
    let c = match sign {
        PairSign::Plus => parity_sign((n - 1) / 2),
        PairSign::Minus => 1,
    };
    Ok(Frac::from_term(Term::int(c, Mono::q_pow(half_exponent(n) as i32))))
}

/// The two expressions of the central binomial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralForm {
    /// `sum_{k=0}^{n-1} q^k [2k,k] / (-q;q)_k`
    Binomial,
    /// `sum_{k=0}^{n-1} (q;q^2)_k (-q;q^2)_k q^2k / (q^2;q^2)_k`
    Pochhammer,
}

pub fn central_binomial_sum(n: i64, form: CentralForm) -> Result<Frac> {
    require_odd(n)?;
    match form {
        CentralForm::Binomial => Series::new(0, n - 1)
            .den(Poch::k(Term::int(-1, Mono::q_pow(1)), 1))
            .extra(|k| Ok(Frac::from_poly(qbinom(2 * k, k, 1).to_mpoly().mul_term(&q(k)))))
            .build(&Modes::symbolic()),
        CentralForm::Pochhammer => Series::new(0, n - 1)
            .num(Poch::k(q(1), 2))
            .num(Poch::k(Term::int(-1, Mono::q_pow(1)), 2))
            .den(Poch::k(q(2), 2))
            .extra(|k| Ok(Frac::from_term(q(2 * k))))
            .build(&Modes::symbolic()),
    }
}

/// Binomial form: `(-1)^((n-1)/2) q^((n^2-1)/4)`; Pochhammer form (in
/// `q^2`): `(-1)^((n-1)/2) q^((n^2-1)/2)`.
pub fn central_binomial_value(n: i64, form: CentralForm) -> Result<Frac> {
    require_odd(n)?;
    let e = match form {
        CentralForm::Binomial => -quarter_exponent(n),
        CentralForm::Pochhammer => half_exponent(n),
    };
    Ok(Frac::from_term(Term::int(parity_sign((n - 1) / 2), Mono::q_pow(e as i32))))
}

/// `F_n(x, b, q) = sum_{k=0}^{n} (q^-n;q)_k (b;q)_k (x;q)_k q^k
///   / ((q;q)_k (bq^(1-n);q^2)_k)`, symbolic in `b` and `x`.
pub fn symmetric_fn(n: i64) -> Result<Frac> {
    symmetric_fn_with(n, &Modes::symbolic())
}

pub fn symmetric_fn_with(n: i64, modes: &Modes) -> Result<Frac> {
    require(n >= 0, || format!("n must be non-negative, got {n}"))?;
    Series::new(0, n)
        .num(Poch::k(q(-n), 1))
        .num(Poch::k(Term::monomial(Mono::var(Var::B)), 1))
        .num(Poch::k(Term::monomial(Mono::var(Var::X)), 1))
        .den(Poch::k(q(1), 1))
        .den(Poch::k(vq(1, Var::B, 1 - n), 2))
        .extra(|k| Ok(Frac::from_term(q(k))))
        .build(modes)
}
