//! q-analogue and number-theoretic building blocks.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Frac, MPoly, Mono, Rat, Term, UPoly, Var};

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u64) -> UPoly {
    assert!(n >= 1, "q_integer needs n >= 1");
    UPoly::new(0, vec![Rat::one(); n as usize])
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, Arc<UPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<UPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, by exact division of `q^n - 1` by the
/// cyclotomic polynomials of the proper divisors. Memoized.
pub fn cyclotomic(n: u64) -> Arc<UPoly> {
    assert!(n >= 1, "cyclotomic needs n >= 1");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = UPoly::new(0, {
        let mut c = vec![Rat::zero(); n as usize + 1];
        c[0] = rat(-1);
        c[n as usize] = Rat::one();
        c
    });
    for d in divisors(n) {
        if d < n {
            p = p
                .div_exact(&cyclotomic(d))
                .expect("nonzero divisor")
                .expect("cyclotomic factors divide q^n - 1");
        }
    }
    let p = Arc::new(p);
    // Racing writers compute the same polynomial; first insert wins.
    cyclotomic_cache().write().unwrap().entry(n).or_insert(p).clone()
}

/// `(first; q^base)_len`, with `first = c * monomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochSpec {
    pub first: Term,
    pub base: i32,
    pub len: u32,
}

impl PochSpec {
    pub fn new(first: Term, base: i32, len: u32) -> Self {
        assert!(base > 0, "base exponent must be positive");
        PochSpec { first, base, len }
    }

    /// `(sign * v * q^e; q^base)_len` for a product of parameters `v`
    /// (given as a monomial without `q`).
    pub fn param(sign: i64, vars: Mono, e: i32, base: i32, len: u32) -> Self {
        PochSpec::new(Term::int(sign, vars + Mono::q_pow(e)), base, len)
    }

    /// `(sign * q^e; q^base)_len`.
    pub fn q(sign: i64, e: i32, base: i32, len: u32) -> Self {
        PochSpec::param(sign, Mono::ONE, e, base, len)
    }

    /// The `j`-th factor `1 - first * q^(j*base)`.
    pub fn factor(&self, j: u32) -> MPoly {
        factor_at(&self.first, self.base, j)
    }
}

pub(crate) fn factor_at(first: &Term, base: i32, j: u32) -> MPoly {
    MPoly::one_minus(&first.mul(&Term::monomial(Mono::q_pow(base * j as i32))))
}

/// The q-shifted factorial as an expanded polynomial (empty product = 1).
pub fn pochhammer(spec: &PochSpec) -> Frac {
    let mut p = MPoly::one();
    for j in 0..spec.len {
        p = p.mul(&spec.factor(j));
        if p.is_zero() {
            break;
        }
    }
    Frac::from_poly(p)
}

/// Gaussian binomial `[n choose k]` in `q^base`; zero outside `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64, base: i64) -> UPoly {
    if k < 0 || n < 0 || k > n {
        return UPoly::zero();
    }
    let k = k.min(n - k);
    // prod_{i=1..k} (1 - q^(n-k+i)) / (1 - q^i); every partial product is
    // itself a Gaussian binomial, so each division is exact.
    let mut acc = UPoly::one();
    for i in 1..=k {
        let num = UPoly::from_ints(&[1]).sub(&UPoly::monomial(Rat::one(), n - k + i));
        let den = UPoly::from_ints(&[1]).sub(&UPoly::monomial(Rat::one(), i));
        acc = acc.mul(&num).div_exact(&den).unwrap().expect("q-binomial partial products are polynomials");
    }
    if base == 1 {
        acc
    } else {
        acc.dilate(base)
    }
}

/// `<x>_m`: the unique `t` in `[0, m)` with `den(x) * t = num(x) (mod m)`.
pub fn least_nonneg_residue(x: &Rat, m: u64) -> Result<u64> {
    assert!(m >= 1, "modulus must be positive");
    let mb = BigInt::from(m);
    let g = x.denom().gcd(&mb);
    if !g.is_one() {
        return Err(Error::NotCoprime { den: x.denom().to_string(), modulus: m });
    }
    if m == 1 {
        return Ok(0);
    }
    let u = x.numer().mod_floor(&mb).to_i128().unwrap();
    let v = x.denom().mod_floor(&mb).to_i128().unwrap();
    let inv = mod_inverse(v, m as i128).expect("coprime");
    Ok(((u * inv).rem_euclid(m as i128)) as u64)
}

pub(crate) fn mod_inverse(v: i128, m: i128) -> Option<i128> {
    let e = v.rem_euclid(m).extended_gcd(&m);
    e.gcd.is_one().then(|| e.x.rem_euclid(m))
}

/// Jacobi symbol `(d / n)` for odd positive `n`, by quadratic reciprocity.
pub fn kronecker(d: i64, n: u64) -> i8 {
    assert!(n % 2 == 1, "kronecker needs odd positive n");
    let mut a = d.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Checks `r + d*<-r/d>_n = n*<r/n>_d` for `0 < r < d`, `gcd(d, n) = 1`.
pub fn residue_identity_check(d: u64, n: u64, r: u64) -> Result<bool> {
    if !(r >= 1 && r < d) {
        return Err(Error::Constraint(format!("need 0 < r < d, got r={r}, d={d}")));
    }
    if d.gcd(&n) != 1 {
        return Err(Error::Constraint(format!("gcd(d, n) = {} != 1", d.gcd(&n))));
    }
    let (lhs, rhs) = residue_identity_sides(d, n, r)?;
    Ok(lhs == rhs)
}

pub(crate) fn residue_identity_sides(d: u64, n: u64, r: u64) -> Result<(i64, i64)> {
    let lhs = r as i64 + d as i64 * least_nonneg_residue(&Rat::new((-(r as i64)).into(), (d as i64).into()), n)? as i64;
    let rhs = n as i64 * least_nonneg_residue(&Rat::new((r as i64).into(), (n as i64).into()), d)? as i64;
    Ok((lhs, rhs))
}

/// `<-r/d>_n`, the residue appearing throughout the parametric theorems.
pub fn neg_ratio_residue(r: i64, d: i64, n: i64) -> Result<i64> {
    Ok(least_nonneg_residue(&Rat::new((-r).into(), d.into()), n as u64)? as i64)
}

/// `(-1)^e` for an integer exponent.
pub fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn assert_odd(n: i64) {
    assert!(n.rem_euclid(2) == 1, "exponent formula needs odd n, got {n}");
}

/// `(1 - n^2) / 4` for odd `n`.
pub fn quarter_exponent(n: i64) -> i64 {
    assert_odd(n);
    (1 - n * n) / 4
}

/// `(n^2 - 1) / 2` for odd `n`.
pub fn half_exponent(n: i64) -> i64 {
    assert_odd(n);
    (n * n - 1) / 2
}

/// Which finite-sum expansion of the little q-Legendre polynomial to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendreExpansion {
    /// `sum [n,k][n+k,k] q^(k(k+1)/2 - nk) (-x)^k`
    Standard,
    /// `(-1)^n q^(-n(n+1)/2) sum [n,k][n+k,k] (-1)^k q^(k(k+1)/2 - nk) (xq;q)_k`
    Signed,
    /// `sum [n,k]^2 q^(k(k+1)/2 - nk) (-x)^k (xq;q)_(n-k)`
    New,
}

/// Little q-Legendre polynomial `P_n(x | q^base)` as a polynomial in `(x, q)`.
pub fn little_q_legendre(n: u32, expansion: LegendreExpansion, base: i32) -> Frac {
    let n = n as i64;
    let d = base as i64;
    let upoly = |p: UPoly| p.to_mpoly();
    let qpow = |e: i64| Mono::q_pow((e * d) as i32);
    let xq_poch = |len: i64| -> MPoly {
        let spec = PochSpec::new(Term::monomial(Mono::var(Var::X) + Mono::q_pow(base)), base, len as u32);
        pochhammer(&spec).num().clone()
    };
    let mut sum = MPoly::zero();
    for k in 0..=n {
        let e = k * (k + 1) / 2 - n * k;
        let term = match expansion {
            LegendreExpansion::Standard => upoly(qbinom(n, k, d).mul(&qbinom(n + k, k, d)))
                .mul_term(&Term::int(parity_sign(k), qpow(e) + Mono::var_pow(Var::X, k as i32))),
            LegendreExpansion::Signed => upoly(qbinom(n, k, d).mul(&qbinom(n + k, k, d)))
                .mul_term(&Term::int(parity_sign(k), qpow(e)))
                .mul(&xq_poch(k)),
            LegendreExpansion::New => upoly(qbinom(n, k, d).pow(2))
                .mul_term(&Term::int(parity_sign(k), qpow(e) + Mono::var_pow(Var::X, k as i32)))
                .mul(&xq_poch(n - k)),
        };
        sum.add_assign(term);
    }
    if expansion == LegendreExpansion::Signed {
        sum = sum.mul_term(&Term::int(parity_sign(n), qpow(-n * (n + 1) / 2)));
    }
    Frac::from_poly(sum)
}
