//! Exact arithmetic: big rationals, sparse Laurent polynomials in the fixed
//! variables `(q, a, b, x)`, rational functions with factored binomial
//! denominators, and dense univariate polynomials in `q`.

mod frac;
mod mono;
mod mpoly;
mod upoly;

pub use frac::{Binomial, Frac, UFrac};
pub use mono::{Mono, Term, Var};
pub use mpoly::MPoly;
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficient field. Always kept in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `c^e` for a nonzero rational and any integer exponent.
pub(crate) fn rat_pow(c: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut base = if e < 0 { c.recip() } else { c.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = Rat::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// `sign * q^exponent`, the value a parameter takes at the root of a
/// parameter-linear factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPower {
    pub sign: i8,
    pub exponent: i32,
}

impl SignedPower {
    pub fn new(sign: i8, exponent: i32) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        SignedPower { sign, exponent }
    }

    pub fn plus(exponent: i32) -> Self {
        SignedPower::new(1, exponent)
    }

    pub fn minus(exponent: i32) -> Self {
        SignedPower::new(-1, exponent)
    }

    pub fn as_term(&self) -> Term {
        Term::new(rat(self.sign as i64), Mono::q_pow(self.exponent))
    }
}

impl std::fmt::Display for SignedPower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        match self.exponent {
            0 => write!(f, "{sign}1"),
            1 => write!(f, "{sign}q"),
            e => write!(f, "{sign}q^{e}"),
        }
    }
}

/// Value substituted for a parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubstValue {
    Power(SignedPower),
    Const(Rat),
}

impl SubstValue {
    pub fn one() -> Self {
        SubstValue::Const(Rat::one())
    }

    pub(crate) fn as_term(&self) -> Term {
        match self {
            SubstValue::Power(sp) => sp.as_term(),
            SubstValue::Const(c) => Term::new(c.clone(), Mono::ONE),
        }
    }
}

impl From<SignedPower> for SubstValue {
    fn from(sp: SignedPower) -> Self {
        SubstValue::Power(sp)
    }
}

impl From<Rat> for SubstValue {
    fn from(c: Rat) -> Self {
        SubstValue::Const(c)
    }
}

impl std::fmt::Display for SubstValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubstValue::Power(sp) => sp.fmt(f),
            SubstValue::Const(c) => write!(f, "{c}"),
        }
    }
}

pub(crate) fn fmt_rat_coef(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}


pub(crate) fn is_zero(c: &Rat) -> bool {
    c.is_zero()
}
