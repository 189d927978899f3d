//! Truncated q-series: every sum appearing in the verified statements, the
//! classical summation formulas, and the integer sums behind the classical
//! supercongruences.

mod classical;
mod integer;
mod series;
mod statements;

pub use classical::{classical_identity_check, classical_identity_sides, ClassicalIdentity};
pub use integer::{integer_sum, IntegerSum};
pub use series::{phi_truncated, phi_truncated_with, PhiSeriesSpec};
pub use statements::*;

pub(crate) use series::{Poch, Series};

use crate::error::Result;
use crate::exact::{Frac, Rat, SignedPower, SubstValue, Term, Var};

/// How a parameter enters a sum: as a formal variable, or fixed to a value
/// before the sum is expanded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum ParamMode {
    #[default]
    Symbolic,
    Set(SubstValue),
}

impl ParamMode {
    pub fn one() -> Self {
        ParamMode::Set(SubstValue::one())
    }

    pub fn power(p: SignedPower) -> Self {
        ParamMode::Set(SubstValue::Power(p))
    }

    pub fn value(c: Rat) -> Self {
        ParamMode::Set(SubstValue::Const(c))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, ParamMode::Symbolic)
    }
}

impl std::fmt::Display for ParamMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamMode::Symbolic => f.write_str("symbolic"),
            ParamMode::Set(v) => write!(f, "{v}"),
        }
    }
}

/// Modes for the three parameters `a`, `b`, `x`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Modes {
    pub a: ParamMode,
    pub b: ParamMode,
    pub x: ParamMode,
}

impl Modes {
    pub fn symbolic() -> Self {
        Modes::default()
    }

    pub fn with(mut self, var: Var, mode: ParamMode) -> Self {
        match var {
            Var::A => self.a = mode,
            Var::B => self.b = mode,
            Var::X => self.x = mode,
            Var::Q => panic!("q cannot be specialized"),
        }
        self
    }

    pub fn get(&self, var: Var) -> &ParamMode {
        match var {
            Var::A => &self.a,
            Var::B => &self.b,
            Var::X => &self.x,
            Var::Q => &ParamMode::Symbolic,
        }
    }

    fn fixed(&self) -> impl Iterator<Item = (Var, &SubstValue)> {
        [Var::A, Var::B, Var::X].into_iter().filter_map(|v| match self.get(v) {
            ParamMode::Set(s) => Some((v, s)),
            ParamMode::Symbolic => None,
        })
    }

    pub(crate) fn apply_term(&self, t: &Term) -> Term {
        self.fixed().fold(t.clone(), |t, (v, s)| t.substitute(v, s))
    }

    pub(crate) fn apply_frac(&self, f: &Frac) -> Result<Frac> {
        let mut f = f.clone();
        for (v, s) in self.fixed() {
            f = f.substitute_raw(v, s)?;
        }
        Ok(f)
    }

    /// Applies the modes and normalizes.
    pub fn apply(&self, f: &Frac) -> Result<Frac> {
        Ok(self.apply_frac(f)?.normalize())
    }
}

/// Integer data of the statements that carry `(n, d, r, s)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SumCaseParams {
    pub n: i64,
    pub d: i64,
    pub r: i64,
    pub s: i64,
    pub modes: Modes,
}

impl SumCaseParams {
    pub fn new(n: i64, d: i64, r: i64, s: i64) -> Self {
        SumCaseParams { n, d, r, s, modes: Modes::symbolic() }
    }

    pub fn with_modes(mut self, modes: Modes) -> Self {
        self.modes = modes;
        self
    }
}
