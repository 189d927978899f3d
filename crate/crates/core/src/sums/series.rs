use crate::error::{Error, Result};
use crate::exact::{Frac, Term};
use crate::qkit::factor_at;

use super::Modes;

/// `(first; q^base)_(mult*k + offset)` as a function of the summation index.
#[derive(Debug, Clone)]
pub(crate) struct Poch {
    pub first: Term,
    pub base: i32,
    pub mult: i64,
    pub offset: i64,
}

impl Poch {
    /// Length `k`.
    pub fn k(first: Term, base: i32) -> Self {
        Poch { first, base, mult: 1, offset: 0 }
    }

    /// Length `mult*k + offset`.
    pub fn len(first: Term, base: i32, mult: i64, offset: i64) -> Self {
        Poch { first, base, mult, offset }
    }

    fn length_at(&self, k: i64) -> Result<u32> {
        let l = self.mult * k + self.offset;
        u32::try_from(l).map_err(|_| {
            Error::Constraint(format!("negative length {l} for ({}; q^{})", self.first, self.base))
        })
    }
}

/// A truncated sum `sum_{k=lo}^{hi} extra(k) * prod(num) / prod(den)`.
///
/// The Pochhammer products are extended factor by factor as `k` grows, so
/// each term is the previous one times the ratio of new factors and the
/// denominators stay factored throughout.
pub(crate) struct Series<'a> {
    pub num: Vec<Poch>,
    pub den: Vec<Poch>,
    pub extra: Box<dyn Fn(i64) -> Result<Frac> + 'a>,
    pub lo: i64,
    pub hi: i64,
}

impl<'a> Series<'a> {
    pub fn new(lo: i64, hi: i64) -> Self {
        Series { num: Vec::new(), den: Vec::new(), extra: Box::new(|_| Ok(Frac::one())), lo, hi }
    }

    pub fn num(mut self, p: Poch) -> Self {
        self.num.push(p);
        self
    }

    pub fn den(mut self, p: Poch) -> Self {
        self.den.push(p);
        self
    }

    pub fn extra(mut self, f: impl Fn(i64) -> Result<Frac> + 'a) -> Self {
        self.extra = Box::new(f);
        self
    }

    /// Evaluates the sum with the parameters specialized per `modes`; the
    /// result is normalized.
    pub fn build(&self, modes: &Modes) -> Result<Frac> {
        Ok(self.build_raw(modes)?.normalize())
    }

    pub fn build_raw(&self, modes: &Modes) -> Result<Frac> {
        let num: Vec<Poch> = self
            .num
            .iter()
            .map(|p| Poch { first: modes.apply_term(&p.first), ..p.clone() })
            .collect();
        let den: Vec<Poch> = self
            .den
            .iter()
            .map(|p| Poch { first: modes.apply_term(&p.first), ..p.clone() })
            .collect();
        let mut num_len = vec![0u32; num.len()];
        let mut den_len = vec![0u32; den.len()];
        let mut core = Frac::one();
        let mut acc = Frac::zero();
        for k in self.lo..=self.hi {
            for (p, cur) in num.iter().zip(num_len.iter_mut()) {
                let target = p.length_at(k)?;
                while *cur < target {
                    if !core.is_zero() {
                        core = core.mul_poly(&factor_at(&p.first, p.base, *cur));
                    }
                    *cur += 1;
                }
            }
            for (p, cur) in den.iter().zip(den_len.iter_mut()) {
                let target = p.length_at(k)?;
                while *cur < target {
                    let f = factor_at(&p.first, p.base, *cur);
                    if f.is_zero() {
                        return Err(Error::DenominatorVanishes(format!(
                            "factor {} of ({}; q^{})",
                            *cur, p.first, p.base
                        )));
                    }
                    core.divide_by_small(&f)?;
                    *cur += 1;
                }
            }
            if core.is_zero() {
                continue;
            }
            let extra = modes.apply_frac(&(self.extra)(k)?)?;
            acc.add_assign_raw(core.mul_raw(&extra));
        }
        Ok(acc)
    }
}

/// Truncated basic hypergeometric series
/// `sum_{k=0}^{N} prod(upper; q^d)_k / ((q^d; q^d)_k prod(lower; q^d)_k) z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSeriesSpec {
    pub upper: Vec<Term>,
    pub lower: Vec<Term>,
    pub base: i32,
    pub argument: Term,
    pub truncation: u32,
}

pub fn phi_truncated(spec: &PhiSeriesSpec) -> Result<Frac> {
    phi_truncated_with(spec, &Modes::symbolic())
}

pub fn phi_truncated_with(spec: &PhiSeriesSpec, modes: &Modes) -> Result<Frac> {
    let d = spec.base;
    let mut s = Series::new(0, spec.truncation as i64)
        .den(Poch::k(Term::monomial(crate::exact::Mono::q_pow(d)), d));
    for u in &spec.upper {
        s = s.num(Poch::k(u.clone(), d));
    }
    for l in &spec.lower {
        s = s.den(Poch::k(l.clone(), d));
    }
    let z = spec.argument.clone();
    let s = s.extra(move |k| Ok(Frac::from_term(z.pow(k))));
    s.build(modes)
}

