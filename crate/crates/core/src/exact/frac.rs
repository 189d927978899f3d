use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Mono, MPoly, Rat, SubstValue, Term, UPoly, Var};
use crate::error::{Error, Result};

/// Canonical denominator factor `1 + coef * mono`, `mono` lex-positive.
///
/// Every nonzero two-term Laurent polynomial is a unit times exactly one
/// such binomial, so equal factors are detected structurally.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    pub mono: Mono,
    pub coef: Rat,
}

impl Binomial {
    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_terms([(Mono::ONE, Rat::one()), (self.mono, self.coef.clone())])
    }

    /// Splits a polynomial with at most two terms into `unit * factor`.
    pub fn split(p: &MPoly) -> Result<(Term, Option<Binomial>)> {
        match p.len() {
            0 => Err(Error::DivisionByZero),
            1 => Ok((p.term(0), None)),
            2 => {
                let lo = p.term(0);
                let hi = p.term(1);
                let b = Binomial { mono: hi.mono - lo.mono, coef: &hi.coef / &lo.coef };
                Ok((lo, Some(b)))
            }
            _ => Err(Error::NotBinomial(p.to_string())),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_mpoly().fmt(f)
    }
}

/// Rational function `unit * num / prod(den_i ^ m_i)`.
///
/// Denominators stay factored as canonical binomials; monomials are units of
/// the Laurent ring and live in `unit`. Equality is decided by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct Frac {
    unit: Term,
    num: MPoly,
    den: BTreeMap<Binomial, u32>,
}

/// A univariate fraction `num / den` of ordinary polynomials. `shift` records
/// the power of `q` that was moved into both to clear negative exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UFrac {
    pub num: UPoly,
    pub den: UPoly,
    pub shift: i64,
}

impl Frac {
    pub fn zero() -> Self {
        Frac::from_poly(MPoly::zero())
    }

    pub fn one() -> Self {
        Frac::from_poly(MPoly::one())
    }

    pub fn from_poly(num: MPoly) -> Self {
        Frac { unit: Term::one(), num, den: BTreeMap::new() }
    }

    pub fn from_term(t: Term) -> Self {
        Frac::from_poly(MPoly::from_term(t))
    }

    pub fn constant(c: Rat) -> Self {
        Frac::from_poly(MPoly::constant(c))
    }

    /// `num / prod(dens)`; each denominator must be a nonzero monomial or
    /// binomial.
    pub fn new<I: IntoIterator<Item = MPoly>>(num: MPoly, dens: I) -> Result<Self> {
        let mut f = Frac::from_poly(num);
        for d in dens {
            f.divide_by_small(&d)?;
        }
        Ok(f.normalize())
    }

    /// Divides in place by a monomial or binomial without normalizing.
    pub(crate) fn divide_by_small(&mut self, d: &MPoly) -> Result<()> {
        let (unit, b) = Binomial::split(d)?;
        self.unit = self.unit.mul(&unit.recip());
        if let Some(b) = b {
            *self.den.entry(b).or_insert(0) += 1;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn unit(&self) -> &Term {
        &self.unit
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> impl Iterator<Item = (&Binomial, u32)> {
        self.den.iter().map(|(b, m)| (b, *m))
    }

    pub fn has_trivial_den(&self) -> bool {
        self.den.is_empty()
    }

    /// Numerator with the unit multiplied in.
    pub fn numerator(&self) -> MPoly {
        self.num.mul_term(&self.unit)
    }

    /// Expanded product of the denominator factors.
    pub fn denominator(&self) -> MPoly {
        let mut d = MPoly::one();
        for (b, m) in &self.den {
            let bp = b.to_mpoly();
            for _ in 0..*m {
                d = d.mul(&bp);
            }
        }
        d
    }

    pub fn involves(&self, v: Var) -> bool {
        self.unit.mono.exp(v) != 0
            || self.num.involves(v)
            || self.den.keys().any(|b| b.mono.exp(v) != 0)
    }

    pub fn is_univariate_q(&self) -> bool {
        Var::ALL[1..].iter().all(|&v| !self.involves(v))
    }

    pub fn neg(&self) -> Frac {
        let mut f = self.clone();
        f.unit.coef = -f.unit.coef;
        f
    }

    pub fn mul_term(&self, t: &Term) -> Frac {
        if t.is_zero() {
            return Frac::zero();
        }
        let mut f = self.clone();
        f.unit = f.unit.mul(t);
        f
    }

    pub fn mul_poly(&self, p: &MPoly) -> Frac {
        let mut f = self.clone();
        f.num = f.num.mul(p);
        f
    }

    pub fn add(&self, other: &Frac) -> Frac {
        self.add_raw(other).normalize()
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add_raw(&other.neg()).normalize()
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        self.mul_raw(other).normalize()
    }

    /// `1 / self`; the numerator must factor as a unit times one binomial.
    pub fn recip(&self) -> Result<Frac> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = MPoly::one();
        for (b, m) in &self.den {
            for _ in 0..*m {
                num = num.mul(&b.to_mpoly());
            }
        }
        let mut f = Frac::from_poly(num);
        f.unit = self.unit.recip();
        f.divide_by_small(&self.num)?;
        Ok(f.normalize())
    }

    pub(crate) fn mul_raw(&self, other: &Frac) -> Frac {
        if self.is_zero() || other.is_zero() {
            return Frac::zero();
        }
        let mut den = self.den.clone();
        for (b, m) in &other.den {
            *den.entry(b.clone()).or_insert(0) += m;
        }
        Frac { unit: self.unit.mul(&other.unit), num: self.num.mul(&other.num), den }
    }

    /// Sum over the lcm of the two factored denominators, without
    /// cancellation.
    pub(crate) fn add_raw(&self, other: &Frac) -> Frac {
        let mut out = self.clone();
        out.add_assign_raw(other.clone());
        out
    }

    pub(crate) fn add_assign_raw(&mut self, other: Frac) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other;
            return;
        }
        let mut lcm = self.den.clone();
        for (b, m) in &other.den {
            let e = lcm.entry(b.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let mine = std::mem::take(&mut self.num);
        let mine = mul_cofactor(mine, &lcm, &self.den);
        let theirs = mul_cofactor(other.num, &lcm, &other.den);
        let ratio = other.unit.mul(&self.unit.recip());
        let mut num = mine;
        num.add_assign(theirs.mul_term(&ratio));
        self.num = num;
        self.den = lcm;
        if self.num.is_zero() {
            *self = Frac::zero();
        }
    }

    /// Cancels denominator factors dividing the numerator, then moves the
    /// numerator's monomial content into the unit.
    pub fn normalize(&self) -> Frac {
        if self.num.is_zero() {
            return Frac::zero();
        }
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        for (b, m) in &self.den {
            let bp = b.to_mpoly();
            let mut left = *m;
            while left > 0 {
                match num.exact_divide(&bp).expect("binomials are nonzero") {
                    Some(qt) => {
                        num = qt;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.insert(b.clone(), left);
            }
        }
        let content = num.min_mono();
        let num = num.shift(-content);
        let unit = Term::new(self.unit.coef.clone(), self.unit.mono + content);
        Frac { unit, num, den }
    }

    fn map_parts(
        &self,
        f_term: impl Fn(&Term) -> Term,
        f_poly: impl Fn(&MPoly) -> MPoly,
    ) -> Result<Frac> {
        let mut unit = f_term(&self.unit);
        let num = f_poly(&self.num);
        let mut den = BTreeMap::new();
        for (b, m) in &self.den {
            let p = f_poly(&b.to_mpoly());
            if p.is_zero() {
                return Err(Error::DenominatorVanishes(b.to_string()));
            }
            let (u, nb) = Binomial::split(&p)?;
            unit = unit.mul(&u.pow(-(*m as i64)));
            if let Some(nb) = nb {
                *den.entry(nb).or_insert(0) += m;
            }
        }
        if unit.coef.is_zero() || num.is_zero() {
            return Ok(Frac::zero());
        }
        Ok(Frac { unit, num, den })
    }

    /// Substitution without the final cancellation pass.
    pub(crate) fn substitute_raw(&self, var: Var, value: &SubstValue) -> Result<Frac> {
        if !self.involves(var) {
            return Ok(self.clone());
        }
        self.map_parts(|t| t.substitute(var, value), |p| p.substitute(var, value))
    }

    /// Substitutes `var := ±q^e` (or a constant) everywhere and re-normalizes.
    /// Fails with `DenominatorVanishes` if a denominator factor becomes zero.
    pub fn substitute(&self, var: Var, value: &SubstValue) -> Result<Frac> {
        Ok(self.substitute_raw(var, value)?.normalize())
    }

    /// `var := c * q^shift * var`.
    pub fn rescale(&self, var: Var, c: &Rat, shift: i32) -> Result<Frac> {
        Ok(self
            .map_parts(|t| t.rescale(var, c, shift), |p| p.rescale(var, c, shift))?
            .normalize())
    }

    /// `q := sign * q^mult`.
    pub fn dilate_q(&self, sign: i8, mult: i32) -> Result<Frac> {
        Ok(self.map_parts(|t| t.dilate_q(sign, mult), |p| p.dilate_q(sign, mult))?.normalize())
    }

    /// Univariate `(num, den)` with nonnegative exponents.
    pub fn to_upoly(&self) -> Result<UFrac> {
        if !self.is_univariate_q() {
            return Err(Error::NonUnivariate);
        }
        let num = UPoly::from_mpoly(&self.numerator())?;
        let den = UPoly::from_mpoly(&self.denominator())?;
        let low = num.valuation().min(den.valuation()).min(0);
        let shift = -low;
        Ok(UFrac { num: num.shift(shift), den: den.shift(shift), shift })
    }
}

/// Multiplies `num` by `lcm / den` (multiset difference of binomials).
fn mul_cofactor(
    mut num: MPoly,
    lcm: &BTreeMap<Binomial, u32>,
    den: &BTreeMap<Binomial, u32>,
) -> MPoly {
    for (b, m) in lcm {
        let have = den.get(b).copied().unwrap_or(0);
        if *m > have {
            let bp = b.to_mpoly();
            for _ in have..*m {
                num = num.mul(&bp);
            }
        }
    }
    num
}

impl PartialEq for Frac {
    fn eq(&self, other: &Frac) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        // Cross-multiply by the factors not shared by both denominators.
        let mut lhs = self.num.mul_term(&self.unit);
        let mut rhs = other.num.mul_term(&other.unit);
        for (b, m) in &other.den {
            let have = self.den.get(b).copied().unwrap_or(0);
            for _ in have.min(*m)..*m {
                lhs = lhs.mul(&b.to_mpoly());
            }
        }
        for (b, m) in &self.den {
            let have = other.den.get(b).copied().unwrap_or(0);
            for _ in have.min(*m)..*m {
                rhs = rhs.mul(&b.to_mpoly());
            }
        }
        lhs == rhs
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        if self.den.is_empty() {
            return num.fmt(f);
        }
        write!(f, "({num})/(")?;
        for (i, (b, m)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *m == 1 {
                write!(f, "({b})")?;
            } else {
                write!(f, "({b})^{m}")?;
            }
        }
        f.write_str(")")
    }
}

impl From<MPoly> for Frac {
    fn from(p: MPoly) -> Self {
        Frac::from_poly(p)
    }
}

impl Zero for Frac {
    fn zero() -> Self {
        Frac::zero()
    }
    fn is_zero(&self) -> bool {
        Frac::is_zero(self)
    }
}

impl std::ops::Add for Frac {
    type Output = Frac;
    fn add(self, rhs: Frac) -> Frac {
        Frac::add(&self, &rhs)
    }
}
