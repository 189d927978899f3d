use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{fmt_rat_coef, rat_pow, Mono, Rat, SubstValue, Term, Var};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial over the rationals in `(q, a, b, x)`.
///
/// Terms are stored sorted ascending by [`Mono`] with no zero coefficients,
/// so structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: Vec<(Mono, Rat)>,
}

/// Merges two sorted term lists, dropping cancelled coefficients.
fn merge(a: Vec<(Mono, Rat)>, b: Vec<(Mono, Rat)>) -> Vec<(Mono, Rat)> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            std::cmp::Ordering::Less => out.push(ia.next().unwrap()),
            std::cmp::Ordering::Greater => out.push(ib.next().unwrap()),
            std::cmp::Ordering::Equal => {
                let (m, c1) = ia.next().unwrap();
                let (_, c2) = ib.next().unwrap();
                let c = c1 + c2;
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

/// Sorts an arbitrary term list and combines equal monomials.
fn canonicalize(mut terms: Vec<(Mono, Rat)>) -> Vec<(Mono, Rat)> {
    terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
    let mut out: Vec<(Mono, Rat)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc += c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|(_, c)| c.is_zero()) {
        out.pop();
    }
    out
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        MPoly::from_term(Term::new(c, Mono::ONE))
    }

    pub fn int(c: i64) -> Self {
        MPoly::constant(super::rat(c))
    }

    pub fn var(v: Var) -> Self {
        MPoly::from_term(Term::monomial(Mono::var(v)))
    }

    pub fn monomial(m: Mono) -> Self {
        MPoly::from_term(Term::monomial(m))
    }

    pub fn from_term(t: Term) -> Self {
        if t.coef.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(t.mono, t.coef)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(terms: I) -> Self {
        MPoly { terms: canonicalize(terms.into_iter().collect()) }
    }

    /// `1 - t`.
    pub fn one_minus(t: &Term) -> Self {
        MPoly::from_terms([(Mono::ONE, Rat::one()), (t.mono, -t.coef.clone())])
    }

    /// `sum_i coeffs[i] * q^(offset + i*step)`.
    pub fn from_q_coeffs(coeffs: &[Rat], offset: i32, step: i32) -> Self {
        MPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Mono::q_pow(offset + step * i as i32), c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> + ExactSizeIterator {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn term(&self, i: usize) -> Term {
        let (m, c) = &self.terms[i];
        Term::new(c.clone(), *m)
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        match self.terms.binary_search_by(|(tm, _)| tm.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    /// Returns the single term if this is a monomial.
    pub fn as_term(&self) -> Option<Term> {
        (self.terms.len() == 1).then(|| self.term(0))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn is_univariate_q(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.only_q())
    }

    /// Componentwise minimum exponent over all terms (`ONE` for zero).
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.meet(m)),
        }
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    pub fn mul_term(&self, t: &Term) -> MPoly {
        if t.coef.is_zero() {
            return MPoly::zero();
        }
        let unit = t.coef.is_one();
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m + t.mono, if unit { c.clone() } else { c * &t.coef }))
                .collect(),
        }
    }

    pub fn shift(&self, m: Mono) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(tm, c)| (*tm + m, c.clone())).collect() }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        MPoly { terms: merge(self.terms.clone(), other.terms.clone()) }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        MPoly { terms: merge(self.terms.clone(), other.neg().terms) }
    }

    pub fn add_assign(&mut self, other: MPoly) {
        let mine = std::mem::take(&mut self.terms);
        self.terms = merge(mine, other.terms);
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        match small.len() {
            0 => MPoly::zero(),
            1 => big.mul_term(&small.term(0)),
            n if n <= 16 => {
                let mut acc = Vec::new();
                for (m, c) in &small.terms {
                    acc = merge(acc, big.mul_term(&Term::new(c.clone(), *m)).terms);
                }
                MPoly { terms: acc }
            }
            _ => {
                let mut all = Vec::with_capacity(small.len() * big.len());
                for (m1, c1) in &small.terms {
                    for (m2, c2) in &big.terms {
                        all.push((*m1 + *m2, c1 * c2));
                    }
                }
                MPoly { terms: canonicalize(all) }
            }
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn map_terms(&self, f: impl Fn(&Term) -> Term) -> MPoly {
        MPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| f(&Term::new(c.clone(), *m)))
                .filter(|t| !t.coef.is_zero())
                .map(|t| (t.mono, t.coef)),
        )
    }

    /// Replaces `var` by `±q^e` or by a rational constant.
    pub fn substitute(&self, var: Var, value: &SubstValue) -> MPoly {
        if !self.involves(var) {
            return self.clone();
        }
        self.map_terms(|t| t.substitute(var, value))
    }

    /// Replaces `var` by `c * q^shift * var`.
    pub fn rescale(&self, var: Var, c: &Rat, shift: i32) -> MPoly {
        if !self.involves(var) {
            return self.clone();
        }
        self.map_terms(|t| t.rescale(var, c, shift))
    }

    /// Replaces `q` by `sign * q^mult` (`mult` nonzero).
    pub fn dilate_q(&self, sign: i8, mult: i32) -> MPoly {
        assert!(mult != 0, "q cannot be replaced by a constant here");
        self.map_terms(|t| t.dilate_q(sign, mult))
    }

    /// Exact quotient `self / div` in the Laurent ring, or `None` when `div`
    /// does not divide `self`.
    pub fn exact_divide(&self, div: &MPoly) -> Result<Option<MPoly>> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(MPoly::zero()));
        }
        if let Some(t) = div.as_term() {
            return Ok(Some(self.mul_term(&t.recip())));
        }
        if div.len() == 2 && !self.binomial_remainder(div).is_zero() {
            return Ok(None);
        }
        Ok(self.long_divide(div))
    }

    pub fn divides(&self, num: &MPoly) -> bool {
        matches!(num.exact_divide(self), Ok(Some(_)))
    }

    /// Canonical remainder of `self` modulo a binomial.
    ///
    /// The binomial is rewritten (up to a unit) as `1 + c*v^k*w` with `k > 0`
    /// for some variable `v`, and every `v^k` is replaced by `-1/(c*w)`. The
    /// result has `v`-degree in `[0, k)` and is zero iff the binomial divides.
    pub fn binomial_remainder(&self, div: &MPoly) -> MPoly {
        assert_eq!(div.len(), 2, "binomial_remainder needs a two-term divisor");
        let (m1, c1) = &div.terms[0];
        let (m2, c2) = &div.terms[1];
        let mut u = *m2 - *m1;
        let mut c = c2 / c1;
        let v = Var::ALL.into_iter().find(|&v| u.exp(v) != 0).expect("distinct monomials");
        if u.exp(v) < 0 {
            u = -u;
            c = c.recip();
        }
        let k = u.exp(v);
        let w = u.with_exp(v, 0);
        let r_coef = -c.recip();
        let mut out = Vec::with_capacity(self.len());
        let mut pow_cache: BTreeMap<i32, Rat> = BTreeMap::new();
        for (m, coef) in &self.terms {
            let e = m.exp(v);
            let t = e.div_euclid(k);
            let rho = e.rem_euclid(k);
            let mono = m.with_exp(v, rho) + (-w).pow(t);
            let scale = pow_cache.entry(t).or_insert_with(|| rat_pow(&r_coef, t as i64));
            out.push((mono, coef * &*scale));
        }
        MPoly { terms: canonicalize(out) }
    }

    /// Multivariate division in lex order after shifting both operands to
    /// ordinary polynomials. Exact iff the remainder is zero; the first term
    /// that cannot be reduced proves non-divisibility.
    fn long_divide(&self, div: &MPoly) -> Option<MPoly> {
        let nm = self.min_mono();
        let dm = div.min_mono();
        let divisor = div.shift(-dm);
        let (lead_m, lead_c) = divisor.terms.last().cloned().unwrap();
        let lead_inv = lead_c.recip();
        let mut rem: BTreeMap<Mono, Rat> =
            self.terms.iter().map(|(m, c)| (*m - nm, c.clone())).collect();
        let mut quot: Vec<(Mono, Rat)> = Vec::new();
        while let Some((&m, c)) = rem.last_key_value() {
            if !lead_m.divides(&m) {
                return None;
            }
            let tm = m - lead_m;
            let tc = c * &lead_inv;
            for (dmono, dc) in &divisor.terms {
                let key = *dmono + tm;
                let delta = dc * &tc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((tm, tc));
        }
        quot.reverse();
        Some(MPoly { terms: quot }.shift(nm - dm))
    }
}

impl fmt::Display for MPoly {
    /// Canonical text: terms in ascending monomial order, explicit signs,
    /// `q^-2` style exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_rat_coef(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rat_coef(&abs))?;
            }
        }
        Ok(())
    }
}
