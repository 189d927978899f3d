use std::fmt;

use num_traits::{One, Zero};

use super::{MPoly, Mono, Rat, Var};
use crate::error::{Error, Result};

/// Dense Laurent polynomial in `q`: `sum_i coeffs[i] * q^(val + i)`.
///
/// The first and last stored coefficients are nonzero; zero has no
/// coefficients and valuation 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    val: i64,
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(val: i64, coeffs: Vec<Rat>) -> Self {
        let mut p = UPoly { val, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UPoly { val: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(0, vec![c])
    }

    /// Ordinary polynomial from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(0, coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    /// `c * q^e`.
    pub fn monomial(c: Rat, e: i64) -> Self {
        UPoly::new(e, vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.val = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.val += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present.
    pub fn valuation(&self) -> i64 {
        self.val
    }

    /// Highest exponent present (`-1` style sentinel `i64::MIN` for zero).
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.val + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, e: i64) -> Rat {
        let i = e - self.val;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Rat::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn neg(&self) -> UPoly {
        UPoly { val: self.val, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::new(self.val, self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn shift(&self, e: i64) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        UPoly { val: self.val + e, coeffs: self.coeffs.clone() }
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.val.min(other.val);
        let hi = self.degree().max(other.degree());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + other.coeff(e)).collect();
        UPoly::new(lo, coeffs)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UPoly::new(self.val + other.val, out)
    }

    pub fn pow(&self, k: u32) -> UPoly {
        (0..k).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    /// Substitutes `q -> q^d`.
    pub fn dilate(&self, d: i64) -> UPoly {
        assert!(d > 0);
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len() - 1) * d as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d as usize] = c.clone();
        }
        UPoly::new(self.val * d, coeffs)
    }

    /// Substitutes `q -> -q`.
    pub fn negate_q(&self) -> UPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.val + i as i64).rem_euclid(2) == 1 { -c } else { c.clone() })
            .collect();
        UPoly::new(self.val, coeffs)
    }

    /// Euclidean division of ordinary polynomials: `self = quot*d + rem`
    /// with `deg rem < deg d`.
    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.val < 0 || d.val < 0 {
            return Err(Error::NegativeValuation);
        }
        let n = self.to_dense();
        let dd = d.to_dense();
        if n.len() < dd.len() {
            return Ok((UPoly::zero(), self.clone()));
        }
        let lead_inv = dd.last().unwrap().recip();
        let mut rem = n;
        let qlen = rem.len() - dd.len() + 1;
        let mut quot = vec![Rat::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd.len() - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in dd.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd.len() - 1);
        Ok((UPoly::new(0, quot), UPoly::new(0, rem)))
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &UPoly) -> Result<Option<UPoly>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(UPoly::zero()));
        }
        // q is a unit in the Laurent ring: strip valuations first.
        let (q, r) = self.shift(-self.val).divrem(&d.shift(-d.val))?;
        Ok(r.is_zero().then(|| q.shift(self.val - d.val)))
    }

    /// Number of times `p` divides `self` (`self` nonzero), and the cofactor.
    pub fn valuation_at(&self, p: &UPoly) -> Result<(u32, UPoly)> {
        assert!(!self.is_zero(), "valuation of zero");
        let mut count = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_exact(p)? {
            count += 1;
            cur = next;
        }
        Ok((count, cur))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lead().recip())
    }

    /// Monic greatest common divisor over the rationals (`gcd(0, 0) = 0`).
    pub fn gcd(&self, other: &UPoly) -> Result<UPoly> {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    fn to_dense(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.val as usize];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// Evaluation at a rational point (`q` must be nonzero if the valuation
    /// is negative).
    pub fn eval(&self, q: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc * super::rat_pow(q, self.val)
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Mono::q_pow((self.val + i as i64) as i32), c.clone())),
        )
    }

    pub fn from_mpoly(p: &MPoly) -> Result<UPoly> {
        if !p.is_univariate_q() {
            return Err(Error::NonUnivariate);
        }
        if p.is_zero() {
            return Ok(UPoly::zero());
        }
        let lo = p.terms().next().unwrap().0.exp(Var::Q) as i64;
        let hi = p.terms().next_back().unwrap().0.exp(Var::Q) as i64;
        let mut coeffs = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (m, c) in p.terms() {
            coeffs[(m.exp(Var::Q) as i64 - lo) as usize] = c.clone();
        }
        Ok(UPoly::new(lo, coeffs))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_mpoly().fmt(f)
    }
}
