use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{fmt_rat_coef, rat_pow, Rat, SubstValue};

/// The four formal variables, in their fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    A,
    B,
    X,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::A, Var::B, Var::X];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::A => "a",
            Var::B => "b",
            Var::X => "x",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Laurent monomial `q^e0 a^e1 b^e2 x^e3`.
///
/// The derived ordering is lexicographic on `(e_q, e_a, e_b, e_x)`; it is a
/// monomial order (translation invariant), so shifting a sorted term list
/// by a monomial keeps it sorted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub [i32; 4]);

impl Mono {
    pub const ONE: Mono = Mono([0; 4]);

    pub fn var(v: Var) -> Mono {
        Mono::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Mono {
        let mut m = Mono::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn q_pow(e: i32) -> Mono {
        Mono::var_pow(Var::Q, e)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: i32) -> Mono {
        self.0[v.index()] = e;
        self
    }

    pub fn is_one(&self) -> bool {
        *self == Mono::ONE
    }

    pub fn pow(&self, k: i32) -> Mono {
        Mono(self.0.map(|e| e * k))
    }

    /// Componentwise minimum (the monomial gcd in the Laurent sense).
    pub fn meet(&self, other: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..4 {
            m.0[i] = m.0[i].min(other.0[i]);
        }
        m
    }

    pub fn divides(&self, other: &Mono) -> bool {
        (0..4).all(|i| self.0[i] <= other.0[i])
    }

    /// True when the first nonzero exponent is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0.iter().find(|&&e| e != 0).is_some_and(|&e| e > 0)
    }

    pub fn only_q(&self) -> bool {
        self.0[1..].iter().all(|&e| e == 0)
    }
}

impl Add for Mono {
    type Output = Mono;
    fn add(self, rhs: Mono) -> Mono {
        Mono([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }
}

impl Sub for Mono {
    type Output = Mono;
    fn sub(self, rhs: Mono) -> Mono {
        self + (-rhs)
    }
}

impl Neg for Mono {
    type Output = Mono;
    fn neg(self) -> Mono {
        Mono(self.0.map(|e| -e))
    }
}

impl fmt::Display for Mono {
    /// `q^-2*a*x^3`; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A single coefficient-times-monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub coef: Rat,
    pub mono: Mono,
}

impl Term {
    pub fn new(coef: Rat, mono: Mono) -> Self {
        Term { coef, mono }
    }

    pub fn one() -> Self {
        Term::new(super::rat(1), Mono::ONE)
    }

    pub fn monomial(mono: Mono) -> Self {
        Term::new(super::rat(1), mono)
    }

    pub fn int(c: i64, mono: Mono) -> Self {
        Term::new(super::rat(c), mono)
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term::new(&self.coef * &other.coef, self.mono + other.mono)
    }

    /// Inverse in the Laurent ring. Panics on a zero coefficient.
    pub fn recip(&self) -> Term {
        Term::new(self.coef.recip(), -self.mono)
    }

    pub fn pow(&self, k: i64) -> Term {
        Term::new(rat_pow(&self.coef, k), self.mono.pow(k as i32))
    }

    pub fn is_zero(&self) -> bool {
        super::is_zero(&self.coef)
    }

    /// Substitutes `var := value` in this term.
    pub fn substitute(&self, var: Var, value: &SubstValue) -> Term {
        let e = self.mono.exp(var);
        if e == 0 {
            return self.clone();
        }
        let base = self.mono.with_exp(var, 0);
        let v = value.as_term();
        if super::is_zero(&v.coef) {
            // 0^e: zero for positive e; negative powers of zero are rejected.
            assert!(e > 0, "negative power of a parameter substituted by zero");
            return Term::new(super::rat(0), Mono::ONE);
        }
        Term::new(&self.coef * rat_pow(&v.coef, e as i64), base + v.mono.pow(e))
    }

    /// `var := c * q^shift * var`.
    pub fn rescale(&self, var: Var, c: &Rat, shift: i32) -> Term {
        let e = self.mono.exp(var);
        if e == 0 {
            return self.clone();
        }
        let mut mono = self.mono;
        mono.0[0] += shift * e;
        Term::new(&self.coef * rat_pow(c, e as i64), mono)
    }

    /// `q := sign * q^mult`.
    pub fn dilate_q(&self, sign: i8, mult: i32) -> Term {
        let e = self.mono.exp(Var::Q);
        let mut coef = self.coef.clone();
        if sign < 0 && e.rem_euclid(2) == 1 {
            coef = -coef;
        }
        Term::new(coef, self.mono.with_exp(Var::Q, e * mult))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str(&fmt_rat_coef(&self.coef));
        }
        let one = super::rat(1);
        if self.coef == one {
            write!(f, "{}", self.mono)
        } else if self.coef == -one {
            write!(f, "-{}", self.mono)
        } else {
            write!(f, "{}*{}", fmt_rat_coef(&self.coef), self.mono)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_is_q_first() {
        let q = Mono::var(Var::Q);
        let a = Mono::var(Var::A);
        assert!(a < q);
        assert!(Mono::q_pow(-2) < Mono::ONE);
        assert!(Mono::ONE < a);
    }

    #[test]
    fn display() {
        let m = Mono([-2, 1, 0, 3]);
        assert_eq!(m.to_string(), "q^-2*a*x^3");
        assert_eq!(Mono::ONE.to_string(), "1");
    }

    #[test]
    fn lex_positive() {
        assert!(Mono([0, 1, -5, 0]).is_lex_positive());
        assert!(!Mono([-1, 3, 0, 0]).is_lex_positive());
        assert!(!Mono::ONE.is_lex_positive());
    }
}
