use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{Frac, MPoly, Mono, Term, Var};
use crate::qkit::{parity_sign, pochhammer, qbinom, PochSpec};

use super::series::{phi_truncated_with, PhiSeriesSpec};
use super::statements::{q, vq};
use super::{Modes, Poch, Series};

/// Terminating summation formulas used as independent oracles.
///
/// Free parameters map onto the formal variables: the first one is `a`, the
/// second `b`, and a third (`c`) is carried by `x` (`b` for the two-parameter
/// q-Chu-Vandermonde formula).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalIdentity {
    QChuVandermonde,
    QPfaffSaalschutz,
    AndrewsQWatson,
    QGaussTerminating,
    QBinomialTheorem,
}

impl ClassicalIdentity {
    pub const ALL: [ClassicalIdentity; 5] = [
        ClassicalIdentity::QChuVandermonde,
        ClassicalIdentity::QPfaffSaalschutz,
        ClassicalIdentity::AndrewsQWatson,
        ClassicalIdentity::QGaussTerminating,
        ClassicalIdentity::QBinomialTheorem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalIdentity::QChuVandermonde => "q-chu-vandermonde",
            ClassicalIdentity::QPfaffSaalschutz => "q-pfaff-saalschutz",
            ClassicalIdentity::AndrewsQWatson => "andrews-q-watson",
            ClassicalIdentity::QGaussTerminating => "q-gauss-terminating",
            ClassicalIdentity::QBinomialTheorem => "q-binomial-theorem",
        }
    }
}

impl fmt::Display for ClassicalIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassicalIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassicalIdentity::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

fn mono(a: i32, b: i32, x: i32, qe: i32) -> Mono {
    Mono([qe, a, b, x])
}

fn poch(first: Term, base: i32, len: i64) -> MPoly {
    pochhammer(&PochSpec::new(first, base, len as u32)).numerator()
}

fn poch_ratio(num: &[(Term, i32)], den: &[(Term, i32)], len: i64) -> Result<Frac> {
    let p = num.iter().fold(MPoly::one(), |acc, (t, b)| acc.mul(&poch(t.clone(), *b, len)));
    let mut f = Frac::from_poly(p);
    for (t, b) in den {
        let spec = PochSpec::new(t.clone(), *b, len as u32);
        for j in 0..len as u32 {
            f.divide_by_small(&spec.factor(j))?;
        }
    }
    Ok(f.normalize())
}

/// Both sides of one instance. `j` is only read by the terminating q-Gauss
/// sum, where it ranges over `0..=n`.
pub fn classical_identity_sides(id: ClassicalIdentity, n: i64, j: i64, modes: &Modes) -> Result<(Frac, Frac)> {
    if n < 0 {
        return Err(Error::Constraint(format!("n must be non-negative, got {n}")));
    }
    let a = Term::monomial(Mono::var(Var::A));
    let b = Term::monomial(Mono::var(Var::B));
    let (lhs, rhs) = match id {
        ClassicalIdentity::QChuVandermonde => {
            // 2phi1(a, q^-n; c; q, q) = (c/a;q)_n a^n / (c;q)_n with c = b.
            let spec = PhiSeriesSpec { upper: vec![a.clone(), q(-n)], lower: vec![b.clone()], base: 1, argument: q(1), truncation: n as u32 };
            let lhs = phi_truncated_with(&spec, &Modes::symbolic())?;
            let rhs = poch_ratio(&[(Term::monomial(mono(-1, 1, 0, 0)), 1)], &[(b, 1)], n)?
                .mul_term(&Term::monomial(Mono::var_pow(Var::A, n as i32)));
            (lhs, rhs)
        }
        ClassicalIdentity::QPfaffSaalschutz => {
            // 3phi2(q^-n, a, b; c, ab q^(1-n)/c; q, q) with c = x.
            let c = Term::monomial(Mono::var(Var::X));
            let low = Term::monomial(mono(1, 1, -1, 1 - n as i32));
            let spec = PhiSeriesSpec { upper: vec![q(-n), a, b], lower: vec![c.clone(), low], base: 1, argument: q(1), truncation: n as u32 };
            let lhs = phi_truncated_with(&spec, &Modes::symbolic())?;
            let rhs = poch_ratio(
                &[(Term::monomial(mono(-1, 0, 1, 0)), 1), (Term::monomial(mono(0, -1, 1, 0)), 1)],
                &[(c, 1), (Term::monomial(mono(-1, -1, 1, 0)), 1)],
                n,
            )?;
            (lhs, rhs)
        }
        ClassicalIdentity::AndrewsQWatson => {
            let spec = PhiSeriesSpec {
                upper: vec![q(-n), Term::monomial(mono(2, 0, 0, n as i32 + 1)), b.clone(), b.mul(&Term::int(-1, Mono::ONE))],
                lower: vec![vq(1, Var::A, 1), vq(-1, Var::A, 1), Term::monomial(Mono::var_pow(Var::B, 2))],
                base: 1,
                argument: q(1),
                truncation: n as u32,
            };
            let lhs = phi_truncated_with(&spec, &Modes::symbolic())?;
            let rhs = if n % 2 == 1 {
                Frac::zero()
            } else {
                poch_ratio(
                    &[(q(1), 2), (Term::monomial(mono(2, -2, 0, 2)), 2)],
                    &[(Term::monomial(mono(2, 0, 0, 2)), 2), (Term::monomial(mono(0, 2, 0, 1)), 2)],
                    n / 2,
                )?
                .mul_term(&Term::monomial(Mono::var_pow(Var::B, n as i32)))
            };
            (lhs, rhs)
        }
        ClassicalIdentity::QGaussTerminating => {
            if !(0..=n).contains(&j) {
                return Err(Error::Constraint(format!("need 0 <= j <= n, got j={j}, n={n}")));
            }
            let lower = vq(1, Var::B, 2 * j + 1 - n);
            let lhs = Series::new(0, n - j)
                .num(Poch::k(q(j - n), 1))
                .num(Poch::k(vq(1, Var::B, j), 1))
                .den(Poch::k(q(1), 1))
                .den(Poch::k(lower.clone(), 2))
                .extra(|k| Ok(Frac::from_term(q(k * (k + 1) / 2))))
                .build(&Modes::symbolic())?;
            let rhs = if (n - j) % 2 == 0 {
                let half = (n - j) / 2;
                let mut f = Frac::from_poly(poch(q(j + 1 - n), 2, half));
                let spec = PochSpec::new(lower, 2, half as u32);
                for i in 0..half as u32 {
                    f.divide_by_small(&spec.factor(i))?;
                }
                f.normalize()
            } else {
                Frac::zero()
            };
            (lhs, rhs)
        }
        ClassicalIdentity::QBinomialTheorem => {
            let x = Term::monomial(Mono::var(Var::X));
            let lhs = Frac::from_poly(poch(x, 1, n));
            let mut sum = MPoly::zero();
            for k in 0..=n {
                let t = Term::int(parity_sign(k), mono(0, 0, k as i32, (k * (k - 1) / 2) as i32));
                sum.add_assign(qbinom(n, k, 1).to_mpoly().mul_term(&t));
            }
            (lhs, Frac::from_poly(sum))
        }
    };
    Ok((modes.apply(&lhs)?, modes.apply(&rhs)?))
}

/// Checks one identity at `n` (every `j` in `0..=n` for the terminating
/// q-Gauss sum).
pub fn classical_identity_check(id: ClassicalIdentity, n: i64, modes: &Modes) -> Result<bool> {
    let js: Vec<i64> = if id == ClassicalIdentity::QGaussTerminating { (0..=n).collect() } else { vec![0] };
    for j in js {
        let (l, r) = classical_identity_sides(id, n, j, modes)?;
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}
