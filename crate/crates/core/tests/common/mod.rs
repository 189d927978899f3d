//! Generators and property checks shared by the property suite and the
//! acceptance run.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qcongruence::exact::{rat, ratio, Frac, MPoly, Mono, SignedPower, SubstValue, Term, UPoly, Var};
use qcongruence::qkit::{cyclotomic, least_nonneg_residue, little_q_legendre, qbinom, LegendreExpansion};
use qcongruence::sums::{classical_identity_check, ClassicalIdentity, Modes};

pub type Check = std::result::Result<(), TestCaseError>;

pub fn mono() -> impl Strategy<Value = Mono> {
    (-3..4i32, -2..3i32, -2..3i32, -2..3i32).prop_map(|(q, a, b, x)| Mono([q, a, b, x]))
}

pub fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((mono(), -4..5i64), 0..5)
        .prop_map(|ts| MPoly::from_terms(ts.into_iter().map(|(m, c)| (m, rat(c)))))
}

/// Monomials and binomials that never vanish identically.
pub fn small_den() -> impl Strategy<Value = MPoly> {
    (prop::sample::select(vec![Var::Q, Var::A, Var::B, Var::X]), 1..4i32, prop::bool::ANY, -2..3i32).prop_map(
        |(v, e, plus, shift)| {
            let m = Mono::var_pow(v, e) + Mono::q_pow(shift);
            let t = Term::int(if plus { 1 } else { -1 }, m);
            MPoly::one().add(&MPoly::from_term(t))
        },
    )
    .prop_filter("nonzero", |p| !p.is_zero())
}

pub fn frac() -> impl Strategy<Value = Frac> {
    (mpoly(), prop::collection::vec(small_den(), 0..3))
        .prop_map(|(n, ds)| Frac::new(n, ds).expect("nonzero denominators"))
}

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

pub fn ring_laws(a: &MPoly, b: &MPoly, c: &MPoly) -> Check {
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert!(a.sub(a).is_zero());
    prop_assert_eq!(a.mul(&MPoly::one()), a.clone());
    prop_assert_eq!(a.add(&MPoly::zero()), a.clone());
    Ok(())
}

pub fn exact_division(a: &MPoly, b: &MPoly) -> Check {
    if !b.is_zero() {
        prop_assert_eq!(a.mul(b).exact_divide(b).unwrap(), Some(a.clone()));
    }
    Ok(())
}

pub fn frac_laws(f: &Frac, g: &Frac) -> Check {
    let nf = f.normalize();
    prop_assert_eq!(nf.normalize().to_string(), nf.to_string());
    prop_assert_eq!(f.add(g).sub(g), f.clone());
    prop_assert_eq!(f.add(g), g.add(f));
    prop_assert_eq!(f.mul(g), g.mul(f));
    // Equality agrees with comparing expanded cross products.
    let cross = f.numerator().mul(&g.denominator()).sub(&g.numerator().mul(&f.denominator()));
    prop_assert_eq!(f == g, cross.is_zero());
    // Reciprocals exist when the numerator is a product of small factors.
    if f.num().len() <= 2 && !f.is_zero() {
        prop_assert_eq!(f.mul(&f.recip().unwrap()), Frac::one());
    }
    Ok(())
}

/// Substitution is a ring homomorphism wherever it is defined.
pub fn substitution_homomorphism(f: &Frac, g: &Frac, sign: bool, e: i32) -> Check {
    let v = SubstValue::Power(SignedPower::new(if sign { 1 } else { -1 }, e));
    let s = |h: &Frac| h.substitute(Var::A, &v);
    if let (Ok(sf), Ok(sg)) = (s(f), s(g)) {
        prop_assert_eq!(s(&f.mul(g)).unwrap(), sf.mul(&sg));
        prop_assert_eq!(s(&f.add(g)).unwrap(), sf.add(&sg));
    }
    Ok(())
}

/// Polynomials in `q` (non-negative valuation).
pub fn upoly() -> impl Strategy<Value = UPoly> {
    (prop::collection::vec(-5..6i64, 0..7), 0..4i64)
        .prop_map(|(cs, val)| UPoly::new(val, cs.into_iter().map(rat).collect()))
}

pub fn division_identity(a: &UPoly, b: &UPoly) -> Check {
    if b.is_zero() {
        return Ok(());
    }
    let (quo, rem) = a.divrem(b).unwrap();
    prop_assert_eq!(quo.mul(b).add(&rem), a.clone());
    Ok(())
}

/// `<x>_m` against a search over `[0, m)`.
pub fn residues_by_search(max_m: u64) -> Check {
    for m in 1..=max_m {
        for num in -12i64..=12 {
            for den in 1i64..=12 {
                let x = ratio(num, den);
                let got = least_nonneg_residue(&x, m);
                let coprime = x.denom().gcd(&BigInt::from(m)) == BigInt::from(1);
                if !coprime {
                    prop_assert!(got.is_err(), "{x} mod {m}");
                    continue;
                }
                let (xn, xd) = (x.numer().clone(), x.denom().clone());
                let mb = BigInt::from(m);
                let t = (0..m)
                    .find(|&t| ((&xd * BigInt::from(t) - &xn) % &mb) == BigInt::from(0))
                    .expect("inverse exists");
                prop_assert_eq!(got.unwrap(), t, "{} mod {}", x, m);
            }
        }
    }
    Ok(())
}

/// `prod_{d | n} Phi_d(q) = q^n - 1`.
pub fn cyclotomic_products(max_n: u64) -> Check {
    for n in 1..=max_n {
        let prod = (1..=n).filter(|d| n % d == 0).fold(UPoly::one(), |acc, d| acc.mul(&cyclotomic(d)));
        prop_assert_eq!(prod, UPoly::monomial(rat(1), n as i64).sub(&UPoly::one()), "n={}", n);
    }
    Ok(())
}

pub fn legendre_expansions(max_n: u32) -> Check {
    for base in [1, 2] {
        for n in 0..=max_n {
            let std = little_q_legendre(n, LegendreExpansion::Standard, base);
            for e in [LegendreExpansion::Signed, LegendreExpansion::New] {
                prop_assert_eq!(&little_q_legendre(n, e, base), &std, "n={} base={} {:?}", n, base, e);
            }
        }
    }
    Ok(())
}

pub fn classical_identities(max_n: i64) -> Check {
    for id in ClassicalIdentity::ALL {
        for n in 0..=max_n {
            prop_assert!(classical_identity_check(id, n, &Modes::symbolic()).unwrap(), "{} n={}", id, n);
        }
    }
    Ok(())
}

/// q-Pascal recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_pascal(max_n: i64) -> Check {
    for n in 1..=max_n {
        for k in 0..=n {
            let rhs = qbinom(n - 1, k - 1, 1).add(&qbinom(n - 1, k, 1).shift(k));
            prop_assert_eq!(qbinom(n, k, 1), rhs, "n={} k={}", n, k);
        }
    }
    Ok(())
}
