use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Classical truncated sums with rational values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegerSum {
    /// `sum_{k=0}^{p-1} C(2k,k)^2 / 16^k`
    Rv,
    /// `sum_{k=0}^{p-1} C(4k,2k) C(2k,k)^2 (8k+1) / (2^8k 3^2k)`
    Ram1a,
    /// `sum_{k=0}^{p^r-1} C(2k,k) / 2^k`
    SunTauraso,
}

impl IntegerSum {
    pub fn name(self) -> &'static str {
        match self {
            IntegerSum::Rv => "rv",
            IntegerSum::Ram1a => "ram1a",
            IntegerSum::SunTauraso => "sun-tauraso",
        }
    }
}

impl fmt::Display for IntegerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntegerSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [IntegerSum::Rv, IntegerSum::Ram1a, IntegerSum::SunTauraso]
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| p % i != 0)
}

fn central(k: u64) -> BigInt {
    binomial(BigInt::from(2 * k), BigInt::from(k))
}

/// Exact value of the named sum. `extra` is the exponent `r` for the
/// sun-tauraso sum and ignored otherwise.
pub fn integer_sum(name: IntegerSum, p: u64, extra: u32) -> Result<Rat> {
    if p == 2 || !is_prime(p) {
        return Err(Error::Constraint(format!("p must be an odd prime, got {p}")));
    }
    let mut acc = Rat::zero();
    match name {
        IntegerSum::Rv => {
            let mut pow = BigInt::one();
            for k in 0..p {
                let c = central(k);
                acc += Rat::new(&c * &c, pow.clone());
                pow *= 16;
            }
        }
        IntegerSum::Ram1a => {
            if p <= 3 {
                return Err(Error::Constraint(format!("p must exceed 3, got {p}")));
            }
            let mut pow = BigInt::one();
            for k in 0..p {
                let c = central(k);
                let num = binomial(BigInt::from(4 * k), BigInt::from(2 * k)) * &c * &c * (8 * k + 1);
                acc += Rat::new(num, pow.clone());
                pow *= 256 * 9;
            }
        }
        IntegerSum::SunTauraso => {
            if extra < 1 {
                return Err(Error::Constraint("exponent r must be at least 1".into()));
            }
            let top = p.checked_pow(extra).ok_or_else(|| Error::Constraint(format!("p^r overflows for p={p}, r={extra}")))?;
            let mut pow = BigInt::one();
            for k in 0..top {
                acc += Rat::new(central(k), pow.clone());
                pow *= 2;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn rv_at_three() {
        assert_eq!(integer_sum(IntegerSum::Rv, 3, 0).unwrap(), ratio(89, 64));
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(integer_sum(IntegerSum::Rv, 9, 0).is_err());
        assert!(integer_sum(IntegerSum::Rv, 2, 0).is_err());
        assert!(integer_sum(IntegerSum::Ram1a, 3, 0).is_err());
        assert!(integer_sum(IntegerSum::SunTauraso, 3, 0).is_err());
    }

    #[test]
    fn sun_tauraso_small() {
        // 1 + 2/2 + 6/4 = 7/2
        assert_eq!(integer_sum(IntegerSum::SunTauraso, 3, 1).unwrap(), ratio(7, 2));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }
}
