//! Small integer helpers shared by the group constructors and the formula evaluators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `n = p^e` for a prime `p` and `e >= 1`.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut rest = n;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `base^exp` for a possibly negative exponent, as an exact rational.
pub fn rat_pow(base: u64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(base));
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        BigRational::one() / num_traits::pow(b, (-exp) as usize)
    }
}

/// Converts a derived quantity to a size, rejecting fractions and negatives.
pub fn to_count(name: &'static str, value: &BigRational) -> Result<u64> {
    let bad = || Error::NonIntegralParameter { name, value: value.to_string() };
    if !value.is_integer() || value.is_negative() {
        return Err(bad());
    }
    value.to_integer().to_u64().ok_or_else(bad)
}

/// Like [`to_count`] but also rejects zero.
pub fn to_positive(name: &'static str, value: &BigRational) -> Result<u64> {
    let v = to_count(name, value)?;
    if v.is_zero() {
        return Err(Error::NonIntegralParameter { name, value: value.to_string() });
    }
    Ok(v)
}

/// Serde for [`BigInt`]: a JSON number when it fits in an `i64`, a decimal string otherwise.
pub mod bigint_serde {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(small) => s.serialize_i64(small),
            None => s.serialize_str(&v.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Text(t) => t.parse().map_err(de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_prime_powers() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(as_prime_power(8), Some((2, 3)));
        assert_eq!(as_prime_power(81), Some((3, 4)));
        assert_eq!(as_prime_power(12), None);
        assert_eq!(as_prime_power(1), None);
    }

    #[test]
    fn negative_rational_powers() {
        assert_eq!(rat_pow(2, -2), BigRational::new(int(1), int(4)));
        assert_eq!(rat_pow(3, 0), rat(1));
        assert!(to_count("x", &BigRational::new(int(3), int(2))).is_err());
        assert!(to_positive("x", &rat(0)).is_err());
        assert_eq!(to_count("x", &rat(0)).unwrap(), 0);
    }

    #[test]
    fn bigint_json_round_trip() {
        #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
        struct W(#[serde(with = "bigint_serde")] BigInt);
        let small = W(int(-42));
        assert_eq!(serde_json::to_string(&small).unwrap(), "-42");
        let big = W(BigInt::from(i64::MAX) * 1000);
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(text, "\"9223372036854775807000\"");
        assert_eq!(serde_json::from_str::<W>(&text).unwrap(), big);
    }
}
