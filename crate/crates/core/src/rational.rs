//! Exact rationals and their textual form.
//!
//! Values are always kept in lowest terms with a positive denominator,
//! which `num`'s `BigRational` guarantees after every operation.

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_int_value(r: &Rational, v: i64) -> bool {
    r.is_integer() && r.numer() == &BigInt::from(v)
}

/// Least common denominator of a collection of rationals (1 when empty).
pub fn lcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigUint {
    let mut acc = BigInt::one();
    for v in values {
        acc = acc.lcm(v.denom());
    }
    acc.magnitude().clone()
}

/// `base^exp` as an exact rational.
pub fn pow(base: &BigUint, exp: u64) -> Rational {
    let mut acc = BigUint::one();
    for _ in 0..exp {
        acc *= base;
    }
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, acc))
}

/// Parses integers, `p/q` fractions and plain decimals such as `-0.25`, exactly.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("malformed rational {text:?}"));
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() || q.is_negative() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = num::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if neg { -value } else { value })
}

/// Canonical text: integers as `n`, everything else as `p/q`.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
