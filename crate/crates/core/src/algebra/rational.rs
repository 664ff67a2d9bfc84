//! The scalar ring: exact arbitrary-precision fractions.
//!
//! `BigRational` already keeps itself in lowest terms with a positive
//! denominator, and its `Display` writes `p/q` (or `p` when `q = 1`), which
//! is exactly the wire format used throughout this crate.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::ParseError;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational, reduced. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` (optional leading sign, surrounding whitespace
/// ignored). Anything else, including decimals and complex literals, is
/// rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Rational(s.to_string());
    let valid_int = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    if !valid_int(num) || !valid_int(den) {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` string.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n! / (parts[0]! ... parts[m-1]!)` where `n = sum(parts)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0usize;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// The value as an `i64` if it is an integer that fits.
pub fn as_small_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}
