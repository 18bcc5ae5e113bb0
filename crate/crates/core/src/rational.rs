//! The exact scalar used everywhere: an arbitrary-precision reduced fraction.
//!
//! `BigRational` keeps `gcd(|num|, den) = 1` and `den > 0` after every
//! construction and operation, and stores zero as `0/1`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty number")]
    Empty,
    #[error("invalid number `{0}`; expected an integer or a fraction like -99/101")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`, reduced.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"-99/101"`, `"12"` or `"+3/4"`. Surrounding whitespace is ignored;
/// decimals and exponents are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num = parse_signed_integer(num).ok_or_else(|| RationalParseError::Invalid(s.into()))?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(RationalParseError::Invalid(s.into()));
            }
            parse_signed_integer(d).ok_or_else(|| RationalParseError::Invalid(s.into()))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.into()));
    }
    Ok(Rational::new(num, den))
}

fn parse_signed_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Exact square root when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_isqrt(r.numer())?;
    let d = exact_isqrt(r.denom())?;
    Some(Rational::new(n, d))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Bit length of the denominator, the height measure used for point growth.
pub fn denominator_bits(r: &Rational) -> u64 {
    r.denom().bits()
}
