//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. The textual form is `p` when the denominator is one
//! and `p/q` otherwise; that is also the only form [`parse_canonical`] accepts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Kronecker delta as a rational.
pub fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        one()
    } else {
        zero()
    }
}

pub fn to_canonical_string(r: &Rational) -> String {
    // BigRational's Display already prints "p" or "p/q" in lowest terms.
    r.to_string()
}

/// Parses `p` or `p/q`, rejecting anything that is not already canonical
/// (`2/4`, `3/1`, `+1`, `-0`, `01`, `1/-2`, whitespace).
pub fn parse_canonical(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numerator = parse_int(num).ok_or_else(|| format!("malformed rational {s:?}"))?;
    let value = match den {
        None => Rational::from_integer(numerator),
        Some(d) => {
            let denominator = parse_int(d).ok_or_else(|| format!("malformed rational {s:?}"))?;
            if denominator.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Rational::new(numerator, denominator)
        }
    };
    if to_canonical_string(&value) != s {
        return Err(format!(
            "non-canonical rational {s:?} (expected {:?})",
            to_canonical_string(&value)
        ));
    }
    Ok(value)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
