//! Exact rational scalars.
//!
//! [`Scalar`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. Rendering is always `p/q`, or a bare integer when the
//! denominator is one, so reports never lose exactness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn render(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p`, `-p`, `+p` or `p/q`, with optional surrounding whitespace.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::MalformedScalar(text.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    let parse_int = |s: &str| -> Result<BigInt> {
        let s = s.trim();
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.trim_start_matches('+').parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(t)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(parse_int(p)?, q))
        }
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty
/// slice).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// `(-1)^k` as a scalar.
pub fn sign_power(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse(" -4/6 ").unwrap(), ratio(-2, 3));
        assert_eq!(parse("+5/-10").unwrap(), ratio(-1, 2));
        assert_eq!(render(&ratio(6, -4)), "-3/2");
        assert_eq!(render(&int(-7)), "-7");
        assert_eq!(render(&ratio(0, 5)), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for t in ["", "1/0", "a", "1.5", "1/", "/2", "--1", "1/2/3"] {
            assert!(parse(t).is_err(), "{t:?} should not parse");
        }
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [ratio(1, 4), ratio(1, 6), int(3)];
        assert_eq!(denominator_lcm(&v), BigInt::from(12));
    }
}
