//! Exact-number helpers: JSON encoding of big integers, fraction parsing and
//! the global bit-length cap.

use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_BITS: u64 = 4096;
pub const MAX_BITS_ENV: &str = "LSCRYSTAL_MAX_BITS";

/// Bit-length cap read once from `LSCRYSTAL_MAX_BITS`.
pub fn max_bits() -> Result<u64> {
    static CELL: OnceLock<std::result::Result<u64, String>> = OnceLock::new();
    CELL.get_or_init(|| match std::env::var(MAX_BITS_ENV) {
        Err(_) => Ok(DEFAULT_MAX_BITS),
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("{MAX_BITS_ENV} must be a positive integer, got {s:?}")),
        },
    })
    .clone()
    .map_err(Error::Parse)
}

pub fn to_json(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("integer literal is valid JSON")
}

pub fn from_json(n: &serde_json::Number) -> Result<BigInt> {
    BigInt::from_str(&n.to_string()).map_err(|_| Error::Parse(format!("not an integer: {n}")))
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn int(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Parse `"p/q"` or an integer literal into a reduced fraction.
pub fn parse_fraction(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad fraction {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn format_fraction(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `[num, den]` JSON pair with a positive denominator.
pub fn fraction_to_json(q: &BigRational) -> serde_json::Value {
    serde_json::Value::Array(vec![
        serde_json::Value::Number(to_json(q.numer())),
        serde_json::Value::Number(to_json(q.denom())),
    ])
}

pub fn fraction_from_json(v: &serde_json::Value) -> Result<BigRational> {
    let bad = || Error::Parse(format!("expected [num, den], got {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    if arr.len() != 2 {
        return Err(bad());
    }
    let num = arr[0].as_number().ok_or_else(bad).and_then(from_json)?;
    let den = arr[1].as_number().ok_or_else(bad).and_then(from_json)?;
    if !den.is_positive() {
        return Err(Error::Parse(format!("denominator must be positive in {v}")));
    }
    if !num_integer::Integer::gcd(&num, &den).is_one() {
        return Err(Error::Parse(format!("fraction {v} is not reduced")));
    }
    Ok(BigRational::new_raw(num, den))
}

pub fn bit_len(n: &BigInt) -> u64 {
    n.bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_parse_and_reduce() {
        assert_eq!(parse_fraction("2/4").unwrap(), rational(1, 2));
        assert_eq!(parse_fraction("-3").unwrap(), rational(-3, 1));
        assert_eq!(parse_fraction(" 1 / -2 ").unwrap(), rational(-1, 2));
        assert!(parse_fraction("1/0").is_err());
        assert!(parse_fraction("x").is_err());
        assert_eq!(format_fraction(&rational(6, 4)), "3/2");
        assert_eq!(format_fraction(&rational(4, 2)), "2");
    }

    #[test]
    fn big_json_roundtrip() {
        let n: BigInt = BigInt::from(7).pow(100) * -1;
        let j = to_json(&n);
        assert_eq!(from_json(&j).unwrap(), n);
        let q = BigRational::new(n.clone(), BigInt::from(3));
        assert_eq!(fraction_from_json(&fraction_to_json(&q)).unwrap(), q);
    }

    #[test]
    fn non_canonical_fractions_rejected() {
        let v: serde_json::Value = serde_json::from_str("[1, -2]").unwrap();
        assert!(fraction_from_json(&v).is_err());
        assert!(fraction_from_json(&serde_json::json!([2, 4])).is_err());
        assert!(fraction_from_json(&serde_json::json!([0, 2])).is_err());
    }
}
