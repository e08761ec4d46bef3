//! Exact rational scalars.
//!
//! Every parameter and function value in this crate is a [`Rat`]
//! (arbitrary-precision rational). Decimal text and `f64` inputs convert
//! exactly, so comparisons, pairings and tie-breaks are deterministic and
//! free of rounding; an epsilon only enters where an operation explicitly
//! takes one.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Rat = num_rational::BigRational;

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact conversion; `None` for NaN/infinite.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Default comparison tolerance (1e-9) for the epsilon-taking operations.
pub fn default_epsilon() -> Rat {
    rat(1, 1_000_000_000)
}

/// Fractional part in `[0, 1)`.
pub fn mod1(t: &Rat) -> Rat {
    t - t.floor()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid number `{0}`")]
pub struct ParseRatError(pub String);

/// Parses `"3"`, `"-0.25"`, `"1.5e-3"` or `"p/q"` exactly.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    let err = || ParseRatError(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(p, q));
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Rat> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "+" || digits == "-" {
        return None;
    }
    let n = BigInt::from_str(&digits).ok()?;
    let scale = frac_part.len() as i32 - exp;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        Rat::new(n, ten.pow(scale as u32))
    } else {
        Rat::from_integer(n * ten.pow((-scale) as u32))
    })
}

/// Canonical text form: integers bare, terminating decimals as decimals,
/// everything else as a reduced fraction `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    match terminating_decimal_digits(r.denom()) {
        Some(d) => {
            let sign = if r.is_negative() { "-" } else { "" };
            let scaled = (r.numer().abs() * BigInt::from(10).pow(d)) / r.denom();
            let digits = scaled.to_string();
            let digits = if digits.len() <= d as usize {
                format!("{}{}", "0".repeat(d as usize + 1 - digits.len()), digits)
            } else {
                digits
            };
            let (int_part, frac_part) = digits.split_at(digits.len() - d as usize);
            let frac_part = frac_part.trim_end_matches('0');
            format!("{sign}{int_part}.{frac_part}")
        }
        None => format!("{}/{}", r.numer(), r.denom()),
    }
}

/// If `q = 2^a 5^b`, the number of decimal digits needed, else `None`.
fn terminating_decimal_digits(q: &BigInt) -> Option<u32> {
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut q = q.abs();
    let (mut a, mut b) = (0u32, 0u32);
    while (&q % &two).is_zero() {
        q /= &two;
        a += 1;
    }
    while (&q % &five).is_zero() {
        q /= &five;
        b += 1;
    }
    q.is_one().then(|| a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "0.5", "-0.25", "0.125", "1.75"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(parse_rat("1/3").unwrap(), rat(1, 3));
        assert_eq!(format_rat(&rat(1, 3)), "1/3");
        assert_eq!(parse_rat("1.5e-3").unwrap(), rat(3, 2000));
        assert_eq!(parse_rat("2e2").unwrap(), rat_int(200));
        assert_eq!(parse_rat(" 0.2 ").unwrap(), rat(1, 5));
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1.2.3").is_err());
    }

    #[test]
    fn f64_conversion_is_exact() {
        assert_eq!(rat_from_f64(0.5).unwrap(), rat(1, 2));
        // 0.1 is not exactly representable; the conversion keeps the binary value.
        assert_eq!(
            rat_from_f64(0.1).unwrap(),
            Rat::new(BigInt::from(3602879701896397i64), BigInt::from(1i64) << 55)
        );
        assert!(rat_from_f64(f64::NAN).is_none());
    }

    #[test]
    fn mod1_wraps_negatives() {
        assert_eq!(mod1(&rat(-1, 4)), rat(3, 4));
        assert_eq!(mod1(&rat(9, 4)), rat(1, 4));
        assert_eq!(mod1(&rat_int(2)), rat_int(0));
    }
}
