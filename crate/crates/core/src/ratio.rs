//! Exact rational helpers: binomials, factorials, fraction formatting.
//!
//! All probabilities in this crate are `BigRational`; floating point never
//! enters a correctness path. Decimal strings exist only for display and are
//! rendered to four places, rounding half up.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `n choose k` as a big integer; zero when `k > n`.
pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut res = BigInt::one();
    for i in 0..k {
        res = res * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    res
}

pub fn factorial(n: usize) -> BigInt {
    let mut res = BigInt::one();
    for i in 2..=n {
        res *= BigInt::from(i);
    }
    res
}

/// Reciprocal of a binomial as an exact rational. Panics if `k > n`.
pub fn inv_binom(n: usize, k: usize) -> BigRational {
    let b = binom(n, k);
    assert!(!b.is_zero(), "binom({n},{k}) is zero");
    BigRational::new(BigInt::one(), b)
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `p/q` rendering (always includes the denominator, so `1` prints
/// as `1/1` and `0` as `0/1`, matching the wire formats).
pub fn format_fraction(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_fraction(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Four-decimal rendering, rounding half up, e.g. `3/14 -> "0.2143"`.
pub fn decimal4(r: &BigRational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scaled = abs.numer() * BigInt::from(10_000u32);
    // round(x) = floor((2x + q) / 2q) for x = scaled/q >= 0
    let rounded = (BigInt::from(2) * scaled + abs.denom()) / (BigInt::from(2) * abs.denom());
    let int_part = &rounded / BigInt::from(10_000u32);
    let frac_part = &rounded % BigInt::from(10_000u32);
    format!("{sign}{int_part}.{frac_part:04}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_values() {
        assert_eq!(binom(8, 4), BigInt::from(70));
        assert_eq!(binom(6, 4), BigInt::from(15));
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(20, 10), BigInt::from(184_756));
    }

    #[test]
    fn fraction_round_trip() {
        let r = ratio(19, 60);
        assert_eq!(format_fraction(&r), "19/60");
        assert_eq!(parse_fraction("19/60").unwrap(), r);
        assert_eq!(parse_fraction("3").unwrap(), ratio(3, 1));
        assert!(parse_fraction("1/0").is_none());
        assert!(parse_fraction("x/2").is_none());
    }

    #[test]
    fn decimals_round_half_up() {
        assert_eq!(decimal4(&ratio(3, 14)), "0.2143");
        assert_eq!(decimal4(&ratio(11, 56)), "0.1964");
        assert_eq!(decimal4(&ratio(19, 60)), "0.3167");
        assert_eq!(decimal4(&ratio(1, 36)), "0.0278");
        assert_eq!(decimal4(&ratio(1, 1)), "1.0000");
        assert_eq!(decimal4(&ratio(0, 1)), "0.0000");
        // exact half at the fourth place rounds up
        assert_eq!(decimal4(&ratio(1, 20_000)), "0.0001");
        assert_eq!(decimal4(&ratio(641, 1260)), "0.5087");
    }
}
