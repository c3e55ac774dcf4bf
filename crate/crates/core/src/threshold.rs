//! The monotonicity threshold `N(r) = (r+2) + (r+1)! * ceil(e^{3r + 25/6})`.
//!
//! Matroids of rank `r` on at least `N(r)` elements have no monotonicity
//! violations. The exponential is evaluated in exact rational interval
//! arithmetic (Taylor series with an explicit remainder bound) to better
//! than 50 decimal digits; if the value lands within `1e-40` of an integer
//! the function refuses to ceil and reports a precision flag instead of
//! silently picking a side.

use crate::error::Error;
use crate::ratio::factorial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Guard distance: refuse to ceil when within this of an integer.
fn guard() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u8).pow(40))
}

/// Interval width target: 60 decimal digits.
fn width_target() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u8).pow(60))
}

/// Encloses `e^x` for `x >= 0` in `[lo, hi]` with `hi - lo` below the width
/// target. Taylor sum with remainder bound `2 * t_{K+1}` once the ratio
/// `x / (K+2)` has dropped below 1/2.
fn exp_interval(x: &BigRational) -> (BigRational, BigRational) {
    assert!(!x.is_negative());
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut k = BigInt::zero();
    let target = width_target();
    loop {
        k += 1;
        term = term * x / BigRational::from(k.clone());
        sum += term.clone();
        // next term: term * x / (k+1); remainder of the tail is below
        // 2 * next_term once x < (k+2)/2
        let next = term.clone() * x / BigRational::from(k.clone() + 1);
        let tail_bound = BigRational::from(BigInt::from(2)) * next.clone();
        let ratio_ok = x * BigRational::from(BigInt::from(2))
            < BigRational::from(k.clone() + 2);
        if ratio_ok && tail_bound < target {
            return (sum.clone(), sum + tail_bound);
        }
    }
}

/// `N(r)`; errors with [`Error::PrecisionFlag`] if `e^{3r+25/6}` cannot be
/// safely ceiled.
pub fn threshold_n(r: usize) -> Result<BigInt, Error> {
    let x = BigRational::new(BigInt::from(18 * r + 25), BigInt::from(6));
    let (lo, hi) = exp_interval(&x);
    let ceil_lo = lo.ceil().to_integer();
    let ceil_hi = hi.ceil().to_integer();
    if ceil_lo != ceil_hi {
        return Err(Error::PrecisionFlag);
    }
    // proximity to the integers bracketing the interval
    let below = &lo - lo.floor();
    let above = hi.ceil() - &hi;
    if below < guard() || above < guard() {
        return Err(Error::PrecisionFlag);
    }
    Ok(BigInt::from(r + 2) + factorial(r + 1) * ceil_hi)
}
