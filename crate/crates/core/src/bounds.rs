//! Closed-form bounds on winning probabilities.
//!
//! For a rank-`r` matroid on `n` elements and a circuit of size `|C|`, with
//! `d = r + 1 - |C|` and `m` coloops:
//!
//! * upper: `C(r+1, |C|) / C(n, |C|)`,
//! * sharp lower: `1/C(n-1-d, |C|) - (|C|/(n-m)) / C(n-m-1, r-m+1)` for
//!   `n > r + 1`, and exactly 1 when `n = r + 1`,
//! * simple lower: `1 / C(n-d, |C|)`.
//!
//! Both bounds are attained by explicit constructions (see [`crate::gen`]).

use crate::error::Error;
use crate::ratio::{binom, inv_binom};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Parameters `(n, r, |C|, m)` for the bound formulas, validated once.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundParams {
    n: usize,
    r: usize,
    circuit_size: usize,
    coloops: usize,
}

impl BoundParams {
    pub fn new(n: usize, r: usize, circuit_size: usize) -> Result<Self, Error> {
        Self::with_coloops(n, r, circuit_size, 0)
    }

    pub fn with_coloops(
        n: usize,
        r: usize,
        circuit_size: usize,
        coloops: usize,
    ) -> Result<Self, Error> {
        if r >= n {
            return Err(Error::Domain(format!(
                "a matroid with a circuit has r < n, got r={r}, n={n}"
            )));
        }
        if circuit_size == 0 || circuit_size > r + 1 {
            return Err(Error::Domain(format!(
                "circuit size must lie in 1..=r+1, got {circuit_size} with r={r}"
            )));
        }
        let d = r + 1 - circuit_size;
        if coloops > d {
            // |C| <= (r - m) + 1 in any matroid with m coloops
            return Err(Error::Domain(format!(
                "{coloops} coloops is inconsistent with a circuit of size {circuit_size} at rank {r}"
            )));
        }
        Ok(BoundParams { n, r, circuit_size, coloops })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn circuit_size(&self) -> usize {
        self.circuit_size
    }

    pub fn coloops(&self) -> usize {
        self.coloops
    }

    /// `d = r + 1 - |C|`.
    pub fn d(&self) -> usize {
        self.r + 1 - self.circuit_size
    }
}

/// `beta_C <= C(r+1, |C|) / C(n, |C|)`.
pub fn upper_bound(p: &BoundParams) -> BigRational {
    BigRational::new(binom(p.r + 1, p.circuit_size), binom(p.n, p.circuit_size))
}

/// The sharp lower bound; uses the coloop count `m` from the params.
pub fn lower_bound_sharp(p: &BoundParams) -> BigRational {
    if p.n == p.r + 1 {
        return BigRational::one();
    }
    let d = p.d();
    let m = p.coloops;
    let first = inv_binom(p.n - 1 - d, p.circuit_size);
    let second = BigRational::new(BigInt::from(p.circuit_size), BigInt::from(p.n - m))
        * inv_binom(p.n - m - 1, p.r - m + 1);
    first - second
}

/// `beta_C >= 1 / C(n-d, |C|)` (weaker than the sharp bound for d > 0).
pub fn lower_bound_simple(p: &BoundParams) -> BigRational {
    inv_binom(p.n - p.d(), p.circuit_size)
}
