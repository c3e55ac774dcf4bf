//! Independent-set counting and the Tutte polynomial.
//!
//! Two routes to the same numbers, kept deliberately separate so they can
//! cross-check each other: [`f_vector`] counts independent sets by direct
//! DFS enumeration, while [`tutte`] runs the deletion-contraction recurrence
//! and [`fvector_from_tutte`] reads the counts off the `T(x+1, 1)`
//! specialization.

use crate::error::Error;
use crate::matroid::Matroid;
use crate::ratio::binom;
use crate::set::ElementSet;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Independent-set counts by size: `counts[k]` = number of independent sets
/// of size `k`, for `k = 0..=rank`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector {
    counts: Vec<BigUint>,
}

impl FVector {
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn rank(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_else(BigUint::zero)
    }
}

/// Exact independent-set counts of `m` by DFS with circuit-containment
/// pruning.
pub fn f_vector(m: &Matroid) -> FVector {
    let mut counts = vec![BigUint::zero(); m.rank() + 1];
    let mut current = ElementSet::EMPTY;
    count_independent(m, &mut current, 1, &mut counts);
    FVector { counts }
}

fn count_independent(m: &Matroid, current: &mut ElementSet, next: usize, counts: &mut [BigUint]) {
    counts[current.len()] += BigUint::one();
    for i in next..=m.n() {
        let e = crate::set::ElementId::new(i).unwrap();
        let candidate = current.with(e);
        if m.is_independent(candidate) {
            *current = candidate;
            count_independent(m, current, i + 1, counts);
            *current = current.without(e);
        }
    }
}

/// Tutte polynomial as a coefficient matrix: `coeffs[i][j]` multiplies
/// `x^i y^j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TuttePolynomial {
    coeffs: Vec<Vec<BigUint>>,
}

impl TuttePolynomial {
    /// The monomial `x^i y^j`.
    fn monomial(i: usize, j: usize) -> Self {
        let mut coeffs = vec![vec![BigUint::zero(); j + 1]; i + 1];
        coeffs[i][j] = BigUint::one();
        TuttePolynomial { coeffs }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigUint {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Nonzero terms `(i, j, coefficient)` ordered by `(i, j)`.
    pub fn terms(&self) -> Vec<(usize, usize, BigUint)> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn x_degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, row)| row.iter().any(|c| !c.is_zero()))
            .map(|(i, _)| i)
            .max()
            .unwrap_or(0)
    }

    /// Evaluates at small integer points (enough for `T(1,1)` and `T(2,2)`).
    pub fn evaluate(&self, x: u64, y: u64) -> BigUint {
        let mut total = BigUint::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    total += c * BigUint::from(x).pow(i as u32) * BigUint::from(y).pow(j as u32);
                }
            }
        }
        total
    }

    fn add_assign(&mut self, other: &TuttePolynomial) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Vec::new());
        }
        for (i, row) in other.coeffs.iter().enumerate() {
            if row.len() > self.coeffs[i].len() {
                self.coeffs[i].resize(row.len(), BigUint::zero());
            }
            for (j, c) in row.iter().enumerate() {
                self.coeffs[i][j] += c;
            }
        }
    }

    /// Coefficients of `T(x, 1)` as a polynomial in `x` (sums each row).
    fn specialize_y1(&self) -> Vec<BigUint> {
        self.coeffs
            .iter()
            .map(|row| row.iter().fold(BigUint::zero(), |a, c| a + c))
            .collect()
    }
}

type CacheKey = (u8, Box<[u64]>);

/// Memoization cache for the deletion-contraction recursion, keyed by the
/// canonical circuit list. Unbounded unless a size cap is set; not shared
/// across threads (use one per worker).
#[derive(Default)]
pub struct TutteCache {
    map: HashMap<CacheKey, TuttePolynomial>,
    limit: Option<usize>,
}

impl TutteCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: usize) -> Self {
        TutteCache { map: HashMap::new(), limit: Some(limit) }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn insert(&mut self, key: CacheKey, value: TuttePolynomial) {
        if self.limit.is_none_or(|cap| self.map.len() < cap) {
            self.map.insert(key, value);
        }
    }
}

fn cache_key(m: &Matroid) -> CacheKey {
    (m.n() as u8, m.circuits().iter().map(|c| c.bits()).collect())
}

/// Tutte polynomial by deletion-contraction on the lowest-index element
/// that is neither a loop nor a coloop; when none remains,
/// `T = x^{#coloops} y^{#loops}`.
pub fn tutte(m: &Matroid) -> TuttePolynomial {
    tutte_with_cache(m, &mut TutteCache::new())
}

pub fn tutte_with_cache(m: &Matroid, cache: &mut TutteCache) -> TuttePolynomial {
    let key = cache_key(m);
    if let Some(hit) = cache.map.get(&key) {
        return hit.clone();
    }
    let (loops, coloops) = m.loops_and_coloops();
    let ordinary = m.ground_set().difference(loops).difference(coloops);
    let result = match ordinary.min_element() {
        None => TuttePolynomial::monomial(coloops.len(), loops.len()),
        Some(e) => {
            let single = ElementSet::singleton(e);
            let mut t = tutte_with_cache(&m.delete(single).matroid, cache);
            t.add_assign(&tutte_with_cache(&m.contract(single).matroid, cache));
            t
        }
    };
    cache.insert(key, result.clone());
    result
}

/// Reads the f-vector out of `T(x+1, 1)`: `f_k` is the coefficient of
/// `x^{r-k}`. Errors if `r` does not match the polynomial's x-degree.
pub fn fvector_from_tutte(t: &TuttePolynomial, r: usize) -> Result<FVector, Error> {
    let a = t.specialize_y1();
    let degree = a
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .max()
        .unwrap_or(0);
    if degree != r {
        return Err(Error::Domain(format!(
            "rank {r} does not match Tutte x-degree {degree}"
        )));
    }
    // expand sum a_i (x+1)^i; coefficient of x^k is sum_i a_i * C(i, k)
    let mut counts = vec![BigUint::zero(); r + 1];
    for (k, slot) in counts.iter_mut().enumerate() {
        // f_k = [x^{r-k}]
        let target = r - k;
        let mut total = BigUint::zero();
        for (i, ai) in a.iter().enumerate().skip(target) {
            if ai.is_zero() {
                continue;
            }
            let b: BigUint = BigInt::from(binom(i, target)).try_into().unwrap();
            total += ai * b;
        }
        *slot = total;
    }
    Ok(FVector { counts })
}
