//! Exact sequence shape tests: log-concavity, unimodality, support.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// `seq[i]^2 >= seq[i-1] * seq[i+1]` for every interior index, compared as
/// exact rationals.
pub fn is_log_concave(seq: &[BigRational]) -> bool {
    seq.windows(3)
        .all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Weakly rises to a peak, then weakly falls.
pub fn is_unimodal(seq: &[BigRational]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

/// The nonzero entries form one contiguous block (no internal zeros).
pub fn has_contiguous_support(seq: &[BigRational]) -> bool {
    let first = seq.iter().position(|v| !v.is_zero());
    let Some(first) = first else { return true };
    let last = seq.iter().rposition(|v| !v.is_zero()).unwrap();
    seq[first..=last].iter().all(|v| !v.is_zero())
}

/// Ultra-log-concavity of independent-set counts on a ground set of size
/// `n`: the sequence `counts[k] / C(n, k)` is log-concave. Counts beyond the
/// given length are treated as zero.
pub fn is_ultra_log_concave(counts: &[num_bigint::BigUint], n: usize) -> bool {
    let scaled: Vec<BigRational> = (0..=n)
        .map(|k| {
            let c = counts.get(k).cloned().unwrap_or_default();
            BigRational::new(BigInt::from(c), crate::ratio::binom(n, k))
        })
        .collect();
    is_log_concave(&scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::ratio;

    fn seq(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| ratio(x, 1)).collect()
    }

    #[test]
    fn log_concave_examples() {
        assert!(is_log_concave(&seq(&[1, 2, 3, 2, 1])));
        assert!(!is_log_concave(&seq(&[1, 1, 2])));
        assert!(is_log_concave(&seq(&[])));
        assert!(is_log_concave(&seq(&[5])));
        assert!(is_log_concave(&seq(&[0, 0, 1, 3, 2, 0])));
    }

    #[test]
    fn unimodal_examples() {
        assert!(is_unimodal(&seq(&[1, 2, 3, 2, 1])));
        assert!(is_unimodal(&seq(&[1, 1, 2, 2])));
        assert!(is_unimodal(&seq(&[3, 2, 1])));
        assert!(!is_unimodal(&seq(&[1, 2, 1, 2])));
        assert!(is_unimodal(&seq(&[])));
    }

    #[test]
    fn support_examples() {
        assert!(has_contiguous_support(&seq(&[0, 1, 2, 0])));
        assert!(!has_contiguous_support(&seq(&[1, 0, 2])));
        assert!(has_contiguous_support(&seq(&[0, 0])));
    }

    #[test]
    fn ultra_log_concave_uniform_counts() {
        use num_bigint::BigUint;
        // f-vector of U_{2,4}: 1, 4, 6
        let counts: Vec<BigUint> =
            [1u32, 4, 6].iter().map(|&c| BigUint::from(c)).collect();
        assert!(is_ultra_log_concave(&counts, 4));
    }
}
