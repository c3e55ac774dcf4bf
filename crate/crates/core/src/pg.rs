//! Duals of projective geometries over prime fields.
//!
//! `PG(dim, q)` has one ground-set element per 1-dimensional subspace of
//! `GF(q)^{dim+1}`; a point set is independent iff the corresponding vectors
//! are linearly independent. Points are represented by their normalized
//! vector (first nonzero coordinate 1) and ordered lexicographically, so the
//! labeling is reproducible. Only prime `q` is supported; the corpus needs
//! q in {2, 3}.

use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{subsets_of_size, ElementSet, MAX_ELEMENTS};

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Normalized projective points of `PG(dim, q)` in lexicographic order.
fn projective_points(dim: usize, q: u64) -> Vec<Vec<u64>> {
    let coords = dim + 1;
    let mut points = Vec::new();
    let mut vec = vec![0u64; coords];
    loop {
        // normalized: first nonzero coordinate is 1
        if let Some(first) = vec.iter().position(|&c| c != 0) {
            if vec[first] == 1 {
                points.push(vec.clone());
            }
        }
        // next tuple in lex order (most significant coordinate first)
        let mut i = coords;
        loop {
            if i == 0 {
                return points;
            }
            i -= 1;
            vec[i] += 1;
            if vec[i] < q {
                break;
            }
            vec[i] = 0;
        }
    }
}

/// Rank of a set of vectors over GF(q) by Gaussian elimination.
fn gf_rank(vectors: &[Vec<u64>], q: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = vectors.to_vec();
    let coords = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..coords {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], q);
        for c in col..coords {
            rows[rank][c] = rows[rank][c] * inv % q;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..coords {
                    rows[r][c] = (rows[r][c] + (q - factor) * rows[rank][c]) % q;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, q: u64) -> u64 {
    // q is prime, so a^(q-2) works
    let mut result = 1u64;
    let mut base = a % q;
    let mut exp = q - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    result
}

/// The dual of `PG(dim, q)`: ground set = projective points, bases =
/// complements of the point sets that are linearly independent of full rank.
pub fn pg_dual(dim: usize, q: u64) -> Result<Matroid, Error> {
    if !is_prime(q) {
        return Err(Error::Domain(format!("q = {q} is not prime")));
    }
    let point_count = {
        let mut total: u64 = 0;
        let mut power: u64 = 1;
        for _ in 0..=dim {
            total += power;
            if total > MAX_ELEMENTS as u64 {
                return Err(Error::Capacity {
                    what: "projective points",
                    got: total as usize,
                    limit: MAX_ELEMENTS,
                });
            }
            power *= q;
        }
        total as usize
    };
    let points = projective_points(dim, q);
    debug_assert_eq!(points.len(), point_count);

    let n = points.len();
    let full = ElementSet::full(n);
    let mut dual_bases = Vec::new();
    for s in subsets_of_size(n, dim + 1) {
        let vectors: Vec<Vec<u64>> =
            s.iter().map(|e| points[e.index() - 1].clone()).collect();
        if gf_rank(&vectors, q) == dim + 1 {
            dual_bases.push(full.difference(s));
        }
    }
    Matroid::from_bases(n, &dual_bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn pg_dual_1_2_is_u13() {
        assert_eq!(pg_dual(1, 2).unwrap(), Matroid::uniform(1, 3).unwrap());
    }

    #[test]
    fn dual_fano_has_seven_4_circuits() {
        let m = pg_dual(2, 2).unwrap();
        assert_eq!(m.n(), 7);
        assert_eq!(m.rank(), 4);
        // With points ordered lexicographically, point i is the binary
        // expansion of i, so the Fano lines are the xor-closed triples and
        // the dual circuits are their complements.
        let mut expected = vec![
            set(&[1, 2, 4, 7]),
            set(&[1, 2, 5, 6]),
            set(&[1, 3, 4, 6]),
            set(&[1, 3, 5, 7]),
            set(&[2, 3, 4, 5]),
            set(&[2, 3, 6, 7]),
            set(&[4, 5, 6, 7]),
        ];
        expected.sort();
        assert_eq!(m.circuits(), expected);
    }

    #[test]
    fn pg_dual_2_3_dimensions() {
        let m = pg_dual(2, 3).unwrap();
        assert_eq!(m.n(), 13);
        assert_eq!(m.rank(), 10);
        // dual circuits = complements of the 13 lines of PG(2,3)
        assert_eq!(m.circuits().len(), 13);
        assert!(m.circuits().iter().all(|c| c.len() == 9));
    }

    #[test]
    fn rejects_non_prime_and_oversize() {
        assert!(matches!(pg_dual(2, 4), Err(Error::Domain(_))));
        assert!(matches!(pg_dual(2, 1), Err(Error::Domain(_))));
        assert!(matches!(pg_dual(5, 3), Err(Error::Capacity { .. })));
    }

    #[test]
    fn gf_rank_examples() {
        assert_eq!(gf_rank(&[vec![1, 0], vec![0, 1], vec![1, 1]], 2), 2);
        assert_eq!(gf_rank(&[vec![1, 2, 0], vec![2, 4, 0]], 5), 1);
        assert_eq!(gf_rank(&[], 3), 0);
    }
}
