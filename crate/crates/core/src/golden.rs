//! Reference data: the known monotonicity-violating matroids on at most 9
//! elements, with their exact winning probabilities.
//!
//! These eleven matroids are, up to isomorphism, the only matroids with at
//! most 9 elements in which a longer card beats or ties a shorter one
//! (monotonicity holds for everything else in that range, and the 8-element
//! entry is the unique violator of its size). The fractions here are frozen
//! and double-checked by an independent brute-force oracle in the test
//! suite; the library must reproduce every one of them exactly.

use crate::matroid::Matroid;
use crate::ratio::parse_fraction;
use crate::set::ElementSet;
use num_rational::BigRational;

/// One reference matroid with its expected per-card probabilities.
#[derive(Clone, Debug)]
pub struct ReferenceTable {
    /// 1-based position in the census listing.
    pub id: usize,
    pub n: usize,
    pub rank: usize,
    /// `(circuit, expected beta)` pairs.
    entries: Vec<(&'static [usize], &'static str)>,
}

impl ReferenceTable {
    pub fn matroid(&self) -> Matroid {
        let circuits = self
            .entries
            .iter()
            .map(|(c, _)| ElementSet::from_indices(c.iter().copied()).unwrap())
            .collect();
        Matroid::new(self.n, circuits).expect("reference circuit families are valid")
    }

    pub fn expected_betas(&self) -> Vec<(ElementSet, BigRational)> {
        self.entries
            .iter()
            .map(|(c, frac)| {
                (
                    ElementSet::from_indices(c.iter().copied()).unwrap(),
                    parse_fraction(frac).unwrap(),
                )
            })
            .collect()
    }
}

/// All eleven violating matroids, in census order.
pub fn known_violators() -> Vec<ReferenceTable> {
    vec![
        ReferenceTable {
            id: 1,
            n: 8,
            rank: 5,
            entries: vec![
                (&[5, 6, 7, 8], "3/14"),
                (&[1, 2, 3], "11/56"),
                (&[1, 2, 4], "11/56"),
                (&[1, 3, 4], "11/56"),
                (&[2, 3, 4], "11/56"),
            ],
        },
        ReferenceTable {
            id: 2,
            n: 9,
            rank: 5,
            entries: vec![
                (&[1, 2], "49/180"),
                (&[3, 7], "49/180"),
                (&[4, 5, 6, 8], "13/126"),
                (&[1, 3, 9], "37/420"),
                (&[2, 3, 9], "37/420"),
                (&[1, 7, 9], "37/420"),
                (&[2, 7, 9], "37/420"),
            ],
        },
        ReferenceTable {
            id: 3,
            n: 9,
            rank: 5,
            entries: vec![
                (&[1, 2], "269/1260"),
                (&[1, 9], "269/1260"),
                (&[2, 9], "269/1260"),
                (&[3, 4, 6, 8], "2/21"),
                (&[1, 5, 7], "37/420"),
                (&[2, 5, 7], "37/420"),
                (&[5, 7, 9], "37/420"),
            ],
        },
        ReferenceTable {
            id: 4,
            n: 9,
            rank: 5,
            entries: vec![
                (&[1, 2], "49/180"),
                (&[3, 4, 6, 9], "1/9"),
                (&[1, 5, 7], "37/420"),
                (&[2, 5, 7], "37/420"),
                (&[1, 5, 8], "37/420"),
                (&[2, 5, 8], "37/420"),
                (&[1, 7, 8], "37/420"),
                (&[2, 7, 8], "37/420"),
                (&[5, 7, 8], "37/420"),
            ],
        },
        ReferenceTable {
            id: 5,
            n: 9,
            rank: 5,
            entries: vec![
                (&[1, 4, 5, 7], "5/42"),
                (&[2, 3, 6], "37/420"),
                (&[2, 3, 8], "37/420"),
                (&[2, 6, 8], "37/420"),
                (&[3, 6, 8], "37/420"),
                (&[2, 3, 9], "37/420"),
                (&[2, 6, 9], "37/420"),
                (&[3, 6, 9], "37/420"),
                (&[2, 8, 9], "37/420"),
                (&[3, 8, 9], "37/420"),
                (&[6, 8, 9], "37/420"),
            ],
        },
        ReferenceTable {
            id: 6,
            n: 9,
            rank: 6,
            entries: vec![
                (&[1, 9], "641/1260"),
                (&[2, 3, 5, 6, 8], "37/252"),
                (&[1, 2, 4, 7], "13/90"),
                (&[2, 4, 7, 9], "13/90"),
                (&[1, 3, 4, 5, 6, 7, 8], "1/36"),
                (&[3, 4, 5, 6, 7, 8, 9], "1/36"),
            ],
        },
        ReferenceTable {
            id: 7,
            n: 9,
            rank: 6,
            entries: vec![
                (&[3, 4, 6, 8], "3/14"),
                (&[1, 2, 7], "11/56"),
                (&[1, 2, 9], "11/56"),
                (&[1, 7, 9], "11/56"),
                (&[2, 7, 9], "11/56"),
            ],
        },
        ReferenceTable {
            id: 8,
            n: 9,
            rank: 6,
            entries: vec![
                (&[1, 2, 7], "19/60"),
                (&[1, 5, 9], "32/105"),
                (&[3, 4, 6, 8, 9], "37/252"),
                (&[2, 5, 7, 9], "13/90"),
                (&[1, 3, 4, 5, 6, 8], "5/84"),
                (&[2, 3, 4, 5, 6, 7, 8], "1/36"),
            ],
        },
        ReferenceTable {
            id: 9,
            n: 9,
            rank: 6,
            entries: vec![
                (&[1, 2, 7], "19/60"),
                (&[3, 4, 5, 6, 9], "1/6"),
                (&[1, 2, 8, 9], "13/90"),
                (&[1, 7, 8, 9], "13/90"),
                (&[2, 7, 8, 9], "13/90"),
                (&[1, 2, 3, 4, 5, 6, 8], "1/36"),
                (&[1, 3, 4, 5, 6, 7, 8], "1/36"),
                (&[2, 3, 4, 5, 6, 7, 8], "1/36"),
            ],
        },
        ReferenceTable {
            id: 10,
            n: 9,
            rank: 6,
            entries: vec![
                (&[2, 4, 9], "32/105"),
                (&[3, 5, 6, 8, 9], "37/252"),
                (&[1, 2, 4, 7], "13/90"),
                (&[1, 2, 7, 9], "13/90"),
                (&[1, 4, 7, 9], "13/90"),
                (&[2, 3, 4, 5, 6, 8], "5/84"),
                (&[1, 2, 3, 5, 6, 7, 8], "1/36"),
                (&[1, 3, 4, 5, 6, 7, 8], "1/36"),
            ],
        },
        ReferenceTable {
            id: 11,
            n: 9,
            rank: 6,
            entries: vec![
                (&[3, 5, 6, 8, 9], "1/6"),
                (&[1, 2, 4, 7], "13/90"),
                (&[1, 2, 4, 9], "13/90"),
                (&[1, 2, 7, 9], "13/90"),
                (&[1, 4, 7, 9], "13/90"),
                (&[2, 4, 7, 9], "13/90"),
                (&[1, 2, 3, 4, 5, 6, 8], "1/36"),
                (&[1, 2, 3, 5, 6, 7, 8], "1/36"),
                (&[1, 3, 4, 5, 6, 7, 8], "1/36"),
                (&[2, 3, 4, 5, 6, 7, 8], "1/36"),
            ],
        },
    ]
}

/// The disconnected five-card example (census entry 1): all 3-subsets of
/// `{1..4}` plus `{5,6,7,8}`.
pub fn five_card_matroid() -> Matroid {
    known_violators()[0].matroid()
}

/// The connected six-card example on 9 elements (census entry 8).
pub fn connected_example_matroid() -> Matroid {
    known_violators()[7].matroid()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn tables_are_valid_and_normalized() {
        let tables = known_violators();
        assert_eq!(tables.len(), 11);
        for t in &tables {
            let m = t.matroid();
            assert_eq!(m.n(), t.n, "table {}", t.id);
            assert_eq!(m.rank(), t.rank, "table {}", t.id);
            let sum: BigRational = t
                .expected_betas()
                .iter()
                .map(|(_, b)| b.clone())
                .fold(BigRational::new(0.into(), 1.into()), |a, b| a + b);
            assert!(sum.is_one(), "table {} betas sum to {sum}", t.id);
        }
    }

    #[test]
    fn named_examples_line_up() {
        assert_eq!(five_card_matroid().n(), 8);
        assert_eq!(connected_example_matroid().circuits().len(), 6);
    }
}
