//! Exact winning probabilities for matroid bingo.
//!
//! Three independent engines compute the same numbers:
//!
//! * [`timed_beta`] / [`beta`] — the per-round formula
//!   `beta_C(t) = (|C|/n) * f_{t-|C|}(M/C) / C(n-1, t-1)`, summed over
//!   `|C| <= t <= r+1`; the default engine.
//! * [`beta_inclusion_exclusion`] — the alternating sum
//!   `sum_k (-1)^k sum_{S} |C| / |(U S) u C|` over subsets `S` of the other
//!   circuits; exponential in the circuit count, so gated behind a cap.
//! * [`brute_force_beta`] — plays every one of the `n!` calling orders.
//!
//! Everything is exact `BigRational`; [`beta_table`] asserts that the betas
//! sum to exactly 1 before returning.

use crate::error::Error;
use crate::matroid::Matroid;
use crate::perm::{for_each_permutation, Permutation};
use crate::ratio::binom;
use crate::rng::SplitMix64;
use crate::set::ElementSet;
use crate::tutte::f_vector;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Inclusion-exclusion is `2^(#circuits - 1)` work; refuse beyond this many
/// circuits by default.
pub const DEFAULT_INCLUSION_EXCLUSION_CAP: usize = 20;

/// Brute force is `n!` work; refuse beyond this ground-set size.
pub const BRUTE_FORCE_MAX_N: usize = 10;

/// Per-round winning probabilities `beta_C(1) ..= beta_C(n)` of one card.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TimedProfile {
    circuit: ElementSet,
    values: Vec<BigRational>,
}

impl TimedProfile {
    pub fn circuit(&self) -> ElementSet {
        self.circuit
    }

    /// `values()[t - 1]` is the probability of winning exactly in round `t`.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn at_round(&self, t: usize) -> &BigRational {
        &self.values[t - 1]
    }

    /// Total winning probability: the sum over rounds.
    pub fn total(&self) -> BigRational {
        self.values.iter().fold(BigRational::zero(), |a, v| a + v)
    }
}

/// One row of a [`BetaTable`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaEntry {
    pub circuit: ElementSet,
    pub beta: BigRational,
    pub timed: TimedProfile,
}

/// Winning probabilities for every card of a matroid, in canonical circuit
/// order. Construction asserts the exact normalization `sum beta_C = 1` and
/// `beta_C > 0`; a violation is an implementation bug, not an input error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaTable {
    n: usize,
    rank: usize,
    entries: Vec<BetaEntry>,
}

impl BetaTable {
    fn from_entries(n: usize, rank: usize, entries: Vec<BetaEntry>) -> Self {
        let sum = entries.iter().fold(BigRational::zero(), |a, e| a + &e.beta);
        assert!(
            sum.is_one(),
            "betas must sum to exactly 1, got {sum} — implementation bug"
        );
        assert!(
            entries.iter().all(|e| e.beta.is_positive()),
            "every card has a positive winning probability — implementation bug"
        );
        BetaTable { n, rank, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[BetaEntry] {
        &self.entries
    }

    pub fn beta_of(&self, circuit: ElementSet) -> Option<&BigRational> {
        self.entries
            .iter()
            .find(|e| e.circuit == circuit)
            .map(|e| &e.beta)
    }

    /// Entries sorted for display: beta descending, canonical order on ties
    /// (the layout of the paper-style tables).
    pub fn display_order(&self) -> Vec<&BetaEntry> {
        let mut rows: Vec<&BetaEntry> = self.entries.iter().collect();
        rows.sort_by(|a, b| b.beta.cmp(&a.beta).then(a.circuit.cmp(&b.circuit)));
        rows
    }
}

/// First-completion positions for a fixed calling order; `positions[e-1]`
/// is the round in which element `e` is called.
fn winner_by_positions(circuits: &[ElementSet], positions: &[usize]) -> (usize, usize, bool) {
    let mut best = usize::MAX;
    let mut winner = 0;
    let mut unique = true;
    for (i, c) in circuits.iter().enumerate() {
        let mut t = 0;
        for e in c.iter() {
            t = t.max(positions[e.index() - 1]);
        }
        if t < best {
            best = t;
            winner = i;
            unique = true;
        } else if t == best {
            unique = false;
        }
    }
    (winner, best, unique)
}

/// Plays one game: the unique first-completed card and its completion
/// round. Uniqueness at the first completion is guaranteed by axiom (C3).
pub fn play_game(m: &Matroid, p: &Permutation) -> Result<(ElementSet, usize), Error> {
    if m.circuits().is_empty() {
        return Err(Error::NoCircuits);
    }
    if p.len() != m.n() {
        return Err(Error::InvalidPermutation(format!(
            "calling order has {} elements, matroid has {}",
            p.len(),
            m.n()
        )));
    }
    let mut positions = vec![0usize; m.n()];
    for (round, &e) in p.order().iter().enumerate() {
        positions[e.index() - 1] = round + 1;
    }
    let (idx, round, unique) = winner_by_positions(m.circuits(), &positions);
    assert!(unique, "tie at first completion despite valid circuit axioms");
    Ok((m.circuits()[idx], round))
}

/// Theorem-A engine: exact beta by inclusion-exclusion over subsets of the
/// other circuits, under the default circuit cap.
pub fn beta_inclusion_exclusion(m: &Matroid, c: ElementSet) -> Result<BigRational, Error> {
    beta_inclusion_exclusion_with_cap(m, c, DEFAULT_INCLUSION_EXCLUSION_CAP)
}

pub fn beta_inclusion_exclusion_with_cap(
    m: &Matroid,
    c: ElementSet,
    cap: usize,
) -> Result<BigRational, Error> {
    if !m.has_circuit(c) {
        return Err(Error::NotACircuit { circuit: c.to_string() });
    }
    if m.circuits().len() > cap {
        return Err(Error::CircuitCapExceeded { count: m.circuits().len(), cap });
    }
    let others: Vec<ElementSet> =
        m.circuits().iter().copied().filter(|&x| x != c).collect();

    // Accumulate sum of (+-) |C| / |union| as an integer over the common
    // denominator lcm(1..=n), avoiding a rational reduction per term.
    let n = m.n().max(1);
    let mut lcm = BigInt::one();
    for k in 1..=n {
        lcm = num_integer::lcm(lcm, BigInt::from(k));
    }
    let per_size: Vec<BigInt> = (0..=n)
        .map(|k| if k == 0 { BigInt::zero() } else { &lcm / BigInt::from(k) })
        .collect();
    let mut acc = BigInt::zero();
    let csize = BigInt::from(c.len());
    recurse_subsets(&others, 0, c, false, &mut |union, negate| {
        let contribution = &csize * &per_size[union.len()];
        if negate {
            acc -= contribution;
        } else {
            acc += contribution;
        }
    });
    Ok(BigRational::new(acc, lcm))
}

fn recurse_subsets(
    others: &[ElementSet],
    idx: usize,
    union: ElementSet,
    negate: bool,
    visit: &mut impl FnMut(ElementSet, bool),
) {
    if idx == others.len() {
        visit(union, negate);
        return;
    }
    recurse_subsets(others, idx + 1, union, negate, visit);
    recurse_subsets(others, idx + 1, union.union(others[idx]), !negate, visit);
}

/// Theorem-B engine: the timed profile via the f-vector of `M/C`.
pub fn timed_beta(m: &Matroid, c: ElementSet) -> Result<TimedProfile, Error> {
    if !m.has_circuit(c) {
        return Err(Error::NotACircuit { circuit: c.to_string() });
    }
    let n = m.n();
    let r = m.rank();
    let fv = f_vector(&m.contract(c).matroid);
    let csize = c.len();
    let mut values = vec![BigRational::zero(); n];
    let scale = BigRational::new(BigInt::from(csize), BigInt::from(n));
    for t in csize..=(r + 1) {
        let count = BigInt::from(fv.get(t - csize));
        values[t - 1] = &scale * BigRational::new(count, binom(n - 1, t - 1));
    }
    Ok(TimedProfile { circuit: c, values })
}

/// Total winning probability of one card (sum of its timed profile).
pub fn beta(m: &Matroid, c: ElementSet) -> Result<BigRational, Error> {
    Ok(timed_beta(m, c)?.total())
}

/// Betas and timed profiles for every card, via the Theorem-B engine.
pub fn beta_table(m: &Matroid) -> Result<BetaTable, Error> {
    if m.circuits().is_empty() {
        return Err(Error::NoCircuits);
    }
    let entries = m
        .circuits()
        .iter()
        .map(|&c| {
            let timed = timed_beta(m, c)?;
            Ok(BetaEntry { circuit: c, beta: timed.total(), timed })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(BetaTable::from_entries(m.n(), m.rank(), entries))
}

/// Oracle engine: betas and timed profiles by playing all `n!` orders.
pub fn brute_force_beta(m: &Matroid) -> Result<BetaTable, Error> {
    if m.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::Capacity {
            what: "brute-force ground set",
            got: m.n(),
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    if m.circuits().is_empty() {
        return Err(Error::NoCircuits);
    }
    let n = m.n();
    let circuits = m.circuits();
    let mut wins = vec![0u64; circuits.len()];
    let mut wins_by_round = vec![vec![0u64; n + 1]; circuits.len()];
    let mut positions = vec![0usize; n];
    for_each_permutation(n, |order| {
        for (round, &e) in order.iter().enumerate() {
            positions[e.index() - 1] = round + 1;
        }
        let (idx, round, unique) = winner_by_positions(circuits, &positions);
        assert!(unique, "tie at first completion despite valid circuit axioms");
        wins[idx] += 1;
        wins_by_round[idx][round] += 1;
    });
    let total = (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    let entries = circuits
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let values = (1..=n)
                .map(|t| BigRational::new(BigInt::from(wins_by_round[i][t]), total.clone()))
                .collect();
            BetaEntry {
                circuit: c,
                beta: BigRational::new(BigInt::from(wins[i]), total.clone()),
                timed: TimedProfile { circuit: c, values },
            }
        })
        .collect();
    Ok(BetaTable::from_entries(m.n(), m.rank(), entries))
}

/// Empirical win frequencies from seeded Fisher-Yates simulation.
///
/// Deterministic for a fixed seed; the PRNG is SplitMix64 (see
/// [`crate::rng`]) and the seed is echoed in the output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimulationTable {
    pub n: usize,
    pub seed: u64,
    pub trials: u64,
    /// Win counts per circuit, canonical order.
    pub counts: Vec<(ElementSet, u64)>,
}

impl SimulationTable {
    /// Empirical frequency of one circuit.
    pub fn frequency(&self, circuit: ElementSet) -> Option<f64> {
        self.counts
            .iter()
            .find(|(c, _)| *c == circuit)
            .map(|(_, w)| *w as f64 / self.trials as f64)
    }
}

impl fmt::Display for SimulationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# simulate n={} trials={} seed={} prng=splitmix64", self.n, self.trials, self.seed)?;
        for (c, w) in &self.counts {
            writeln!(f, "{} {} {:.6}", c, w, *w as f64 / self.trials as f64)?;
        }
        Ok(())
    }
}

pub fn monte_carlo(m: &Matroid, trials: u64, seed: u64) -> Result<SimulationTable, Error> {
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if m.circuits().is_empty() {
        return Err(Error::NoCircuits);
    }
    let n = m.n();
    let mut rng = SplitMix64::new(seed);
    let mut order: Vec<usize> = (1..=n).collect();
    let mut positions = vec![0usize; n];
    let mut wins = vec![0u64; m.circuits().len()];
    for _ in 0..trials {
        rng.shuffle(&mut order);
        for (round, &e) in order.iter().enumerate() {
            positions[e - 1] = round + 1;
        }
        let (idx, _, unique) = winner_by_positions(m.circuits(), &positions);
        assert!(unique, "tie at first completion despite valid circuit axioms");
        wins[idx] += 1;
    }
    Ok(SimulationTable {
        n,
        seed,
        trials,
        counts: m.circuits().iter().copied().zip(wins).collect(),
    })
}

/// One monotonicity violation: a longer card whose beta is at least a
/// shorter card's (ties count).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ViolationPair {
    pub longer: ElementSet,
    pub shorter: ElementSet,
    pub beta_longer: BigRational,
    pub beta_shorter: BigRational,
}

/// All monotonicity violations of one matroid, ordered by (longer, shorter)
/// canonical circuit order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ViolationReport {
    pub pairs: Vec<ViolationPair>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }
}

/// Extracts the violations from an already-computed table.
pub fn violations_from_table(table: &BetaTable) -> ViolationReport {
    let entries = table.entries();
    let mut pairs = Vec::new();
    for longer in entries {
        for shorter in entries {
            if longer.circuit.len() > shorter.circuit.len() && longer.beta >= shorter.beta {
                pairs.push(ViolationPair {
                    longer: longer.circuit,
                    shorter: shorter.circuit,
                    beta_longer: longer.beta.clone(),
                    beta_shorter: shorter.beta.clone(),
                });
            }
        }
    }
    ViolationReport { pairs }
}

pub fn monotonicity_violations(m: &Matroid) -> Result<ViolationReport, Error> {
    Ok(violations_from_table(&beta_table(m)?))
}

/// Beta ties between equal-size circuits; informational only, never a
/// violation.
pub fn equal_size_ties(table: &BetaTable) -> Vec<(ElementSet, ElementSet)> {
    let entries = table.entries();
    let mut ties = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.circuit.len() == b.circuit.len() && a.beta == b.beta {
                ties.push((a.circuit, b.circuit));
            }
        }
    }
    ties
}

/// True iff all cards have exactly equal winning probability.
pub fn is_equitable(m: &Matroid) -> Result<bool, Error> {
    Ok(equitable_from_table(&beta_table(m)?))
}

pub fn equitable_from_table(table: &BetaTable) -> bool {
    let mut entries = table.entries().iter();
    let Some(first) = entries.next() else { return true };
    entries.all(|e| e.beta == first.beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tests::{five_card_example, matroid};
    use crate::pg::pg_dual;
    use crate::ratio::ratio;

    fn set(ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn play_game_examples() {
        let five = five_card_example();
        let p = Permutation::from_indices(&[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(play_game(&five, &p).unwrap(), (set(&[1, 2, 3]), 3));
        let p = Permutation::from_indices(&[5, 6, 7, 8, 1, 2, 3, 4]).unwrap();
        assert_eq!(play_game(&five, &p).unwrap(), (set(&[5, 6, 7, 8]), 4));
        let free = Matroid::uniform(2, 2).unwrap();
        assert!(matches!(
            play_game(&free, &Permutation::identity(2)),
            Err(Error::NoCircuits)
        ));
    }

    #[test]
    fn game_always_ends_by_rank_plus_one() {
        let five = five_card_example();
        for_each_permutation(five.n(), |order| {
            let p = Permutation::new(order.to_vec()).unwrap();
            let (_, round) = play_game(&five, &p).unwrap();
            assert!(round <= five.rank() + 1);
        });
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert_eq!(
            beta_inclusion_exclusion(&u13, set(&[1, 2])).unwrap(),
            ratio(1, 3)
        );
        let single = matroid(4, &[vec![1, 2, 3, 4]]);
        assert_eq!(
            beta_inclusion_exclusion(&single, set(&[1, 2, 3, 4])).unwrap(),
            ratio(1, 1)
        );
        assert!(matches!(
            beta_inclusion_exclusion(&u13, set(&[1])),
            Err(Error::NotACircuit { .. })
        ));
        assert!(matches!(
            beta_inclusion_exclusion_with_cap(&u13, set(&[1, 2]), 2),
            Err(Error::CircuitCapExceeded { .. })
        ));
    }

    #[test]
    fn timed_profile_of_three_circuit() {
        // the worked example: card {1,2,3} of the five-card matroid
        let five = five_card_example();
        let profile = timed_beta(&five, set(&[1, 2, 3])).unwrap();
        assert_eq!(profile.at_round(3), &ratio(1, 56));
        assert_eq!(profile.at_round(4), &ratio(3, 70));
        assert_eq!(profile.at_round(5), &ratio(9, 140));
        assert_eq!(profile.at_round(6), &ratio(1, 14));
        assert_eq!(profile.at_round(1), &ratio(0, 1));
        assert_eq!(profile.at_round(7), &ratio(0, 1));
        assert_eq!(profile.total(), ratio(11, 56));
    }

    #[test]
    fn timed_profile_single_pair() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let profile = timed_beta(&u12, set(&[1, 2])).unwrap();
        assert_eq!(profile.values(), &[ratio(0, 1), ratio(1, 1)]);
    }

    #[test]
    fn five_card_beta_table() {
        let table = beta_table(&five_card_example()).unwrap();
        assert_eq!(table.beta_of(set(&[5, 6, 7, 8])).unwrap(), &ratio(3, 14));
        for c in [&[1usize, 2, 3][..], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]] {
            assert_eq!(table.beta_of(set(c)).unwrap(), &ratio(11, 56));
        }
    }

    #[test]
    fn dual_fano_is_equitable_at_one_seventh() {
        let table = beta_table(&pg_dual(2, 2).unwrap()).unwrap();
        assert!(table.entries().iter().all(|e| e.beta == ratio(1, 7)));
        assert!(equitable_from_table(&table));
    }

    #[test]
    fn brute_force_agrees_with_timed_engine() {
        for m in [
            Matroid::uniform(1, 3).unwrap(),
            five_card_example(),
            matroid(5, &[vec![1, 2], vec![3, 4], vec![5]]),
        ] {
            let exact = beta_table(&m).unwrap();
            let brute = brute_force_beta(&m).unwrap();
            assert_eq!(exact, brute);
        }
    }

    #[test]
    fn brute_force_cap() {
        let m = Matroid::uniform(1, 11).unwrap();
        assert!(matches!(brute_force_beta(&m), Err(Error::Capacity { .. })));
    }

    #[test]
    fn monte_carlo_is_deterministic_and_validates() {
        let five = five_card_example();
        assert!(matches!(monte_carlo(&five, 0, 7), Err(Error::Domain(_))));
        let a = monte_carlo(&five, 2000, 12345).unwrap();
        let b = monte_carlo(&five, 2000, 12345).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
        let c = monte_carlo(&five, 2000, 54321).unwrap();
        assert_ne!(a.counts, c.counts);
        assert_eq!(a.counts.iter().map(|(_, w)| w).sum::<u64>(), 2000);
    }

    #[test]
    fn five_card_has_exactly_four_violations() {
        let report = monotonicity_violations(&five_card_example()).unwrap();
        assert_eq!(report.len(), 4);
        for pair in &report.pairs {
            assert_eq!(pair.longer, set(&[5, 6, 7, 8]));
            assert_eq!(pair.beta_longer, ratio(3, 14));
            assert_eq!(pair.beta_shorter, ratio(11, 56));
        }
    }

    #[test]
    fn uniform_matroids_have_no_violations_and_are_equitable() {
        for (r, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            let m = Matroid::uniform(r, n).unwrap();
            assert!(monotonicity_violations(&m).unwrap().is_empty());
            assert!(is_equitable(&m).unwrap());
        }
        assert!(!is_equitable(&five_card_example()).unwrap());
    }

    #[test]
    fn equal_size_ties_are_reported_not_violated() {
        let table = beta_table(&five_card_example()).unwrap();
        let ties = equal_size_ties(&table);
        // the four 3-circuits tie pairwise
        assert_eq!(ties.len(), 6);
        assert!(violations_from_table(&table)
            .pairs
            .iter()
            .all(|p| p.longer.len() > p.shorter.len()));
    }

    #[test]
    fn table_engines_reject_empty_matroid() {
        let free = Matroid::uniform(3, 3).unwrap();
        assert!(matches!(beta_table(&free), Err(Error::NoCircuits)));
        assert!(matches!(brute_force_beta(&free), Err(Error::NoCircuits)));
    }
}
