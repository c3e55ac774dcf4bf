//! Circuit-family representation of matroids.
//!
//! A [`Matroid`] is a ground-set size `n` plus the family of circuits
//! ("bingo cards"), kept in canonical order: size-major, mask-minor. Matroid
//! equality is therefore plain list equality. Construction validates the
//! circuit axioms:
//!
//! * (C1) no circuit is empty,
//! * (C2) no circuit properly contains another,
//! * (C3) circuit elimination: distinct circuits sharing `e` admit a third
//!   circuit inside their union minus `e`.
//!
//! (C3) failures come with a tie witness: a calling order under which two
//! cards would complete simultaneously at the first completion.

use crate::error::Error;
use crate::perm::Permutation;
use crate::set::{subsets_of_size, ElementId, ElementSet, MAX_ELEMENTS};
use std::collections::HashSet;
use std::fmt;

/// Which circuit axiom a validation failure violates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    C1,
    C2,
    C3,
}

/// One validation failure, with enough evidence to reproduce it.
#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    /// The offending circuits: `[C]` for C1, `[C1, C2]` for C2/C3.
    pub witnesses: Vec<ElementSet>,
    /// The shared element of a C3 failure.
    pub shared_element: Option<ElementId>,
    /// For C3: a calling order that produces a first-completion tie.
    pub tie_order: Option<Permutation>,
}

/// Outcome of checking a card family against the circuit axioms.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            match fail.axiom {
                Axiom::C1 => write!(f, "C1: empty card")?,
                Axiom::C2 => write!(
                    f,
                    "C2: {} is a proper subset of {}",
                    fail.witnesses[0], fail.witnesses[1]
                )?,
                Axiom::C3 => {
                    write!(
                        f,
                        "C3: {} and {} share element {} with no eliminating card",
                        fail.witnesses[0],
                        fail.witnesses[1],
                        fail.shared_element.unwrap()
                    )?;
                    if let Some(order) = &fail.tie_order {
                        write!(f, " (tie under calling order {order})")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A minor (deletion or contraction) together with the relabeling back to
/// the parent: `old_labels[k]` is the parent element now called `k + 1`.
#[derive(Clone, Debug)]
pub struct Minor {
    pub matroid: Matroid,
    pub old_labels: Vec<ElementId>,
}

/// A matroid on `{1, ..., n}` given by its circuits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: u8,
    circuits: Vec<ElementSet>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, circuits=[", self.n)?;
        for (i, c) in self.circuits.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "])")
    }
}

impl Matroid {
    /// Validates the axioms and builds the matroid in canonical order.
    pub fn new(n: usize, circuits: Vec<ElementSet>) -> Result<Self, Error> {
        let report = validate_circuits(n, &circuits)?;
        if !report.is_valid() {
            return Err(Error::NotAMatroid(report));
        }
        Ok(Self::from_circuits_unchecked(n, circuits))
    }

    /// Canonicalizes without validating; for constructions that are valid by
    /// theorem. Debug builds still check.
    pub(crate) fn from_circuits_unchecked(n: usize, mut circuits: Vec<ElementSet>) -> Self {
        circuits.sort();
        circuits.dedup();
        debug_assert!(
            validate_circuits(n, &circuits).map(|r| r.is_valid()).unwrap_or(false),
            "internal construction produced an invalid circuit family"
        );
        Matroid { n: n as u8, circuits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Circuits in canonical (size, mask) order.
    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    pub fn has_circuit(&self, c: ElementSet) -> bool {
        self.circuits.binary_search(&c).is_ok()
    }

    /// Largest circuit size, or 0 when there are no circuits.
    pub fn max_circuit_size(&self) -> usize {
        self.circuits.last().map_or(0, |c| c.len())
    }

    /// True iff no circuit of the matroid is contained in `s`.
    pub fn is_independent(&self, s: ElementSet) -> bool {
        !self.circuits.iter().any(|&c| c.is_subset_of(s))
    }

    /// Rank of a subset: size of a maximum independent subset, by greedy
    /// augmentation over the elements of `s` in ascending order (correct for
    /// matroids).
    pub fn rank_of(&self, s: ElementSet) -> usize {
        let mut indep = ElementSet::EMPTY;
        for e in s.iter() {
            if self.is_independent(indep.with(e)) {
                indep = indep.with(e);
            }
        }
        indep.len()
    }

    /// Rank of the matroid.
    pub fn rank(&self) -> usize {
        self.rank_of(self.ground_set())
    }

    /// All bases (maximal independent sets), in ascending mask order.
    pub fn bases(&self) -> Vec<ElementSet> {
        let r = self.rank();
        let mut out = Vec::new();
        let mut stack = ElementSet::EMPTY;
        self.collect_independent_of_size(&mut stack, 1, r, &mut out);
        out
    }

    fn collect_independent_of_size(
        &self,
        current: &mut ElementSet,
        next: usize,
        target: usize,
        out: &mut Vec<ElementSet>,
    ) {
        if current.len() == target {
            out.push(*current);
            return;
        }
        let missing = target - current.len();
        for i in next..=self.n() {
            if self.n() - i + 1 < missing {
                break;
            }
            let e = ElementId::new(i).unwrap();
            let candidate = current.with(e);
            if self.is_independent(candidate) {
                *current = candidate;
                self.collect_independent_of_size(current, i + 1, target, out);
                *current = current.without(e);
            }
        }
    }

    /// Rebuilds a matroid from its basis family. The family is checked for
    /// the basis-exchange property before anything is trusted; circuits are
    /// then the inclusion-minimal sets contained in no basis, found by
    /// size-increasing search with subset pruning.
    pub fn from_bases(n: usize, bases: &[ElementSet]) -> Result<Self, Error> {
        if n > MAX_ELEMENTS {
            return Err(Error::Capacity { what: "ground set", got: n, limit: MAX_ELEMENTS });
        }
        let full = ElementSet::full(n);
        let mut family: Vec<ElementSet> = bases.to_vec();
        family.sort();
        family.dedup();
        if family.is_empty() {
            return Err(Error::NotABasisFamily("no bases given".into()));
        }
        if let Some(b) = family.iter().find(|b| !b.is_subset_of(full)) {
            return Err(Error::Domain(format!("basis {b} not inside {{1..{n}}}")));
        }
        let r = family[0].len();
        if family.iter().any(|b| b.len() != r) {
            return Err(Error::NotABasisFamily("bases of unequal size".into()));
        }
        let members: HashSet<u64> = family.iter().map(|b| b.bits()).collect();
        for &b1 in &family {
            for &b2 in &family {
                if b1 == b2 {
                    continue;
                }
                for x in b1.difference(b2).iter() {
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|y| members.contains(&b1.without(x).with(y).bits()));
                    if !ok {
                        return Err(Error::NotABasisFamily(format!(
                            "exchange fails for {b1}, {b2} at element {x}"
                        )));
                    }
                }
            }
        }

        let mut circuits: Vec<ElementSet> = Vec::new();
        for k in 1..=(r + 1).min(n) {
            'subset: for s in subsets_of_size(n, k) {
                for &c in &circuits {
                    if c.is_subset_of(s) {
                        continue 'subset;
                    }
                }
                if !family.iter().any(|b| s.is_subset_of(*b)) {
                    circuits.push(s);
                }
            }
        }
        Ok(Self::from_circuits_unchecked(n, circuits))
    }

    /// The uniform matroid `U_{r,n}`: all `(r+1)`-subsets as circuits.
    pub fn uniform(r: usize, n: usize) -> Result<Self, Error> {
        if n > MAX_ELEMENTS {
            return Err(Error::Capacity { what: "ground set", got: n, limit: MAX_ELEMENTS });
        }
        if r > n {
            return Err(Error::Domain(format!("uniform matroid needs r <= n, got r={r}, n={n}")));
        }
        let circuits: Vec<ElementSet> = if r < n {
            subsets_of_size(n, r + 1).collect()
        } else {
            Vec::new()
        };
        Ok(Self::from_circuits_unchecked(n, circuits))
    }

    /// Direct sum: `other`'s elements are relabeled to `n + 1 ..`, circuits
    /// are the union of the two families.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Self, Error> {
        let total = self.n() + other.n();
        if total > MAX_ELEMENTS {
            return Err(Error::Capacity { what: "ground set", got: total, limit: MAX_ELEMENTS });
        }
        let mut circuits = self.circuits.clone();
        circuits.extend(
            other
                .circuits
                .iter()
                .map(|c| ElementSet::from_bits(c.bits() << self.n())),
        );
        Ok(Self::from_circuits_unchecked(total, circuits))
    }

    /// Deletion `M \ t`: keeps circuits avoiding `t`, relabeled to a
    /// contiguous ground set.
    pub fn delete(&self, t: ElementSet) -> Minor {
        let old_labels: Vec<ElementId> =
            self.ground_set().difference(t).iter().collect();
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.intersection(t).is_empty())
            .map(|c| compress(*c, &old_labels))
            .collect();
        Minor {
            matroid: Self::from_circuits_unchecked(old_labels.len(), circuits),
            old_labels,
        }
    }

    /// Contraction `M / t`: minimal nonempty traces `C \ t`, relabeled.
    pub fn contract(&self, t: ElementSet) -> Minor {
        let old_labels: Vec<ElementId> =
            self.ground_set().difference(t).iter().collect();
        let mut traces: Vec<ElementSet> = self
            .circuits
            .iter()
            .map(|c| c.difference(t))
            .filter(|c| !c.is_empty())
            .collect();
        traces.sort();
        traces.dedup();
        let mut minimal: Vec<ElementSet> = Vec::new();
        // traces are size-sorted, so earlier entries can only be subsets of
        // later ones
        for &s in &traces {
            if !minimal.iter().any(|m| m.is_subset_of(s)) {
                minimal.push(s);
            }
        }
        let circuits = minimal.into_iter().map(|c| compress(c, &old_labels)).collect();
        Minor {
            matroid: Self::from_circuits_unchecked(old_labels.len(), circuits),
            old_labels,
        }
    }

    /// Dual matroid: bases are complemented and the circuits recomputed via
    /// [`Matroid::from_bases`].
    pub fn dual(&self) -> Matroid {
        let full = self.ground_set();
        let co_bases: Vec<ElementSet> =
            self.bases().into_iter().map(|b| full.difference(b)).collect();
        Self::from_bases(self.n(), &co_bases)
            .expect("complements of a matroid's bases satisfy exchange")
    }

    /// `(loops, coloops)`: singleton circuits, and elements in no circuit.
    pub fn loops_and_coloops(&self) -> (ElementSet, ElementSet) {
        let mut loops = ElementSet::EMPTY;
        let mut covered = ElementSet::EMPTY;
        for &c in &self.circuits {
            if c.len() == 1 {
                loops = loops.union(c);
            }
            covered = covered.union(c);
        }
        (loops, self.ground_set().difference(covered))
    }

    /// Applies a relabeling of the ground set to every circuit.
    pub fn relabel(&self, perm: &Permutation) -> Result<Matroid, Error> {
        if perm.len() != self.n() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of length {} applied to ground set of size {}",
                perm.len(),
                self.n()
            )));
        }
        let circuits = self.circuits.iter().map(|c| perm.apply(*c)).collect();
        Ok(Self::from_circuits_unchecked(self.n(), circuits))
    }
}

/// Relabels `s` through `old_labels`: the set's elements must all appear in
/// `old_labels`, and position `k` becomes element `k + 1`.
fn compress(s: ElementSet, old_labels: &[ElementId]) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for (k, &old) in old_labels.iter().enumerate() {
        if s.contains(old) {
            out = out.with(ElementId::new(k + 1).unwrap());
        }
    }
    debug_assert_eq!(out.len(), s.len());
    out
}

/// Checks the bingo-card axioms (C1)-(C3) for a card family over `{1..n}`.
///
/// Capacity and domain problems (n too large, elements outside the ground
/// set) are hard errors; axiom violations are collected in the report. Each
/// C3 failure carries the tie witness: calling `(C1 u C2) \ {e}` first (in
/// ascending order), then `e`, completes two cards at once unless a third
/// card was finished earlier.
pub fn validate_circuits(n: usize, cards: &[ElementSet]) -> Result<ValidationReport, Error> {
    if n > MAX_ELEMENTS {
        return Err(Error::Capacity { what: "ground set", got: n, limit: MAX_ELEMENTS });
    }
    let full = ElementSet::full(n);
    if let Some(c) = cards.iter().find(|c| !c.is_subset_of(full)) {
        return Err(Error::Domain(format!("card {c} has elements outside {{1..{n}}}")));
    }

    let mut family: Vec<ElementSet> = cards.to_vec();
    family.sort();
    family.dedup();

    let mut failures = Vec::new();
    for &c in &family {
        if c.is_empty() {
            failures.push(AxiomFailure {
                axiom: Axiom::C1,
                witnesses: vec![c],
                shared_element: None,
                tie_order: None,
            });
        }
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            // family is size-sorted, so only a < b can nest
            if a != b && a.is_subset_of(b) {
                failures.push(AxiomFailure {
                    axiom: Axiom::C2,
                    witnesses: vec![a, b],
                    shared_element: None,
                    tie_order: None,
                });
            }
        }
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in family.iter().skip(i + 1) {
            for e in a.intersection(b).iter() {
                let target = a.union(b).without(e);
                if !family.iter().any(|c3| c3.is_subset_of(target)) {
                    failures.push(AxiomFailure {
                        axiom: Axiom::C3,
                        witnesses: vec![a, b],
                        shared_element: Some(e),
                        tie_order: Some(tie_witness(n, target, e)),
                    });
                }
            }
        }
    }
    Ok(ValidationReport { failures })
}

fn tie_witness(n: usize, union_minus_e: ElementSet, e: ElementId) -> Permutation {
    let mut order: Vec<ElementId> = union_minus_e.iter().collect();
    order.push(e);
    order.extend(
        ElementSet::full(n)
            .difference(union_minus_e.with(e))
            .iter(),
    );
    Permutation::new(order).expect("witness order is a permutation by construction")
}
