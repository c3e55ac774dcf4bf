//! Generators: bound-attaining constructions and a seeded random-matroid
//! sampler for stress and census testing.

use crate::error::Error;
use crate::graph::from_graph;
use crate::matroid::Matroid;
use crate::perm::Permutation;
use crate::rng::SplitMix64;
use crate::set::{ElementId, ElementSet};

/// The matroid attaining the upper bound: `U_{d, n-(r+1-d)} + U_{r-d, r+1-d}`
/// with the unique circuit of the second summand distinguished. Needs
/// `0 <= d <= r < n`.
pub fn sharp_upper(n: usize, r: usize, d: usize) -> Result<(Matroid, ElementSet), Error> {
    if !(d <= r && r < n) {
        return Err(Error::Domain(format!(
            "sharp upper construction needs 0 <= d <= r < n, got n={n}, r={r}, d={d}"
        )));
    }
    let csize = r + 1 - d;
    let first = Matroid::uniform(d, n - csize)?;
    let second = Matroid::uniform(r - d, csize)?;
    let m = first.direct_sum(&second)?;
    let circuit = ElementSet::from_indices((n - csize + 1)..=n).unwrap();
    debug_assert!(m.has_circuit(circuit));
    Ok((m, circuit))
}

/// The matroid attaining the sharp lower bound:
/// `U_{d, d+1} + U_{r-d, r+1-d} + (n-r-2) loops`, distinguished circuit the
/// unique circuit of the middle summand. Needs `d <= r < n - 1`.
pub fn sharp_lower(n: usize, r: usize, d: usize) -> Result<(Matroid, ElementSet), Error> {
    if !(d <= r && r + 1 < n) {
        return Err(Error::Domain(format!(
            "sharp lower construction needs 0 <= d <= r < n-1, got n={n}, r={r}, d={d}"
        )));
    }
    let csize = r + 1 - d;
    let first = Matroid::uniform(d, d + 1)?;
    let second = Matroid::uniform(r - d, csize)?;
    let loops = Matroid::uniform(0, n - r - 2)?;
    let m = first.direct_sum(&second)?.direct_sum(&loops)?;
    let circuit = ElementSet::from_indices((d + 2)..=(d + 1 + csize)).unwrap();
    debug_assert!(m.has_circuit(circuit));
    Ok((m, circuit))
}

/// Seeded sampler of valid matroids with at least one circuit, mixing
/// uniform matroids, graphic matroids, direct sums, loop/coloop paddings,
/// minors, and random relabelings. Deterministic for a fixed seed.
pub struct MatroidSampler {
    rng: SplitMix64,
    max_n: usize,
}

impl MatroidSampler {
    pub fn new(seed: u64) -> Self {
        MatroidSampler { rng: SplitMix64::new(seed), max_n: 8 }
    }

    pub fn with_max_n(seed: u64, max_n: usize) -> Self {
        assert!(max_n >= 4, "sampler needs room for sums and minors");
        MatroidSampler { rng: SplitMix64::new(seed), max_n }
    }

    fn pick(&mut self, bound: usize) -> usize {
        self.rng.next_below(bound as u64) as usize
    }

    fn random_relabel(&mut self, m: &Matroid) -> (Matroid, Permutation) {
        let mut order: Vec<usize> = (1..=m.n()).collect();
        self.rng.shuffle(&mut order);
        let perm = Permutation::from_indices(&order).unwrap();
        (m.relabel(&perm).unwrap(), perm)
    }

    fn random_uniform(&mut self) -> Matroid {
        let n = 2 + self.pick(self.max_n - 1);
        let r = self.pick(n);
        Matroid::uniform(r, n).unwrap()
    }

    fn random_graphic(&mut self) -> Matroid {
        let vertices = 2 + self.pick(4);
        let edges = 2 + self.pick(self.max_n.saturating_sub(2).max(1));
        let edges = edges.min(self.max_n);
        let mut list = Vec::with_capacity(edges);
        for _ in 0..edges {
            let u = 1 + self.pick(vertices);
            // mostly proper edges, occasionally a self-loop
            let v = if self.pick(8) == 0 { u } else { 1 + self.pick(vertices) };
            list.push((u, v));
        }
        let m = from_graph(vertices, &list).unwrap();
        if m.circuits().is_empty() {
            // force a cycle by doubling the first edge
            let mut list = list;
            list[0] = list[1 % list.len()];
            let doubled = from_graph(vertices, &list).unwrap();
            if doubled.circuits().is_empty() {
                // all else failed: a bare parallel pair
                return from_graph(2, &[(1, 2), (1, 2)]).unwrap();
            }
            return doubled;
        }
        m
    }

    fn random_base(&mut self) -> Matroid {
        match self.pick(4) {
            0 => self.random_uniform(),
            1 => self.random_graphic(),
            2 => {
                // direct sum of two small uniforms
                let n1 = 2 + self.pick(self.max_n - 3);
                let n2 = 2 + self.pick(self.max_n - n1 - 1);
                let a = Matroid::uniform(self.pick(n1), n1).unwrap();
                let b = Matroid::uniform(self.pick(n2), n2).unwrap();
                a.direct_sum(&b).unwrap()
            }
            _ => {
                // pad a uniform with a loop or coloop
                let n = 2 + self.pick(self.max_n - 2);
                let r = self.pick(n);
                let core = Matroid::uniform(r, n).unwrap();
                let pad = Matroid::uniform(self.pick(2), 1).unwrap();
                core.direct_sum(&pad).unwrap()
            }
        }
    }

    /// Next random matroid: valid, `2 <= n <= max_n`, at least one circuit.
    pub fn next_matroid(&mut self) -> Matroid {
        loop {
            let mut m = self.random_base();
            // sometimes take a minor
            if self.pick(3) == 0 && m.n() > 2 {
                let e = ElementId::new(1 + self.pick(m.n())).unwrap();
                let t = ElementSet::singleton(e);
                m = if self.pick(2) == 0 {
                    m.delete(t).matroid
                } else {
                    m.contract(t).matroid
                };
            }
            if m.n() < 2 || m.n() > self.max_n || m.circuits().is_empty() {
                continue;
            }
            return self.random_relabel(&m).0;
        }
    }

    /// Next random matroid that contains a circuit of full size `r + 1`,
    /// returned along with that circuit.
    pub fn next_with_spanning_circuit(&mut self) -> (Matroid, ElementSet) {
        loop {
            let (m, circuit) = match self.pick(3) {
                0 => {
                    // uniform: {1..r+1} is a circuit of size rank+1
                    let n = 2 + self.pick(self.max_n - 1);
                    let r = self.pick(n);
                    let m = Matroid::uniform(r, n).unwrap();
                    (m, ElementSet::from_indices(1..=(r + 1)).unwrap())
                }
                1 => {
                    // hamiltonian graphic: cycle through every vertex plus chords
                    let vertices = 3 + self.pick(self.max_n.min(6) - 2);
                    let mut list: Vec<(usize, usize)> =
                        (1..=vertices).map(|v| (v, v % vertices + 1)).collect();
                    let extra = self.pick(self.max_n - vertices + 1);
                    for _ in 0..extra {
                        let u = 1 + self.pick(vertices);
                        let v = 1 + self.pick(vertices);
                        if u != v {
                            list.push((u, v));
                        }
                    }
                    let m = from_graph(vertices, &list).unwrap();
                    (m, ElementSet::from_indices(1..=vertices).unwrap())
                }
                _ => {
                    // spanning-circuit core padded with loops
                    let n = 2 + self.pick(self.max_n - 2);
                    let r = self.pick(n);
                    let core = Matroid::uniform(r, n).unwrap();
                    let pad = Matroid::uniform(0, 1).unwrap();
                    let m = core.direct_sum(&pad).unwrap();
                    (m, ElementSet::from_indices(1..=(r + 1)).unwrap())
                }
            };
            if m.n() > self.max_n || m.rank() + 1 != circuit.len() || !m.has_circuit(circuit) {
                continue;
            }
            let (relabeled, perm) = self.random_relabel(&m);
            return (relabeled, perm.apply(circuit));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::validate_circuits;
    use crate::ratio::ratio;

    #[test]
    fn sharp_upper_reproduces_five_card_example() {
        let (m, c) = sharp_upper(8, 5, 2).unwrap();
        assert_eq!(m, crate::golden::five_card_matroid());
        assert_eq!(c, ElementSet::from_indices([5, 6, 7, 8]).unwrap());
        assert!(sharp_upper(8, 9, 2).is_err());
        assert!(sharp_upper(8, 5, 6).is_err());
    }

    #[test]
    fn sharp_lower_example_matroid() {
        // n=5, r=2, d=1: U_{1,2} + U_{1,2} + one loop
        let (m, c) = sharp_lower(5, 2, 1).unwrap();
        assert_eq!(m.n(), 5);
        assert_eq!(m.rank(), 2);
        assert_eq!(c, ElementSet::from_indices([3, 4]).unwrap());
        let beta = crate::prob::beta(&m, c).unwrap();
        assert_eq!(beta, ratio(7, 30));
        assert!(sharp_lower(5, 4, 1).is_err());
    }

    #[test]
    fn sampler_is_deterministic_and_valid() {
        let mut a = MatroidSampler::new(2024);
        let mut b = MatroidSampler::new(2024);
        for _ in 0..40 {
            let ma = a.next_matroid();
            let mb = b.next_matroid();
            assert_eq!(ma, mb);
            assert!(ma.n() <= 8);
            assert!(!ma.circuits().is_empty());
            assert!(validate_circuits(ma.n(), ma.circuits()).unwrap().is_valid());
        }
    }

    #[test]
    fn spanning_circuit_sampler_delivers_full_size_circuits() {
        let mut s = MatroidSampler::new(77);
        for _ in 0..40 {
            let (m, c) = s.next_with_spanning_circuit();
            assert!(m.has_circuit(c));
            assert_eq!(c.len(), m.rank() + 1);
            assert!(m.n() <= 8);
        }
    }
}
