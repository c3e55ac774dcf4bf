//! Brute-force matroid automorphisms and circuit orbits.
//!
//! Backtracking over images with per-element pruning: an element can only
//! map to one with the same circuit-membership signature (the multiset of
//! sizes of circuits through it), and every fully-assigned circuit's image
//! must itself be a circuit. Ground sets are capped (default 12) since the
//! output itself is factorial in symmetric cases.

use crate::error::Error;
use crate::matroid::Matroid;
use crate::perm::Permutation;
use crate::set::{ElementId, ElementSet};
use std::collections::HashSet;

/// Default ground-set cap for the automorphism search.
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 12;

/// All automorphisms of `m` (ground-set permutations mapping the circuit
/// family onto itself), under the default cap. Always contains the identity.
pub fn automorphisms(m: &Matroid) -> Result<Vec<Permutation>, Error> {
    automorphisms_with_cap(m, DEFAULT_AUTOMORPHISM_CAP)
}

pub fn automorphisms_with_cap(m: &Matroid, cap: usize) -> Result<Vec<Permutation>, Error> {
    let n = m.n();
    if n > cap {
        return Err(Error::Capacity { what: "automorphism ground set", got: n, limit: cap });
    }

    // signature of e: sorted sizes of circuits containing e
    let signature = |e: ElementId| -> Vec<usize> {
        let mut sizes: Vec<usize> =
            m.circuits().iter().filter(|c| c.contains(e)).map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    };
    let elements: Vec<ElementId> = m.ground_set().iter().collect();
    let signatures: Vec<Vec<usize>> = elements.iter().map(|&e| signature(e)).collect();
    let circuit_set: HashSet<u64> = m.circuits().iter().map(|c| c.bits()).collect();

    let mut image: Vec<Option<ElementId>> = vec![None; n];
    let mut used = ElementSet::EMPTY;
    let mut found = Vec::new();
    search(
        m,
        &elements,
        &signatures,
        &circuit_set,
        0,
        &mut image,
        &mut used,
        &mut found,
    );
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn search(
    m: &Matroid,
    elements: &[ElementId],
    signatures: &[Vec<usize>],
    circuit_set: &HashSet<u64>,
    pos: usize,
    image: &mut Vec<Option<ElementId>>,
    used: &mut ElementSet,
    found: &mut Vec<Permutation>,
) {
    let n = elements.len();
    if pos == n {
        let order: Vec<ElementId> = image.iter().map(|o| o.unwrap()).collect();
        found.push(Permutation::new(order).expect("assignment is a bijection"));
        return;
    }
    for cand_idx in 0..n {
        let cand = elements[cand_idx];
        if used.contains(cand) || signatures[cand_idx] != signatures[pos] {
            continue;
        }
        image[pos] = Some(cand);
        *used = used.with(cand);
        if assigned_circuits_ok(m, circuit_set, image, pos + 1) {
            search(m, elements, signatures, circuit_set, pos + 1, image, used, found);
        }
        *used = used.without(cand);
        image[pos] = None;
    }
}

/// Every circuit contained in the assigned prefix must map to a circuit.
fn assigned_circuits_ok(
    m: &Matroid,
    circuit_set: &HashSet<u64>,
    image: &[Option<ElementId>],
    assigned: usize,
) -> bool {
    let prefix = ElementSet::full(assigned);
    for &c in m.circuits() {
        if !c.is_subset_of(prefix) {
            continue;
        }
        let mut mapped = ElementSet::EMPTY;
        for e in c.iter() {
            mapped = mapped.with(image[e.index() - 1].unwrap());
        }
        if !circuit_set.contains(&mapped.bits()) {
            return false;
        }
    }
    true
}

/// Orbits of the automorphism group acting on circuit indices, each orbit
/// sorted, orbits ordered by smallest member.
pub fn circuit_orbits(m: &Matroid) -> Result<Vec<Vec<usize>>, Error> {
    circuit_orbits_with_cap(m, DEFAULT_AUTOMORPHISM_CAP)
}

pub fn circuit_orbits_with_cap(m: &Matroid, cap: usize) -> Result<Vec<Vec<usize>>, Error> {
    let autos = automorphisms_with_cap(m, cap)?;
    let circuits = m.circuits();
    let index_of = |c: ElementSet| circuits.binary_search(&c).expect("image is a circuit");

    let mut parent: Vec<usize> = (0..circuits.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for phi in &autos {
        for (i, &c) in circuits.iter().enumerate() {
            let j = index_of(phi.apply(c));
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let mut orbits: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..circuits.len() {
        let root = find(&mut parent, i);
        orbits.entry(root).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = orbits.into_values().collect();
    out.sort_by_key(|orbit| orbit[0]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tests::{five_card_example, matroid};
    use crate::perm::for_each_permutation;
    use crate::pg::pg_dual;

    /// Oracle: filter all n! permutations directly.
    fn brute_force_automorphism_count(m: &Matroid) -> usize {
        let circuit_set: HashSet<u64> = m.circuits().iter().map(|c| c.bits()).collect();
        let mut count = 0;
        for_each_permutation(m.n(), |order| {
            let p = Permutation::new(order.to_vec()).unwrap();
            if m.circuits().iter().all(|&c| circuit_set.contains(&p.apply(c).bits())) {
                count += 1;
            }
        });
        count
    }

    #[test]
    fn u13_has_full_symmetric_group() {
        let autos = automorphisms(&Matroid::uniform(1, 3).unwrap()).unwrap();
        assert_eq!(autos.len(), 6);
        assert!(autos.contains(&Permutation::identity(3)));
    }

    #[test]
    fn five_card_group_order_is_576() {
        let m = five_card_example();
        let autos = automorphisms(&m).unwrap();
        // S4 x S4 on {1..4} and {5..8}
        assert_eq!(autos.len(), 576);
        assert_eq!(autos.len(), brute_force_automorphism_count(&m));
    }

    #[test]
    fn backtracking_matches_brute_force_on_asymmetric_matroid() {
        let m = matroid(5, &[vec![1, 2], vec![3, 4, 5]]);
        let autos = automorphisms(&m).unwrap();
        assert_eq!(autos.len(), brute_force_automorphism_count(&m));
        assert_eq!(autos.len(), 2 * 6);
    }

    #[test]
    fn cap_is_enforced() {
        let m = Matroid::uniform(1, 13).unwrap();
        assert!(matches!(automorphisms(&m), Err(Error::Capacity { .. })));
        assert!(automorphisms_with_cap(&Matroid::uniform(1, 3).unwrap(), 3).is_ok());
    }

    #[test]
    fn five_card_orbits_split_by_size() {
        let m = five_card_example();
        let orbits = circuit_orbits(&m).unwrap();
        // four 3-circuits in one orbit, {5,6,7,8} alone
        assert_eq!(orbits, vec![vec![0, 1, 2, 3], vec![4]]);
    }

    #[test]
    fn dual_fano_circuits_form_one_orbit() {
        let m = pg_dual(2, 2).unwrap();
        let orbits = circuit_orbits(&m).unwrap();
        assert_eq!(orbits, vec![(0..7).collect::<Vec<_>>()]);
    }

    #[test]
    fn orbits_of_u13() {
        let orbits = circuit_orbits(&Matroid::uniform(1, 3).unwrap()).unwrap();
        assert_eq!(orbits, vec![vec![0, 1, 2]]);
    }
}
