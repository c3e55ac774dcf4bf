//! Graphic matroids: circuits are the simple cycles of a multigraph.
//!
//! Edges are the matroid elements, numbered `1..=|E|` in input order.
//! Self-loop edges become singleton circuits and parallel pairs become
//! 2-circuits. Cycles are enumerated by DFS from each vertex with
//! canonical-form dedup, which is fine at corpus scale (tiny graphs).

use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{ElementSet, MAX_ELEMENTS};
use std::collections::BTreeSet;

/// Builds the graphic matroid of a multigraph on `vertices` vertices
/// (labeled `1..=vertices`); loops and parallel edges are allowed.
pub fn from_graph(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid, Error> {
    if edges.len() > MAX_ELEMENTS {
        return Err(Error::Capacity { what: "edge count", got: edges.len(), limit: MAX_ELEMENTS });
    }
    for &(u, v) in edges {
        if u == 0 || v == 0 || u > vertices || v > vertices {
            return Err(Error::Domain(format!(
                "edge ({u},{v}) has endpoints outside 1..={vertices}"
            )));
        }
    }

    let mut cycles: BTreeSet<u64> = BTreeSet::new();
    // incidence list: (edge index, other endpoint) per vertex
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices + 1];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u == v {
            cycles.insert(1u64 << i);
        } else {
            incident[u].push((i, v));
            incident[v].push((i, u));
        }
    }

    // Simple cycles with >= 2 edges: walk from each start vertex s, visiting
    // only vertices > s in between, closing back at s. Each cycle is found
    // once per direction; the set dedups.
    for s in 1..=vertices {
        let mut edge_mask = 0u64;
        let mut visited = vec![false; vertices + 1];
        dfs_cycles(s, s, &incident, &mut visited, &mut edge_mask, 0, &mut cycles);
    }

    let circuits = cycles
        .into_iter()
        .map(ElementSet::from_bits)
        .collect();
    Ok(matroid_from_cycles(edges.len(), circuits))
}

fn matroid_from_cycles(n: usize, circuits: Vec<ElementSet>) -> Matroid {
    Matroid::new(n, circuits).expect("simple cycles of a multigraph satisfy the circuit axioms")
}

fn dfs_cycles(
    start: usize,
    at: usize,
    incident: &[Vec<(usize, usize)>],
    visited: &mut [bool],
    edge_mask: &mut u64,
    depth: usize,
    cycles: &mut BTreeSet<u64>,
) {
    visited[at] = true;
    for &(edge, next) in &incident[at] {
        if *edge_mask & (1u64 << edge) != 0 {
            continue;
        }
        if next == start {
            if depth >= 1 {
                cycles.insert(*edge_mask | (1u64 << edge));
            }
            continue;
        }
        if next < start || visited[next] {
            continue;
        }
        *edge_mask |= 1u64 << edge;
        dfs_cycles(start, next, incident, visited, edge_mask, depth + 1, cycles);
        *edge_mask &= !(1u64 << edge);
    }
    visited[at] = false;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_is_u23() {
        let m = from_graph(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn parallel_edges_and_self_loops() {
        let m = from_graph(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(m.circuits(), &[set(&[1, 2])]);
        let m = from_graph(1, &[(1, 1)]).unwrap();
        assert_eq!(m.circuits(), &[set(&[1])]);
    }

    #[test]
    fn theta_graph_has_three_cycles() {
        // vertices 1,2 joined by three internally disjoint paths:
        // direct edge 1, and a two-edge path through vertex 3 twice
        let m = from_graph(4, &[(1, 2), (1, 3), (3, 2), (1, 4), (4, 2)]).unwrap();
        assert_eq!(
            m.circuits(),
            &[set(&[1, 2, 3]), set(&[1, 4, 5]), set(&[2, 3, 4, 5])]
        );
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn multigraph_mix() {
        // parallel pair between 1-2 plus a triangle hanging off vertex 2
        let m = from_graph(3, &[(1, 2), (1, 2), (2, 3), (3, 1)]).unwrap();
        // cycles: {1,2}, {1,3,4}, {2,3,4}
        assert_eq!(m.circuits(), &[set(&[1, 2]), set(&[1, 3, 4]), set(&[2, 3, 4])]);
    }

    #[test]
    fn forest_has_no_circuits() {
        let m = from_graph(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(m.circuits().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn rejects_bad_endpoints() {
        assert!(from_graph(2, &[(1, 3)]).is_err());
        assert!(from_graph(2, &[(0, 1)]).is_err());
    }

    #[test]
    fn rank_is_vertices_minus_components() {
        let m = from_graph(5, &[(1, 2), (2, 3), (3, 1), (4, 5)]).unwrap();
        assert_eq!(m.rank(), 5 - 2);
    }
}
