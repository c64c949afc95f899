//! Canonical labeling by iterative partition refinement plus backtracking
//! over the coarsest stable partition, keeping the lexicographically least
//! relabeled edge encoding.
//!
//! Equal labels iff isomorphic; the encoding is fixed-endian and stable
//! across platforms. Worst case is factorial in the size of a cell the
//! refinement cannot split, which is fine at the host sizes this crate
//! works with.

use crate::hypergraph::Hypergraph;

type Partition = Vec<Vec<usize>>;

/// Vertex invariant relative to an ordered partition: for every incident
/// edge, the sorted cell indices of the other endpoints; sorted per vertex.
fn invariants(edges: &[Vec<usize>], n: usize, cells: &Partition) -> Vec<Vec<Vec<usize>>> {
    let mut cell_of = vec![0usize; n];
    for (ci, cell) in cells.iter().enumerate() {
        for &v in cell {
            cell_of[v] = ci;
        }
    }
    let mut inv: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for e in edges {
        for &v in e {
            let mut others: Vec<usize> =
                e.iter().filter(|&&u| u != v).map(|&u| cell_of[u]).collect();
            others.sort_unstable();
            inv[v].push(others);
        }
    }
    for i in inv.iter_mut() {
        i.sort_unstable();
    }
    inv
}

fn refine(edges: &[Vec<usize>], n: usize, mut cells: Partition) -> Partition {
    loop {
        let inv = invariants(edges, n, &cells);
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            let mut groups: Vec<(&Vec<Vec<usize>>, Vec<usize>)> = Vec::new();
            for &v in cell {
                match groups.iter_mut().find(|(key, _)| **key == inv[v]) {
                    Some((_, members)) => members.push(v),
                    None => groups.push((&inv[v], vec![v])),
                }
            }
            groups.sort_by(|a, b| a.0.cmp(b.0));
            if groups.len() > 1 {
                split = true;
            }
            for (_, members) in groups {
                next.push(members);
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn encode(h: &Hypergraph, label_of: &[usize]) -> Vec<u8> {
    let mut relabeled: Vec<Vec<u32>> = h
        .edges()
        .map(|e| {
            let mut img: Vec<u32> = e.iter().map(|&v| label_of[v] as u32).collect();
            img.sort_unstable();
            img
        })
        .collect();
    relabeled.sort_unstable();
    let mut out = Vec::with_capacity(12 + relabeled.len() * h.k() * 4);
    out.extend_from_slice(&(h.k() as u32).to_le_bytes());
    out.extend_from_slice(&(h.n() as u32).to_le_bytes());
    out.extend_from_slice(&(relabeled.len() as u32).to_le_bytes());
    for e in relabeled {
        for v in e {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    out
}

fn descend(h: &Hypergraph, edges: &[Vec<usize>], cells: Partition, best: &mut Option<Vec<u8>>) {
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut label_of = vec![0usize; h.n()];
            for (i, cell) in cells.iter().enumerate() {
                label_of[cell[0]] = i;
            }
            let code = encode(h, &label_of);
            if best.as_ref().map_or(true, |b| code < *b) {
                *best = Some(code);
            }
        }
        Some(target) => {
            for &u in &cells[target] {
                let mut split: Partition = Vec::with_capacity(cells.len() + 1);
                for (i, cell) in cells.iter().enumerate() {
                    if i == target {
                        split.push(vec![u]);
                        split.push(cell.iter().copied().filter(|&v| v != u).collect());
                    } else {
                        split.push(cell.clone());
                    }
                }
                let refined = refine(edges, h.n(), split);
                descend(h, edges, refined, best);
            }
        }
    }
}

/// Canonical label: equal byte sequences exactly for isomorphic hypergraphs.
pub fn canonical_form(h: &Hypergraph) -> Vec<u8> {
    let edges: Vec<Vec<usize>> = h.edges().collect();
    let initial = if h.n() == 0 {
        Vec::new()
    } else {
        vec![(0..h.n()).collect::<Vec<usize>>()]
    };
    let cells = refine(&edges, h.n(), initial);
    let mut best = None;
    descend(h, &edges, cells, &mut best);
    best.unwrap_or_else(|| encode(h, &[]))
}

/// Isomorphism test via canonical labels.
pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    a.k() == b.k() && a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::hypergraph::Hypergraph;

    #[test]
    fn zycle_two_is_complete_four() {
        let z = constructions::zycle(3, 2).unwrap().graph;
        let k4 = constructions::complete(3, 4).unwrap().graph;
        assert!(are_isomorphic(&z, &k4));
    }

    #[test]
    fn permutation_invariance() {
        let l2 = constructions::ladder(3, 2).unwrap().graph;
        let perm = vec![3, 0, 4, 1, 2];
        assert_eq!(canonical_form(&l2), canonical_form(&l2.permuted(&perm)));
    }

    #[test]
    fn distinguishes_edge_from_empty() {
        let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let empty = Hypergraph::empty(3, 3).unwrap();
        assert_ne!(canonical_form(&single), canonical_form(&empty));
    }

    #[test]
    fn distinguishes_nonisomorphic_same_size() {
        // both 5 vertices, 3 edges; degree sequences differ
        let a = constructions::ladder(3, 2).unwrap().graph;
        let b = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert!(!are_isomorphic(&a, &b));
    }
}
