//! Strong k-partiteness: a partition of the vertices into k classes so that
//! every edge is rainbow (exactly one vertex per class).

use crate::hypergraph::Hypergraph;

/// Finds a partition of V into k (possibly empty) classes with every edge
/// meeting each class exactly once, if one exists.
///
/// Since edges have exactly k vertices, an edge is rainbow iff no two of its
/// vertices share a class, so this is proper k-coloring of the co-occurrence
/// graph. Backtracks with the usual new-color symmetry break.
pub fn is_k_partite(h: &Hypergraph) -> Option<Vec<Vec<usize>>> {
    let n = h.n();
    let k = h.k();
    // co-occurrence adjacency
    let mut adj = vec![vec![false; n]; n];
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
    }
    let mut color = vec![usize::MAX; n];

    fn rec(v: usize, n: usize, k: usize, adj: &[Vec<bool>], color: &mut [usize]) -> bool {
        if v == n {
            return true;
        }
        let max_used = color[..v].iter().filter(|&&c| c != usize::MAX).max().copied();
        let limit = match max_used {
            None => 0,
            Some(m) => (m + 1).min(k - 1),
        };
        for c in 0..=limit {
            if (0..v).any(|u| adj[v][u] && color[u] == c) {
                continue;
            }
            color[v] = c;
            if rec(v + 1, n, k, adj, color) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }

    if !rec(0, n, k, &adj, &mut color) {
        return None;
    }
    let mut classes = vec![Vec::new(); k];
    for (v, &c) in color.iter().enumerate() {
        classes[c].push(v);
    }
    Some(classes)
}

/// Asserts that `classes` certifies k-partiteness of `h`.
pub fn is_rainbow_partition(h: &Hypergraph, classes: &[Vec<usize>]) -> bool {
    if classes.len() != h.k() {
        return false;
    }
    let n = h.n();
    let mut class_of = vec![usize::MAX; n];
    let mut seen = 0usize;
    for (c, part) in classes.iter().enumerate() {
        for &v in part {
            if v >= n || class_of[v] != usize::MAX {
                return false;
            }
            class_of[v] = c;
            seen += 1;
        }
    }
    if seen != n {
        return false;
    }
    for e in h.edges() {
        let mut hit = vec![false; h.k()];
        for &v in &e {
            let c = class_of[v];
            if hit[c] {
                return false;
            }
            hit[c] = true;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn short_ladder_is_partite_long_is_not() {
        for k in [3, 4, 5] {
            let l1 = constructions::ladder(k, 1).unwrap().graph;
            let p = is_k_partite(&l1).expect("length-1 ladder is k-partite");
            assert!(is_rainbow_partition(&l1, &p));
            let l2 = constructions::ladder(k, 2).unwrap().graph;
            assert!(is_k_partite(&l2).is_none());
        }
    }

    #[test]
    fn complete_graph_is_not_partite() {
        let k4 = constructions::complete(3, 4).unwrap().graph;
        assert!(is_k_partite(&k4).is_none());
    }

    #[test]
    fn complete_partite_certifies() {
        let h = constructions::complete_partite(3, &[2, 2, 2]).unwrap().graph;
        let p = is_k_partite(&h).unwrap();
        assert!(is_rainbow_partition(&h, &p));
    }
}
