//! Generators for every hypergraph family the workbench studies: ladders,
//! fanned ladders, zycles, blow-ups, complete and complete-partite graphs,
//! the DeBiasio–Jiang construction, homomorphic-image (quotient) families,
//! and tail augmentation.
//!
//! Vertex numbering is row-major over the construction coordinates (row
//! index ascending, then column), with tail/fan vertices last, so generated
//! files and fixtures are reproducible.

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Ladder,
    LadderFan,
    Zycle,
    BlowUp,
    Complete,
    CompletePartite,
    Dj,
    Augmented,
    Quotient,
}

/// Where a generated graph came from: family, parameters, and the map from
/// construction vertex names to integer ids.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub family: Family,
    pub params: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name_map: Option<BTreeMap<String, usize>>,
}

/// A generated hypergraph together with its provenance.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Hypergraph,
    pub provenance: Provenance,
}

/// Class structure of a blow-up: every base vertex has exactly `t` copies.
#[derive(Clone, Debug)]
pub struct BlowupMap {
    pub base: Hypergraph,
    pub t: usize,
    /// class_of[v] is the base vertex that blow-up vertex v copies.
    pub class_of: Vec<usize>,
}

impl BlowupMap {
    /// Checks consistency against the blown-up graph: preimage counts and
    /// that every blown edge projects to a base edge with k distinct classes.
    pub fn check(&self, blown: &Hypergraph) -> Result<()> {
        if self.class_of.len() != blown.n() {
            return Err(Error::InconsistentBlowup(format!(
                "class map covers {} vertices, blow-up has {}",
                self.class_of.len(),
                blown.n()
            )));
        }
        let mut counts = vec![0usize; self.base.n()];
        for &c in &self.class_of {
            if c >= self.base.n() {
                return Err(Error::InconsistentBlowup(format!(
                    "class {c} outside base vertex set"
                )));
            }
            counts[c] += 1;
        }
        if counts.iter().any(|&c| c != self.t) {
            return Err(Error::InconsistentBlowup(format!(
                "preimage counts {counts:?} differ from factor {}",
                self.t
            )));
        }
        for e in blown.edges() {
            let mut classes: Vec<usize> = e.iter().map(|&v| self.class_of[v]).collect();
            classes.sort_unstable();
            classes.dedup();
            if classes.len() != blown.k() || !self.base.has_edge(&classes) {
                return Err(Error::InconsistentBlowup(format!(
                    "edge {e:?} projects to {classes:?}, not a base edge"
                )));
            }
        }
        let expected = self
            .base
            .edge_count()
            .checked_mul(self.t.pow(blown.k() as u32))
            .ok_or_else(|| Error::Overflow("blow-up edge count".into()))?;
        if blown.edge_count() != expected {
            return Err(Error::InconsistentBlowup(format!(
                "blow-up has {} edges, expected {expected}",
                blown.edge_count()
            )));
        }
        Ok(())
    }
}

fn rung_vertex(k: usize, row: usize, col: usize) -> usize {
    // row is 0-based here; col in 0..k-1
    row * (k - 1) + col
}

/// The ladder of length `len`: `len` rungs of k-1 vertices chained by link
/// edges, closed off by a single tail edge.
pub fn ladder(k: usize, len: usize) -> Result<Construction> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if len < 1 {
        return Err(Error::InvalidParameter(format!(
            "ladder length must be >= 1, got {len}"
        )));
    }
    let n = len * (k - 1) + 1;
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity((len - 1) * (k - 1) + 1);
    for i in 0..len - 1 {
        let rung: Vec<usize> = (0..k - 1).map(|j| rung_vertex(k, i, j)).collect();
        for j in 0..k - 1 {
            let mut e = rung.clone();
            e.push(rung_vertex(k, i + 1, j));
            edges.push(e);
        }
    }
    let mut tail_edge: Vec<usize> = (0..k - 1).map(|j| rung_vertex(k, len - 1, j)).collect();
    tail_edge.push(n - 1);
    edges.push(tail_edge);

    let mut name_map = BTreeMap::new();
    for i in 1..=len {
        for j in 1..=k - 1 {
            name_map.insert(format!("v_{i}_{j}"), rung_vertex(k, i - 1, j - 1));
        }
    }
    name_map.insert("t".to_string(), n - 1);
    Ok(Construction {
        graph: Hypergraph::new(k, n, edges)?,
        provenance: Provenance {
            family: Family::Ladder,
            params: vec![k, len],
            name_map: Some(name_map),
        },
    })
}

/// The fanned ladder: the tail vertex is replaced by a set of `fan` vertices,
/// one tail edge per element.
pub fn ladder_fan(k: usize, len: usize, fan: usize) -> Result<Construction> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if len < 1 || fan < 1 {
        return Err(Error::InvalidParameter(format!(
            "ladder_fan needs length >= 1 and fan >= 1, got ({len}, {fan})"
        )));
    }
    let n = len * (k - 1) + fan;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for i in 0..len - 1 {
        let rung: Vec<usize> = (0..k - 1).map(|j| rung_vertex(k, i, j)).collect();
        for j in 0..k - 1 {
            let mut e = rung.clone();
            e.push(rung_vertex(k, i + 1, j));
            edges.push(e);
        }
    }
    let last_rung: Vec<usize> = (0..k - 1).map(|j| rung_vertex(k, len - 1, j)).collect();
    for f in 0..fan {
        let mut e = last_rung.clone();
        e.push(len * (k - 1) + f);
        edges.push(e);
    }

    let mut name_map = BTreeMap::new();
    for i in 1..=len {
        for j in 1..=k - 1 {
            name_map.insert(format!("v_{i}_{j}"), rung_vertex(k, i - 1, j - 1));
        }
    }
    for f in 1..=fan {
        name_map.insert(format!("t_{f}"), len * (k - 1) + f - 1);
    }
    Ok(Construction {
        graph: Hypergraph::new(k, n, edges)?,
        provenance: Provenance {
            family: Family::LadderFan,
            params: vec![k, len, fan],
            name_map: Some(name_map),
        },
    })
}

/// The zycle of length `len`: the cyclic ladder, rung indices mod `len`.
pub fn zycle(k: usize, len: usize) -> Result<Construction> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if len < 2 {
        return Err(Error::InvalidParameter(format!(
            "zycle length must be >= 2, got {len}"
        )));
    }
    let n = len * (k - 1);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(len * (k - 1));
    for i in 0..len {
        let rung: Vec<usize> = (0..k - 1).map(|j| rung_vertex(k, i, j)).collect();
        let next = (i + 1) % len;
        for j in 0..k - 1 {
            let mut e = rung.clone();
            e.push(rung_vertex(k, next, j));
            edges.push(e);
        }
    }
    let mut name_map = BTreeMap::new();
    for i in 0..len {
        for j in 1..=k - 1 {
            name_map.insert(format!("v_{i}_{j}"), rung_vertex(k, i, j - 1));
        }
    }
    Ok(Construction {
        graph: Hypergraph::new(k, n, edges)?,
        provenance: Provenance {
            family: Family::Zycle,
            params: vec![k, len],
            name_map: Some(name_map),
        },
    })
}

/// The t-blow-up: every vertex becomes `t` copies; edges are all transversal
/// lifts. Copy c of base vertex b is vertex `b*t + c`.
pub fn blow_up(base: &Hypergraph, t: usize) -> Result<(Hypergraph, BlowupMap)> {
    if t < 1 {
        return Err(Error::InvalidParameter(format!(
            "blow-up factor must be >= 1, got {t}"
        )));
    }
    let k = base.k();
    let n = base.n() * t;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for e in base.edges() {
        let mut copies = vec![0usize; k];
        loop {
            edges.push(
                e.iter()
                    .zip(&copies)
                    .map(|(&b, &c)| b * t + c)
                    .collect::<Vec<usize>>(),
            );
            // odometer over copy choices
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                copies[pos] += 1;
                if copies[pos] < t {
                    break;
                }
                copies[pos] = 0;
                if pos == 0 {
                    break;
                }
            }
            if copies.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    let graph = Hypergraph::new(k, n, edges)?;
    let class_of: Vec<usize> = (0..n).map(|v| v / t).collect();
    let map = BlowupMap {
        base: base.clone(),
        t,
        class_of,
    };
    map.check(&graph)?;
    Ok((graph, map))
}

/// Complete k-graph on `r` vertices.
pub fn complete(k: usize, r: usize) -> Result<Construction> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if r < k {
        return Err(Error::InvalidParameter(format!(
            "complete graph needs at least k = {k} vertices, got {r}"
        )));
    }
    let verts: Vec<usize> = (0..r).collect();
    let edges = crate::util::combinations(&verts, k);
    Ok(Construction {
        graph: Hypergraph::new(k, r, edges)?,
        provenance: Provenance {
            family: Family::Complete,
            params: vec![k, r],
            name_map: None,
        },
    })
}

/// Complete k-partite k-graph: edges are exactly the transversals of the
/// given part sizes (one vertex per part).
pub fn complete_partite(k: usize, sizes: &[usize]) -> Result<Construction> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if sizes.len() != k {
        return Err(Error::InvalidParameter(format!(
            "complete_partite needs exactly {k} part sizes, got {}",
            sizes.len()
        )));
    }
    let n: usize = sizes.iter().sum();
    let mut offsets = Vec::with_capacity(k);
    let mut acc = 0usize;
    for &s in sizes {
        offsets.push(acc);
        acc += s;
    }
    let parts: Vec<Vec<usize>> = sizes
        .iter()
        .zip(&offsets)
        .map(|(&s, &o)| (o..o + s).collect())
        .collect();
    let edges = transversals(&parts);
    Ok(Construction {
        graph: Hypergraph::new(k, n, edges)?,
        provenance: Provenance {
            family: Family::CompletePartite,
            params: {
                let mut p = vec![k];
                p.extend_from_slice(sizes);
                p
            },
            name_map: None,
        },
    })
}

fn transversals(parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts.iter().any(|p| p.is_empty()) {
        return out;
    }
    let mut idx = vec![0usize; parts.len()];
    loop {
        out.push(idx.iter().zip(parts).map(|(&i, p)| p[i]).collect());
        let mut pos = parts.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < parts[pos].len() {
                break;
            }
            idx[pos] = 0;
            if pos == 0 {
                return out;
            }
        }
    }
}

/// The DeBiasio–Jiang 3-graph on `n` vertices: sides A (size floor(n/2)) and
/// B (size ceil(n/2)), with all triples {a_i, b_j, a_m} and {a_i, b_j, b_m}
/// where both i and j are smaller than m.
pub fn dj_construction(n: usize) -> Result<Construction> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "dj_construction needs n >= 3, got {n}"
        )));
    }
    let na = n / 2;
    let nb = n - na;
    let a = |i: usize| i - 1; // a_i, 1-based
    let b = |j: usize| na + j - 1; // b_j, 1-based
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for m in 2..=na {
        for i in 1..m {
            for j in 1..m {
                edges.push(vec![a(i), b(j), a(m)]);
            }
        }
    }
    for m in 2..=nb {
        for i in 1..m.min(na + 1) {
            for j in 1..m {
                edges.push(vec![a(i), b(j), b(m)]);
            }
        }
    }
    let mut name_map = BTreeMap::new();
    for i in 1..=na {
        name_map.insert(format!("a_{i}"), a(i));
    }
    for j in 1..=nb {
        name_map.insert(format!("b_{j}"), b(j));
    }
    Ok(Construction {
        graph: Hypergraph::new(3, n, edges)?,
        provenance: Provenance {
            family: Family::Dj,
            params: vec![n],
            name_map: Some(name_map),
        },
    })
}

/// All quotient images of `f`: one per vertex partition in which no two
/// vertices sharing an edge are merged, with edge set the partition image of
/// E(f). Deduplicated by canonical form; `f` itself (the all-singletons
/// partition) is always a member.
///
/// A host contains a member of the homomorphic-image family of `f` iff it
/// contains one of these quotients, so the quotient list is a
/// containment-equivalent finite representation of that family.
pub fn hom_image_family(f: &Hypergraph) -> Vec<Hypergraph> {
    let n = f.n();
    let mut conflict = vec![vec![false; n]; n];
    for e in f.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                conflict[a][b] = true;
                conflict[b][a] = true;
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<u8>> = std::collections::HashSet::new();
    let mut out: Vec<Hypergraph> = Vec::new();

    fn rec(
        v: usize,
        n: usize,
        f: &Hypergraph,
        conflict: &[Vec<bool>],
        blocks: &mut Vec<Vec<usize>>,
        seen: &mut std::collections::HashSet<Vec<u8>>,
        out: &mut Vec<Hypergraph>,
    ) {
        if v == n {
            let mut class_of = vec![0usize; n];
            for (ci, blk) in blocks.iter().enumerate() {
                for &u in blk {
                    class_of[u] = ci;
                }
            }
            let edges: Vec<Vec<usize>> = f
                .edges()
                .map(|e| {
                    let mut img: Vec<usize> = e.iter().map(|&u| class_of[u]).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            let q = Hypergraph::new(f.k(), blocks.len(), edges)
                .expect("quotient by a conflict-free partition is a valid hypergraph");
            if seen.insert(canonical_form(&q)) {
                out.push(q);
            }
            return;
        }
        for bi in 0..blocks.len() {
            if blocks[bi].iter().all(|&u| !conflict[v][u]) {
                blocks[bi].push(v);
                rec(v + 1, n, f, conflict, blocks, seen, out);
                blocks[bi].pop();
            }
        }
        blocks.push(vec![v]);
        rec(v + 1, n, f, conflict, blocks, seen, out);
        blocks.pop();
    }

    if n == 0 {
        return vec![f.clone()];
    }
    rec(0, n, f, &conflict, &mut blocks, &mut seen, &mut out);
    // largest quotient (f itself) first, then by canonical bytes
    let mut keyed: Vec<(std::cmp::Reverse<usize>, Vec<u8>, Hypergraph)> = out
        .into_iter()
        .map(|h| (std::cmp::Reverse(h.n()), canonical_form(&h), h))
        .collect();
    keyed.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    keyed.into_iter().map(|(_, _, h)| h).collect()
}

/// Splits `tail` (sorted) into k nearly balanced parts in index order: the
/// first |tail| mod k parts get the extra element.
pub fn nearly_balanced_parts(tail: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut sorted = tail.to_vec();
    sorted.sort_unstable();
    let q = sorted.len() / k;
    let r = sorted.len() % k;
    let mut parts = Vec::with_capacity(k);
    let mut at = 0usize;
    for i in 0..k {
        let size = q + usize::from(i < r);
        parts.push(sorted[at..at + size].to_vec());
        at += size;
    }
    parts
}

/// Adds to `h` the complete k-partite graph on `tail` with the given parts:
/// every transversal (one vertex per part) becomes an edge. Existing edges
/// are preserved; overlaps collapse by set semantics.
pub fn augment_tail(h: &Hypergraph, tail: &[usize], parts: &[Vec<usize>]) -> Result<Hypergraph> {
    let mut tail_sorted = tail.to_vec();
    tail_sorted.sort_unstable();
    tail_sorted.dedup();
    if tail_sorted.len() != tail.len() {
        return Err(Error::InvalidPartition {
            subset: tail.to_vec(),
            parts: parts.to_vec(),
            reason: "tail set has repeated vertices".into(),
        });
    }
    if tail_sorted.iter().any(|&v| v >= h.n()) {
        return Err(Error::InvalidPartition {
            subset: tail.to_vec(),
            parts: parts.to_vec(),
            reason: "tail set leaves the vertex range".into(),
        });
    }
    if parts.len() != h.k() {
        return Err(Error::InvalidPartition {
            subset: tail.to_vec(),
            parts: parts.to_vec(),
            reason: format!("expected {} parts, got {}", h.k(), parts.len()),
        });
    }
    let mut covered: Vec<usize> = parts.iter().flatten().copied().collect();
    covered.sort_unstable();
    if covered != tail_sorted {
        return Err(Error::InvalidPartition {
            subset: tail.to_vec(),
            parts: parts.to_vec(),
            reason: "parts do not partition the tail set".into(),
        });
    }
    h.with_edges(transversals(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::contains_copy;

    #[test]
    fn ladder_fixtures() {
        let l1 = ladder(3, 1).unwrap();
        assert_eq!((l1.graph.n(), l1.graph.edge_count()), (3, 1));

        let l2 = ladder(3, 2).unwrap();
        assert_eq!((l2.graph.n(), l2.graph.edge_count()), (5, 3));
        assert_eq!(
            l2.graph.edge_list(),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![2, 3, 4]]
        );

        let l43 = ladder(4, 3).unwrap();
        assert_eq!((l43.graph.n(), l43.graph.edge_count()), (10, 7));
    }

    #[test]
    fn ladder_fan_fixtures() {
        let f = ladder_fan(3, 1, 3).unwrap();
        assert_eq!((f.graph.n(), f.graph.edge_count()), (5, 3));
        assert_eq!(
            f.graph.edge_list(),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]
        );

        let f22 = ladder_fan(3, 2, 2).unwrap();
        assert_eq!((f22.graph.n(), f22.graph.edge_count()), (6, 4));

        // fan of size one is the plain ladder
        let f1 = ladder_fan(4, 3, 1).unwrap();
        assert!(crate::canon::are_isomorphic(
            &f1.graph,
            &ladder(4, 3).unwrap().graph
        ));
    }

    #[test]
    fn zycle_fixtures() {
        let z22 = zycle(3, 2).unwrap();
        assert_eq!((z22.graph.n(), z22.graph.edge_count()), (4, 4));
        let z33 = zycle(3, 3).unwrap();
        assert_eq!((z33.graph.n(), z33.graph.edge_count()), (6, 6));
        let z42 = zycle(4, 2).unwrap();
        assert_eq!((z42.graph.n(), z42.graph.edge_count()), (6, 6));
        assert!(zycle(3, 1).is_err());
    }

    #[test]
    fn blow_up_fixtures() {
        let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let (b, m) = blow_up(&single, 2).unwrap();
        assert_eq!((b.n(), b.edge_count()), (6, 8));
        m.check(&b).unwrap();

        let l2 = ladder(3, 2).unwrap().graph;
        let (b, _) = blow_up(&l2, 2).unwrap();
        assert_eq!((b.n(), b.edge_count()), (10, 24));

        let (b1, _) = blow_up(&l2, 1).unwrap();
        assert!(crate::canon::are_isomorphic(&b1, &l2));
    }

    #[test]
    fn complete_fixtures() {
        assert_eq!(complete(3, 4).unwrap().graph.edge_count(), 4);
        assert_eq!(complete(3, 5).unwrap().graph.edge_count(), 10);
        assert_eq!(complete(4, 4).unwrap().graph.edge_count(), 1);
        assert!(complete(3, 2).is_err());
    }

    #[test]
    fn complete_partite_fixtures() {
        assert_eq!(complete_partite(3, &[1, 1, 1]).unwrap().graph.edge_count(), 1);
        assert_eq!(complete_partite(3, &[2, 2, 2]).unwrap().graph.edge_count(), 8);
        assert!(complete_partite(3, &[2, 2]).is_err());
    }

    #[test]
    fn dj_fixtures() {
        let d4 = dj_construction(4).unwrap();
        assert_eq!(d4.graph.edge_count(), 2);
        // a_1 b_1 a_2 and a_1 b_1 b_2 with a_1=0, a_2=1, b_1=2, b_2=3
        assert_eq!(d4.graph.edge_list(), vec![vec![0, 1, 2], vec![0, 2, 3]]);

        assert_eq!(dj_construction(6).unwrap().graph.edge_count(), 10);
        assert_eq!(dj_construction(12).unwrap().graph.edge_count(), 110);
        assert!(dj_construction(2).is_err());
    }

    #[test]
    fn dj_edges_meet_both_sides() {
        let n = 10;
        let d = dj_construction(n).unwrap().graph;
        let na = n / 2;
        for e in d.edges() {
            let in_a = e.iter().filter(|&&v| v < na).count();
            assert!(in_a == 1 || in_a == 2);
            assert!(e.len() - in_a >= 1);
        }
    }

    #[test]
    fn quotient_family_of_short_ladders() {
        let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(hom_image_family(&single).len(), 1);
        assert_eq!(hom_image_family(&ladder(3, 1).unwrap().graph).len(), 1);

        let fam = hom_image_family(&ladder(3, 2).unwrap().graph);
        assert_eq!(fam.len(), 2);
        // the ladder itself first, then the 4-vertex quotient with the tail
        // merged into the first rung
        assert_eq!(fam[0].n(), 5);
        assert_eq!(fam[1].n(), 4);
        assert_eq!(fam[1].edge_count(), 3);
    }

    #[test]
    fn augment_tail_examples() {
        let empty = Hypergraph::empty(3, 6).unwrap();
        let tail: Vec<usize> = (0..6).collect();
        let parts = nearly_balanced_parts(&tail, 3);
        assert_eq!(parts, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        let h = augment_tail(&empty, &tail, &parts).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert!(crate::canon::are_isomorphic(
            &h,
            &complete_partite(3, &[2, 2, 2]).unwrap().graph
        ));

        // idempotent union with an existing transversal edge
        let pre = Hypergraph::new(3, 6, [[0, 2, 4]]).unwrap();
        let h2 = augment_tail(&pre, &tail, &parts).unwrap();
        assert_eq!(h2.edge_count(), 8);

        let bad = augment_tail(&empty, &tail, &[vec![0, 1], vec![2, 3], vec![4]]);
        assert!(matches!(bad, Err(Error::InvalidPartition { .. })));
    }

    #[test]
    fn ladder_embeds_in_its_fan() {
        for m in 1..=4 {
            let l = ladder(3, 2).unwrap().graph;
            let f = ladder_fan(3, 2, m).unwrap().graph;
            assert!(contains_copy(&f, &l).unwrap().is_some(), "fan size {m}");
        }
    }

    #[test]
    fn size_formulas_in_test_range() {
        for k in 3..=5 {
            for len in 1..=6 {
                let l = ladder(k, len).unwrap().graph;
                assert_eq!(l.n(), len * (k - 1) + 1);
                assert_eq!(l.edge_count(), (len - 1) * (k - 1) + 1);
                for m in 1..=6 {
                    let f = ladder_fan(k, len, m).unwrap().graph;
                    assert_eq!(f.n(), len * (k - 1) + m);
                    assert_eq!(f.edge_count(), (len - 1) * (k - 1) + m);
                }
                if len >= 2 {
                    let z = zycle(k, len).unwrap().graph;
                    assert_eq!(z.n(), len * (k - 1));
                    assert_eq!(z.edge_count(), len * (k - 1));
                }
            }
        }
    }
}
