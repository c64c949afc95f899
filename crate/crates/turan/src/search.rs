//! Backtracking searches for copies (injective embeddings) and homomorphisms,
//! plus exact copy counting.
//!
//! Source vertices are placed most-constrained-first: the first vertex by
//! descending degree, every later one by how many of its edges become fully
//! placed, then by degree. The order is a heuristic only; found/not-found is
//! independent of it.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::mapping::{check_map, MapKind, VertexMap};
use std::ops::ControlFlow;

/// Static placement order for the pattern plus, per position, the pattern
/// edges that become fully placed at that position.
struct PlacementPlan {
    order: Vec<usize>,
    /// complete_at[i]: edges (as vertex lists) with all vertices placed once
    /// order[i] is assigned.
    complete_at: Vec<Vec<Vec<usize>>>,
    degrees: Vec<usize>,
}

fn plan(pattern: &Hypergraph) -> PlacementPlan {
    let n = pattern.n();
    let edges: Vec<Vec<usize>> = pattern.edges().collect();
    let degrees = pattern.degrees();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let closing = edges
                    .iter()
                    .filter(|e| e.contains(&v) && e.iter().all(|&u| placed[u] || u == v))
                    .count();
                (closing, degrees[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut complete_at: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for e in edges {
        let last = e.iter().map(|&v| pos[v]).max().unwrap();
        complete_at[last].push(e);
    }
    PlacementPlan {
        order,
        complete_at,
        degrees,
    }
}

/// Drives the backtracking search; calls `visit` with the completed image
/// vector once per valid total map. `visit` may stop the search early.
fn drive<F>(host: &Hypergraph, pattern: &Hypergraph, injective: bool, visit: &mut F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let p = plan(pattern);
    let hn = host.n();
    let host_degrees = host.degrees();
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; hn];
    let mut scratch: Vec<usize> = Vec::with_capacity(pattern.k());

    fn rec<F>(
        depth: usize,
        p: &PlacementPlan,
        host: &Hypergraph,
        host_degrees: &[usize],
        injective: bool,
        image: &mut [usize],
        used: &mut [bool],
        scratch: &mut Vec<usize>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == p.order.len() {
            return visit(image);
        }
        let v = p.order[depth];
        for h in 0..host.n() {
            if injective && (used[h] || host_degrees[h] < p.degrees[v]) {
                continue;
            }
            image[v] = h;
            let mut ok = true;
            for e in &p.complete_at[depth] {
                scratch.clear();
                scratch.extend(e.iter().map(|&u| image[u]));
                scratch.sort_unstable();
                scratch.dedup();
                if scratch.len() != e.len() || !host.has_edge(scratch) {
                    ok = false;
                    break;
                }
            }
            if ok {
                if injective {
                    used[h] = true;
                }
                let flow = rec(
                    depth + 1,
                    p,
                    host,
                    host_degrees,
                    injective,
                    image,
                    used,
                    scratch,
                    visit,
                );
                if injective {
                    used[h] = false;
                }
                if flow.is_break() {
                    image[v] = usize::MAX;
                    return ControlFlow::Break(());
                }
            }
            image[v] = usize::MAX;
        }
        ControlFlow::Continue(())
    }

    let _ = rec(
        0,
        &p,
        host,
        &host_degrees,
        injective,
        &mut image,
        &mut used,
        &mut scratch,
        visit,
    );
}

fn check_uniformity(a: &Hypergraph, b: &Hypergraph) -> Result<()> {
    if a.k() != b.k() {
        return Err(Error::UniformityMismatch {
            left: a.k(),
            right: b.k(),
        });
    }
    Ok(())
}

fn validated(map: VertexMap, source: &Hypergraph, target: &Hypergraph) -> Result<VertexMap> {
    if !check_map(&map, source, target) {
        return Err(Error::Internal(
            "search produced a witness that fails check_map".into(),
        ));
    }
    Ok(map)
}

/// Searches for a copy of `pattern` in `host`: an injective edge-preserving
/// map. Returns the first embedding found, validated by `check_map`.
pub fn contains_copy(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<VertexMap>> {
    check_uniformity(host, pattern)?;
    if pattern.n() > host.n() {
        return Ok(None);
    }
    let mut found: Option<Vec<usize>> = None;
    drive(host, pattern, true, &mut |img| {
        found = Some(img.to_vec());
        ControlFlow::Break(())
    });
    found
        .map(|image| validated(VertexMap::new(MapKind::Embedding, image), pattern, host))
        .transpose()
}

/// Searches for a homomorphism from `pattern` into `host`: an edge-preserving
/// map that may merge vertices not sharing an edge.
pub fn has_homomorphism(pattern: &Hypergraph, host: &Hypergraph) -> Result<Option<VertexMap>> {
    check_uniformity(host, pattern)?;
    if host.n() == 0 && pattern.n() > 0 {
        return Ok(None);
    }
    let mut found: Option<Vec<usize>> = None;
    drive(host, pattern, false, &mut |img| {
        found = Some(img.to_vec());
        ControlFlow::Break(())
    });
    found
        .map(|image| validated(VertexMap::new(MapKind::Homomorphism, image), pattern, host))
        .transpose()
}

/// Number of injective edge-preserving maps from `pattern` into `pattern`.
///
/// An injective self-map sending edges to edges permutes the (finite) edge
/// set, so this is exactly the automorphism count.
pub fn automorphism_count(pattern: &Hypergraph) -> u64 {
    let mut count = 0u64;
    drive(pattern, pattern, true, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Exact number of unlabeled copies of `pattern` in `host`: injective
/// embeddings divided by the automorphism count of `pattern`.
pub fn count_copies(host: &Hypergraph, pattern: &Hypergraph) -> Result<u64> {
    check_uniformity(host, pattern)?;
    let mut embeddings = 0u64;
    drive(host, pattern, true, &mut |_| {
        embeddings += 1;
        ControlFlow::Continue(())
    });
    if embeddings == 0 {
        return Ok(0);
    }
    let aut = automorphism_count(pattern);
    if aut == 0 || embeddings % aut != 0 {
        return Err(Error::Internal(format!(
            "embedding count {embeddings} not divisible by automorphism count {aut}"
        )));
    }
    Ok(embeddings / aut)
}

/// Enumerates every embedding image, for callers that need all copies.
pub(crate) fn for_each_embedding<F>(host: &Hypergraph, pattern: &Hypergraph, mut f: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    drive(host, pattern, true, &mut f);
}

/// Enumerates every total map image with all edges mapped to k distinct
/// vertices, treating the host as complete (only collapse is checked).
pub(crate) fn for_each_hom_image_into_complete<F>(pattern: &Hypergraph, host_n: usize, mut f: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let complete_edges: Vec<Vec<usize>> =
        crate::util::combinations(&(0..host_n).collect::<Vec<_>>(), pattern.k());
    let host = Hypergraph::new(pattern.k(), host_n, complete_edges).expect("complete host");
    drive(&host, pattern, false, &mut f);
}
