//! Vertex maps witnessing embeddings and homomorphisms, and the independent
//! validator every returned witness must pass.

use crate::hypergraph::Hypergraph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    /// Injective, edge-preserving.
    Embedding,
    /// Edge-preserving, possibly non-injective.
    Homomorphism,
}

/// A total map from the vertices of a source hypergraph into a target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    pub kind: MapKind,
    /// image[v] is the target vertex of source vertex v.
    pub image: Vec<usize>,
}

impl VertexMap {
    pub fn new(kind: MapKind, image: Vec<usize>) -> Self {
        VertexMap { kind, image }
    }

    pub fn source_size(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }
}

/// Why a map failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapViolation {
    NotTotal { expected: usize, got: usize },
    ImageOutOfRange { vertex: usize, image: usize },
    NotInjective { a: usize, b: usize },
    CollapsedEdge { edge: Vec<usize> },
    MissingEdge { edge: Vec<usize>, image: Vec<usize> },
}

/// Validates `map` as a witness that F maps into H.
///
/// Lives apart from the searches so witnesses are checked by code that did
/// not produce them.
pub fn check_map(map: &VertexMap, source: &Hypergraph, target: &Hypergraph) -> bool {
    check_map_report(map, source, target).is_ok()
}

/// Like [`check_map`] but reports the first violation found.
pub fn check_map_report(
    map: &VertexMap,
    source: &Hypergraph,
    target: &Hypergraph,
) -> Result<(), MapViolation> {
    if map.image.len() != source.n() {
        return Err(MapViolation::NotTotal {
            expected: source.n(),
            got: map.image.len(),
        });
    }
    for (v, &img) in map.image.iter().enumerate() {
        if img >= target.n() {
            return Err(MapViolation::ImageOutOfRange { vertex: v, image: img });
        }
    }
    if map.kind == MapKind::Embedding {
        let mut seen = vec![usize::MAX; target.n()];
        for (v, &img) in map.image.iter().enumerate() {
            if seen[img] != usize::MAX {
                return Err(MapViolation::NotInjective { a: seen[img], b: v });
            }
            seen[img] = v;
        }
    }
    for e in source.edges() {
        let mut img: Vec<usize> = e.iter().map(|&v| map.image[v]).collect();
        img.sort_unstable();
        img.dedup();
        if img.len() != source.k() {
            return Err(MapViolation::CollapsedEdge { edge: e });
        }
        if !target.has_edge(&img) {
            return Err(MapViolation::MissingEdge { edge: e, image: img });
        }
    }
    Ok(())
}
