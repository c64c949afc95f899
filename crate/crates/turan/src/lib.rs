//! An exact workbench for hypergraph Turán problems.
//!
//! The crate builds the hypergraph families that drive finite Turán-type
//! questions (ladders, zycles, blow-ups, the DeBiasio–Jiang construction,
//! quotient families), computes exact Turán and homomorphic-Turán numbers by
//! branch-and-bound, and packages the constructive arguments relating them
//! (tail augmentation, blow-up pigeonhole extraction, greedy ladder
//! embedding, supersaturation scans) as finite certificate-producing
//! procedures.
//!
//! Entry points:
//! - [`Hypergraph`] and [`constructions`] for building graphs,
//! - [`search`] for copies, homomorphisms, and copy counts,
//! - [`extremal`] for exact Turán numbers, density sequences, and brackets,
//! - [`verify`] for the certificate-producing procedures,
//! - [`io`] for the `.khg` and JSON file formats,
//! - the `turan` binary (see [`cli`]) for scripted runs.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example turan_numbers`.

pub mod canon;
pub mod cli;
pub mod constructions;
mod error;
pub mod extremal;
mod hypergraph;
pub mod io;
mod mapping;
pub mod partite;
pub mod search;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, KSubset};
pub use mapping::{check_map, check_map_report, MapKind, MapViolation, VertexMap};

/// Exact rational used for densities and density ratios.
pub type Density = num_rational::Ratio<i64>;
