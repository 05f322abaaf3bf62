//! Toolkit for rainbow vertex-connected colorings of graphs with a given
//! minimum degree.
//!
//! A vertex-colored graph is rainbow vertex-connected when every pair of
//! vertices is joined by a path whose internal vertices all carry distinct
//! colors. This crate builds such colorings constructively and cheaply in
//! terms of palette size:
//!
//! * [`graph`] — adjacency-set graphs, BFS layers, diameters, edge-list and
//!   coloring file formats.
//! * [`generate`] — clique-chain lower-bound family, seeded random graphs of
//!   prescribed minimum degree, classic fixtures.
//! * [`sparsify`] — connected spanning subgraphs of minimum degree δ with few
//!   edges.
//! * [`dominator`] — connected ⌈δ/3⌉-strong 2-step dominating sets of size at
//!   most 3n/(δ+1) − 2.
//! * [`bounds`] — closed-form palette bounds, regime dispatch, and local-lemma
//!   margins.
//! * [`colorize`] — the coloring strategies: dominator-based randomized
//!   colorings with constructive resampling, spanning-tree colorings, and
//!   certificate paths.
//! * [`verify`] — exact small-graph checking, a brute-force optimum, and
//!   polynomial structural verification at any size.

pub mod bounds;
pub mod colorize;
pub mod dominator;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod sparsify;
pub mod verify;

pub use error::Error;
pub use graph::{Graph, LayerDecomposition};

pub type Result<T> = std::result::Result<T, Error>;
