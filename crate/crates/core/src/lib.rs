//! Explicit colorings for hypergraph Ramsey numbers of the form
//! `r_k(k+1, t; n)`, the on-line ordered builder/painter game, and the
//! brute-force checks that back them at small scale.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypergraph`]: vertices, edges, colorings, colex enumeration and the
//!   configuration finders (blue cliques, red `(k+1)`-sets, ordered `F`/`F_t`).
//! * [`delta`]: binary-vector vertices, the first-difference map `delta` and
//!   the classification of delta sequences (monotone, zigzag, strong zigzag).
//! * [`coloring`]: the rank coloring, both stepping-up colorings and the
//!   greedy partial Steiner packer.
//! * [`game`]: the builder strategy, painters, observations and transcripts.
//! * [`verifier`]: exact small Ramsey values, the monotone-run/extrema
//!   dichotomy, stepping-up checks and tower-type bound arithmetic.
//! * [`cli`]: file formats and the command surface behind the
//!   `hyperramsey` binary.
//!
//! The `examples/` directory has one runnable program per capability.

pub mod cli;
pub mod coloring;
pub mod delta;
pub mod error;
pub mod game;
pub mod hypergraph;
pub mod verifier;

pub use error::{Error, Result};
pub use hypergraph::{Color, ColoringOracle, Vertex};
