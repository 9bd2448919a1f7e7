//! Defective incidence colorings of graphs.
//!
//! An *incidence* of a graph is a pair `(v, e)` where the vertex `v` is an
//! endpoint of the edge `e`. A `d`-defective incidence `k`-coloring assigns
//! one of `k` colors to every incidence so that
//!
//! 1. the incidences `(u, uv)` of a fixed vertex `u` get pairwise distinct
//!    colors,
//! 2. the two incidences of an edge get distinct colors, and
//! 3. for every vertex `u`, each color used on an incidence `(u, uv)` appears
//!    at most `d` times among the incidences `(w, uw)` of `u`'s neighbors.
//!
//! The crate builds provably optimal such colorings for paths, cycles, trees,
//! complete bipartite graphs, complete graphs (through intercalate-free Latin
//! squares) and outerplanar graphs, verifies arbitrary colorings against the
//! definitions, and ships an exact backtracking oracle for small instances.
//!
//! With the default `parallel` feature the bulk enumerations (the gadget
//! reducibility inspection, Latin-square scans) run on rayon; disabling the
//! feature falls back to equivalent sequential loops with identical results.

pub mod classify;
pub mod colorers;
pub mod coloring;
pub mod generate;
pub mod graph;
pub mod latin;
pub mod oracle;
pub mod outerplanar;
pub mod par;
pub mod rng;
pub mod verify;

pub use classify::{classify, GraphClass};
pub use colorers::{color, DefectiveColoringResult};
pub use coloring::{Incidence, IncidenceColoring};
pub use graph::Graph;
pub use verify::{check_conditional, check_defective, defect_of, VerificationReport};
