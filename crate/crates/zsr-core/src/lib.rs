//! Zero-sum Ramsey numbers over `Z_k`.
//!
//! For a graph `G` whose edge count is divisible by `k`, the zero-sum Ramsey
//! number `R(G, Z_k)` is the least `N` such that every `Z_k`-coloring of the
//! edges of `K_N` contains a copy of `G` whose edge colors sum to `0 mod k`.
//! This crate provides the pieces needed to work with these numbers at desk
//! scale: graphs and colorings with graph6/JSON interchange (`graphs`),
//! 2-packing classification and upper bounds (`packing`), sumset and
//! weighted zero-sum subsequence solvers (`additive`), a constructive
//! finder that produces verified zero-sum certificates (`engine`), and a
//! brute-force oracle for exact small cases (`oracle`).

mod bits;

pub mod additive;
pub mod engine;
pub mod graphs;
pub mod oracle;
pub mod packing;

pub use graphs::{
    edge_sum, Certificate, Embedding, Graph, Provenance, ZkColoring,
};
pub use packing::{Classification, PackingBranch, PackingReport, TwoPacking};
