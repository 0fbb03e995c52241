//! Graphs, Z_k edge colorings of complete hosts, embeddings, and zero-sum
//! certificates, together with graph6 and JSON interchange.

mod coloring;
mod embedding;
mod graph;
mod graph6;

pub use coloring::{pair_index, ColoringError, ZkColoring};
pub use embedding::{
    edge_sum, verify_certificate, Certificate, CertificateError, Embedding, Provenance,
};
pub use graph::{Graph, GraphError};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
