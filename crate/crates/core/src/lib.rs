//! Decides whether a graph contains K₂,₃ as an induced minor.
//!
//! A graph contains K₂,₃ as an induced minor exactly when it contains one of
//! four configurations as an induced subgraph: a theta, a pyramid, a long
//! prism, or a broken wheel. The [`pipeline`] module runs the staged
//! detection and certifies positive answers with a validated witness plus an
//! explicit induced-minor model; the [`oracle`] module provides slow,
//! independently coded ground truths the fast path is tested against.

pub mod bitset;
pub mod broken_wheel;
pub mod exec;
pub mod graph;
pub mod long_prism;
pub mod model;
pub mod oracle;
pub mod patterns;
pub mod pipeline;
pub mod stm;
pub mod witness;

pub use bitset::VertexSet;
pub use exec::ExecMode;
pub use graph::Graph;
pub use model::InducedMinorModel;
pub use witness::Witness;
