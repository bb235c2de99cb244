//! Tree-cut decomposition toolkit: graph and decomposition types, graph
//! family generators, star-cut and coloring solvers, an approximation
//! algorithm for edge-crossing width, and exact reference oracles.

pub mod approx;
pub mod decomp;
pub mod families;
pub mod coloring;
pub mod graph;
pub mod oracle;
pub mod starcut;
pub mod treedec;

pub use decomp::{
    adhesion, crossing_at, ecw_of_forest, is_tree_partition, metrics, tcd_from_spanning_forest,
    validate_tcd, SpanningForestPair, TreeCutDecomposition,
};
pub use families::{gen_family, subdivide_uniform, FamilySpec, Roles};
pub use graph::{parse_graph, Graph, VertexSet};
