//! Exact computation around general position sets of graphs.
//!
//! The crate provides a small immutable graph type with its shortest-path
//! metric, the strong resolving graph construction, exact solvers for the
//! general position number, clique and independence numbers, and the graph
//! products and generators needed to exercise them. Everything is exact;
//! solver runtimes are exponential in the worst case and sized for graphs of
//! up to a few dozen vertices.

pub mod bitset;
pub mod canon;
pub mod clique;
pub mod error;
pub mod families;
pub mod gp;
pub mod graph;
mod hypermis;
pub mod metric;
pub mod products;
pub mod srg;

pub use canon::{canonical_form, enumerate_connected_graphs, CanonicalForm};
pub use clique::{clique_number, independence_number, CliqueResult};
pub use error::GraphError;
pub use gp::{
    check_characterization, conflict_triples, eta, gp_diameter2, gp_number,
    gp_set_inducing_sr_clique, is_general_position_set, isometric_cover_bound, GpResult,
    PartitionCheck,
};
pub use graph::{Graph, VertexSet};
pub use metric::{bfs_all_pairs, diameter, interval, is_connected, is_isometric_subgraph, DistMatrix};
pub use products::{
    corona, corona_with, direct_product, generalized_lexicographic, layer,
    lexicographic_product, rooted_product, strong_product, Factor, ProductVertexMap, RootedSpec,
};
pub use srg::{is_maximally_distant, is_mmd, simplicial_vertices, strong_resolving_graph};
