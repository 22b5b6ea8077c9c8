//! Maximum-size `k`-connected graphs of given order and diameter.
//!
//! - [`graph`]: bit-row graphs, vertex sets, induced subgraphs, cliques
//! - [`format`]: graph6, edge lists, DOT
//! - [`canon`]: canonical forms and isomorphism for order at most 10
//! - [`metrics`]: BFS layers, diameter, Menger-style vertex connectivity
//! - [`extremal`]: closed forms, the backbone join, the extremal family
//! - [`oracle`]: exhaustive search that recomputes the maximum independently

pub mod canon;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod metrics;
pub mod oracle;

pub use canon::{
    canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm,
};
pub use error::{Error, Result};
pub use extremal::{
    attachment_cap, backbone_order, backbone_size, build_backbone, build_family_member,
    enumerate_family, enumerate_family_members, extremality, is_extremal, max_size, BlockMap,
    FamilyMember, FamilyMemberSpec, FormulaMode, Parameters, Side, Verdict,
};
pub use format::{from_graph6, to_dot, to_edge_list, to_graph6};
pub use graph::{is_clique, Graph, VertexSet};
pub use metrics::{
    bfs_layers, diameter, is_k_connected, layer_structure_check, local_connectivity,
    vertex_connectivity, ConnectivityResult, Diameter, LayerProfile,
};
pub use oracle::{
    max_size_bruteforce, sweep, verify_theorem, OracleConfig, OracleReport, SearchResult,
};
