//! Feature extraction from B-REP solid models via convexity-attributed
//! adjacency graphs.
//!
//! The pipeline classifies every face, edge, and vertex of a solid as
//! concave, transitory, or convex, builds a two-level attributed adjacency
//! graph (a vertex–edge graph and an edge–face graph over shared entity
//! ids), extracts feature boundaries as loops of division edges, and
//! partitions the edge–face graph into convexity-homogeneous feature
//! subgraphs. Interpretation uncertainty is preserved: the output is a set
//! of candidate subgraphs, not a single feature reading.

pub mod boundary;
pub mod brep;
pub mod convexity;
pub mod factory;
pub mod geom;
pub mod nbrep;
pub mod subgraph;
pub mod taag;

pub use boundary::{extract_boundaries, EdgeCluster, EdgeLoop, FeatureBoundary};
pub use brep::{
    Edge, EdgeCurve, EdgeId, Face, FaceId, MaterialSide, SolidModel, SurfaceGeometry,
    ValidationError, Vertex, VertexId,
};
pub use convexity::{classify_all, oracle_edge_convexity, Convexity, ConvexityMap};
pub use factory::{build_fixture, FixtureSpec};
pub use geom::{Point3, UnitVec3, Vec3};
pub use nbrep::{parse_model, serialize_model};
pub use subgraph::{extract_features, Diagnostic, Extraction, FeatureSubgraph};
pub use taag::{build_taag, Taag};
