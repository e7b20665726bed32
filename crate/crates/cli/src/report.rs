//! JSON extraction report: a lossless, deterministically ordered projection
//! of the pipeline outputs. Identical inputs produce byte-identical reports
//! except for the wall-clock `timing_ms` field.

use serde::Serialize;

use brep_extract::boundary::MixedLoop;
use brep_extract::subgraph::{Diagnostic, Extraction};
use brep_extract::{Convexity, SolidModel};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub model: String,
    pub counts: Counts,
    pub tolerance: f64,
    pub convexity: ConvexityTables,
    pub taag: TaagSection,
    pub clusters: Vec<ClusterSection>,
    pub boundaries: Vec<BoundarySection>,
    pub subgraphs: Vec<SubgraphSection>,
    pub diagnostics: Vec<DiagnosticSection>,
    pub timing_ms: u64,
}

#[derive(Serialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: u32,
}

#[derive(Serialize)]
pub struct ConvexityTables {
    /// Indexed by dense entity id; values are "concave" | "transitory" |
    /// "convex".
    pub faces: Vec<&'static str>,
    pub edges: Vec<&'static str>,
    pub vertices: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct TaagSection {
    pub vertex_edge: GraphSection,
    pub edge_face: GraphSection,
    pub closed_edges: Vec<u32>,
}

#[derive(Serialize)]
pub struct GraphSection {
    pub nodes: usize,
    pub links: Vec<LinkSection>,
}

#[derive(Serialize)]
pub struct LinkSection {
    pub edge: u32,
    pub a: u32,
    pub b: u32,
    pub convexity: &'static str,
}

#[derive(Serialize)]
pub struct ClusterSection {
    pub convexity: &'static str,
    pub edges: Vec<u32>,
    #[serde(rename = "loop")]
    pub loop_edges: Vec<u32>,
    pub pruned_leaves: Vec<u32>,
}

#[derive(Serialize)]
pub struct BoundarySection {
    pub convexity: &'static str,
    pub edges: Vec<u32>,
}

#[derive(Serialize)]
pub struct SubgraphSection {
    pub convexity: &'static str,
    pub faces: Vec<u32>,
    pub interior_edges: Vec<u32>,
    /// Indices into `boundaries`.
    pub bounding: Vec<usize>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiagnosticSection {
    MixedLoop {
        cluster: usize,
        division: Vec<u32>,
        rejected: Vec<u32>,
    },
    EmptyLoop {
        cluster: usize,
    },
    AmbiguousConvexity {
        edge: u32,
    },
    BoundaryNotSeparating {
        boundary: usize,
    },
    ConflictingInheritance {
        subgraph: usize,
    },
    UnlabeledSubgraph {
        subgraph: usize,
    },
}

pub fn build_report(model: &SolidModel, ex: &Extraction, tolerance: f64, timing_ms: u64) -> Report {
    let name = |c: Convexity| c.name();

    let graph_section = |links: Vec<(u32, u32, u32, Convexity)>, nodes: usize| GraphSection {
        nodes,
        links: links
            .into_iter()
            .map(|(edge, a, b, c)| LinkSection {
                edge,
                a,
                b,
                convexity: name(c),
            })
            .collect(),
    };

    let ve_links = ex
        .taag
        .vertex_edge
        .links()
        .iter()
        .map(|l| (l.entity.0, l.endpoints.0 .0, l.endpoints.1 .0, l.attr))
        .collect();
    let ef_links = ex
        .taag
        .edge_face
        .links()
        .iter()
        .map(|l| (l.entity.0, l.endpoints.0 .0, l.endpoints.1 .0, l.attr))
        .collect();

    let mixed_by_cluster: Vec<&MixedLoop> = ex.stages.mixed_loops.iter().collect();

    Report {
        schema_version: SCHEMA_VERSION,
        model: model.name.clone(),
        counts: Counts {
            vertices: model.vertices.len(),
            edges: model.edges.len(),
            faces: model.faces.len(),
            genus: model.genus,
        },
        tolerance,
        convexity: ConvexityTables {
            faces: ex.conv.face_conv.iter().map(|&c| name(c)).collect(),
            edges: ex.conv.edge_conv.iter().map(|&c| name(c)).collect(),
            vertices: ex.conv.vertex_conv.iter().map(|&c| name(c)).collect(),
        },
        taag: TaagSection {
            vertex_edge: graph_section(ve_links, ex.taag.vertex_edge.node_count()),
            edge_face: graph_section(ef_links, ex.taag.edge_face.node_count()),
            closed_edges: ex.taag.closed_edges.iter().map(|e| e.0).collect(),
        },
        clusters: ex
            .stages
            .clusters
            .iter()
            .zip(&ex.stages.loops)
            .map(|(c, l)| ClusterSection {
                convexity: name(c.convexity),
                edges: c.edges.iter().map(|e| e.0).collect(),
                loop_edges: l.edges.iter().map(|e| e.0).collect(),
                pruned_leaves: l.pruned_leaves.iter().map(|e| e.0).collect(),
            })
            .collect(),
        boundaries: ex
            .boundaries()
            .iter()
            .map(|b| BoundarySection {
                convexity: name(b.convexity),
                edges: b.edges.iter().map(|e| e.0).collect(),
            })
            .collect(),
        subgraphs: ex
            .subgraphs
            .iter()
            .map(|s| SubgraphSection {
                convexity: name(s.convexity),
                faces: s.faces.iter().map(|f| f.0).collect(),
                interior_edges: s.interior_edges.iter().map(|e| e.0).collect(),
                bounding: s.bounding.iter().copied().collect(),
            })
            .collect(),
        diagnostics: ex
            .diagnostics
            .iter()
            .map(|d| match d {
                Diagnostic::MixedLoop { cluster, rejected } => DiagnosticSection::MixedLoop {
                    cluster: *cluster,
                    division: mixed_by_cluster
                        .iter()
                        .find(|m| m.cluster == *cluster)
                        .map(|m| m.division.iter().map(|e| e.0).collect())
                        .unwrap_or_default(),
                    rejected: rejected.iter().map(|e| e.0).collect(),
                },
                Diagnostic::EmptyLoop { cluster } => {
                    DiagnosticSection::EmptyLoop { cluster: *cluster }
                }
                Diagnostic::AmbiguousConvexity { edge } => {
                    DiagnosticSection::AmbiguousConvexity { edge: edge.0 }
                }
                Diagnostic::BoundaryNotSeparating { boundary } => {
                    DiagnosticSection::BoundaryNotSeparating {
                        boundary: *boundary,
                    }
                }
                Diagnostic::ConflictingInheritance { subgraph } => {
                    DiagnosticSection::ConflictingInheritance {
                        subgraph: *subgraph,
                    }
                }
                Diagnostic::UnlabeledSubgraph { subgraph } => {
                    DiagnosticSection::UnlabeledSubgraph {
                        subgraph: *subgraph,
                    }
                }
            })
            .collect(),
        timing_ms,
    }
}

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}
