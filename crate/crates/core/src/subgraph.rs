//! Feature-subgraph extraction: boundary neighborhoods, partitioning the
//! edge–face graph at boundary links, and grouping the remainder into
//! convexity-homogeneous subgraphs. The full pipeline lives here.

use std::collections::{BTreeMap, BTreeSet};

use crate::boundary::{extract_stages, BoundaryStages, FeatureBoundary};
use crate::brep::{EdgeId, FaceId, SolidModel};
use crate::convexity::{
    classify_all_with, ClassifyParams, Convexity, ConvexityError, ConvexityMap,
};
use crate::taag::{build_taag, Taag};

/// A boundary plus the faces incident to any of its edges in the
/// edge–face graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryNeighborhood {
    pub boundary: usize,
    pub adjacent_faces: BTreeSet<FaceId>,
}

/// Connected components of the edge–face graph after removing all boundary
/// links. Pruned leaf edges remain as links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedGraph {
    /// Face sets, numbered by smallest member face id.
    pub components: Vec<BTreeSet<FaceId>>,
    pub removed_links: BTreeSet<EdgeId>,
}

/// Connected, convexity-homogeneous set of faces and interior edges
/// (transitory members permitted), with its bounding boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureSubgraph {
    pub faces: BTreeSet<FaceId>,
    pub interior_edges: BTreeSet<EdgeId>,
    pub convexity: Convexity,
    /// Indices into the pipeline's boundary list.
    pub bounding: BTreeSet<usize>,
}

/// Non-fatal findings surfaced by the pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// A loop in which only some edges passed the division test; the
    /// division subset was emitted.
    MixedLoop {
        cluster: usize,
        rejected: Vec<EdgeId>,
    },
    /// A cluster that pruned to nothing (tree cluster): no boundary.
    EmptyLoop { cluster: usize },
    /// Adjacent non-transitory entities of opposite convexity with no
    /// separating boundary; the component was split at the offending link.
    AmbiguousConvexity { edge: EdgeId },
    /// A boundary whose two sides ended up in the same subgraph.
    BoundaryNotSeparating { boundary: usize },
    /// An all-transitory subgraph whose adjacent boundaries disagree on
    /// convexity; the first boundary in index order was used.
    ConflictingInheritance { subgraph: usize },
    /// An all-transitory subgraph with no adjacent boundary; convexity
    /// defaulted to convex.
    UnlabeledSubgraph { subgraph: usize },
}

impl Diagnostic {
    pub fn kind(&self) -> &'static str {
        match self {
            Diagnostic::MixedLoop { .. } => "mixed_loop",
            Diagnostic::EmptyLoop { .. } => "empty_loop",
            Diagnostic::AmbiguousConvexity { .. } => "ambiguous_convexity",
            Diagnostic::BoundaryNotSeparating { .. } => "boundary_not_separating",
            Diagnostic::ConflictingInheritance { .. } => "conflicting_inheritance",
            Diagnostic::UnlabeledSubgraph { .. } => "unlabeled_subgraph",
        }
    }
}

/// Everything the pipeline produces, including intermediates for reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub conv: ConvexityMap,
    pub taag: Taag,
    pub stages: BoundaryStages,
    pub neighborhoods: Vec<BoundaryNeighborhood>,
    pub partition: PartitionedGraph,
    pub subgraphs: Vec<FeatureSubgraph>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Extraction {
    pub fn boundaries(&self) -> &[FeatureBoundary] {
        &self.stages.boundaries
    }
}

/// Faces incident to any edge of `boundary` in the edge–face graph.
pub fn boundary_neighborhood(
    boundary: &FeatureBoundary,
    index: usize,
    taag: &Taag,
) -> BoundaryNeighborhood {
    let mut adjacent_faces = BTreeSet::new();
    for &e in &boundary.edges {
        if let Ok(link) = taag.edge_face.link_by_edge(e) {
            adjacent_faces.insert(link.endpoints.0);
            adjacent_faces.insert(link.endpoints.1);
        }
    }
    BoundaryNeighborhood {
        boundary: index,
        adjacent_faces,
    }
}

/// Removes every boundary link from the edge–face graph and returns the
/// connected components, numbered by smallest face id.
pub fn partition_graph(taag: &Taag, boundaries: &[FeatureBoundary]) -> PartitionedGraph {
    let removed_links: BTreeSet<EdgeId> = boundaries
        .iter()
        .flat_map(|b| b.edges.iter().copied())
        .collect();

    let mut adjacency: BTreeMap<FaceId, Vec<FaceId>> = BTreeMap::new();
    for node in taag.edge_face.nodes() {
        adjacency.entry(node.entity).or_default();
    }
    for link in taag.edge_face.links() {
        if removed_links.contains(&link.entity) {
            continue;
        }
        let (a, b) = link.endpoints;
        adjacency.get_mut(&a).expect("node").push(b);
        adjacency.get_mut(&b).expect("node").push(a);
    }

    let mut seen: BTreeSet<FaceId> = BTreeSet::new();
    let mut components = Vec::new();
    for &start in adjacency.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = std::collections::VecDeque::from([start]);
        seen.insert(start);
        while let Some(cur) = queue.pop_front() {
            comp.insert(cur);
            for &next in &adjacency[&cur] {
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        components.push(comp);
    }
    components.sort_by_key(|c| *c.iter().next().expect("non-empty"));
    PartitionedGraph {
        components,
        removed_links,
    }
}

/// Groups each component into subgraphs by merging across compatible links
/// (same convexity as the growing subgraph, or transitory). Faces of
/// incompatible convexity split off; the offending links are reported.
pub fn group_feature_subgraphs(
    partition: &PartitionedGraph,
    taag: &Taag,
    conv: &ConvexityMap,
    neighborhoods: &[BoundaryNeighborhood],
    diagnostics: &mut Vec<Diagnostic>,
) -> Vec<FeatureSubgraph> {
    let mut subgraphs: Vec<FeatureSubgraph> = Vec::new();

    for component in &partition.components {
        let mut unassigned: BTreeSet<FaceId> = component.clone();
        let mut assigned: BTreeSet<FaceId> = BTreeSet::new();
        let mut offending: BTreeSet<EdgeId> = BTreeSet::new();

        while let Some(&seed) = unassigned.iter().next() {
            let mut faces = BTreeSet::from([seed]);
            unassigned.remove(&seed);
            assigned.insert(seed);
            let mut convexity: Option<Convexity> = non_transitory(conv.face(seed));
            let mut interior: BTreeSet<EdgeId> = BTreeSet::new();
            let mut queue = std::collections::VecDeque::from([seed]);

            while let Some(cur) = queue.pop_front() {
                for (link, far) in taag.edge_face.neighbors(cur).expect("known node") {
                    if partition.removed_links.contains(&link.entity) || !component.contains(&far) {
                        continue;
                    }
                    if faces.contains(&far) {
                        // Link internal to the growing subgraph.
                        if compatible(&mut convexity, link.attr) {
                            interior.insert(link.entity);
                        } else {
                            offending.insert(link.entity);
                        }
                        continue;
                    }
                    // Expansion is transactional: the link only fixes the
                    // subgraph's convexity if the far face joins too.
                    let mut trial = convexity;
                    if !(compatible(&mut trial, link.attr)
                        && compatible(&mut trial, conv.face(far)))
                    {
                        offending.insert(link.entity);
                        continue;
                    }
                    if assigned.contains(&far) {
                        // Claimed by an earlier subgraph of this component;
                        // the split's cause was flagged when it happened.
                        continue;
                    }
                    convexity = trial;
                    faces.insert(far);
                    unassigned.remove(&far);
                    assigned.insert(far);
                    interior.insert(link.entity);
                    queue.push_back(far);
                }
            }

            subgraphs.push(FeatureSubgraph {
                faces,
                interior_edges: interior,
                convexity: convexity.unwrap_or(Convexity::Transitory),
                bounding: BTreeSet::new(),
            });
        }

        for e in offending {
            diagnostics.push(Diagnostic::AmbiguousConvexity { edge: e });
        }
    }

    subgraphs.sort_by_key(|s| *s.faces.iter().next().expect("non-empty"));

    // Attach bounding boundaries.
    for sub in subgraphs.iter_mut() {
        for nb in neighborhoods {
            if nb.adjacent_faces.iter().any(|f| sub.faces.contains(f)) {
                sub.bounding.insert(nb.boundary);
            }
        }
    }

    subgraphs
}

fn non_transitory(c: Convexity) -> Option<Convexity> {
    (c != Convexity::Transitory).then_some(c)
}

/// Absorbs `attr` into the growing subgraph's convexity: transitory is
/// always compatible; the first non-transitory attribute fixes the
/// convexity; later attributes must match it.
fn compatible(current: &mut Option<Convexity>, attr: Convexity) -> bool {
    match (attr, *current) {
        (Convexity::Transitory, _) => true,
        (c, None) => {
            *current = Some(c);
            true
        }
        (c, Some(cur)) => c == cur,
    }
}

/// Full pipeline: classify, build the two-level graph, extract boundaries,
/// partition, group. Diagnostics record mixed loops, empty loops,
/// ambiguous-convexity splits, and non-separating boundaries.
pub fn extract_features_with(
    model: &SolidModel,
    params: &ClassifyParams,
) -> Result<Extraction, ConvexityError> {
    let conv = classify_all_with(model, params)?;
    let taag = build_taag(model, &conv);
    let stages = extract_stages(&taag, model, &conv);

    let mut diagnostics: Vec<Diagnostic> = Vec::new();
    for ml in &stages.mixed_loops {
        diagnostics.push(Diagnostic::MixedLoop {
            cluster: ml.cluster,
            rejected: ml.rejected.clone(),
        });
    }
    for &ix in &stages.empty_loops {
        diagnostics.push(Diagnostic::EmptyLoop { cluster: ix });
    }

    let neighborhoods: Vec<BoundaryNeighborhood> = stages
        .boundaries
        .iter()
        .enumerate()
        .map(|(i, b)| boundary_neighborhood(b, i, &taag))
        .collect();

    let partition = partition_graph(&taag, &stages.boundaries);
    let mut subgraphs =
        group_feature_subgraphs(&partition, &taag, &conv, &neighborhoods, &mut diagnostics);

    // All-transitory subgraphs inherit their convexity from their bounding
    // boundaries (an unbounded all-transitory subgraph defaults to convex).
    for (idx, sub) in subgraphs.iter_mut().enumerate() {
        if sub.convexity != Convexity::Transitory {
            continue;
        }
        let mut inherited: Option<Convexity> = None;
        let mut conflict = false;
        for &b in &sub.bounding {
            let c = stages.boundaries[b].convexity;
            match inherited {
                None => inherited = Some(c),
                Some(prev) if prev != c => conflict = true,
                _ => {}
            }
        }
        match inherited {
            Some(c) => {
                sub.convexity = c;
                if conflict {
                    diagnostics.push(Diagnostic::ConflictingInheritance { subgraph: idx });
                }
            }
            None => {
                sub.convexity = Convexity::Convex;
                diagnostics.push(Diagnostic::UnlabeledSubgraph { subgraph: idx });
            }
        }
    }

    // A boundary must separate: no link of it may have both endpoint faces
    // in one subgraph.
    for (bi, b) in stages.boundaries.iter().enumerate() {
        'links: for &e in &b.edges {
            if let Ok(link) = taag.edge_face.link_by_edge(e) {
                let (fa, fb) = link.endpoints;
                for sub in &subgraphs {
                    if sub.faces.contains(&fa) && sub.faces.contains(&fb) {
                        diagnostics.push(Diagnostic::BoundaryNotSeparating { boundary: bi });
                        break 'links;
                    }
                }
            }
        }
    }

    Ok(Extraction {
        conv,
        taag,
        stages,
        neighborhoods,
        partition,
        subgraphs,
        diagnostics,
    })
}

/// Full pipeline with default tolerances.
pub fn extract_features(model: &SolidModel) -> Result<Extraction, ConvexityError> {
    extract_features_with(model, &ClassifyParams::default())
}
