//! Feature-boundary extraction: same-convexity edge clusters in the
//! vertex–edge graph, leaf pruning down to edge loops, the division-edge
//! test, and the resulting feature boundaries.

use std::collections::{BTreeMap, BTreeSet};

use crate::brep::{EdgeId, SolidModel, VertexId};
use crate::convexity::{Convexity, ConvexityMap};
use crate::taag::Taag;

/// Maximal connected set of same-convexity edges in the vertex–edge graph.
/// Closed edges form singleton clusters of their own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCluster {
    pub edges: BTreeSet<EdgeId>,
    pub convexity: Convexity,
    pub incident_vertices: BTreeSet<VertexId>,
}

/// Residue of a cluster after iterated leaf pruning. `edges` may be empty
/// when the cluster was a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLoop {
    pub edges: BTreeSet<EdgeId>,
    pub pruned_leaves: Vec<EdgeId>,
}

/// The division-edge subset of one edge loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureBoundary {
    pub edges: BTreeSet<EdgeId>,
    pub convexity: Convexity,
}

/// Per-cluster stages of boundary extraction, kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryStages {
    pub clusters: Vec<EdgeCluster>,
    /// Parallel to `clusters`.
    pub loops: Vec<EdgeLoop>,
    pub boundaries: Vec<FeatureBoundary>,
    /// Cluster indices whose loop had some but not all edges divide.
    pub mixed_loops: Vec<MixedLoop>,
    /// Cluster indices whose loop pruned to empty (tree clusters).
    pub empty_loops: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedLoop {
    pub cluster: usize,
    pub division: Vec<EdgeId>,
    pub rejected: Vec<EdgeId>,
}

/// Groups all adjacent same-convexity edges into clusters by breadth-first
/// search over shared vertices, seeded in ascending edge-id order.
/// Transitory edges are never members and never connectors. Output is
/// sorted by smallest member edge id.
pub fn find_edge_clusters(
    taag: &Taag,
    model: &SolidModel,
    conv: &ConvexityMap,
) -> Vec<EdgeCluster> {
    // Vertex -> open edges of each convexity, from the vertex-edge graph.
    let mut at_vertex: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for link in taag.vertex_edge.links() {
        at_vertex
            .entry(link.endpoints.0)
            .or_default()
            .push(link.entity);
        at_vertex
            .entry(link.endpoints.1)
            .or_default()
            .push(link.entity);
    }

    let mut assigned: BTreeSet<EdgeId> = BTreeSet::new();
    let mut clusters = Vec::new();

    for link in taag.vertex_edge.links() {
        let seed = link.entity;
        if link.attr == Convexity::Transitory || assigned.contains(&seed) {
            continue;
        }
        let convexity = link.attr;
        let mut edges = BTreeSet::new();
        let mut incident_vertices = BTreeSet::new();
        let mut queue = std::collections::VecDeque::from([seed]);
        assigned.insert(seed);
        while let Some(cur) = queue.pop_front() {
            edges.insert(cur);
            let (a, b) = model.edge(cur).endpoints.expect("open edge");
            for v in [a, b] {
                incident_vertices.insert(v);
                for &other in at_vertex.get(&v).into_iter().flatten() {
                    if !assigned.contains(&other) && conv.edge(other) == convexity {
                        assigned.insert(other);
                        queue.push_back(other);
                    }
                }
            }
        }
        clusters.push(EdgeCluster {
            edges,
            convexity,
            incident_vertices,
        });
    }

    // Each closed edge is a singleton cluster.
    for &closed in &taag.closed_edges {
        let attr = conv.edge(closed);
        if attr == Convexity::Transitory {
            continue;
        }
        clusters.push(EdgeCluster {
            edges: BTreeSet::from([closed]),
            convexity: attr,
            incident_vertices: BTreeSet::new(),
        });
    }

    clusters.sort_by_key(|c| *c.edges.iter().next().expect("non-empty cluster"));
    clusters
}

/// Iteratively removes leaf edges (an endpoint touching no other remaining
/// cluster edge) until fixpoint, lowest edge id first within each sweep.
/// A closed-edge singleton cluster is its own loop.
pub fn prune_to_loop(cluster: &EdgeCluster, model: &SolidModel) -> EdgeLoop {
    let mut remaining: BTreeSet<EdgeId> = cluster.edges.clone();
    let mut pruned = Vec::new();

    if remaining.iter().any(|e| model.edge(*e).is_closed()) {
        return EdgeLoop {
            edges: remaining,
            pruned_leaves: pruned,
        };
    }

    loop {
        let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &e in &remaining {
            let (a, b) = model.edge(e).endpoints.expect("open edge");
            *degree.entry(a).or_default() += 1;
            *degree.entry(b).or_default() += 1;
        }
        let leaves: Vec<EdgeId> = remaining
            .iter()
            .copied()
            .filter(|&e| {
                let (a, b) = model.edge(e).endpoints.expect("open edge");
                degree[&a] == 1 || degree[&b] == 1
            })
            .collect();
        if leaves.is_empty() {
            break;
        }
        for e in leaves {
            remaining.remove(&e);
            pruned.push(e);
        }
    }

    EdgeLoop {
        edges: remaining,
        pruned_leaves: pruned,
    }
}

/// Division-edge test for a loop edge.
///
/// Let k be the loop's convexity. An open edge divides when at least one of
/// its two adjacent faces has a bounding edge of the opposite convexity
/// that shares a vertex with the loop; a closed edge (and any edge of a
/// concave loop, whose convex context may legitimately sit away from the
/// loop on the shared face) accepts any opposite-convexity bounding edge of
/// an adjacent face.
pub fn is_division_edge(
    edge: EdgeId,
    edge_loop: &EdgeLoop,
    cluster_convexity: Convexity,
    model: &SolidModel,
    conv: &ConvexityMap,
) -> bool {
    debug_assert!(
        edge_loop.edges.contains(&edge),
        "edge must belong to the loop"
    );
    let opposite = cluster_convexity.opposite();
    if opposite == Convexity::Transitory {
        return false;
    }
    let e = model.edge(edge);
    let relaxed = e.is_closed() || cluster_convexity == Convexity::Concave;

    let loop_vertices: BTreeSet<VertexId> = edge_loop
        .edges
        .iter()
        .filter_map(|&le| model.edge(le).endpoints)
        .flat_map(|(a, b)| [a, b])
        .collect();

    for face in e.faces() {
        for &other in &model.face(face).bounding_edges {
            if other == edge || conv.edge(other) != opposite {
                continue;
            }
            if relaxed {
                return true;
            }
            if let Some((a, b)) = model.edge(other).endpoints {
                if loop_vertices.contains(&a) || loop_vertices.contains(&b) {
                    return true;
                }
            }
        }
    }
    false
}

/// Runs the full staged extraction: clusters, loops, division filtering.
/// Only non-empty boundaries are emitted; loops with a strict subset of
/// division edges are recorded as mixed.
pub fn extract_stages(taag: &Taag, model: &SolidModel, conv: &ConvexityMap) -> BoundaryStages {
    let clusters = find_edge_clusters(taag, model, conv);
    let mut loops = Vec::with_capacity(clusters.len());
    let mut boundaries = Vec::new();
    let mut mixed_loops = Vec::new();
    let mut empty_loops = Vec::new();

    for (idx, cluster) in clusters.iter().enumerate() {
        let lp = prune_to_loop(cluster, model);
        if lp.edges.is_empty() {
            empty_loops.push(idx);
            loops.push(lp);
            continue;
        }
        let (division, rejected): (Vec<EdgeId>, Vec<EdgeId>) = lp
            .edges
            .iter()
            .copied()
            .partition(|&e| is_division_edge(e, &lp, cluster.convexity, model, conv));
        if !division.is_empty() {
            boundaries.push(FeatureBoundary {
                edges: division.iter().copied().collect(),
                convexity: cluster.convexity,
            });
            if !rejected.is_empty() {
                mixed_loops.push(MixedLoop {
                    cluster: idx,
                    division,
                    rejected,
                });
            }
        }
        loops.push(lp);
    }

    BoundaryStages {
        clusters,
        loops,
        boundaries,
        mixed_loops,
        empty_loops,
    }
}

/// The feature boundaries of a model, in cluster order.
pub fn extract_boundaries(
    taag: &Taag,
    model: &SolidModel,
    conv: &ConvexityMap,
) -> Vec<FeatureBoundary> {
    extract_stages(taag, model, conv).boundaries
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::classify_all;
    use crate::factory::{build_fixture, FixtureSpec};
    use crate::taag::build_taag;

    fn stages_for(spec: &FixtureSpec) -> (SolidModel, ConvexityMap, BoundaryStages) {
        let m = build_fixture(spec).unwrap();
        let conv = classify_all(&m).unwrap();
        let t = build_taag(&m, &conv);
        let stages = extract_stages(&t, &m, &conv);
        (m, conv, stages)
    }

    #[test]
    fn cube_is_one_convex_cluster_without_boundaries() {
        let (_, _, s) = stages_for(&FixtureSpec::Cube { side: 1.0 });
        assert_eq!(s.clusters.len(), 1);
        assert_eq!(s.clusters[0].convexity, Convexity::Convex);
        assert_eq!(s.clusters[0].edges.len(), 12);
        assert_eq!(s.loops[0].edges.len(), 12);
        assert!(s.loops[0].pruned_leaves.is_empty());
        assert!(s.boundaries.is_empty());
        assert!(s.mixed_loops.is_empty() && s.empty_loops.is_empty());
    }

    #[test]
    fn case_b_cluster_prunes_six_leaves_to_a_six_edge_loop() {
        let (_, _, s) = stages_for(&FixtureSpec::CaseB);
        let concave: Vec<_> = s
            .clusters
            .iter()
            .enumerate()
            .filter(|(_, c)| c.convexity == Convexity::Concave)
            .collect();
        assert_eq!(concave.len(), 1);
        let (idx, cluster) = concave[0];
        assert_eq!(cluster.edges.len(), 12);
        assert_eq!(s.loops[idx].pruned_leaves.len(), 6);
        assert_eq!(s.loops[idx].edges.len(), 6);
        let boundary = s
            .boundaries
            .iter()
            .find(|b| b.convexity == Convexity::Concave)
            .expect("concave boundary");
        assert_eq!(boundary.edges, s.loops[idx].edges);
    }

    #[test]
    fn through_hole_concave_edges_are_singleton_trees() {
        let (_, _, s) = stages_for(&FixtureSpec::ThroughRectHole {
            block: (4.0, 4.0, 4.0),
            hole: (2.0, 2.0),
        });
        let concave: Vec<_> = s
            .clusters
            .iter()
            .filter(|c| c.convexity == Convexity::Concave)
            .collect();
        assert_eq!(concave.len(), 4);
        assert!(concave.iter().all(|c| c.edges.len() == 1));
        // Both mouth rims divide; the lengthwise singletons prune away.
        assert_eq!(s.boundaries.len(), 2);
        assert!(s.boundaries.iter().all(|b| b.edges.len() == 4));
        assert!(s
            .boundaries
            .iter()
            .all(|b| b.convexity == Convexity::Convex));
        assert_eq!(s.empty_loops.len(), 4);
    }

    #[test]
    fn pure_tree_cluster_prunes_to_empty() {
        // A blind corner step's concave edges form a tree.
        let (_, _, s) = stages_for(&FixtureSpec::BlindStep {
            block: (6.0, 5.0, 4.0),
            cut: (2.0, 2.0, 1.5),
        });
        let concave_idx: Vec<usize> = s
            .clusters
            .iter()
            .enumerate()
            .filter(|(_, c)| c.convexity == Convexity::Concave)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(concave_idx.len(), 1);
        let idx = concave_idx[0];
        assert_eq!(s.clusters[idx].edges.len(), 5);
        assert!(s.loops[idx].edges.is_empty());
        assert_eq!(s.loops[idx].pruned_leaves.len(), 5);
        assert!(s.empty_loops.contains(&idx));
        // The step is bounded by its convex mouth rim instead.
        let labels = crate::factory::blind_step_labels();
        let rim = s
            .boundaries
            .iter()
            .find(|b| b.convexity == Convexity::Convex)
            .expect("mouth boundary");
        assert_eq!(rim.edges, labels.mouth_rim.iter().copied().collect());
    }

    #[test]
    fn closed_singleton_cluster_is_its_own_loop_and_divides() {
        let (m, conv, s) = stages_for(&FixtureSpec::CylBoss {
            block: (6.0, 6.0, 3.0),
            radius: 1.5,
            height: 2.0,
        });
        let concave: Vec<_> = s
            .clusters
            .iter()
            .enumerate()
            .filter(|(_, c)| c.convexity == Convexity::Concave)
            .collect();
        assert_eq!(concave.len(), 1, "boss base circle");
        let (i, c) = concave[0];
        assert_eq!(c.edges.len(), 1);
        assert_eq!(s.loops[i].edges, c.edges);
        let e = *c.edges.iter().next().unwrap();
        assert!(m.edge(e).is_closed());
        assert!(is_division_edge(e, &s.loops[i], c.convexity, &m, &conv));
        // Both circles end up as boundaries.
        assert_eq!(s.boundaries.len(), 2);
    }

    #[test]
    fn cube_edges_never_divide() {
        let (m, conv, s) = stages_for(&FixtureSpec::Cube { side: 1.0 });
        for &e in &s.clusters[0].edges {
            assert!(!is_division_edge(
                e,
                &s.loops[0],
                Convexity::Convex,
                &m,
                &conv
            ));
        }
    }

    #[test]
    fn clusters_partition_non_transitory_edges_and_are_vertex_disjoint() {
        for spec in [
            FixtureSpec::Part1Composite,
            FixtureSpec::CaseA,
            FixtureSpec::CaseB,
            FixtureSpec::Pocket {
                block: (8.0, 6.0, 4.0),
                mouth: (4.0, 2.0),
                depth: 2.0,
            },
        ] {
            let (m, conv, s) = stages_for(&spec);
            let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
            for c in &s.clusters {
                for &e in &c.edges {
                    assert_eq!(conv.edge(e), c.convexity);
                    assert!(seen.insert(e), "edge in two clusters");
                }
            }
            for e in &m.edges {
                if conv.edge(e.id) != Convexity::Transitory {
                    assert!(seen.contains(&e.id), "unclustered edge {}", e.id);
                }
            }
            // Maximality: same-convexity clusters share no vertex.
            for (i, a) in s.clusters.iter().enumerate() {
                for b in s.clusters.iter().skip(i + 1) {
                    if a.convexity == b.convexity {
                        assert!(a.incident_vertices.is_disjoint(&b.incident_vertices));
                    }
                }
            }
        }
    }
}
