//! Two-level attributed adjacency graph: an attributed vertex–edge graph
//! and an attributed edge–face graph built independently over one solid's
//! entity ids.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::brep::{EdgeId, FaceId, SolidModel, VertexId};
use crate::convexity::{Convexity, ConvexityMap};

/// Node of an attributed graph: an entity id plus its convexity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttrNode<N> {
    pub entity: N,
    pub attr: Convexity,
}

/// Link of an attributed graph: the model edge it stands for, the two node
/// entities it connects, and the edge's convexity. Parallel links between
/// the same node pair are kept distinct (multigraph semantics).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttrLink<N> {
    pub entity: EdgeId,
    pub endpoints: (N, N),
    pub attr: Convexity,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown node")]
    UnknownNode,
    #[error("unknown edge")]
    UnknownEdge,
}

/// Attributed multigraph keyed by entity ids; nodes and links are kept in
/// ascending entity-id order so every traversal is reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttrGraph<N: Copy + Ord> {
    nodes: BTreeMap<N, Convexity>,
    links: Vec<AttrLink<N>>, // ascending by link entity id
    incidence: BTreeMap<N, Vec<usize>>,
}

impl<N: Copy + Ord> AttrGraph<N> {
    fn new(nodes: impl IntoIterator<Item = (N, Convexity)>) -> Self {
        let nodes: BTreeMap<N, Convexity> = nodes.into_iter().collect();
        let incidence = nodes.keys().map(|&n| (n, Vec::new())).collect();
        AttrGraph {
            nodes,
            links: Vec::new(),
            incidence,
        }
    }

    fn add_link(&mut self, link: AttrLink<N>) {
        debug_assert!(self.links.last().is_none_or(|l| l.entity < link.entity));
        let idx = self.links.len();
        self.incidence
            .get_mut(&link.endpoints.0)
            .expect("endpoint node")
            .push(idx);
        if link.endpoints.1 != link.endpoints.0 {
            self.incidence
                .get_mut(&link.endpoints.1)
                .expect("endpoint node")
                .push(idx);
        }
        self.links.push(link);
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = AttrNode<N>> + '_ {
        self.nodes
            .iter()
            .map(|(&entity, &attr)| AttrNode { entity, attr })
    }

    pub fn links(&self) -> &[AttrLink<N>] {
        &self.links
    }

    pub fn node_attr(&self, node: N) -> Result<Convexity, GraphError> {
        self.nodes
            .get(&node)
            .copied()
            .ok_or(GraphError::UnknownNode)
    }

    pub fn link_by_edge(&self, edge: EdgeId) -> Result<&AttrLink<N>, GraphError> {
        self.links
            .binary_search_by_key(&edge, |l| l.entity)
            .map(|i| &self.links[i])
            .map_err(|_| GraphError::UnknownEdge)
    }

    /// Incident (link, far node) pairs in ascending link entity order.
    pub fn neighbors(&self, node: N) -> Result<Vec<(&AttrLink<N>, N)>, GraphError> {
        let incident = self.incidence.get(&node).ok_or(GraphError::UnknownNode)?;
        Ok(incident
            .iter()
            .map(|&i| {
                let link = &self.links[i];
                let far = if link.endpoints.0 == node {
                    link.endpoints.1
                } else {
                    link.endpoints.0
                };
                (link, far)
            })
            .collect())
    }

    /// All links with the given convexity, ascending entity id.
    pub fn links_of(&self, filter: Convexity) -> Vec<&AttrLink<N>> {
        self.links.iter().filter(|l| l.attr == filter).collect()
    }

    pub fn degree(&self, node: N) -> Result<usize, GraphError> {
        Ok(self
            .incidence
            .get(&node)
            .ok_or(GraphError::UnknownNode)?
            .len())
    }
}

/// The two-level graph. Closed edges have no endpoints, so they appear only
/// in the edge–face graph; they are listed in `closed_edges` and treated
/// downstream as singleton edge loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Taag {
    pub vertex_edge: AttrGraph<VertexId>,
    pub edge_face: AttrGraph<FaceId>,
    pub closed_edges: Vec<EdgeId>,
}

/// Builds both graph levels by traversing every model edge once. Every
/// node and link attribute is copied from the convexity map.
pub fn build_taag(model: &SolidModel, conv: &ConvexityMap) -> Taag {
    let mut vertex_edge = AttrGraph::new(model.vertices.iter().map(|v| (v.id, conv.vertex(v.id))));
    let mut edge_face = AttrGraph::new(model.faces.iter().map(|f| (f.id, conv.face(f.id))));
    let mut closed_edges = Vec::new();

    for edge in &model.edges {
        let attr = conv.edge(edge.id);
        edge_face.add_link(AttrLink {
            entity: edge.id,
            endpoints: edge.adjacent_faces,
            attr,
        });
        match edge.endpoints {
            Some((a, b)) => vertex_edge.add_link(AttrLink {
                entity: edge.id,
                endpoints: (a, b),
                attr,
            }),
            None => closed_edges.push(edge.id),
        }
    }

    Taag {
        vertex_edge,
        edge_face,
        closed_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::classify_all;
    use crate::factory::{build_fixture, FixtureSpec};

    fn taag_for(spec: &FixtureSpec) -> (crate::brep::SolidModel, Taag) {
        let m = build_fixture(spec).unwrap();
        let conv = classify_all(&m).unwrap();
        let t = build_taag(&m, &conv);
        (m, t)
    }

    #[test]
    fn cube_graph_counts() {
        let (_, t) = taag_for(&FixtureSpec::Cube { side: 1.0 });
        assert_eq!(t.vertex_edge.node_count(), 8);
        assert_eq!(t.vertex_edge.link_count(), 12);
        assert_eq!(t.edge_face.node_count(), 6);
        assert_eq!(t.edge_face.link_count(), 12);
        assert!(t.closed_edges.is_empty());
        for node in t.edge_face.nodes() {
            assert_eq!(t.edge_face.neighbors(node.entity).unwrap().len(), 4);
        }
        assert!(t.edge_face.links_of(Convexity::Concave).is_empty());
    }

    #[test]
    fn through_hole_block_graph_counts() {
        let (m, t) = taag_for(&FixtureSpec::ThroughRectHole {
            block: (4.0, 4.0, 4.0),
            hole: (2.0, 2.0),
        });
        assert_eq!(t.edge_face.node_count(), 10);
        assert_eq!(t.edge_face.link_count(), 24);
        // Oracle-pinned: the four lengthwise tunnel edges are concave, the
        // eight mouth-rim edges convex, so every mouth vertex is transitory.
        assert_eq!(t.edge_face.links_of(Convexity::Concave).len(), 4);
        assert_eq!(t.edge_face.links_of(Convexity::Convex).len(), 20);
        assert_eq!(t.vertex_edge.link_count(), m.edges.len());
        let conv = classify_all(&m).unwrap();
        let transitory = conv
            .vertex_conv
            .iter()
            .filter(|&&c| c == Convexity::Transitory)
            .count();
        let convex = conv
            .vertex_conv
            .iter()
            .filter(|&&c| c == Convexity::Convex)
            .count();
        assert_eq!(
            (convex, transitory),
            (8, 8),
            "block corners convex, mouth corners transitory"
        );
    }

    #[test]
    fn stepped_block_has_one_concave_link() {
        let (_, t) = taag_for(&FixtureSpec::Step {
            block: (4.0, 3.0, 2.0),
            cut: (2.0, 1.0),
        });
        assert_eq!(t.edge_face.node_count(), 8);
        assert_eq!(t.edge_face.links_of(Convexity::Concave).len(), 1);
    }

    #[test]
    fn closed_edges_are_bookkept_separately() {
        let (m, t) = taag_for(&FixtureSpec::CylBoss {
            block: (6.0, 6.0, 3.0),
            radius: 1.5,
            height: 2.0,
        });
        assert_eq!(t.closed_edges.len(), 2);
        assert_eq!(
            t.vertex_edge.link_count() + t.closed_edges.len(),
            m.edges.len()
        );
        assert_eq!(t.edge_face.link_count(), m.edges.len());
    }

    #[test]
    fn split_cylinder_hole_wall_yields_parallel_links() {
        let (_, t) = taag_for(&FixtureSpec::CylHole {
            block: (6.0, 6.0, 3.0),
            radius: 1.5,
        });
        let mut pair_counts: BTreeMap<(FaceId, FaceId), usize> = BTreeMap::new();
        for l in t.edge_face.links() {
            let (a, b) = l.endpoints;
            let key = if a <= b { (a, b) } else { (b, a) };
            *pair_counts.entry(key).or_default() += 1;
        }
        assert!(
            pair_counts.values().any(|&c| c == 2),
            "the two seam lines give one face pair two distinct links"
        );
    }

    #[test]
    fn degree_equals_bounding_edge_count_and_build_is_deterministic() {
        for spec in [
            FixtureSpec::Cube { side: 1.0 },
            FixtureSpec::CaseB,
            FixtureSpec::Part1Composite,
        ] {
            let m = build_fixture(&spec).unwrap();
            let conv = classify_all(&m).unwrap();
            let t1 = build_taag(&m, &conv);
            let t2 = build_taag(&m, &conv);
            assert_eq!(t1, t2);
            for f in &m.faces {
                assert_eq!(
                    t1.edge_face.neighbors(f.id).unwrap().len(),
                    f.bounding_edges.len()
                );
            }
            for l in t1.edge_face.links() {
                assert_eq!(l.attr, conv.edge(l.entity));
            }
        }
    }

    #[test]
    fn unknown_node_is_an_error() {
        let (_, t) = taag_for(&FixtureSpec::Cube { side: 1.0 });
        assert_eq!(
            t.edge_face.neighbors(FaceId(99)).unwrap_err(),
            GraphError::UnknownNode
        );
        assert_eq!(
            t.edge_face.link_by_edge(EdgeId(99)).unwrap_err(),
            GraphError::UnknownEdge
        );
    }
}
