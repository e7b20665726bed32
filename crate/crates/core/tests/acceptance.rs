//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Library-level criteria live here; the CLI contract is checked in the
//! command-line crate's own integration tests.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use brep_extract::boundary::{extract_stages, prune_to_loop, EdgeCluster};
use brep_extract::brep::{Edge, EdgeCurve, EdgeId, SolidModel, VertexId};
use brep_extract::convexity::{
    classify_all, classify_edge, ClassifyParams, Convexity, OracleParams,
};
use brep_extract::factory::{
    build_fixture, case_a_labels, case_b_labels, chamfered_protrusion_labels, part1_labels,
    through_rect_hole_labels, FixtureSpec,
};
use brep_extract::oracle_edge_convexity;
use brep_extract::subgraph::extract_features;
use brep_extract::taag::build_taag;

fn pass(n: u32, what: &str) {
    println!("ACCEPTANCE {n} PASS: {what}");
}

#[test]
fn criterion_01_cube_sanity() {
    let cube = build_fixture(&FixtureSpec::Cube { side: 1.0 }).unwrap();
    let ex = extract_features(&cube).unwrap();
    assert_eq!(ex.boundaries().len(), 0);
    assert_eq!(ex.subgraphs.len(), 1);
    let s = &ex.subgraphs[0];
    assert_eq!(s.convexity, Convexity::Convex);
    assert_eq!(s.faces.len(), 6);
    assert_eq!(ex.conv.edge_conv.len(), 12);
    assert!(ex.conv.edge_conv.iter().all(|&c| c == Convexity::Convex));
    assert_eq!(ex.conv.vertex_conv.len(), 8);
    assert!(ex.conv.vertex_conv.iter().all(|&c| c == Convexity::Convex));
    pass(
        1,
        "cube: 0 boundaries, 1 convex subgraph of 6 faces, 12 convex edges, 8 convex vertices",
    );
}

#[test]
fn criterion_02_case_b_counts() {
    let m = build_fixture(&FixtureSpec::CaseB).unwrap();
    let ex = extract_features(&m).unwrap();
    let labels = case_b_labels();

    let concave: Vec<usize> = ex
        .stages
        .clusters
        .iter()
        .enumerate()
        .filter(|(_, c)| c.convexity == Convexity::Concave)
        .map(|(i, _)| i)
        .collect();
    assert_eq!(concave.len(), 1, "one concave cluster");
    let idx = concave[0];
    assert_eq!(ex.stages.clusters[idx].edges.len(), 12);
    assert_eq!(
        ex.stages.loops[idx].pruned_leaves.len(),
        6,
        "six leaf edges pruned"
    );
    let lp = &ex.stages.loops[idx];
    assert_eq!(lp.edges.len(), 6, "six-edge loop");
    assert_eq!(
        lp.edges,
        labels.rim.iter().copied().collect::<BTreeSet<_>>()
    );

    let concave_boundaries: Vec<_> = ex
        .boundaries()
        .iter()
        .filter(|b| b.convexity == Convexity::Concave)
        .collect();
    assert_eq!(concave_boundaries.len(), 1, "one concave boundary");
    assert_eq!(
        concave_boundaries[0].edges, lp.edges,
        "all six loop edges divide"
    );
    pass(
        2,
        "case B: 6 leaves pruned, 6-edge loop, all 6 edges divide into one boundary",
    );
}

#[test]
fn criterion_03_case_a_counts() {
    let m = build_fixture(&FixtureSpec::CaseA).unwrap();
    let ex = extract_features(&m).unwrap();
    let labels = case_a_labels();

    let mut expected_rims: Vec<BTreeSet<EdgeId>> = vec![labels.block_rim.iter().copied().collect()];
    expected_rims.extend(
        labels
            .prism_rims
            .iter()
            .map(|r| r.iter().copied().collect()),
    );

    let mut neighborhood_union: BTreeSet<_> = BTreeSet::new();
    let mut matched = 0;
    for (i, cluster) in ex.stages.clusters.iter().enumerate() {
        if cluster.convexity != Convexity::Concave {
            continue;
        }
        let lp = &ex.stages.loops[i];
        assert!(
            lp.pruned_leaves.is_empty(),
            "concave cluster has no leaf edges"
        );
        assert_eq!(
            lp.edges, cluster.edges,
            "whole cluster survives as the loop"
        );
        let boundary = ex
            .boundaries()
            .iter()
            .position(|b| b.edges == cluster.edges)
            .expect("whole cluster is one boundary");
        neighborhood_union.extend(ex.neighborhoods[boundary].adjacent_faces.iter().copied());
        assert!(expected_rims.contains(&cluster.edges));
        matched += 1;
    }
    assert_eq!(matched, 3, "three concave base rims");
    assert_eq!(neighborhood_union.len(), 11, "eleven adjacent faces");
    pass(
        3,
        "case A: leaf-free concave clusters, whole-cluster boundaries, 11 adjacent faces",
    );
}

#[test]
fn criterion_04_case_b_neighborhood() {
    let m = build_fixture(&FixtureSpec::CaseB).unwrap();
    let ex = extract_features(&m).unwrap();
    let labels = case_b_labels();
    let concave = ex
        .boundaries()
        .iter()
        .position(|b| b.convexity == Convexity::Concave)
        .expect("concave boundary");
    let nb = &ex.neighborhoods[concave].adjacent_faces;
    assert_eq!(nb.len(), 8, "eight adjacent faces");
    let expected: BTreeSet<_> = labels
        .walls
        .iter()
        .chain(labels.slopes.iter())
        .copied()
        .collect();
    assert_eq!(*nb, expected);
    pass(
        4,
        "case B: the concave boundary touches exactly 8 faces (6 walls + 2 floor slopes)",
    );
}

#[test]
fn criterion_05_through_hole_regression() {
    let m = build_fixture(&FixtureSpec::ThroughRectHole {
        block: (4.0, 4.0, 4.0),
        hole: (2.0, 2.0),
    })
    .unwrap();
    let ex = extract_features(&m).unwrap();
    let labels = through_rect_hole_labels();

    assert_eq!(ex.boundaries().len(), 2, "exactly two boundaries");
    for b in ex.boundaries() {
        assert_eq!(b.edges.len(), 4, "four edges each");
    }
    let rims: [BTreeSet<EdgeId>; 2] = [
        labels.front_rim.iter().copied().collect(),
        labels.back_rim.iter().copied().collect(),
    ];
    assert!(rims.contains(&ex.boundaries()[0].edges));
    assert!(rims.contains(&ex.boundaries()[1].edges));

    let hole = ex
        .subgraphs
        .iter()
        .find(|s| s.faces.contains(&labels.hole_walls[0]))
        .expect("hole subgraph");
    assert_eq!(hole.convexity, Convexity::Concave);
    assert_eq!(hole.faces, labels.hole_walls.iter().copied().collect());
    let outer = ex
        .subgraphs
        .iter()
        .find(|s| !s.faces.contains(&labels.hole_walls[0]))
        .expect("outer subgraph");
    assert_eq!(outer.convexity, Convexity::Convex);
    assert_eq!(outer.faces.len(), 6);
    pass(5, "through hole: 2 mouth boundaries of 4 edges, 4-face concave hole subgraph separate from the convex shell");
}

#[test]
fn criterion_06_chamfer_face_membership() {
    let m = build_fixture(&FixtureSpec::ChamferedProtrusion).unwrap();
    let ex = extract_features(&m).unwrap();
    let labels = chamfered_protrusion_labels();

    let protrusion = ex
        .subgraphs
        .iter()
        .find(|s| s.faces.contains(&labels.walls[0]))
        .expect("protrusion subgraph");
    assert!(
        protrusion.faces.contains(&labels.f10),
        "chamfer face F10 included"
    );
    let expected: BTreeSet<_> = labels
        .walls
        .iter()
        .chain(labels.chamfers.iter())
        .chain([&labels.cap])
        .copied()
        .collect();
    assert_eq!(
        protrusion.faces, expected,
        "all nine protrusion faces together"
    );
    assert_eq!(protrusion.convexity, Convexity::Convex);
    pass(
        6,
        "chamfered protrusion: one convex subgraph holding every protrusion face including F10",
    );
}

#[test]
fn criterion_07_oracle_equivalence() {
    let params = ClassifyParams { tau: 1e-7 };
    let oparams = OracleParams {
        eps: 1e-4,
        delta: 1e-5,
    };
    let mut models = 0usize;
    let mut edges = 0usize;
    for spec in FixtureSpec::all_defaults() {
        let m = build_fixture(&spec).unwrap();
        models += 1;
        for e in &m.edges {
            edges += 1;
            let a = classify_edge(e, &m, &params).unwrap();
            let b = oracle_edge_convexity(e, &m, &oparams).unwrap();
            assert_eq!(a, b, "{}: edge {} classifier vs oracle", spec.name(), e.id);
        }
    }
    assert!(models >= 14, "at least 14 models, got {models}");
    assert!(edges >= 300, "at least 300 edges, got {edges}");
    pass(
        7,
        &format!("oracle equivalence on 100% of {edges} edges across {models} models"),
    );
}

/// Randomized leaf pruning: removes one uniformly chosen current leaf at a
/// time. Confluence says the residue equals the deterministic sweep's.
fn prune_randomized(
    cluster: &EdgeCluster,
    model: &SolidModel,
    rng: &mut StdRng,
) -> BTreeSet<EdgeId> {
    let mut remaining: BTreeSet<EdgeId> = cluster.edges.clone();
    if remaining.iter().any(|e| model.edge(*e).is_closed()) {
        return remaining;
    }
    loop {
        let mut degree = std::collections::BTreeMap::new();
        for &e in &remaining {
            let (a, b) = model.edge(e).endpoints.unwrap();
            *degree.entry(a).or_insert(0usize) += 1;
            *degree.entry(b).or_insert(0usize) += 1;
        }
        let leaves: Vec<EdgeId> = remaining
            .iter()
            .copied()
            .filter(|&e| {
                let (a, b) = model.edge(e).endpoints.unwrap();
                degree[&a] == 1 || degree[&b] == 1
            })
            .collect();
        if leaves.is_empty() {
            return remaining;
        }
        let pick = leaves[rng.random_range(0..leaves.len())];
        remaining.remove(&pick);
    }
}

/// Edge with its stored direction reversed and faces swapped; the same
/// geometric edge, so its classification must not change.
fn reversed(edge: &Edge) -> Edge {
    let mut e = edge.clone();
    e.endpoints = e.endpoints.map(|(a, b)| (b, a));
    e.adjacent_faces = (e.adjacent_faces.1, e.adjacent_faces.0);
    e.curve = match e.curve {
        EdgeCurve::LineSegment => EdgeCurve::LineSegment,
        EdgeCurve::CircularArc {
            center,
            axis,
            radius,
        } => EdgeCurve::CircularArc {
            center,
            axis: -axis,
            radius,
        },
        EdgeCurve::FullCircle {
            center,
            axis,
            radius,
        } => EdgeCurve::FullCircle {
            center,
            axis: -axis,
            radius,
        },
    };
    e
}

#[test]
fn criterion_08_property_suite() {
    let params = ClassifyParams::default();
    let mut rng = StdRng::seed_from_u64(0x5eed);

    for spec in FixtureSpec::all_defaults() {
        let name = spec.name();
        let m = build_fixture(&spec).unwrap();
        let conv = classify_all(&m).unwrap();
        let taag = build_taag(&m, &conv);
        let stages = extract_stages(&taag, &m, &conv);

        // Cluster partition and maximality.
        let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
        for c in &stages.clusters {
            assert_ne!(c.convexity, Convexity::Transitory);
            for &e in &c.edges {
                assert_eq!(conv.edge(e), c.convexity, "{name}: cluster uniformity");
                assert!(seen.insert(e), "{name}: edge {e} in two clusters");
            }
        }
        for e in &m.edges {
            if conv.edge(e.id) != Convexity::Transitory {
                assert!(seen.contains(&e.id), "{name}: {} unclustered", e.id);
            }
        }
        for (i, a) in stages.clusters.iter().enumerate() {
            for b in stages.clusters.iter().skip(i + 1) {
                if a.convexity == b.convexity {
                    assert!(
                        a.incident_vertices.is_disjoint(&b.incident_vertices),
                        "{name}: same-convexity clusters share a vertex"
                    );
                }
            }
        }

        // Prune confluence: 100 random removal orders per fixture.
        for (i, cluster) in stages.clusters.iter().enumerate() {
            let deterministic = prune_to_loop(cluster, &m);
            assert_eq!(deterministic.edges, stages.loops[i].edges);
            let shuffles = 100 / stages.clusters.len().max(1) + 1;
            for _ in 0..shuffles {
                let randomized = prune_randomized(cluster, &m, &mut rng);
                assert_eq!(
                    randomized, deterministic.edges,
                    "{name}: prune not confluent"
                );
            }
            // Loop vertices all touch at least two loop edges.
            let mut deg: std::collections::BTreeMap<VertexId, usize> = Default::default();
            for &e in &deterministic.edges {
                if let Some((a, b)) = m.edge(e).endpoints {
                    *deg.entry(a).or_default() += 1;
                    *deg.entry(b).or_default() += 1;
                }
            }
            assert!(deg.values().all(|&d| d >= 2), "{name}: leaf left in loop");
        }

        // Boundary subset chain and attribute checks.
        for b in &stages.boundaries {
            assert!(!b.edges.is_empty());
            assert_ne!(b.convexity, Convexity::Transitory);
            let host = stages
                .clusters
                .iter()
                .position(|c| b.edges.is_subset(&c.edges))
                .expect("boundary within a cluster");
            assert!(
                b.edges.is_subset(&stages.loops[host].edges),
                "boundary within the loop"
            );
            for &e in &b.edges {
                assert_eq!(conv.edge(e), b.convexity);
            }
        }

        // Face coverage and homogeneity.
        let ex = extract_features(&m).unwrap();
        let mut covered = BTreeSet::new();
        for s in &ex.subgraphs {
            for &f in &s.faces {
                assert!(covered.insert(f), "{name}: face {f} twice");
            }
            let mut non_transitory = BTreeSet::new();
            for &f in &s.faces {
                let c = conv.face(f);
                if c != Convexity::Transitory {
                    non_transitory.insert(c);
                }
            }
            for &e in &s.interior_edges {
                let c = conv.edge(e);
                if c != Convexity::Transitory {
                    non_transitory.insert(c);
                }
            }
            assert!(non_transitory.len() <= 1, "{name}: mixed subgraph");
        }
        assert_eq!(covered.len(), m.faces.len(), "{name}: face coverage");

        // Pipeline determinism.
        let ex2 = extract_features(&m).unwrap();
        assert_eq!(ex, ex2, "{name}: pipeline not deterministic");

        // Orientation invariance of edge classification.
        for e in &m.edges {
            let original = classify_edge(e, &m, &params).unwrap();
            let flipped = classify_edge(&reversed(e), &m, &params).unwrap();
            assert_eq!(
                original, flipped,
                "{name}: edge {} orientation-dependent",
                e.id
            );
        }
    }
    pass(8, "partition/maximality, prune confluence (randomized), coverage/homogeneity, determinism, orientation invariance");
}

#[test]
fn criterion_09_part1_features() {
    let m = build_fixture(&FixtureSpec::Part1Composite).unwrap();
    let ex = extract_features(&m).unwrap();
    let labels = part1_labels();

    // Each feature must own at least one dedicated subgraph of the right
    // convexity whose faces all belong to the feature.
    let expect = |feature: &str, conv: Convexity, face_pool: &BTreeSet<_>| {
        let hit = ex.subgraphs.iter().find(|s| s.faces.is_subset(face_pool));
        let s = hit.unwrap_or_else(|| panic!("{feature}: no dedicated subgraph"));
        assert_eq!(s.convexity, conv, "{feature}: wrong convexity");
    };

    expect(
        "boss",
        Convexity::Convex,
        &[labels.boss_wall, labels.boss_cap].into_iter().collect(),
    );
    expect(
        "protrusion",
        Convexity::Convex,
        &labels.protrusion.iter().copied().collect(),
    );
    expect(
        "through hole",
        Convexity::Concave,
        &labels.tunnel_walls.iter().copied().collect(),
    );
    expect(
        "pocket",
        Convexity::Concave,
        &labels.pocket.iter().copied().collect(),
    );
    expect(
        "slot",
        Convexity::Concave,
        &labels.slot.iter().copied().collect(),
    );
    expect(
        "blind hole",
        Convexity::Concave,
        &[labels.blind_hole_wall, labels.blind_hole_floor]
            .into_iter()
            .collect(),
    );
    expect(
        "step",
        Convexity::Concave,
        &labels.step.iter().copied().collect(),
    );

    // The tunnel walls specifically form one concave component.
    let tunnel: BTreeSet<_> = labels.tunnel_walls.iter().copied().collect();
    assert!(ex
        .subgraphs
        .iter()
        .any(|s| s.faces == tunnel && s.convexity == Convexity::Concave));
    pass(
        9,
        "part 1: boss/protrusion convex; hole, blind hole, slot, step, pocket concave subgraphs",
    );
}

#[test]
fn locality_of_classification_under_feature_addition() {
    // Cutting a pocket into a block leaves every surviving block edge's
    // classification unchanged (matched geometrically).
    let block = build_fixture(&FixtureSpec::Block {
        dims: (8.0, 6.0, 4.0),
    })
    .unwrap();
    let pocketed = build_fixture(&FixtureSpec::Pocket {
        block: (8.0, 6.0, 4.0),
        mouth: (4.0, 2.0),
        depth: 2.0,
    })
    .unwrap();
    let conv_a = classify_all(&block).unwrap();
    let conv_b = classify_all(&pocketed).unwrap();
    let key = |m: &SolidModel, e: &Edge| -> Option<(String, String)> {
        let (a, b) = e.endpoints?;
        let p = m.vertex(a).position;
        let q = m.vertex(b).position;
        let f = |p: brep_extract::geom::Point3| format!("{:.9},{:.9},{:.9}", p.x, p.y, p.z);
        let (s, t) = (f(p), f(q));
        Some(if s <= t { (s, t) } else { (t, s) })
    };
    let mut matched = 0;
    for ea in &block.edges {
        let ka = key(&block, ea);
        for eb in &pocketed.edges {
            if ka == key(&pocketed, eb) {
                assert_eq!(conv_a.edge(ea.id), conv_b.edge(eb.id));
                matched += 1;
            }
        }
    }
    assert_eq!(matched, 12, "all block edges survive the pocket cut");
}
