//! Three-valued convexity classification of faces, edges, and vertices,
//! plus an independent numerical dihedral oracle used for verification.

use thiserror::Error;

use crate::brep::{Edge, EdgeId, Face, FaceId, GeomError, SolidModel, SurfaceGeometry, VertexId};
use crate::geom::Point3;

/// Convexity attribute: Concave = -1, Transitory = 0, Convex = +1.
/// The order exists for sorting only, never for arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convexity {
    Concave,
    Transitory,
    Convex,
}

impl Convexity {
    pub fn as_i8(self) -> i8 {
        match self {
            Convexity::Concave => -1,
            Convexity::Transitory => 0,
            Convexity::Convex => 1,
        }
    }

    pub fn opposite(self) -> Convexity {
        match self {
            Convexity::Concave => Convexity::Convex,
            Convexity::Transitory => Convexity::Transitory,
            Convexity::Convex => Convexity::Concave,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convexity::Concave => "concave",
            Convexity::Transitory => "transitory",
            Convexity::Convex => "convex",
        }
    }
}

impl std::fmt::Display for Convexity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Principal curvatures at a point. Sign convention: positive where the
/// surface bends toward the material (concave side), negative where it
/// bends away (convex side).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvaturePair {
    pub k1: f64,
    pub k2: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConvexityError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("cannot compute normals or tangent for edge {0}")]
    DegenerateNormals(EdgeId),
    #[error("vertex {0} has no adjacent edges")]
    IsolatedVertex(VertexId),
}

/// Classification tolerances. `tau` is the sign threshold on the
/// triple product; ties map to Transitory so tangent faces classify
/// robustly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyParams {
    pub tau: f64,
}

impl Default for ClassifyParams {
    fn default() -> Self {
        ClassifyParams { tau: 1e-7 }
    }
}

/// Total convexity assignment for one model, indexed by dense entity ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityMap {
    pub face_conv: Vec<Convexity>,
    pub edge_conv: Vec<Convexity>,
    pub vertex_conv: Vec<Convexity>,
}

impl ConvexityMap {
    pub fn face(&self, id: FaceId) -> Convexity {
        self.face_conv[id.index()]
    }

    pub fn edge(&self, id: EdgeId) -> Convexity {
        self.edge_conv[id.index()]
    }

    pub fn vertex(&self, id: VertexId) -> Convexity {
        self.vertex_conv[id.index()]
    }
}

/// Principal curvatures of `surface` at `p`.
///
/// Planes are flat; cylinders and cones have one zero curvature and one of
/// magnitude 1/r (local radius for cones), signed by which side holds
/// material; saddles report the fixed marker pair (+1, -1).
pub fn curvatures_at(
    surface: &SurfaceGeometry,
    p: Point3,
) -> Result<CurvaturePair, ConvexityError> {
    use crate::brep::MaterialSide::*;
    match surface {
        SurfaceGeometry::Plane { .. } => {
            if !surface.contains(p, crate::geom::ON_SURFACE_TOL) {
                return Err(GeomError::PointOffSurface.into());
            }
            Ok(CurvaturePair { k1: 0.0, k2: 0.0 })
        }
        SurfaceGeometry::Cylinder {
            radius,
            material_side,
            ..
        } => {
            if !surface.contains(p, crate::geom::ON_SURFACE_TOL) {
                return Err(GeomError::PointOffSurface.into());
            }
            let k = match material_side {
                Outside => -1.0 / radius,
                Inside => 1.0 / radius,
            };
            Ok(CurvaturePair { k1: 0.0, k2: k })
        }
        SurfaceGeometry::Cone {
            apex,
            axis_dir,
            material_side,
            ..
        } => {
            if !surface.contains(p, crate::geom::ON_SURFACE_TOL) {
                return Err(GeomError::PointOffSurface.into());
            }
            let v = p - *apex;
            let t = v.dot(axis_dir.as_vec());
            let radial = v - axis_dir.as_vec() * t;
            let rho = radial.norm();
            if rho < 1e-12 {
                return Err(GeomError::ApexSingularity.into());
            }
            let k = match material_side {
                Outside => -1.0 / rho,
                Inside => 1.0 / rho,
            };
            Ok(CurvaturePair { k1: 0.0, k2: k })
        }
        SurfaceGeometry::RuledSaddle => Ok(CurvaturePair { k1: 1.0, k2: -1.0 }),
    }
}

/// Face convexity from the principal curvatures at its representative
/// point. The flat row is checked first, then opposite-sign curvature,
/// then the convex/concave rows.
pub fn classify_face(face: &Face) -> Result<Convexity, ConvexityError> {
    let CurvaturePair { k1, k2 } = curvatures_at(&face.surface, face.representative_point)?;
    let zero = 1e-12;
    let flat = |k: f64| k.abs() <= zero;
    // Flat and opposite-sign rows both land on transitory; the flat row is
    // listed first to fix the precedence at the k1 = k2 = 0 corner.
    Ok(if (flat(k1) && flat(k2)) || k1 * k2 < -zero {
        Convexity::Transitory
    } else if k1.min(k2) < -zero {
        Convexity::Convex
    } else {
        Convexity::Concave
    })
}

/// Edge convexity from the signed triple product (n1 x n2) . v1, where n1
/// and n2 are the outward normals of the left and right faces at the edge's
/// representative point and v1 is the stored-direction tangent there.
/// Positive is convex; |value| <= tau is transitory (tangent faces).
pub fn classify_edge(
    edge: &Edge,
    model: &SolidModel,
    params: &ClassifyParams,
) -> Result<Convexity, ConvexityError> {
    let p = edge.midpoint;
    let n1 = model
        .outward_normal_at(edge.left_face(), p)
        .map_err(|_| ConvexityError::DegenerateNormals(edge.id))?;
    let n2 = model
        .outward_normal_at(edge.right_face(), p)
        .map_err(|_| ConvexityError::DegenerateNormals(edge.id))?;
    let v1 = edge
        .tangent_at_midpoint(model)
        .ok_or(ConvexityError::DegenerateNormals(edge.id))?;
    let triple = n1.as_vec().cross(n2.as_vec()).dot(v1.as_vec());
    Ok(if triple > params.tau {
        Convexity::Convex
    } else if triple < -params.tau {
        Convexity::Concave
    } else {
        Convexity::Transitory
    })
}

/// Vertex convexity by counting adjacent edge convexities: convex when no
/// adjacent edge is concave, concave when no adjacent edge is convex,
/// transitory otherwise.
pub fn classify_vertex(
    vertex: VertexId,
    adjacent: &[EdgeId],
    edge_conv: &[Convexity],
) -> Result<Convexity, ConvexityError> {
    if adjacent.is_empty() {
        return Err(ConvexityError::IsolatedVertex(vertex));
    }
    let any = |c: Convexity| adjacent.iter().any(|e| edge_conv[e.index()] == c);
    Ok(if !any(Convexity::Concave) {
        Convexity::Convex
    } else if !any(Convexity::Convex) {
        Convexity::Concave
    } else {
        Convexity::Transitory
    })
}

/// Classifies every entity of the model. Vertex classification uses the
/// already-computed edge map.
pub fn classify_all_with(
    model: &SolidModel,
    params: &ClassifyParams,
) -> Result<ConvexityMap, ConvexityError> {
    let face_conv = model
        .faces
        .iter()
        .map(classify_face)
        .collect::<Result<Vec<_>, _>>()?;
    let edge_conv = model
        .edges
        .iter()
        .map(|e| classify_edge(e, model, params))
        .collect::<Result<Vec<_>, _>>()?;
    let incidence = model.edges_at_vertices();
    let vertex_conv = model
        .vertices
        .iter()
        .map(|v| classify_vertex(v.id, &incidence[v.id.index()], &edge_conv))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConvexityMap {
        face_conv,
        edge_conv,
        vertex_conv,
    })
}

pub fn classify_all(model: &SolidModel) -> Result<ConvexityMap, ConvexityError> {
    classify_all_with(model, &ClassifyParams::default())
}

/// Oracle parameters: `eps` is the in-face step used by the point-in-face
/// probe, `delta` the angular tolerance around a flat dihedral.
#[derive(Debug, Clone, Copy)]
pub struct OracleParams {
    pub eps: f64,
    pub delta: f64,
}

impl Default for OracleParams {
    fn default() -> Self {
        OracleParams {
            eps: 1e-4,
            delta: 1e-5,
        }
    }
}

/// Numerical dihedral oracle, implemented without the triple-product
/// formula and without consulting the stored edge orientation or the
/// left/right face labels.
///
/// It steps from the edge's representative point into each adjacent face's
/// interior, measures the angle of the material wedge between the two
/// in-face directions (deciding which side holds material by testing the
/// bisector against both outward normals), and maps wedge < pi to convex,
/// wedge > pi to concave, and wedge = pi (within delta) to transitory.
pub fn oracle_edge_convexity(
    edge: &Edge,
    model: &SolidModel,
    params: &OracleParams,
) -> Result<Convexity, ConvexityError> {
    let p = edge.midpoint;
    let t = edge
        .tangent_at_midpoint(model)
        .ok_or(ConvexityError::DegenerateNormals(edge.id))?;
    let (fa, fb) = edge.adjacent_faces;
    let d1 = model
        .interior_direction(fa, p, t)
        .map_err(|_| ConvexityError::DegenerateNormals(edge.id))?;
    let d2 = model
        .interior_direction(fb, p, t)
        .map_err(|_| ConvexityError::DegenerateNormals(edge.id))?;
    let cosine = d1.as_vec().dot(d2.as_vec()).clamp(-1.0, 1.0);
    let theta = cosine.acos();
    let pi = std::f64::consts::PI;
    if (theta - pi).abs() <= params.delta {
        return Ok(Convexity::Transitory);
    }
    let bisector = (d1.as_vec() + d2.as_vec())
        .normalized()
        .ok_or(ConvexityError::DegenerateNormals(edge.id))?;
    let n1 = model
        .outward_normal_at(fa, p)
        .map_err(|_| ConvexityError::DegenerateNormals(edge.id))?;
    let n2 = model
        .outward_normal_at(fb, p)
        .map_err(|_| ConvexityError::DegenerateNormals(edge.id))?;
    let s1 = bisector.dot(n1.as_vec());
    let s2 = bisector.dot(n2.as_vec());
    let wedge = if s1 < 0.0 && s2 < 0.0 {
        theta // bisector inside the material: the wedge is the acute side
    } else if s1 > 0.0 && s2 > 0.0 {
        2.0 * pi - theta
    } else {
        return Err(ConvexityError::DegenerateNormals(edge.id));
    };
    Ok(if wedge < pi - params.delta {
        Convexity::Convex
    } else if wedge > pi + params.delta {
        Convexity::Concave
    } else {
        Convexity::Transitory
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brep::MaterialSide;
    use crate::factory::{build_fixture, FixtureSpec};
    use crate::geom::{point3, vec3, UnitVec3};

    fn plane() -> SurfaceGeometry {
        SurfaceGeometry::Plane {
            point: point3(0.0, 0.0, 0.0),
            outward_normal: UnitVec3::new(vec3(0.0, 0.0, 1.0)).unwrap(),
        }
    }

    fn cylinder(side: MaterialSide) -> SurfaceGeometry {
        SurfaceGeometry::Cylinder {
            axis_point: point3(0.0, 0.0, 0.0),
            axis_dir: UnitVec3::new(vec3(0.0, 0.0, 1.0)).unwrap(),
            radius: 2.0,
            material_side: side,
        }
    }

    #[test]
    fn curvature_signs_follow_material_side() {
        let p = point3(2.0, 0.0, 0.0);
        assert_eq!(
            curvatures_at(&plane(), point3(0.3, 0.4, 0.0)).unwrap(),
            CurvaturePair { k1: 0.0, k2: 0.0 }
        );
        assert_eq!(
            curvatures_at(&cylinder(MaterialSide::Outside), p).unwrap(),
            CurvaturePair { k1: 0.0, k2: -0.5 }
        );
        assert_eq!(
            curvatures_at(&cylinder(MaterialSide::Inside), p).unwrap(),
            CurvaturePair { k1: 0.0, k2: 0.5 }
        );
    }

    #[test]
    fn face_classification_covers_all_rows() {
        let mk = |surface: SurfaceGeometry, rep: Point3| Face {
            id: FaceId(0),
            surface,
            bounding_edges: vec![EdgeId(0)],
            representative_point: rep,
        };
        assert_eq!(
            classify_face(&mk(plane(), point3(0.0, 0.0, 0.0))).unwrap(),
            Convexity::Transitory
        );
        assert_eq!(
            classify_face(&mk(cylinder(MaterialSide::Outside), point3(2.0, 0.0, 0.0))).unwrap(),
            Convexity::Convex
        );
        assert_eq!(
            classify_face(&mk(cylinder(MaterialSide::Inside), point3(2.0, 0.0, 0.0))).unwrap(),
            Convexity::Concave
        );
        assert_eq!(
            classify_face(&mk(SurfaceGeometry::RuledSaddle, point3(0.0, 0.0, 0.0))).unwrap(),
            Convexity::Transitory
        );
    }

    #[test]
    fn cube_edges_and_vertices_are_convex() {
        let cube = build_fixture(&FixtureSpec::Cube { side: 1.0 }).unwrap();
        let conv = classify_all(&cube).unwrap();
        assert!(conv.edge_conv.iter().all(|&c| c == Convexity::Convex));
        assert!(conv.vertex_conv.iter().all(|&c| c == Convexity::Convex));
        assert!(conv.face_conv.iter().all(|&c| c == Convexity::Transitory));
    }

    #[test]
    fn pocket_floor_edges_are_concave_and_floor_corners_concave() {
        let m = build_fixture(&FixtureSpec::Pocket {
            block: (8.0, 6.0, 4.0),
            mouth: (4.0, 2.0),
            depth: 2.0,
        })
        .unwrap();
        let conv = classify_all(&m).unwrap();
        let labels = crate::factory::pocket_labels();
        for e in labels.floor_rim {
            assert_eq!(conv.edge(e), Convexity::Concave, "floor rim edge {e}");
        }
        for e in labels.mouth_rim {
            assert_eq!(conv.edge(e), Convexity::Convex, "mouth rim edge {e}");
        }
        // A pocket floor corner touches three concave edges.
        let incidence = m.edges_at_vertices();
        let floor_corner = labels.floor_corner;
        assert_eq!(conv.vertex(floor_corner), Convexity::Concave);
        assert_eq!(incidence[floor_corner.index()].len(), 3);
    }

    #[test]
    fn step_corner_vertex_is_transitory() {
        let m = build_fixture(&FixtureSpec::Step {
            block: (4.0, 3.0, 2.0),
            cut: (2.0, 1.0),
        })
        .unwrap();
        let conv = classify_all(&m).unwrap();
        let concave: Vec<_> = m
            .edges
            .iter()
            .filter(|e| conv.edge(e.id) == Convexity::Concave)
            .collect();
        assert_eq!(concave.len(), 1, "through step has one concave edge");
        let (a, b) = concave[0].endpoints.unwrap();
        assert_eq!(conv.vertex(a), Convexity::Transitory);
        assert_eq!(conv.vertex(b), Convexity::Transitory);
    }

    #[test]
    fn tangent_plane_cylinder_edge_is_transitory() {
        let m = build_fixture(&FixtureSpec::StadiumPocket).unwrap();
        let conv = classify_all(&m).unwrap();
        let labels = crate::factory::stadium_pocket_labels();
        for e in labels.tangent_seams {
            assert_eq!(conv.edge(e), Convexity::Transitory, "seam {e}");
        }
        for e in labels.floor_rim {
            assert_eq!(conv.edge(e), Convexity::Concave, "floor rim {e}");
        }
    }

    #[test]
    fn vertex_count_rule_covers_the_corner_cases() {
        use crate::brep::{EdgeId, VertexId};
        let edges = [EdgeId(0), EdgeId(1)];
        // No concave neighbor counts as convex, even when all neighbors
        // are transitory.
        let conv = vec![Convexity::Transitory, Convexity::Transitory];
        assert_eq!(
            classify_vertex(VertexId(0), &edges, &conv).unwrap(),
            Convexity::Convex
        );
        let conv = vec![Convexity::Concave, Convexity::Transitory];
        assert_eq!(
            classify_vertex(VertexId(0), &edges, &conv).unwrap(),
            Convexity::Concave
        );
        assert_eq!(
            classify_vertex(VertexId(3), &[], &conv).unwrap_err(),
            ConvexityError::IsolatedVertex(VertexId(3))
        );
    }

    #[test]
    fn off_surface_points_are_rejected() {
        let s = cylinder(MaterialSide::Outside);
        assert_eq!(
            curvatures_at(&s, point3(5.0, 0.0, 0.0)).unwrap_err(),
            ConvexityError::Geom(crate::brep::GeomError::PointOffSurface)
        );
    }

    #[test]
    fn boss_and_blind_hole_circle_convexities() {
        let boss = build_fixture(&FixtureSpec::CylBoss {
            block: (6.0, 6.0, 3.0),
            radius: 1.5,
            height: 2.0,
        })
        .unwrap();
        let conv = classify_all(&boss).unwrap();
        let l = crate::factory::cyl_boss_labels();
        assert_eq!(conv.face(l.wall), Convexity::Convex, "boss wall");
        assert_eq!(
            conv.edge(l.base_circle),
            Convexity::Concave,
            "boss base circle"
        );
        assert_eq!(
            conv.edge(l.top_circle),
            Convexity::Convex,
            "boss top circle"
        );

        let hole = build_fixture(&FixtureSpec::BlindHole {
            block: (6.0, 6.0, 4.0),
            radius: 1.5,
            depth: 2.0,
        })
        .unwrap();
        let conv = classify_all(&hole).unwrap();
        let l = crate::factory::blind_hole_labels();
        assert_eq!(conv.face(l.wall), Convexity::Concave, "hole wall");
        assert_eq!(
            conv.edge(l.mouth_circle),
            Convexity::Convex,
            "hole mouth circle"
        );
        assert_eq!(
            conv.edge(l.floor_circle),
            Convexity::Concave,
            "hole floor circle"
        );
    }

    #[test]
    fn oracle_matches_classifier_on_every_cube_edge() {
        let cube = build_fixture(&FixtureSpec::Cube { side: 2.0 }).unwrap();
        let params = ClassifyParams::default();
        let oparams = OracleParams::default();
        for e in &cube.edges {
            assert_eq!(
                classify_edge(e, &cube, &params).unwrap(),
                oracle_edge_convexity(e, &cube, &oparams).unwrap()
            );
        }
    }

    #[test]
    fn mirrored_model_keeps_edge_convexity() {
        for spec in [
            FixtureSpec::Cube { side: 1.0 },
            FixtureSpec::Pocket {
                block: (8.0, 6.0, 4.0),
                mouth: (4.0, 2.0),
                depth: 2.0,
            },
            FixtureSpec::CylBoss {
                block: (6.0, 6.0, 3.0),
                radius: 1.5,
                height: 2.0,
            },
        ] {
            let m = build_fixture(&spec).unwrap();
            let mirrored = crate::brep::mirror_x(&m);
            mirrored.validate().unwrap();
            let a = classify_all(&m).unwrap();
            let b = classify_all(&mirrored).unwrap();
            assert_eq!(a.edge_conv, b.edge_conv);
        }
    }

    #[test]
    fn swapping_material_side_flips_face_convexity() {
        let mk = |side| Face {
            id: FaceId(0),
            surface: cylinder(side),
            bounding_edges: vec![EdgeId(0)],
            representative_point: point3(2.0, 0.0, 0.0),
        };
        assert_eq!(
            classify_face(&mk(MaterialSide::Outside)).unwrap(),
            Convexity::Convex
        );
        assert_eq!(
            classify_face(&mk(MaterialSide::Inside)).unwrap(),
            Convexity::Concave
        );
    }
}
