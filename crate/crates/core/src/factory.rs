//! Programmatic fixture models. Every fixture is a deterministic function
//! of its dimensions and passes full validation, so tests never depend on
//! external CAD files.
//!
//! Reconstruction notes for the two worked cases, whose exact dimensions
//! are not recoverable from drawings (topology and counts are what the
//! suite pins):
//!
//! * `CaseA` — a base block carrying three separated protrusions: one
//!   rectangular block boss and two triangular-prism bosses ("the
//!   complementary space of the block and two triangular prisms" is the
//!   void around them). The concave clusters are the three base rims
//!   (4 + 3 + 3 edges), each a closed leaf-free loop wholly made of
//!   division edges. The union of their neighborhoods is 11 faces: the
//!   host top face plus 4 + 3 + 3 protrusion walls. Partition yields 4
//!   components, each convexity-homogeneous, with no diagnostics.
//!
//! * `CaseB` — block with a hexagonal pocket whose floor is two slopes
//!   meeting in a convex gable ridge between opposite corners. The concave
//!   cluster is the 6 slanted floor-rim edges (a closed hexagon) plus the
//!   6 wall-joint verticals, which prune as leaves: 12 edges, 6 leaves,
//!   6-edge loop, one 6-edge boundary whose neighborhood is 8 faces
//!   (6 walls + 2 floor slopes).
//!
//! * `TwoBlockStep` — a smaller block stacked on a larger one. The model
//!   reads either as two blocks or as a block minus the surrounding
//!   step-collar; the extraction keeps both readings available by emitting
//!   the top block as its own convex subgraph bounded by the concave base
//!   rim.
//!
//! A through slot or through step has no closed same-convexity loop (its
//! concave edges dangle at the breached faces and prune away), so those
//! features cannot be separated by boundaries; `Part1Composite` therefore
//! uses a closed slot and a blind corner step, while the standalone `Step`
//! keeps the through form to exercise the diagnostic path.

use thiserror::Error;

use crate::brep::{
    Edge, EdgeCurve, EdgeId, Face, FaceId, MaterialSide, SolidModel, SurfaceGeometry, Vertex,
    VertexId,
};
use crate::geom::{point3, vec3, Point3, UnitVec3, Vec3};
use crate::nbrep::derive_representative_point;

/// Fixture catalog. Dimensioned kinds check positivity and fit; the worked
/// cases and composites use fixed proportions.
#[derive(Debug, Clone, PartialEq)]
pub enum FixtureSpec {
    Cube {
        side: f64,
    },
    Block {
        dims: (f64, f64, f64),
    },
    /// Through step cut along the full depth of the top-right edge.
    Step {
        block: (f64, f64, f64),
        cut: (f64, f64),
    },
    /// Blind corner step: a notch into the top-right edge, closed in y.
    BlindStep {
        block: (f64, f64, f64),
        cut: (f64, f64, f64),
    },
    /// Closed slot: an elongated pocket in the top face.
    Slot {
        block: (f64, f64, f64),
        mouth: (f64, f64),
        depth: f64,
    },
    Pocket {
        block: (f64, f64, f64),
        mouth: (f64, f64),
        depth: f64,
    },
    BlindHole {
        block: (f64, f64, f64),
        radius: f64,
        depth: f64,
    },
    ThroughRectHole {
        block: (f64, f64, f64),
        hole: (f64, f64),
    },
    CylBoss {
        block: (f64, f64, f64),
        radius: f64,
        height: f64,
    },
    /// Through cylindrical hole; the wall is split into two half-cylinder
    /// faces joined by two transitory seam lines.
    CylHole {
        block: (f64, f64, f64),
        radius: f64,
    },
    /// Frustum boss bounded by a cone wall.
    ConeBoss {
        block: (f64, f64, f64),
        base_radius: f64,
        top_radius: f64,
        height: f64,
    },
    /// Obround pocket with tangent plane-to-cylinder wall seams.
    StadiumPocket,
    ChamferedProtrusion,
    TwoBlockStep,
    CaseA,
    CaseB,
    Part1Composite,
    Part2Fixture,
}

impl FixtureSpec {
    /// Stable names used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            FixtureSpec::Cube { .. } => "cube",
            FixtureSpec::Block { .. } => "block",
            FixtureSpec::Step { .. } => "step",
            FixtureSpec::BlindStep { .. } => "blind_step",
            FixtureSpec::Slot { .. } => "slot",
            FixtureSpec::Pocket { .. } => "pocket",
            FixtureSpec::BlindHole { .. } => "blind_hole",
            FixtureSpec::ThroughRectHole { .. } => "through_rect_hole",
            FixtureSpec::CylBoss { .. } => "cyl_boss",
            FixtureSpec::CylHole { .. } => "cyl_hole",
            FixtureSpec::ConeBoss { .. } => "cone_boss",
            FixtureSpec::StadiumPocket => "stadium_pocket",
            FixtureSpec::ChamferedProtrusion => "chamfered_protrusion",
            FixtureSpec::TwoBlockStep => "two_block_step",
            FixtureSpec::CaseA => "case_a",
            FixtureSpec::CaseB => "case_b",
            FixtureSpec::Part1Composite => "part1",
            FixtureSpec::Part2Fixture => "part2",
        }
    }

    /// Every fixture kind with default dimensions, in catalog order.
    pub fn all_defaults() -> Vec<FixtureSpec> {
        vec![
            FixtureSpec::Cube { side: 1.0 },
            FixtureSpec::Block {
                dims: (4.0, 3.0, 2.0),
            },
            FixtureSpec::Step {
                block: (4.0, 3.0, 2.0),
                cut: (2.0, 1.0),
            },
            FixtureSpec::BlindStep {
                block: (6.0, 5.0, 4.0),
                cut: (2.0, 2.0, 1.5),
            },
            FixtureSpec::Slot {
                block: (10.0, 6.0, 4.0),
                mouth: (6.0, 1.6),
                depth: 2.0,
            },
            FixtureSpec::Pocket {
                block: (8.0, 6.0, 4.0),
                mouth: (4.0, 2.0),
                depth: 2.0,
            },
            FixtureSpec::BlindHole {
                block: (6.0, 6.0, 4.0),
                radius: 1.5,
                depth: 2.0,
            },
            FixtureSpec::ThroughRectHole {
                block: (4.0, 4.0, 4.0),
                hole: (2.0, 2.0),
            },
            FixtureSpec::CylBoss {
                block: (6.0, 6.0, 3.0),
                radius: 1.5,
                height: 2.0,
            },
            FixtureSpec::CylHole {
                block: (6.0, 6.0, 3.0),
                radius: 1.5,
            },
            FixtureSpec::ConeBoss {
                block: (8.0, 8.0, 4.0),
                base_radius: 2.0,
                top_radius: 1.0,
                height: 1.5,
            },
            FixtureSpec::StadiumPocket,
            FixtureSpec::ChamferedProtrusion,
            FixtureSpec::TwoBlockStep,
            FixtureSpec::CaseA,
            FixtureSpec::CaseB,
            FixtureSpec::Part1Composite,
            FixtureSpec::Part2Fixture,
        ]
    }

    pub fn by_name(name: &str) -> Option<FixtureSpec> {
        FixtureSpec::all_defaults()
            .into_iter()
            .find(|s| s.name() == name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid fixture dimensions: {0}")]
pub struct InvalidDimensions(pub String);

fn positive(checks: &[(&str, f64)]) -> Result<(), InvalidDimensions> {
    for (name, v) in checks {
        if !v.is_finite() || *v <= 0.0 {
            return Err(InvalidDimensions(format!(
                "{name} must be positive, got {v}"
            )));
        }
    }
    Ok(())
}

fn fits(cond: bool, msg: &str) -> Result<(), InvalidDimensions> {
    if cond {
        Ok(())
    } else {
        Err(InvalidDimensions(msg.to_string()))
    }
}

/// Builds the requested fixture. The returned model passes full validation.
pub fn build_fixture(spec: &FixtureSpec) -> Result<SolidModel, InvalidDimensions> {
    let model = match spec {
        FixtureSpec::Cube { side } => {
            positive(&[("side", *side)])?;
            block_model("cube", (*side, *side, *side))
        }
        FixtureSpec::Block { dims } => {
            positive(&[("x", dims.0), ("y", dims.1), ("z", dims.2)])?;
            block_model("block", *dims)
        }
        FixtureSpec::Step { block, cut } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("cut_x", cut.0),
                ("cut_z", cut.1),
            ])?;
            fits(
                cut.0 < block.0 && cut.1 < block.2,
                "step cut must be smaller than the block",
            )?;
            step_model(*block, *cut)
        }
        FixtureSpec::BlindStep { block, cut } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("cut_x", cut.0),
                ("cut_y", cut.1),
                ("cut_z", cut.2),
            ])?;
            fits(
                cut.0 < block.0 && cut.1 < block.1 && cut.2 < block.2,
                "blind step cut must fit inside the block",
            )?;
            blind_step_model(*block, *cut)
        }
        FixtureSpec::Slot {
            block,
            mouth,
            depth,
        } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("mouth_u", mouth.0),
                ("mouth_v", mouth.1),
                ("depth", *depth),
            ])?;
            fits(
                mouth.0 < block.0 && mouth.1 < block.1 && *depth < block.2,
                "slot must fit inside the block",
            )?;
            pocket_model("slot", *block, *mouth, *depth)
        }
        FixtureSpec::Pocket {
            block,
            mouth,
            depth,
        } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("mouth_u", mouth.0),
                ("mouth_v", mouth.1),
                ("depth", *depth),
            ])?;
            fits(
                mouth.0 < block.0 && mouth.1 < block.1 && *depth < block.2,
                "pocket must fit inside the block",
            )?;
            pocket_model("pocket", *block, *mouth, *depth)
        }
        FixtureSpec::BlindHole {
            block,
            radius,
            depth,
        } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("radius", *radius),
                ("depth", *depth),
            ])?;
            fits(
                2.0 * radius < block.0.min(block.1) && *depth < block.2,
                "hole must fit inside the block",
            )?;
            blind_hole_model(*block, *radius, *depth)
        }
        FixtureSpec::ThroughRectHole { block, hole } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("hole_x", hole.0),
                ("hole_z", hole.1),
            ])?;
            fits(
                hole.0 < block.0 && hole.1 < block.2,
                "hole must fit inside the block",
            )?;
            through_rect_hole_model(*block, *hole)
        }
        FixtureSpec::CylBoss {
            block,
            radius,
            height,
        } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("radius", *radius),
                ("height", *height),
            ])?;
            fits(
                2.0 * radius < block.0.min(block.1),
                "boss must fit on the top face",
            )?;
            cyl_boss_model(*block, *radius, *height)
        }
        FixtureSpec::CylHole { block, radius } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("radius", *radius),
            ])?;
            fits(
                2.0 * radius < block.0.min(block.1),
                "hole must fit inside the block",
            )?;
            cyl_hole_model(*block, *radius)
        }
        FixtureSpec::ConeBoss {
            block,
            base_radius,
            top_radius,
            height,
        } => {
            positive(&[
                ("x", block.0),
                ("y", block.1),
                ("z", block.2),
                ("base_radius", *base_radius),
                ("top_radius", *top_radius),
                ("height", *height),
            ])?;
            fits(
                top_radius < base_radius,
                "frustum must narrow toward its top",
            )?;
            fits(
                2.0 * base_radius < block.0.min(block.1),
                "boss must fit on the top face",
            )?;
            cone_boss_model(*block, *base_radius, *top_radius, *height)
        }
        FixtureSpec::StadiumPocket => stadium_pocket_model(),
        FixtureSpec::ChamferedProtrusion => chamfered_protrusion_model(),
        FixtureSpec::TwoBlockStep => two_block_step_model(),
        FixtureSpec::CaseA => case_a_model(),
        FixtureSpec::CaseB => case_b_model(),
        FixtureSpec::Part1Composite => part1_model(),
        FixtureSpec::Part2Fixture => part2_model(),
    };
    debug_assert!(
        model.validate().is_ok(),
        "fixture must validate: {:?}",
        model.validate()
    );
    Ok(model)
}

// ---------------------------------------------------------------------------
// Builder: fixtures declare geometry with unordered face pairs; the builder
// computes midpoints and tangents and orders each edge's faces so that the
// stored direction keeps the first face on the left.
// ---------------------------------------------------------------------------

enum RawCurve {
    Line,
    /// Counterclockwise around `axis` from the first endpoint to the second.
    Arc {
        center: Point3,
        axis: Vec3,
        radius: f64,
    },
    /// Closed circle; `mid_dir` fixes the stored representative point.
    Circle {
        center: Point3,
        axis: Vec3,
        radius: f64,
        mid_dir: Vec3,
    },
}

struct RawEdge {
    endpoints: Option<(usize, usize)>,
    faces: (usize, usize),
    curve: RawCurve,
}

pub(crate) struct ModelBuilder {
    name: String,
    genus: u32,
    vertices: Vec<Point3>,
    surfaces: Vec<SurfaceGeometry>,
    edges: Vec<RawEdge>,
}

impl ModelBuilder {
    fn new(name: &str, genus: u32) -> Self {
        ModelBuilder {
            name: name.to_string(),
            genus,
            vertices: Vec::new(),
            surfaces: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, x: f64, y: f64, z: f64) -> usize {
        self.vertices.push(point3(x, y, z));
        self.vertices.len() - 1
    }

    /// Plane face; `rep` doubles as the surface's stored point and must be
    /// in the face's interior.
    fn plane(&mut self, rep: Point3, normal: Vec3) -> usize {
        self.surfaces.push(SurfaceGeometry::Plane {
            point: rep,
            outward_normal: UnitVec3::from_normalized(normal).expect("non-zero normal"),
        });
        self.surfaces.len() - 1
    }

    fn cylinder(
        &mut self,
        axis_point: Point3,
        axis_dir: Vec3,
        radius: f64,
        side: MaterialSide,
    ) -> usize {
        self.surfaces.push(SurfaceGeometry::Cylinder {
            axis_point,
            axis_dir: UnitVec3::from_normalized(axis_dir).expect("non-zero axis"),
            radius,
            material_side: side,
        });
        self.surfaces.len() - 1
    }

    fn cone(&mut self, apex: Point3, axis_dir: Vec3, half_angle: f64, side: MaterialSide) -> usize {
        self.surfaces.push(SurfaceGeometry::Cone {
            apex,
            axis_dir: UnitVec3::from_normalized(axis_dir).expect("non-zero axis"),
            half_angle,
            material_side: side,
        });
        self.surfaces.len() - 1
    }

    fn line(&mut self, v1: usize, v2: usize, fa: usize, fb: usize) -> usize {
        self.edges.push(RawEdge {
            endpoints: Some((v1, v2)),
            faces: (fa, fb),
            curve: RawCurve::Line,
        });
        self.edges.len() - 1
    }

    #[allow(clippy::too_many_arguments)]
    fn arc(
        &mut self,
        v1: usize,
        v2: usize,
        center: Point3,
        axis: Vec3,
        radius: f64,
        fa: usize,
        fb: usize,
    ) -> usize {
        self.edges.push(RawEdge {
            endpoints: Some((v1, v2)),
            faces: (fa, fb),
            curve: RawCurve::Arc {
                center,
                axis,
                radius,
            },
        });
        self.edges.len() - 1
    }

    fn circle(
        &mut self,
        center: Point3,
        axis: Vec3,
        radius: f64,
        mid_dir: Vec3,
        fa: usize,
        fb: usize,
    ) -> usize {
        self.edges.push(RawEdge {
            endpoints: None,
            faces: (fa, fb),
            curve: RawCurve::Circle {
                center,
                axis,
                radius,
                mid_dir,
            },
        });
        self.edges.len() - 1
    }

    fn build(self) -> SolidModel {
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &p)| Vertex {
                id: VertexId(i as u32),
                position: p,
            })
            .collect();

        let edges: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, raw)| {
                let (curve, midpoint) = self.realize_curve(raw);
                Edge {
                    id: EdgeId(i as u32),
                    endpoints: raw
                        .endpoints
                        .map(|(a, b)| (VertexId(a as u32), VertexId(b as u32))),
                    curve,
                    adjacent_faces: (FaceId(raw.faces.0 as u32), FaceId(raw.faces.1 as u32)),
                    midpoint,
                }
            })
            .collect();

        let mut bounding: Vec<Vec<EdgeId>> = vec![Vec::new(); self.surfaces.len()];
        for e in &edges {
            for f in e.faces() {
                bounding[f.index()].push(e.id);
            }
        }
        let faces: Vec<Face> = self
            .surfaces
            .into_iter()
            .enumerate()
            .map(|(i, surface)| {
                let bounding_edges = bounding[i].clone();
                let representative_point =
                    derive_representative_point(&surface, &bounding_edges, &edges);
                Face {
                    id: FaceId(i as u32),
                    surface,
                    bounding_edges,
                    representative_point,
                }
            })
            .collect();

        let mut model = SolidModel {
            name: self.name,
            genus: self.genus,
            vertices,
            edges,
            faces,
        };

        // Order each edge's face pair so the declared curve direction keeps
        // the first face on the left: (n_left x t) must point into it.
        let mut swaps = Vec::new();
        for e in &model.edges {
            let t = e.tangent_at_midpoint(&model).expect("edge tangent");
            let left = e.left_face();
            let d = model
                .interior_direction(left, e.midpoint, t)
                .unwrap_or_else(|err| {
                    panic!("fixture edge {}: no interior direction ({err})", e.id)
                });
            let n = model.outward_normal_at(left, e.midpoint).expect("normal");
            let left_test = n.as_vec().cross(t.as_vec()).dot(d.as_vec());
            if left_test < 0.0 {
                swaps.push(e.id);
            }
            // Sanity: the other face must sit on the opposite side.
            let right = e.right_face();
            let d2 = model
                .interior_direction(right, e.midpoint, t)
                .unwrap_or_else(|err| {
                    panic!("fixture edge {}: no interior direction ({err})", e.id)
                });
            let n2 = model.outward_normal_at(right, e.midpoint).expect("normal");
            let right_test = n2.as_vec().cross(t.as_vec()).dot(d2.as_vec());
            assert!(
                left_test * right_test < 0.0,
                "fixture edge {}: faces on the same side (left {left_test}, right {right_test})",
                e.id
            );
        }
        for id in swaps {
            let e = &mut model.edges[id.index()];
            e.adjacent_faces = (e.adjacent_faces.1, e.adjacent_faces.0);
        }

        model
            .validate()
            .unwrap_or_else(|err| panic!("fixture `{}` failed validation: {err}", model.name));
        model
    }

    fn realize_curve(&self, raw: &RawEdge) -> (EdgeCurve, Point3) {
        match &raw.curve {
            RawCurve::Line => {
                let (a, b) = raw.endpoints.expect("line endpoints");
                (
                    EdgeCurve::LineSegment,
                    self.vertices[a].midpoint(self.vertices[b]),
                )
            }
            RawCurve::Arc {
                center,
                axis,
                radius,
            } => {
                let (a, b) = raw.endpoints.expect("arc endpoints");
                let axis_u = UnitVec3::from_normalized(*axis).expect("arc axis");
                let p1 = self.vertices[a];
                let p2 = self.vertices[b];
                let u = (p1 - *center).normalized().expect("arc start off-center");
                let w = axis_u.as_vec().cross(u);
                let d2 = p2 - *center;
                let sweep = d2.dot(w).atan2(d2.dot(u)).rem_euclid(std::f64::consts::TAU);
                let half = sweep / 2.0;
                let mid = *center + (u * half.cos() + w * half.sin()) * *radius;
                (
                    EdgeCurve::CircularArc {
                        center: *center,
                        axis: axis_u,
                        radius: *radius,
                    },
                    mid,
                )
            }
            RawCurve::Circle {
                center,
                axis,
                radius,
                mid_dir,
            } => {
                let axis_u = UnitVec3::from_normalized(*axis).expect("circle axis");
                let radial = *mid_dir - axis_u.as_vec() * mid_dir.dot(axis_u.as_vec());
                let r = radial.normalized().expect("circle mid_dir");
                let mid = *center + r * *radius;
                (
                    EdgeCurve::FullCircle {
                        center: *center,
                        axis: axis_u,
                        radius: *radius,
                    },
                    mid,
                )
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Shared sub-assemblies.
// ---------------------------------------------------------------------------

/// Block face order: bottom, top, front (y=0), back, left (x=0), right.
struct BoxIds {
    f: [usize; 6],
    split_verts: Option<(usize, usize)>,
}

const BOTTOM: usize = 0;
const TOP: usize = 1;
const FRONT: usize = 2;
const BACK: usize = 3;
const LEFT: usize = 4;
const RIGHT: usize = 5;

/// Adds the block shell. `split_top_right` optionally splits the top-right
/// edge (x = X, z = Z) at two y stations for a blind-step notch; the middle
/// segment is left for the notch rim and the two station vertices are
/// returned in `split_verts`. `reps` overrides face representative points
/// (index by the face constants above).
fn add_box(
    b: &mut ModelBuilder,
    dims: (f64, f64, f64),
    split_top_right: Option<(f64, f64)>,
    reps: &[(usize, Point3)],
) -> BoxIds {
    let (x, y, z) = dims;
    let v = [
        b.vertex(0.0, 0.0, 0.0),
        b.vertex(x, 0.0, 0.0),
        b.vertex(x, y, 0.0),
        b.vertex(0.0, y, 0.0),
        b.vertex(0.0, 0.0, z),
        b.vertex(x, 0.0, z),
        b.vertex(x, y, z),
        b.vertex(0.0, y, z),
    ];
    let rep = |face: usize, default: Point3| -> Point3 {
        reps.iter()
            .find(|(f, _)| *f == face)
            .map(|(_, p)| *p)
            .unwrap_or(default)
    };
    let f = [
        b.plane(
            rep(BOTTOM, point3(x / 2.0, y / 2.0, 0.0)),
            vec3(0.0, 0.0, -1.0),
        ),
        b.plane(rep(TOP, point3(x / 2.0, y / 2.0, z)), vec3(0.0, 0.0, 1.0)),
        b.plane(
            rep(FRONT, point3(x / 2.0, 0.0, z / 2.0)),
            vec3(0.0, -1.0, 0.0),
        ),
        b.plane(rep(BACK, point3(x / 2.0, y, z / 2.0)), vec3(0.0, 1.0, 0.0)),
        b.plane(
            rep(LEFT, point3(0.0, y / 2.0, z / 2.0)),
            vec3(-1.0, 0.0, 0.0),
        ),
        b.plane(rep(RIGHT, point3(x, y / 2.0, z / 2.0)), vec3(1.0, 0.0, 0.0)),
    ];
    // Bottom rim.
    b.line(v[0], v[1], f[BOTTOM], f[FRONT]);
    b.line(v[1], v[2], f[BOTTOM], f[RIGHT]);
    b.line(v[2], v[3], f[BOTTOM], f[BACK]);
    b.line(v[3], v[0], f[BOTTOM], f[LEFT]);
    // Top rim (the top-right edge v5-v6 may be split).
    b.line(v[4], v[5], f[TOP], f[FRONT]);
    let split_verts = match split_top_right {
        None => {
            b.line(v[5], v[6], f[TOP], f[RIGHT]);
            None
        }
        Some((y1, y2)) => {
            let c = b.vertex(x, y1, z);
            let d = b.vertex(x, y2, z);
            b.line(v[5], c, f[TOP], f[RIGHT]);
            b.line(d, v[6], f[TOP], f[RIGHT]);
            Some((c, d))
        }
    };
    b.line(v[6], v[7], f[TOP], f[BACK]);
    b.line(v[7], v[4], f[TOP], f[LEFT]);
    // Verticals.
    b.line(v[0], v[4], f[FRONT], f[LEFT]);
    b.line(v[1], v[5], f[FRONT], f[RIGHT]);
    b.line(v[2], v[6], f[BACK], f[RIGHT]);
    b.line(v[3], v[7], f[BACK], f[LEFT]);

    BoxIds { f, split_verts }
}

/// Rectangular pocket sunk into a planar host face. The frame is the mouth
/// rectangle: `origin` at one corner on the host surface, sides `u_dir*lu`
/// and `v_dir*lv`, `inward` pointing into the material.
/// Faces added in order: wall_u0, wall_u1, wall_v0, wall_v1, floor.
struct PocketIds {
    walls: [usize; 4],
    floor: usize,
    mouth_edges: [usize; 4],
    floor_edges: [usize; 4],
    floor_verts: [usize; 4],
}

#[allow(clippy::too_many_arguments)]
fn add_rect_pocket(
    b: &mut ModelBuilder,
    host: usize,
    origin: Point3,
    u_dir: Vec3,
    v_dir: Vec3,
    inward: Vec3,
    lu: f64,
    lv: f64,
    depth: f64,
) -> PocketIds {
    let uu = u_dir * lu;
    let vv = v_dir * lv;
    let dd = inward * depth;
    let m00 = origin;
    let m10 = origin + uu;
    let m11 = origin + uu + vv;
    let m01 = origin + vv;
    let center = origin + uu * 0.5 + vv * 0.5;

    let vm00 = b.vertex(m00.x, m00.y, m00.z);
    let vm10 = b.vertex(m10.x, m10.y, m10.z);
    let vm11 = b.vertex(m11.x, m11.y, m11.z);
    let vm01 = b.vertex(m01.x, m01.y, m01.z);
    let vf00 = b.vertex(m00.x + dd.x, m00.y + dd.y, m00.z + dd.z);
    let vf10 = b.vertex(m10.x + dd.x, m10.y + dd.y, m10.z + dd.z);
    let vf11 = b.vertex(m11.x + dd.x, m11.y + dd.y, m11.z + dd.z);
    let vf01 = b.vertex(m01.x + dd.x, m01.y + dd.y, m01.z + dd.z);

    // Wall normals point into the pocket void.
    let wall_u0 = b.plane(origin + vv * 0.5 + dd * 0.5, u_dir);
    let wall_u1 = b.plane(origin + uu + vv * 0.5 + dd * 0.5, -u_dir);
    let wall_v0 = b.plane(origin + uu * 0.5 + dd * 0.5, v_dir);
    let wall_v1 = b.plane(origin + uu * 0.5 + vv + dd * 0.5, -v_dir);
    let floor = b.plane(center + dd, -inward);

    let mouth_edges = [
        b.line(vm00, vm10, host, wall_v0),
        b.line(vm10, vm11, host, wall_u1),
        b.line(vm11, vm01, host, wall_v1),
        b.line(vm01, vm00, host, wall_u0),
    ];
    b.line(vm00, vf00, wall_u0, wall_v0);
    b.line(vm10, vf10, wall_v0, wall_u1);
    b.line(vm11, vf11, wall_u1, wall_v1);
    b.line(vm01, vf01, wall_v1, wall_u0);
    let floor_edges = [
        b.line(vf00, vf10, floor, wall_v0),
        b.line(vf10, vf11, floor, wall_u1),
        b.line(vf11, vf01, floor, wall_v1),
        b.line(vf01, vf00, floor, wall_u0),
    ];

    PocketIds {
        walls: [wall_u0, wall_u1, wall_v0, wall_v1],
        floor,
        mouth_edges,
        floor_edges,
        floor_verts: [vf00, vf10, vf11, vf01],
    }
}

/// Rectangular boss standing on a planar host face; mirror of the pocket.
/// Faces added in order: wall_u0, wall_u1, wall_v0, wall_v1, cap.
struct BossIds {
    walls: [usize; 4],
    cap: usize,
    base_edges: [usize; 4],
}

#[allow(clippy::too_many_arguments)]
fn add_rect_boss(
    b: &mut ModelBuilder,
    host: usize,
    origin: Point3,
    u_dir: Vec3,
    v_dir: Vec3,
    outward: Vec3,
    lu: f64,
    lv: f64,
    height: f64,
) -> BossIds {
    let uu = u_dir * lu;
    let vv = v_dir * lv;
    let hh = outward * height;
    let b00 = origin;
    let b10 = origin + uu;
    let b11 = origin + uu + vv;
    let b01 = origin + vv;

    let vb00 = b.vertex(b00.x, b00.y, b00.z);
    let vb10 = b.vertex(b10.x, b10.y, b10.z);
    let vb11 = b.vertex(b11.x, b11.y, b11.z);
    let vb01 = b.vertex(b01.x, b01.y, b01.z);
    let vt00 = b.vertex(b00.x + hh.x, b00.y + hh.y, b00.z + hh.z);
    let vt10 = b.vertex(b10.x + hh.x, b10.y + hh.y, b10.z + hh.z);
    let vt11 = b.vertex(b11.x + hh.x, b11.y + hh.y, b11.z + hh.z);
    let vt01 = b.vertex(b01.x + hh.x, b01.y + hh.y, b01.z + hh.z);

    // Wall normals point away from the boss material.
    let wall_u0 = b.plane(origin + vv * 0.5 + hh * 0.5, -u_dir);
    let wall_u1 = b.plane(origin + uu + vv * 0.5 + hh * 0.5, u_dir);
    let wall_v0 = b.plane(origin + uu * 0.5 + hh * 0.5, -v_dir);
    let wall_v1 = b.plane(origin + uu * 0.5 + vv + hh * 0.5, v_dir);
    let cap = b.plane(origin + uu * 0.5 + vv * 0.5 + hh, outward);

    let base_edges = [
        b.line(vb00, vb10, host, wall_v0),
        b.line(vb10, vb11, host, wall_u1),
        b.line(vb11, vb01, host, wall_v1),
        b.line(vb01, vb00, host, wall_u0),
    ];
    b.line(vb00, vt00, wall_u0, wall_v0);
    b.line(vb10, vt10, wall_v0, wall_u1);
    b.line(vb11, vt11, wall_u1, wall_v1);
    b.line(vb01, vt01, wall_v1, wall_u0);
    b.line(vt00, vt10, cap, wall_v0);
    b.line(vt10, vt11, cap, wall_u1);
    b.line(vt11, vt01, cap, wall_v1);
    b.line(vt01, vt00, cap, wall_u0);

    BossIds {
        walls: [wall_u0, wall_u1, wall_v0, wall_v1],
        cap,
        base_edges,
    }
}

/// Rectangular tunnel between two parallel planar host faces.
/// Faces: wall_u0, wall_u1, wall_v0, wall_v1 (normals into the tunnel).
struct TunnelIds {
    walls: [usize; 4],
    near_rim: [usize; 4],
    far_rim: [usize; 4],
    lengthwise: [usize; 4],
}

#[allow(clippy::too_many_arguments)]
fn add_rect_tunnel(
    b: &mut ModelBuilder,
    host_near: usize,
    host_far: usize,
    origin: Point3,
    u_dir: Vec3,
    v_dir: Vec3,
    through: Vec3,
    lu: f64,
    lv: f64,
    length: f64,
) -> TunnelIds {
    let uu = u_dir * lu;
    let vv = v_dir * lv;
    let tt = through * length;
    let n00 = origin;
    let n10 = origin + uu;
    let n11 = origin + uu + vv;
    let n01 = origin + vv;

    let vn00 = b.vertex(n00.x, n00.y, n00.z);
    let vn10 = b.vertex(n10.x, n10.y, n10.z);
    let vn11 = b.vertex(n11.x, n11.y, n11.z);
    let vn01 = b.vertex(n01.x, n01.y, n01.z);
    let vf00 = b.vertex(n00.x + tt.x, n00.y + tt.y, n00.z + tt.z);
    let vf10 = b.vertex(n10.x + tt.x, n10.y + tt.y, n10.z + tt.z);
    let vf11 = b.vertex(n11.x + tt.x, n11.y + tt.y, n11.z + tt.z);
    let vf01 = b.vertex(n01.x + tt.x, n01.y + tt.y, n01.z + tt.z);

    let wall_u0 = b.plane(origin + vv * 0.5 + tt * 0.5, u_dir);
    let wall_u1 = b.plane(origin + uu + vv * 0.5 + tt * 0.5, -u_dir);
    let wall_v0 = b.plane(origin + uu * 0.5 + tt * 0.5, v_dir);
    let wall_v1 = b.plane(origin + uu * 0.5 + vv + tt * 0.5, -v_dir);

    let near_rim = [
        b.line(vn00, vn10, host_near, wall_v0),
        b.line(vn10, vn11, host_near, wall_u1),
        b.line(vn11, vn01, host_near, wall_v1),
        b.line(vn01, vn00, host_near, wall_u0),
    ];
    let far_rim = [
        b.line(vf00, vf10, host_far, wall_v0),
        b.line(vf10, vf11, host_far, wall_u1),
        b.line(vf11, vf01, host_far, wall_v1),
        b.line(vf01, vf00, host_far, wall_u0),
    ];
    let lengthwise = [
        b.line(vn00, vf00, wall_u0, wall_v0),
        b.line(vn10, vf10, wall_v0, wall_u1),
        b.line(vn11, vf11, wall_u1, wall_v1),
        b.line(vn01, vf01, wall_v1, wall_u0),
    ];

    TunnelIds {
        walls: [wall_u0, wall_u1, wall_v0, wall_v1],
        near_rim,
        far_rim,
        lengthwise,
    }
}

/// Cylindrical boss on a planar host face.
struct CylBossIds {
    wall: usize,
    cap: usize,
    base_circle: usize,
    top_circle: usize,
}

fn add_cyl_boss(
    b: &mut ModelBuilder,
    host: usize,
    base_center: Point3,
    outward: Vec3,
    radius: f64,
    height: f64,
) -> CylBossIds {
    let top_center = base_center + outward * height;
    let wall = b.cylinder(base_center, outward, radius, MaterialSide::Outside);
    let cap = b.plane(top_center, outward);
    let mid_dir = outward.any_perpendicular();
    let base_circle = b.circle(base_center, outward, radius, mid_dir, host, wall);
    let top_circle = b.circle(top_center, outward, radius, mid_dir, wall, cap);
    CylBossIds {
        wall,
        cap,
        base_circle,
        top_circle,
    }
}

/// Blind cylindrical hole sunk into a planar host face.
struct BlindHoleIds {
    wall: usize,
    floor: usize,
    mouth_circle: usize,
    floor_circle: usize,
}

fn add_blind_cyl_hole(
    b: &mut ModelBuilder,
    host: usize,
    mouth_center: Point3,
    inward: Vec3,
    radius: f64,
    depth: f64,
) -> BlindHoleIds {
    let floor_center = mouth_center + inward * depth;
    let wall = b.cylinder(mouth_center, inward, radius, MaterialSide::Inside);
    let floor = b.plane(floor_center, -inward);
    let mid_dir = inward.any_perpendicular();
    let mouth_circle = b.circle(mouth_center, inward, radius, mid_dir, host, wall);
    let floor_circle = b.circle(floor_center, inward, radius, mid_dir, wall, floor);
    BlindHoleIds {
        wall,
        floor,
        mouth_circle,
        floor_circle,
    }
}

/// Through cylindrical hole between two parallel planar host faces. The
/// wall is split into two half-cylinders along `split_dir` so both faces
/// are disks; the two seam lines are tangent-continuous (transitory).
struct CylThroughIds {
    wall_a: usize,
    wall_b: usize,
}

#[allow(clippy::too_many_arguments)]
fn add_cyl_through_hole(
    b: &mut ModelBuilder,
    host_near: usize,
    host_far: usize,
    near_center: Point3,
    through: Vec3,
    radius: f64,
    length: f64,
    split_dir: Vec3,
) -> CylThroughIds {
    let far_center = near_center + through * length;
    let s = split_dir.normalized().expect("split dir");
    let pn1 = near_center + s * radius;
    let pn2 = near_center - s * radius;
    let pf1 = far_center + s * radius;
    let pf2 = far_center - s * radius;

    let vn1 = b.vertex(pn1.x, pn1.y, pn1.z);
    let vn2 = b.vertex(pn2.x, pn2.y, pn2.z);
    let vf1 = b.vertex(pf1.x, pf1.y, pf1.z);
    let vf2 = b.vertex(pf2.x, pf2.y, pf2.z);

    let wall_a = b.cylinder(near_center, through, radius, MaterialSide::Inside);
    let wall_b = b.cylinder(near_center, through, radius, MaterialSide::Inside);

    // Half A spans the counterclockwise sweep from +s to -s around
    // `through`; half B the complement.
    b.arc(vn1, vn2, near_center, through, radius, host_near, wall_a);
    b.arc(vn2, vn1, near_center, through, radius, host_near, wall_b);
    b.arc(vf1, vf2, far_center, through, radius, host_far, wall_a);
    b.arc(vf2, vf1, far_center, through, radius, host_far, wall_b);
    b.line(vn1, vf1, wall_a, wall_b);
    b.line(vn2, vf2, wall_a, wall_b);

    CylThroughIds { wall_a, wall_b }
}

// ---------------------------------------------------------------------------
// Fixture constructors.
// ---------------------------------------------------------------------------

fn block_model(name: &str, dims: (f64, f64, f64)) -> SolidModel {
    let mut b = ModelBuilder::new(name, 0);
    add_box(&mut b, dims, None, &[]);
    b.build()
}

/// Stepped block: the region x > x1, z > z1 removed across the full depth.
fn step_model(block: (f64, f64, f64), cut: (f64, f64)) -> SolidModel {
    let (x, y, z) = block;
    let x1 = x - cut.0;
    let z1 = z - cut.1;
    let mut b = ModelBuilder::new("step", 0);

    let v000 = b.vertex(0.0, 0.0, 0.0);
    let v100 = b.vertex(x, 0.0, 0.0);
    let v110 = b.vertex(x, y, 0.0);
    let v010 = b.vertex(0.0, y, 0.0);
    let v00z = b.vertex(0.0, 0.0, z);
    let v01z = b.vertex(0.0, y, z);
    let t0 = b.vertex(x1, 0.0, z); // riser top, front
    let t1 = b.vertex(x1, y, z);
    let r0 = b.vertex(x1, 0.0, z1); // riser bottom / tread left, front
    let r1 = b.vertex(x1, y, z1);
    let s0 = b.vertex(x, 0.0, z1); // tread right, front
    let s1 = b.vertex(x, y, z1);

    let bottom = b.plane(point3(x / 2.0, y / 2.0, 0.0), vec3(0.0, 0.0, -1.0));
    let top = b.plane(point3(x1 / 2.0, y / 2.0, z), vec3(0.0, 0.0, 1.0));
    let front = b.plane(point3(x1 / 2.0, 0.0, z1 / 2.0), vec3(0.0, -1.0, 0.0));
    let back = b.plane(point3(x1 / 2.0, y, z1 / 2.0), vec3(0.0, 1.0, 0.0));
    let left = b.plane(point3(0.0, y / 2.0, z / 2.0), vec3(-1.0, 0.0, 0.0));
    let right = b.plane(point3(x, y / 2.0, z1 / 2.0), vec3(1.0, 0.0, 0.0));
    let riser = b.plane(point3(x1, y / 2.0, (z1 + z) / 2.0), vec3(1.0, 0.0, 0.0));
    let tread = b.plane(point3((x1 + x) / 2.0, y / 2.0, z1), vec3(0.0, 0.0, 1.0));

    // Bottom rim.
    b.line(v000, v100, bottom, front);
    b.line(v100, v110, bottom, right);
    b.line(v110, v010, bottom, back);
    b.line(v010, v000, bottom, left);
    // Lengthwise edges.
    b.line(v00z, v01z, top, left);
    b.line(t0, t1, top, riser);
    b.line(r0, r1, riser, tread); // the concave step edge
    b.line(s0, s1, tread, right);
    // Front profile.
    b.line(v000, v00z, front, left);
    b.line(v00z, t0, front, top);
    b.line(t0, r0, front, riser);
    b.line(r0, s0, front, tread);
    b.line(s0, v100, front, right);
    // Back profile.
    b.line(v010, v01z, back, left);
    b.line(v01z, t1, back, top);
    b.line(t1, r1, back, riser);
    b.line(r1, s1, back, tread);
    b.line(s1, v110, back, right);

    b.build()
}

struct BlindStepIds {
    riser: usize,
    tread: usize,
    end_walls: [usize; 2],
    rim_edges: [usize; 6],
}

/// Notch into the top-right edge: removes x > x1, z > z1 for y in (y1, y2).
/// The box must have been created with `split_top_right: Some((y1, y2))`,
/// whose station vertices are passed as `(vc, vd)`.
#[allow(clippy::too_many_arguments)]
fn add_blind_step(
    b: &mut ModelBuilder,
    f_top: usize,
    f_right: usize,
    split_verts: (usize, usize),
    dims: (f64, f64, f64),
    x1: f64,
    y1: f64,
    y2: f64,
    z1: f64,
) -> BlindStepIds {
    let (x, _, z) = dims;
    let (vc, vd) = split_verts;
    let va = b.vertex(x1, y1, z);
    let vb = b.vertex(x1, y2, z);
    let ve = b.vertex(x, y1, z1);
    let vf = b.vertex(x, y2, z1);
    let vg = b.vertex(x1, y1, z1);
    let vh = b.vertex(x1, y2, z1);

    let ym = (y1 + y2) / 2.0;
    let riser = b.plane(point3(x1, ym, (z1 + z) / 2.0), vec3(1.0, 0.0, 0.0));
    let tread = b.plane(point3((x1 + x) / 2.0, ym, z1), vec3(0.0, 0.0, 1.0));
    let ew1 = b.plane(
        point3((x1 + x) / 2.0, y1, (z1 + z) / 2.0),
        vec3(0.0, 1.0, 0.0),
    );
    let ew2 = b.plane(
        point3((x1 + x) / 2.0, y2, (z1 + z) / 2.0),
        vec3(0.0, -1.0, 0.0),
    );

    let rim_edges = [
        b.line(va, vb, riser, f_top),
        b.line(va, vc, ew1, f_top),
        b.line(vb, vd, ew2, f_top),
        b.line(vc, ve, ew1, f_right),
        b.line(vd, vf, ew2, f_right),
        b.line(ve, vf, tread, f_right),
    ];
    b.line(vg, vh, tread, riser);
    b.line(vg, ve, tread, ew1);
    b.line(vh, vf, tread, ew2);
    b.line(va, vg, riser, ew1);
    b.line(vb, vh, riser, ew2);

    BlindStepIds {
        riser,
        tread,
        end_walls: [ew1, ew2],
        rim_edges,
    }
}

fn blind_step_model(block: (f64, f64, f64), cut: (f64, f64, f64)) -> SolidModel {
    build_blind_step_fixture(block, cut).0
}

fn build_blind_step_fixture(
    block: (f64, f64, f64),
    cut: (f64, f64, f64),
) -> (SolidModel, BlindStepLabels) {
    let (x, y, z) = block;
    let (cx, cy, cz) = cut;
    let x1 = x - cx;
    let y1 = (y - cy) / 2.0;
    let y2 = y1 + cy;
    let z1 = z - cz;
    let mut b = ModelBuilder::new("blind_step", 0);
    let shell = add_box(
        &mut b,
        block,
        Some((y1, y2)),
        &[
            (TOP, point3(x1 / 2.0, y / 2.0, z)),
            (RIGHT, point3(x, y / 2.0, z1 / 2.0)),
        ],
    );
    let split = shell.split_verts.expect("box built with split");
    let ids = add_blind_step(
        &mut b,
        shell.f[TOP],
        shell.f[RIGHT],
        split,
        block,
        x1,
        y1,
        y2,
        z1,
    );
    let labels = BlindStepLabels {
        mouth_rim: ids.rim_edges.map(|e| EdgeId(e as u32)),
        faces: [
            FaceId(ids.riser as u32),
            FaceId(ids.tread as u32),
            FaceId(ids.end_walls[0] as u32),
            FaceId(ids.end_walls[1] as u32),
        ],
    };
    (b.build(), labels)
}

fn pocket_model(name: &str, block: (f64, f64, f64), mouth: (f64, f64), depth: f64) -> SolidModel {
    build_pocket(name, block, mouth, depth).0
}

fn build_pocket(
    name: &str,
    block: (f64, f64, f64),
    mouth: (f64, f64),
    depth: f64,
) -> (SolidModel, PocketLabels) {
    let (x, y, z) = block;
    let (mu, mv) = mouth;
    let ox = (x - mu) / 2.0;
    let oy = (y - mv) / 2.0;
    let mut b = ModelBuilder::new(name, 0);
    let shell = add_box(&mut b, block, None, &[(TOP, point3(x / 2.0, oy / 2.0, z))]);
    let ids = add_rect_pocket(
        &mut b,
        shell.f[TOP],
        point3(ox, oy, z),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 1.0, 0.0),
        vec3(0.0, 0.0, -1.0),
        mu,
        mv,
        depth,
    );
    let eid = |i: usize| EdgeId(i as u32);
    let labels = PocketLabels {
        mouth_rim: ids.mouth_edges.map(eid),
        floor_rim: ids.floor_edges.map(eid),
        walls: ids.walls.map(|f| FaceId(f as u32)),
        floor: FaceId(ids.floor as u32),
        floor_corner: VertexId(ids.floor_verts[0] as u32),
    };
    (b.build(), labels)
}

fn blind_hole_model(block: (f64, f64, f64), radius: f64, depth: f64) -> SolidModel {
    build_blind_hole(block, radius, depth).0
}

fn build_blind_hole(
    block: (f64, f64, f64),
    radius: f64,
    depth: f64,
) -> (SolidModel, BlindHoleLabels) {
    let (x, y, z) = block;
    let mut b = ModelBuilder::new("blind_hole", 0);
    let rep_y = (y / 2.0 - radius) / 2.0;
    let shell = add_box(&mut b, block, None, &[(TOP, point3(x / 2.0, rep_y, z))]);
    let ids = add_blind_cyl_hole(
        &mut b,
        shell.f[TOP],
        point3(x / 2.0, y / 2.0, z),
        vec3(0.0, 0.0, -1.0),
        radius,
        depth,
    );
    let labels = BlindHoleLabels {
        wall: FaceId(ids.wall as u32),
        floor: FaceId(ids.floor as u32),
        mouth_circle: EdgeId(ids.mouth_circle as u32),
        floor_circle: EdgeId(ids.floor_circle as u32),
    };
    (b.build(), labels)
}

fn through_rect_hole_model(block: (f64, f64, f64), hole: (f64, f64)) -> SolidModel {
    build_through_rect_hole(block, hole).0
}

fn build_through_rect_hole(
    block: (f64, f64, f64),
    hole: (f64, f64),
) -> (SolidModel, ThroughRectHoleLabels) {
    let (x, y, z) = block;
    let (hx, hz) = hole;
    let ox = (x - hx) / 2.0;
    let oz = (z - hz) / 2.0;
    let mut b = ModelBuilder::new("through_rect_hole", 1);
    let shell = add_box(
        &mut b,
        block,
        None,
        &[
            (FRONT, point3(x / 2.0, 0.0, oz / 2.0)),
            (BACK, point3(x / 2.0, y, oz / 2.0)),
        ],
    );
    // Tunnel along +y from the front face to the back face.
    let ids = add_rect_tunnel(
        &mut b,
        shell.f[FRONT],
        shell.f[BACK],
        point3(ox, 0.0, oz),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 0.0, 1.0),
        vec3(0.0, 1.0, 0.0),
        hx,
        hz,
        y,
    );
    let eid = |i: usize| EdgeId(i as u32);
    let labels = ThroughRectHoleLabels {
        hole_walls: ids.walls.map(|f| FaceId(f as u32)),
        front_rim: ids.near_rim.map(eid),
        back_rim: ids.far_rim.map(eid),
        lengthwise: ids.lengthwise.map(eid),
    };
    (b.build(), labels)
}

fn cyl_boss_model(block: (f64, f64, f64), radius: f64, height: f64) -> SolidModel {
    build_cyl_boss(block, radius, height).0
}

fn build_cyl_boss(block: (f64, f64, f64), radius: f64, height: f64) -> (SolidModel, CylBossLabels) {
    let (x, y, z) = block;
    let mut b = ModelBuilder::new("cyl_boss", 0);
    let rep_y = (y / 2.0 - radius) / 2.0;
    let shell = add_box(&mut b, block, None, &[(TOP, point3(x / 2.0, rep_y, z))]);
    let ids = add_cyl_boss(
        &mut b,
        shell.f[TOP],
        point3(x / 2.0, y / 2.0, z),
        vec3(0.0, 0.0, 1.0),
        radius,
        height,
    );
    let labels = CylBossLabels {
        wall: FaceId(ids.wall as u32),
        cap: FaceId(ids.cap as u32),
        base_circle: EdgeId(ids.base_circle as u32),
        top_circle: EdgeId(ids.top_circle as u32),
    };
    (b.build(), labels)
}

fn cyl_hole_model(block: (f64, f64, f64), radius: f64) -> SolidModel {
    build_cyl_hole(block, radius).0
}

fn build_cyl_hole(block: (f64, f64, f64), radius: f64) -> (SolidModel, CylHoleLabels) {
    let (x, y, z) = block;
    let mut b = ModelBuilder::new("cyl_hole", 1);
    let rep_y = (y / 2.0 - radius) / 2.0;
    let shell = add_box(
        &mut b,
        block,
        None,
        &[
            (TOP, point3(x / 2.0, rep_y, z)),
            (BOTTOM, point3(x / 2.0, rep_y, 0.0)),
        ],
    );
    let ids = add_cyl_through_hole(
        &mut b,
        shell.f[TOP],
        shell.f[BOTTOM],
        point3(x / 2.0, y / 2.0, z),
        vec3(0.0, 0.0, -1.0),
        radius,
        z,
        vec3(1.0, 0.0, 0.0),
    );
    let labels = CylHoleLabels {
        walls: [FaceId(ids.wall_a as u32), FaceId(ids.wall_b as u32)],
    };
    (b.build(), labels)
}

fn cone_boss_model(block: (f64, f64, f64), r1: f64, r2: f64, height: f64) -> SolidModel {
    let (x, y, z) = block;
    let cx = x / 2.0;
    let cy = y / 2.0;
    // The cone opens downward from an apex above the cap.
    let apex_z = z + height * r1 / (r1 - r2);
    let half_angle = (r1 / (apex_z - z)).atan();
    let mut b = ModelBuilder::new("cone_boss", 0);
    let rep_y = (y / 2.0 - r1) / 2.0;
    let shell = add_box(&mut b, block, None, &[(TOP, point3(cx, rep_y, z))]);
    let wall = b.cone(
        point3(cx, cy, apex_z),
        vec3(0.0, 0.0, -1.0),
        half_angle,
        MaterialSide::Outside,
    );
    let cap = b.plane(point3(cx, cy, z + height), vec3(0.0, 0.0, 1.0));
    b.circle(
        point3(cx, cy, z),
        vec3(0.0, 0.0, 1.0),
        r1,
        vec3(1.0, 0.0, 0.0),
        shell.f[TOP],
        wall,
    );
    b.circle(
        point3(cx, cy, z + height),
        vec3(0.0, 0.0, 1.0),
        r2,
        vec3(1.0, 0.0, 0.0),
        wall,
        cap,
    );
    b.build()
}

/// Block with a mitred-chamfer protrusion: 15 faces. Face ids: block 0-5,
/// walls 6-9 (south, east, north, west), chamfers 10-13 (south, east,
/// north, west), cap 14.
fn chamfered_protrusion_model() -> SolidModel {
    let block = (10.0, 8.0, 4.0);
    let (x0, x1, y0, y1) = (3.0, 7.0, 3.0, 6.0);
    let wall_h = 1.4;
    let ch = 0.6; // 45-degree chamfer: horizontal inset equals rise
    let z = block.2;
    let zh = z + wall_h;
    let zt = zh + ch;

    let mut b = ModelBuilder::new("chamfered_protrusion", 0);
    let shell = add_box(&mut b, block, None, &[(TOP, point3(1.5, 1.5, z))]);
    let top = shell.f[TOP];

    let bsw = b.vertex(x0, y0, z);
    let bse = b.vertex(x1, y0, z);
    let bne = b.vertex(x1, y1, z);
    let bnw = b.vertex(x0, y1, z);
    let wsw = b.vertex(x0, y0, zh);
    let wse = b.vertex(x1, y0, zh);
    let wne = b.vertex(x1, y1, zh);
    let wnw = b.vertex(x0, y1, zh);
    let csw = b.vertex(x0 + ch, y0 + ch, zt);
    let cse = b.vertex(x1 - ch, y0 + ch, zt);
    let cne = b.vertex(x1 - ch, y1 - ch, zt);
    let cnw = b.vertex(x0 + ch, y1 - ch, zt);

    let xm = (x0 + x1) / 2.0;
    let ym = (y0 + y1) / 2.0;
    let zwm = (z + zh) / 2.0;
    let wall_s = b.plane(point3(xm, y0, zwm), vec3(0.0, -1.0, 0.0));
    let wall_e = b.plane(point3(x1, ym, zwm), vec3(1.0, 0.0, 0.0));
    let wall_n = b.plane(point3(xm, y1, zwm), vec3(0.0, 1.0, 0.0));
    let wall_w = b.plane(point3(x0, ym, zwm), vec3(-1.0, 0.0, 0.0));
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    let zcm = (zh + zt) / 2.0;
    let half = ch / 2.0;
    let chamfer_s = b.plane(point3(xm, y0 + half, zcm), vec3(0.0, -inv, inv));
    let chamfer_e = b.plane(point3(x1 - half, ym, zcm), vec3(inv, 0.0, inv));
    let chamfer_n = b.plane(point3(xm, y1 - half, zcm), vec3(0.0, inv, inv));
    let chamfer_w = b.plane(point3(x0 + half, ym, zcm), vec3(-inv, 0.0, inv));
    let cap = b.plane(point3(xm, ym, zt), vec3(0.0, 0.0, 1.0));

    // Base rim.
    b.line(bsw, bse, top, wall_s);
    b.line(bse, bne, top, wall_e);
    b.line(bne, bnw, top, wall_n);
    b.line(bnw, bsw, top, wall_w);
    // Wall verticals.
    b.line(bsw, wsw, wall_s, wall_w);
    b.line(bse, wse, wall_s, wall_e);
    b.line(bne, wne, wall_e, wall_n);
    b.line(bnw, wnw, wall_n, wall_w);
    // Wall-to-chamfer rims.
    b.line(wsw, wse, wall_s, chamfer_s);
    b.line(wse, wne, wall_e, chamfer_e);
    b.line(wne, wnw, wall_n, chamfer_n);
    b.line(wnw, wsw, wall_w, chamfer_w);
    // Mitre edges between adjacent chamfers.
    b.line(wsw, csw, chamfer_s, chamfer_w);
    b.line(wse, cse, chamfer_s, chamfer_e);
    b.line(wne, cne, chamfer_e, chamfer_n);
    b.line(wnw, cnw, chamfer_n, chamfer_w);
    // Cap rim.
    b.line(csw, cse, cap, chamfer_s);
    b.line(cse, cne, cap, chamfer_e);
    b.line(cne, cnw, cap, chamfer_n);
    b.line(cnw, csw, cap, chamfer_w);

    b.build()
}

/// A smaller block stacked centrally on a larger one (11 faces).
fn two_block_step_model() -> SolidModel {
    let base = (10.0, 8.0, 3.0);
    let mut b = ModelBuilder::new("two_block_step", 0);
    let shell = add_box(&mut b, base, None, &[(TOP, point3(5.0, 1.0, base.2))]);
    add_rect_boss(
        &mut b,
        shell.f[TOP],
        point3(2.0, 2.0, base.2),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 1.0, 0.0),
        vec3(0.0, 0.0, 1.0),
        6.0,
        4.0,
        3.0,
    );
    b.build()
}

pub struct CaseALabels {
    /// Base-rim edges of the block boss and the two prism bosses.
    pub block_rim: [EdgeId; 4],
    pub prism_rims: [[EdgeId; 3]; 2],
    pub host_top: FaceId,
    pub boss_faces: Vec<FaceId>,
}

/// Plate with one block boss and two triangular-prism bosses; see module
/// docs.
fn case_a_model() -> SolidModel {
    build_case_a().0
}

pub fn case_a_labels() -> CaseALabels {
    build_case_a().1
}

fn build_case_a() -> (SolidModel, CaseALabels) {
    let block = (14.0, 10.0, 4.0);
    let z = block.2;
    let mut b = ModelBuilder::new("case_a", 0);
    let shell = add_box(&mut b, block, None, &[(TOP, point3(3.0, 8.5, z))]);
    let top = shell.f[TOP];

    let boss = add_rect_boss(
        &mut b,
        top,
        point3(2.0, 3.0, z),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 1.0, 0.0),
        vec3(0.0, 0.0, 1.0),
        4.0,
        3.0,
        2.0,
    );

    // Two triangular-prism bosses (counterclockwise plan triangles).
    let mut prism_rims = Vec::new();
    let mut prism_faces = Vec::new();
    for tri in [
        [(8.0, 2.5), (11.0, 2.5), (9.5, 5.0)],
        [(8.5, 6.5), (12.0, 6.5), (10.25, 8.8)],
    ] {
        let height = 2.0;
        let base: Vec<usize> = tri.iter().map(|&(px, py)| b.vertex(px, py, z)).collect();
        let top_v: Vec<usize> = tri
            .iter()
            .map(|&(px, py)| b.vertex(px, py, z + height))
            .collect();
        let centroid = point3(
            (tri[0].0 + tri[1].0 + tri[2].0) / 3.0,
            (tri[0].1 + tri[1].1 + tri[2].1) / 3.0,
            z + height,
        );
        let mut walls = Vec::new();
        for k in 0..3 {
            let (pa, pb) = (tri[k], tri[(k + 1) % 3]);
            let mid = point3((pa.0 + pb.0) / 2.0, (pa.1 + pb.1) / 2.0, z + height / 2.0);
            let d = vec3(pb.0 - pa.0, pb.1 - pa.1, 0.0);
            // Boss walls face away from the prism material.
            let outward = d.cross(vec3(0.0, 0.0, 1.0)).normalized().unwrap();
            walls.push(b.plane(mid, outward));
        }
        let cap = b.plane(centroid, vec3(0.0, 0.0, 1.0));
        let mut rim = Vec::new();
        for k in 0..3 {
            rim.push(b.line(base[k], base[(k + 1) % 3], top, walls[k]));
        }
        for k in 0..3 {
            b.line(base[k], top_v[k], walls[(k + 2) % 3], walls[k]);
        }
        for k in 0..3 {
            b.line(top_v[k], top_v[(k + 1) % 3], walls[k], cap);
        }
        prism_rims.push([
            EdgeId(rim[0] as u32),
            EdgeId(rim[1] as u32),
            EdgeId(rim[2] as u32),
        ]);
        prism_faces.extend(walls.iter().chain([&cap]).map(|&f| FaceId(f as u32)));
    }

    let model = b.build();
    let mut boss_faces: Vec<FaceId> = boss
        .walls
        .iter()
        .chain([&boss.cap])
        .map(|&f| FaceId(f as u32))
        .collect();
    boss_faces.extend(prism_faces);
    let labels = CaseALabels {
        block_rim: [
            EdgeId(boss.base_edges[0] as u32),
            EdgeId(boss.base_edges[1] as u32),
            EdgeId(boss.base_edges[2] as u32),
            EdgeId(boss.base_edges[3] as u32),
        ],
        prism_rims: [prism_rims[0], prism_rims[1]],
        host_top: FaceId(top as u32),
        boss_faces,
    };
    (model, labels)
}

pub struct StadiumPocketLabels {
    /// The four plane-to-cylinder tangency seam edges.
    pub tangent_seams: [EdgeId; 4],
    pub floor_rim: [EdgeId; 4],
    pub floor: FaceId,
}

/// Stadium (obround) pocket: two plane walls tangent to two half-cylinder
/// end walls, flat floor. Exercises arcs and tangent plane-cylinder seams.
fn stadium_pocket_model() -> SolidModel {
    build_stadium_pocket().0
}

pub fn stadium_pocket_labels() -> StadiumPocketLabels {
    build_stadium_pocket().1
}

fn build_stadium_pocket() -> (SolidModel, StadiumPocketLabels) {
    let block = (14.0, 10.0, 4.0);
    let (z0, z1) = (2.0, 4.0); // floor and mouth heights
    let (xw, xe, ys, yn) = (4.0, 10.0, 3.0, 7.0);
    let r = 2.0;

    let mut b = ModelBuilder::new("stadium_pocket", 0);
    let shell = add_box(&mut b, block, None, &[(TOP, point3(7.0, 1.5, z1))]);
    let top = shell.f[TOP];

    let a0 = b.vertex(xw, ys, z0);
    let a1 = b.vertex(xe, ys, z0);
    let a2 = b.vertex(xe, yn, z0);
    let a3 = b.vertex(xw, yn, z0);
    let m0 = b.vertex(xw, ys, z1);
    let m1 = b.vertex(xe, ys, z1);
    let m2 = b.vertex(xe, yn, z1);
    let m3 = b.vertex(xw, yn, z1);

    let wall_s = b.plane(
        point3((xw + xe) / 2.0, ys, (z0 + z1) / 2.0),
        vec3(0.0, 1.0, 0.0),
    );
    let wall_n = b.plane(
        point3((xw + xe) / 2.0, yn, (z0 + z1) / 2.0),
        vec3(0.0, -1.0, 0.0),
    );
    let cyl_w = b.cylinder(
        point3(xw, 5.0, z0),
        vec3(0.0, 0.0, 1.0),
        r,
        MaterialSide::Inside,
    );
    let cyl_e = b.cylinder(
        point3(xe, 5.0, z0),
        vec3(0.0, 0.0, 1.0),
        r,
        MaterialSide::Inside,
    );
    let floor = b.plane(point3(7.0, 5.0, z0), vec3(0.0, 0.0, 1.0));

    // Floor rim (line, arc, line, arc), then mouth rim, then seams.
    let e_fs = b.line(a0, a1, floor, wall_s);
    let e_fe = b.arc(
        a1,
        a2,
        point3(xe, 5.0, z0),
        vec3(0.0, 0.0, 1.0),
        r,
        floor,
        cyl_e,
    );
    let e_fn = b.line(a2, a3, floor, wall_n);
    let e_fw = b.arc(
        a3,
        a0,
        point3(xw, 5.0, z0),
        vec3(0.0, 0.0, 1.0),
        r,
        floor,
        cyl_w,
    );
    b.line(m0, m1, top, wall_s);
    b.arc(
        m1,
        m2,
        point3(xe, 5.0, z1),
        vec3(0.0, 0.0, 1.0),
        r,
        top,
        cyl_e,
    );
    b.line(m2, m3, top, wall_n);
    b.arc(
        m3,
        m0,
        point3(xw, 5.0, z1),
        vec3(0.0, 0.0, 1.0),
        r,
        top,
        cyl_w,
    );
    let s0 = b.line(a0, m0, wall_s, cyl_w);
    let s1 = b.line(a1, m1, wall_s, cyl_e);
    let s2 = b.line(a2, m2, wall_n, cyl_e);
    let s3 = b.line(a3, m3, wall_n, cyl_w);

    let model = b.build();
    let labels = StadiumPocketLabels {
        tangent_seams: [
            EdgeId(s0 as u32),
            EdgeId(s1 as u32),
            EdgeId(s2 as u32),
            EdgeId(s3 as u32),
        ],
        floor_rim: [
            EdgeId(e_fs as u32),
            EdgeId(e_fe as u32),
            EdgeId(e_fn as u32),
            EdgeId(e_fw as u32),
        ],
        floor: FaceId(floor as u32),
    };
    (model, labels)
}

pub struct CaseBLabels {
    pub rim: [EdgeId; 6],
    pub ridge: EdgeId,
    pub verticals: [EdgeId; 6],
    pub slopes: [FaceId; 2],
    pub walls: [FaceId; 6],
}

/// Hexagonal pocket with a gabled two-slope floor; see module docs.
fn case_b_model() -> SolidModel {
    build_case_b().0
}

pub fn case_b_labels() -> CaseBLabels {
    build_case_b().1
}

fn build_case_b() -> (SolidModel, CaseBLabels) {
    let block = (12.0, 12.0, 5.0);
    let center = (6.0, 6.0);
    let radius = 3.0;
    let z_top = block.2;
    let z_ridge = 3.2;
    let z_low = 2.5;

    let mut b = ModelBuilder::new("case_b", 0);
    let shell = add_box(&mut b, block, None, &[(TOP, point3(6.0, 1.2, z_top))]);
    let top = shell.f[TOP];

    // Hexagon corners counterclockwise from +x; c1 and c4 carry the ridge.
    let mut plan = Vec::new();
    for k in 0..6 {
        let ang = std::f64::consts::FRAC_PI_3 * k as f64;
        plan.push((center.0 + radius * ang.cos(), center.1 + radius * ang.sin()));
    }
    let floor_z = |k: usize| if k == 0 || k == 3 { z_ridge } else { z_low };
    let c: Vec<usize> = (0..6)
        .map(|k| b.vertex(plan[k].0, plan[k].1, floor_z(k)))
        .collect();
    let m: Vec<usize> = (0..6)
        .map(|k| b.vertex(plan[k].0, plan[k].1, z_top))
        .collect();

    // Slope planes: z falls linearly with |y - center| from ridge to low.
    let half_span = plan[1].1 - center.1;
    let slope = (z_ridge - z_low) / half_span;
    let slope_rep = |y: f64| z_ridge - slope * (y - center.1).abs();
    let slope_a = b.plane(
        point3(center.0, center.1 + 1.0, slope_rep(center.1 + 1.0)),
        vec3(0.0, slope, 1.0).normalized().unwrap(),
    );
    let slope_b = b.plane(
        point3(center.0, center.1 - 1.0, slope_rep(center.1 - 1.0)),
        vec3(0.0, -slope, 1.0).normalized().unwrap(),
    );

    // Vertical walls; inward normal of a counterclockwise plan polygon.
    let mut walls = Vec::new();
    for k in 0..6 {
        let (pa, pb) = (plan[k], plan[(k + 1) % 6]);
        let d = vec3(pb.0 - pa.0, pb.1 - pa.1, 0.0);
        let inward = vec3(0.0, 0.0, 1.0).cross(d).normalized().unwrap();
        let mid = point3((pa.0 + pb.0) / 2.0, (pa.1 + pb.1) / 2.0, 4.5);
        walls.push(b.plane(mid, inward));
    }

    // Floor rim: sides 0..2 bound slope A (y above center), 3..5 slope B.
    let slope_of = |k: usize| if k < 3 { slope_a } else { slope_b };
    let mut rim = Vec::new();
    for k in 0..6 {
        rim.push(b.line(c[k], c[(k + 1) % 6], slope_of(k), walls[k]));
    }
    let ridge = b.line(c[0], c[3], slope_a, slope_b);
    let mut verticals = Vec::new();
    for k in 0..6 {
        verticals.push(b.line(c[k], m[k], walls[(k + 5) % 6], walls[k]));
    }
    for k in 0..6 {
        b.line(m[k], m[(k + 1) % 6], top, walls[k]);
    }

    let model = b.build();
    let labels = CaseBLabels {
        rim: [
            EdgeId(rim[0] as u32),
            EdgeId(rim[1] as u32),
            EdgeId(rim[2] as u32),
            EdgeId(rim[3] as u32),
            EdgeId(rim[4] as u32),
            EdgeId(rim[5] as u32),
        ],
        ridge: EdgeId(ridge as u32),
        verticals: [
            EdgeId(verticals[0] as u32),
            EdgeId(verticals[1] as u32),
            EdgeId(verticals[2] as u32),
            EdgeId(verticals[3] as u32),
            EdgeId(verticals[4] as u32),
            EdgeId(verticals[5] as u32),
        ],
        slopes: [FaceId(slope_a as u32), FaceId(slope_b as u32)],
        walls: [
            FaceId(walls[0] as u32),
            FaceId(walls[1] as u32),
            FaceId(walls[2] as u32),
            FaceId(walls[3] as u32),
            FaceId(walls[4] as u32),
            FaceId(walls[5] as u32),
        ],
    };
    (model, labels)
}

pub struct Part1Labels {
    pub boss_wall: FaceId,
    pub boss_cap: FaceId,
    pub protrusion: Vec<FaceId>,
    pub tunnel_walls: Vec<FaceId>,
    pub pocket: Vec<FaceId>,
    pub slot: Vec<FaceId>,
    pub blind_hole_wall: FaceId,
    pub blind_hole_floor: FaceId,
    pub step: Vec<FaceId>,
}

/// One block carrying all seven basic features, placed so they do not
/// interact: boss and protrusion on top, a vertical rectangular through
/// hole, a pocket on the front, a closed slot on the back, a blind hole on
/// the right, and a blind corner step at the top-right edge.
fn part1_model() -> SolidModel {
    build_part1().0
}

pub fn part1_labels() -> Part1Labels {
    build_part1().1
}

fn build_part1() -> (SolidModel, Part1Labels) {
    let dims = (20.0, 16.0, 10.0);
    let (x, y, z) = dims;
    let (sy1, sy2) = (6.0, 10.0); // blind step span on the top-right edge
    let mut b = ModelBuilder::new("part1", 1);
    let shell = add_box(
        &mut b,
        dims,
        Some((sy1, sy2)),
        &[
            (TOP, point3(10.0, 14.5, z)),
            (BOTTOM, point3(3.0, 3.0, 0.0)),
            (FRONT, point3(2.0, 0.0, 8.0)),
            (BACK, point3(2.0, y, 8.0)),
            (RIGHT, point3(x, 13.0, 2.0)),
        ],
    );

    let boss = add_cyl_boss(
        &mut b,
        shell.f[TOP],
        point3(4.0, 4.0, z),
        vec3(0.0, 0.0, 1.0),
        1.8,
        2.5,
    );
    let protrusion = add_rect_boss(
        &mut b,
        shell.f[TOP],
        point3(13.0, 2.0, z),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 1.0, 0.0),
        vec3(0.0, 0.0, 1.0),
        4.0,
        3.0,
        2.0,
    );
    let tunnel = add_rect_tunnel(
        &mut b,
        shell.f[TOP],
        shell.f[BOTTOM],
        point3(8.0, 9.0, z),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 1.0, 0.0),
        vec3(0.0, 0.0, -1.0),
        4.0,
        4.0,
        z,
    );
    let pocket = add_rect_pocket(
        &mut b,
        shell.f[FRONT],
        point3(6.0, 0.0, 3.0),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 0.0, 1.0),
        vec3(0.0, 1.0, 0.0),
        6.0,
        4.0,
        2.5,
    );
    let slot = add_rect_pocket(
        &mut b,
        shell.f[BACK],
        point3(5.0, y, 4.0),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 0.0, 1.0),
        vec3(0.0, -1.0, 0.0),
        10.0,
        2.0,
        2.0,
    );
    let blind = add_blind_cyl_hole(
        &mut b,
        shell.f[RIGHT],
        point3(x, 4.0, 4.0),
        vec3(-1.0, 0.0, 0.0),
        1.5,
        3.0,
    );
    let split = shell.split_verts.expect("box built with split");
    let step = add_blind_step(
        &mut b,
        shell.f[TOP],
        shell.f[RIGHT],
        split,
        dims,
        17.0,
        sy1,
        sy2,
        7.0,
    );

    let model = b.build();
    let fid = |i: usize| FaceId(i as u32);
    let labels = Part1Labels {
        boss_wall: fid(boss.wall),
        boss_cap: fid(boss.cap),
        protrusion: protrusion
            .walls
            .iter()
            .chain([&protrusion.cap])
            .map(|&f| fid(f))
            .collect(),
        tunnel_walls: tunnel.walls.iter().map(|&f| fid(f)).collect(),
        pocket: pocket
            .walls
            .iter()
            .chain([&pocket.floor])
            .map(|&f| fid(f))
            .collect(),
        slot: slot
            .walls
            .iter()
            .chain([&slot.floor])
            .map(|&f| fid(f))
            .collect(),
        blind_hole_wall: fid(blind.wall),
        blind_hole_floor: fid(blind.floor),
        step: [step.riser, step.tread, step.end_walls[0], step.end_walls[1]]
            .iter()
            .map(|&f| fid(f))
            .collect(),
    };
    (model, labels)
}

/// A fixture plate: four cylindrical bolt holes through the plate, a closed
/// clamping slot, and a rectangular locating pad.
fn part2_model() -> SolidModel {
    let dims = (24.0, 16.0, 4.0);
    let z = dims.2;
    let mut b = ModelBuilder::new("part2", 4);
    let shell = add_box(
        &mut b,
        dims,
        None,
        &[
            (TOP, point3(6.0, 13.0, z)),
            (BOTTOM, point3(12.0, 8.0, 0.0)),
        ],
    );
    for (cx, cy) in [(3.0, 3.0), (21.0, 3.0), (3.0, 13.0), (21.0, 13.0)] {
        add_cyl_through_hole(
            &mut b,
            shell.f[TOP],
            shell.f[BOTTOM],
            point3(cx, cy, z),
            vec3(0.0, 0.0, -1.0),
            1.0,
            z,
            vec3(1.0, 0.0, 0.0),
        );
    }
    add_rect_pocket(
        &mut b,
        shell.f[TOP],
        point3(8.0, 7.0, z),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 1.0, 0.0),
        vec3(0.0, 0.0, -1.0),
        8.0,
        2.0,
        2.0,
    );
    add_rect_boss(
        &mut b,
        shell.f[TOP],
        point3(10.0, 11.0, z),
        vec3(1.0, 0.0, 0.0),
        vec3(0.0, 1.0, 0.0),
        vec3(0.0, 0.0, 1.0),
        4.0,
        3.0,
        1.5,
    );
    b.build()
}

// ---------------------------------------------------------------------------
// Label helpers used by tests; each re-runs its deterministic constructor.
// ---------------------------------------------------------------------------

pub struct PocketLabels {
    pub mouth_rim: [EdgeId; 4],
    pub floor_rim: [EdgeId; 4],
    pub walls: [FaceId; 4],
    pub floor: FaceId,
    pub floor_corner: VertexId,
}

/// Labels for the standalone `Pocket` fixture (any dimensions).
pub fn pocket_labels() -> PocketLabels {
    build_pocket("pocket", (8.0, 6.0, 4.0), (4.0, 2.0), 2.0).1
}

pub struct ThroughRectHoleLabels {
    pub hole_walls: [FaceId; 4],
    pub front_rim: [EdgeId; 4],
    pub back_rim: [EdgeId; 4],
    pub lengthwise: [EdgeId; 4],
}

pub fn through_rect_hole_labels() -> ThroughRectHoleLabels {
    build_through_rect_hole((4.0, 4.0, 4.0), (2.0, 2.0)).1
}

pub struct CylBossLabels {
    pub wall: FaceId,
    pub cap: FaceId,
    pub base_circle: EdgeId,
    pub top_circle: EdgeId,
}

pub fn cyl_boss_labels() -> CylBossLabels {
    build_cyl_boss((6.0, 6.0, 3.0), 1.5, 2.0).1
}

pub struct BlindHoleLabels {
    pub wall: FaceId,
    pub floor: FaceId,
    pub mouth_circle: EdgeId,
    pub floor_circle: EdgeId,
}

pub fn blind_hole_labels() -> BlindHoleLabels {
    build_blind_hole((6.0, 6.0, 4.0), 1.5, 2.0).1
}

pub struct CylHoleLabels {
    pub walls: [FaceId; 2],
}

pub fn cyl_hole_labels() -> CylHoleLabels {
    build_cyl_hole((6.0, 6.0, 3.0), 1.5).1
}

pub struct BlindStepLabels {
    pub mouth_rim: [EdgeId; 6],
    pub faces: [FaceId; 4],
}

pub fn blind_step_labels() -> BlindStepLabels {
    build_blind_step_fixture((6.0, 5.0, 4.0), (2.0, 2.0, 1.5)).1
}

pub struct ChamferedProtrusionLabels {
    pub walls: [FaceId; 4],
    pub chamfers: [FaceId; 4],
    pub cap: FaceId,
    /// The chamfer face at id 10; regression tests assert it stays inside
    /// the protrusion subgraph.
    pub f10: FaceId,
}

pub fn chamfered_protrusion_labels() -> ChamferedProtrusionLabels {
    ChamferedProtrusionLabels {
        walls: [FaceId(6), FaceId(7), FaceId(8), FaceId(9)],
        chamfers: [FaceId(10), FaceId(11), FaceId(12), FaceId(13)],
        cap: FaceId(14),
        f10: FaceId(10),
    }
}
