//! Color-annotated mesh export: faces triangulated and painted by their
//! subgraph's convexity (blue convex, yellow concave, gray otherwise),
//! feature boundaries overlaid as red polylines. ASCII PLY with per-vertex
//! colors and an edge element, viewable in standard mesh tools.

use std::fmt::Write as _;

use brep_extract::brep::{Edge, EdgeCurve, Face, FaceId, SurfaceGeometry};
use brep_extract::geom::{Point3, Vec3};
use brep_extract::subgraph::Extraction;
use brep_extract::{Convexity, SolidModel};

pub const SEGMENTS_PER_TURN: usize = 24;

pub const BLUE: [u8; 3] = [70, 130, 240];
pub const YELLOW: [u8; 3] = [235, 200, 60];
pub const GRAY: [u8; 3] = [160, 160, 160];
pub const RED: [u8; 3] = [255, 0, 0];

#[derive(Debug)]
pub enum MeshError {
    UnsupportedSurface(FaceId),
    DegenerateFace(FaceId),
}

impl std::fmt::Display for MeshError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MeshError::UnsupportedSurface(id) => {
                write!(f, "face {id} has no tessellatable surface")
            }
            MeshError::DegenerateFace(id) => write!(f, "face {id} could not be triangulated"),
        }
    }
}

impl std::error::Error for MeshError {}

struct MeshBuffer {
    vertices: Vec<(Point3, [u8; 3])>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<(usize, usize, [u8; 3])>,
}

impl MeshBuffer {
    fn push_vertex(&mut self, p: Point3, color: [u8; 3]) -> usize {
        self.vertices.push((p, color));
        self.vertices.len() - 1
    }
}

/// Builds the ASCII PLY document for a completed extraction.
pub fn export_ply(model: &SolidModel, ex: &Extraction) -> Result<String, MeshError> {
    let mut buf = MeshBuffer {
        vertices: Vec::new(),
        triangles: Vec::new(),
        edges: Vec::new(),
    };

    for face in &model.faces {
        let color = face_color(face.id, ex);
        let tris = tessellate_face(model, face)?;
        for tri in tris {
            let idx = [
                buf.push_vertex(tri[0], color),
                buf.push_vertex(tri[1], color),
                buf.push_vertex(tri[2], color),
            ];
            buf.triangles.push(idx);
        }
    }

    for boundary in ex.boundaries() {
        for &eid in &boundary.edges {
            let pts = edge_polyline(model, model.edge(eid));
            let ids: Vec<usize> = pts.iter().map(|&p| buf.push_vertex(p, RED)).collect();
            for pair in ids.windows(2) {
                buf.edges.push((pair[0], pair[1], RED));
            }
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, "ply");
    let _ = writeln!(out, "format ascii 1.0");
    let _ = writeln!(
        out,
        "comment convex subgraphs blue, concave yellow, boundaries red"
    );
    let _ = writeln!(out, "element vertex {}", buf.vertices.len());
    let _ = writeln!(out, "property float x");
    let _ = writeln!(out, "property float y");
    let _ = writeln!(out, "property float z");
    let _ = writeln!(out, "property uchar red");
    let _ = writeln!(out, "property uchar green");
    let _ = writeln!(out, "property uchar blue");
    let _ = writeln!(out, "element face {}", buf.triangles.len());
    let _ = writeln!(out, "property list uchar int vertex_indices");
    let _ = writeln!(out, "element edge {}", buf.edges.len());
    let _ = writeln!(out, "property int vertex1");
    let _ = writeln!(out, "property int vertex2");
    let _ = writeln!(out, "property uchar red");
    let _ = writeln!(out, "property uchar green");
    let _ = writeln!(out, "property uchar blue");
    let _ = writeln!(out, "end_header");
    for (p, c) in &buf.vertices {
        let _ = writeln!(out, "{} {} {} {} {} {}", p.x, p.y, p.z, c[0], c[1], c[2]);
    }
    for t in &buf.triangles {
        let _ = writeln!(out, "3 {} {} {}", t[0], t[1], t[2]);
    }
    for (a, b, c) in &buf.edges {
        let _ = writeln!(out, "{} {} {} {} {}", a, b, c[0], c[1], c[2]);
    }
    Ok(out)
}

fn face_color(face: FaceId, ex: &Extraction) -> [u8; 3] {
    for s in &ex.subgraphs {
        if s.faces.contains(&face) {
            return match s.convexity {
                Convexity::Convex => BLUE,
                Convexity::Concave => YELLOW,
                Convexity::Transitory => GRAY,
            };
        }
    }
    GRAY
}

fn tessellate_face(model: &SolidModel, face: &Face) -> Result<Vec<[Point3; 3]>, MeshError> {
    match &face.surface {
        SurfaceGeometry::Plane { .. } => tessellate_plane(model, face),
        SurfaceGeometry::Cylinder {
            axis_point,
            axis_dir,
            radius,
            ..
        } => Ok(tessellate_revolved(
            model,
            face,
            *axis_point,
            axis_dir.as_vec(),
            |_| *radius,
        )),
        SurfaceGeometry::Cone {
            apex,
            axis_dir,
            half_angle,
            ..
        } => {
            let tan = half_angle.tan();
            Ok(tessellate_revolved(
                model,
                face,
                *apex,
                axis_dir.as_vec(),
                move |t| t * tan,
            ))
        }
        SurfaceGeometry::RuledSaddle => Err(MeshError::UnsupportedSurface(face.id)),
    }
}

/// Points along an edge in its stored direction (arcs and circles sampled
/// at the turn rate), endpoints included; circles close back on the start.
fn edge_polyline(model: &SolidModel, edge: &Edge) -> Vec<Point3> {
    match &edge.curve {
        EdgeCurve::LineSegment => {
            let (a, b) = edge.endpoints.expect("line endpoints");
            vec![model.vertex(a).position, model.vertex(b).position]
        }
        EdgeCurve::CircularArc {
            center,
            axis,
            radius,
        } => {
            let (a, b) = edge.endpoints.expect("arc endpoints");
            let p1 = model.vertex(a).position;
            let p2 = model.vertex(b).position;
            let u = (p1 - *center).normalized().expect("arc start");
            let w = axis.as_vec().cross(u);
            let d2 = p2 - *center;
            let sweep = d2.dot(w).atan2(d2.dot(u)).rem_euclid(std::f64::consts::TAU);
            let steps = ((SEGMENTS_PER_TURN as f64) * sweep / std::f64::consts::TAU)
                .ceil()
                .max(1.0) as usize;
            (0..=steps)
                .map(|k| {
                    let ang = sweep * k as f64 / steps as f64;
                    *center + (u * ang.cos() + w * ang.sin()) * *radius
                })
                .collect()
        }
        EdgeCurve::FullCircle {
            center,
            axis,
            radius,
        } => {
            let u = (edge.midpoint - *center)
                .normalized()
                .expect("circle midpoint");
            let w = axis.as_vec().cross(u);
            (0..=SEGMENTS_PER_TURN)
                .map(|k| {
                    let ang = std::f64::consts::TAU * k as f64 / SEGMENTS_PER_TURN as f64;
                    *center + (u * ang.cos() + w * ang.sin()) * *radius
                })
                .collect()
        }
    }
}

/// Ordered boundary loops of a face as 3D polylines (closed; the final
/// point is not repeated).
fn face_loops(model: &SolidModel, face: &Face) -> Vec<Vec<Point3>> {
    let mut loops = Vec::new();
    let mut used: Vec<bool> = vec![false; face.bounding_edges.len()];

    // Closed edges are loops of their own.
    for (i, &eid) in face.bounding_edges.iter().enumerate() {
        if model.edge(eid).is_closed() {
            used[i] = true;
            let mut pts = edge_polyline(model, model.edge(eid));
            pts.pop();
            loops.push(pts);
        }
    }

    while let Some(start) = (0..face.bounding_edges.len()).find(|&i| !used[i]) {
        used[start] = true;
        let first = model.edge(face.bounding_edges[start]);
        let (v0, mut cursor) = first.endpoints.expect("open edge");
        let mut pts = edge_polyline(model, first);
        pts.pop();
        let mut chain = pts;

        while cursor != v0 {
            let next = (0..face.bounding_edges.len()).find(|&i| {
                if used[i] {
                    return false;
                }
                let e = model.edge(face.bounding_edges[i]);
                e.endpoints.is_some_and(|(a, b)| a == cursor || b == cursor)
            });
            let Some(i) = next else { break };
            used[i] = true;
            let e = model.edge(face.bounding_edges[i]);
            let (a, b) = e.endpoints.expect("open edge");
            let mut pts = edge_polyline(model, e);
            if b == cursor {
                pts.reverse();
                cursor = a;
            } else {
                cursor = b;
            }
            pts.pop();
            chain.extend(pts);
        }
        loops.push(chain);
    }
    loops
}

fn tessellate_plane(model: &SolidModel, face: &Face) -> Result<Vec<[Point3; 3]>, MeshError> {
    let SurfaceGeometry::Plane {
        point,
        outward_normal,
    } = &face.surface
    else {
        return Err(MeshError::UnsupportedSurface(face.id));
    };
    let n = outward_normal.as_vec();
    let u = n.any_perpendicular();
    let v = n.cross(u);
    let origin = *point;
    let to2d = |p: Point3| -> (f64, f64) {
        let d = p - origin;
        (d.dot(u), d.dot(v))
    };
    let to3d = |(x, y): (f64, f64)| origin + u * x + v * y;

    let loops3 = face_loops(model, face);
    let mut loops2: Vec<Vec<(f64, f64)>> = loops3
        .iter()
        .map(|lp| lp.iter().map(|&p| to2d(p)).collect())
        .collect();
    if loops2.is_empty() {
        return Err(MeshError::DegenerateFace(face.id));
    }

    // The outer loop has the largest area; orient it counterclockwise and
    // every hole clockwise.
    let areas: Vec<f64> = loops2.iter().map(|lp| signed_area(lp)).collect();
    let outer = areas
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    for (i, lp) in loops2.iter_mut().enumerate() {
        let ccw = areas[i] > 0.0;
        if (i == outer) != ccw {
            lp.reverse();
        }
    }

    let mut polygon = loops2.swap_remove(outer);
    // Bridge each hole into the outer polygon, rightmost hole first.
    let mut holes = loops2;
    holes.sort_by(|a, b| {
        let ax = a.iter().map(|p| p.0).fold(f64::MIN, f64::max);
        let bx = b.iter().map(|p| p.0).fold(f64::MIN, f64::max);
        bx.partial_cmp(&ax).unwrap()
    });
    for hole in holes {
        polygon = bridge_hole(polygon, hole);
    }

    let tris2 = ear_clip(&polygon).ok_or(MeshError::DegenerateFace(face.id))?;
    Ok(tris2
        .into_iter()
        .map(|[a, b, c]| [to3d(a), to3d(b), to3d(c)])
        .collect())
}

fn signed_area(poly: &[(f64, f64)]) -> f64 {
    let mut acc = 0.0;
    for i in 0..poly.len() {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % poly.len()];
        acc += x1 * y2 - x2 * y1;
    }
    acc / 2.0
}

/// Splices a clockwise hole into a counterclockwise outer polygon through a
/// mutually visible vertex pair.
fn bridge_hole(outer: Vec<(f64, f64)>, hole: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    // Rightmost hole vertex.
    let hi = hole
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .0.partial_cmp(&b.1 .0).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    let h = hole[hi];

    // Nearest outer vertex with an unobstructed connector.
    let mut candidates: Vec<usize> = (0..outer.len()).collect();
    candidates.sort_by(|&a, &b| {
        let da = dist2(outer[a], h);
        let db = dist2(outer[b], h);
        da.partial_cmp(&db).unwrap()
    });
    let visible = |oi: usize| -> bool {
        let o = outer[oi];
        for i in 0..outer.len() {
            let (a, b) = (outer[i], outer[(i + 1) % outer.len()]);
            if i == oi || (i + 1) % outer.len() == oi {
                continue;
            }
            if segments_cross(h, o, a, b) {
                return false;
            }
        }
        for i in 0..hole.len() {
            let (a, b) = (hole[i], hole[(i + 1) % hole.len()]);
            if i == hi || (i + 1) % hole.len() == hi {
                continue;
            }
            if segments_cross(h, o, a, b) {
                return false;
            }
        }
        true
    };
    let oi = candidates.into_iter().find(|&c| visible(c)).unwrap_or(0);

    // outer[..=oi] ++ hole[hi..] ++ hole[..=hi] ++ outer[oi..]
    let mut merged = Vec::with_capacity(outer.len() + hole.len() + 2);
    merged.extend_from_slice(&outer[..=oi]);
    merged.extend_from_slice(&hole[hi..]);
    merged.extend_from_slice(&hole[..=hi]);
    merged.extend_from_slice(&outer[oi..]);
    merged
}

fn dist2(a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (a.0 - b.0, a.1 - b.1);
    dx * dx + dy * dy
}

fn segments_cross(p1: (f64, f64), p2: (f64, f64), q1: (f64, f64), q2: (f64, f64)) -> bool {
    let d = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    };
    let d1 = d(p1, p2, q1);
    let d2 = d(p1, p2, q2);
    let d3 = d(q1, q2, p1);
    let d4 = d(q1, q2, p2);
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

/// Ear clipping of a counterclockwise simple polygon (bridged duplicates
/// allowed). Returns triangle corner coordinates.
fn ear_clip(polygon: &[(f64, f64)]) -> Option<Vec<[(f64, f64); 3]>> {
    let mut pts: Vec<(f64, f64)> = polygon.to_vec();
    let mut tris = Vec::new();
    let eps = 1e-12;

    let cross = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    };
    // Closed containment: a vertex on the candidate ear's boundary (e.g. a
    // reflex vertex collinear with the chord) must block the ear, or the
    // triangle can poke outside the polygon. Vertices coincident with the
    // ear's own corners (bridge duplicates) are exempt.
    let near = |p: (f64, f64), q: (f64, f64)| dist2(p, q) <= 1e-18;
    let inside_or_on = |p: (f64, f64), a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
        cross(a, b, p) >= -eps && cross(b, c, p) >= -eps && cross(c, a, p) >= -eps
    };

    let mut guard = 0usize;
    while pts.len() > 3 {
        guard += 1;
        if guard > polygon.len() * polygon.len() * 4 + 64 {
            return None;
        }
        let n = pts.len();
        let mut clipped = false;
        for i in 0..n {
            let a = pts[(i + n - 1) % n];
            let b = pts[i];
            let c = pts[(i + 1) % n];
            if cross(a, b, c) <= eps {
                continue; // reflex or collinear corner
            }
            let blocked = pts.iter().enumerate().any(|(j, &p)| {
                j != (i + n - 1) % n
                    && j != i
                    && j != (i + 1) % n
                    && !near(p, a)
                    && !near(p, b)
                    && !near(p, c)
                    && inside_or_on(p, a, b, c)
            });
            if blocked {
                continue;
            }
            tris.push([a, b, c]);
            pts.remove(i);
            clipped = true;
            break;
        }
        if !clipped {
            // Drop an exactly collinear corner if one exists; otherwise
            // the polygon is degenerate.
            let n = pts.len();
            let collinear = (0..n).find(|&i| {
                let a = pts[(i + n - 1) % n];
                let b = pts[i];
                let c = pts[(i + 1) % n];
                cross(a, b, c).abs() <= eps
            })?;
            pts.remove(collinear);
        }
    }
    if pts.len() == 3 && cross(pts[0], pts[1], pts[2]).abs() > eps {
        tris.push([pts[0], pts[1], pts[2]]);
    }
    Some(tris)
}

/// Tessellates a surface-of-revolution patch (cylinder or cone wall). The
/// axial extent and angular span come from the face's bounding curves.
fn tessellate_revolved(
    model: &SolidModel,
    face: &Face,
    axis_point: Point3,
    axis: Vec3,
    radius_at: impl Fn(f64) -> f64,
) -> Vec<[Point3; 3]> {
    let u0 = axis.any_perpendicular();
    let w0 = axis.cross(u0);
    let angle_of = |p: Point3| -> f64 {
        let d = p - axis_point;
        let radial = d - axis * d.dot(axis);
        radial.dot(w0).atan2(radial.dot(u0))
    };
    let station_of = |p: Point3| (p - axis_point).dot(axis);

    let mut t_min = f64::MAX;
    let mut t_max = f64::MIN;
    let mut full_turn = false;
    let mut arc_range: Option<(f64, f64)> = None; // (start angle, sweep)
    for &eid in &face.bounding_edges {
        let edge = model.edge(eid);
        for p in edge_polyline(model, edge) {
            let t = station_of(p);
            t_min = t_min.min(t);
            t_max = t_max.max(t);
        }
        match &edge.curve {
            EdgeCurve::FullCircle { .. } => full_turn = true,
            EdgeCurve::CircularArc { .. } if arc_range.is_none() => {
                let (a, b) = edge.endpoints.expect("arc endpoints");
                let start = angle_of(model.vertex(a).position);
                let end = angle_of(model.vertex(b).position);
                let sweep = (end - start).rem_euclid(std::f64::consts::TAU);
                arc_range = Some((
                    start,
                    if sweep < 1e-9 {
                        std::f64::consts::TAU
                    } else {
                        sweep
                    },
                ));
            }
            _ => {}
        }
    }
    let (start, sweep) = match arc_range {
        Some(range) if !full_turn => range,
        _ => (0.0, std::f64::consts::TAU),
    };

    let steps = ((SEGMENTS_PER_TURN as f64) * sweep / std::f64::consts::TAU)
        .ceil()
        .max(1.0) as usize;
    let point_at = |t: f64, ang: f64| -> Point3 {
        let r = radius_at(t);
        axis_point + axis * t + (u0 * ang.cos() + w0 * ang.sin()) * r
    };

    let mut tris = Vec::with_capacity(steps * 2);
    for k in 0..steps {
        let a0 = start + sweep * k as f64 / steps as f64;
        let a1 = start + sweep * (k + 1) as f64 / steps as f64;
        let p00 = point_at(t_min, a0);
        let p01 = point_at(t_min, a1);
        let p10 = point_at(t_max, a0);
        let p11 = point_at(t_max, a1);
        tris.push([p00, p01, p11]);
        tris.push([p00, p11, p10]);
    }
    tris
}
