//! Indexed B-REP data model: entities with dense ids, analytic surface
//! geometry, manifold validation, and surface normal evaluation.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::geom::{point3, vec3, Point3, UnitVec3, Vec3, MERGE_TOL, ON_SURFACE_TOL};

macro_rules! entity_id {
    ($name:ident, $letter:literal) => {
        /// Dense non-negative index, unique per entity kind within one model.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub u32);

        impl $name {
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}{}", $letter, self.0)
            }
        }
    };
}

entity_id!(VertexId, "V");
entity_id!(EdgeId, "E");
entity_id!(FaceId, "F");

/// Which side of a curved surface the outward (away-from-material) normal
/// points to, relative to the axis. `Outside` walls are bosses (normals point
/// away from the axis); `Inside` walls are holes (normals point toward the
/// axis, into the empty space).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaterialSide {
    Outside,
    Inside,
}

/// Analytic surface carried by a face.
#[derive(Debug, Clone, PartialEq)]
pub enum SurfaceGeometry {
    Plane {
        /// A point on the plane; by convention the face's interior
        /// representative point.
        point: Point3,
        outward_normal: UnitVec3,
    },
    Cylinder {
        axis_point: Point3,
        axis_dir: UnitVec3,
        radius: f64,
        material_side: MaterialSide,
    },
    Cone {
        apex: Point3,
        axis_dir: UnitVec3,
        /// Strictly inside (0, pi/2). The cone opens along +axis_dir.
        half_angle: f64,
        material_side: MaterialSide,
    },
    /// Marker for a doubly-ruled saddle patch: principal curvatures of
    /// opposite sign, no concrete geometry.
    RuledSaddle,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("point does not lie on the surface")]
    PointOffSurface,
    #[error("cone apex is a curvature singularity")]
    ApexSingularity,
}

impl SurfaceGeometry {
    /// Signed distance-ish test: is `p` on the surface within `tol`?
    /// Saddles carry no geometry and accept any point.
    pub fn contains(&self, p: Point3, tol: f64) -> bool {
        match self {
            SurfaceGeometry::Plane {
                point,
                outward_normal,
            } => (p - *point).dot(outward_normal.as_vec()).abs() <= tol,
            SurfaceGeometry::Cylinder {
                axis_point,
                axis_dir,
                radius,
                ..
            } => {
                let v = p - *axis_point;
                let axial = v.dot(axis_dir.as_vec());
                let radial = v - axis_dir.as_vec() * axial;
                (radial.norm() - radius).abs() <= tol
            }
            SurfaceGeometry::Cone {
                apex,
                axis_dir,
                half_angle,
                ..
            } => {
                let v = p - *apex;
                let t = v.dot(axis_dir.as_vec());
                if t < -tol {
                    return false;
                }
                let radial = v - axis_dir.as_vec() * t;
                (radial.norm() - t * half_angle.tan()).abs() <= tol
            }
            SurfaceGeometry::RuledSaddle => true,
        }
    }

    /// Outward (away from material) unit normal at `p` on the surface.
    pub fn outward_normal_at(&self, p: Point3) -> Result<UnitVec3, GeomError> {
        if !self.contains(p, ON_SURFACE_TOL) {
            return Err(GeomError::PointOffSurface);
        }
        match self {
            SurfaceGeometry::Plane { outward_normal, .. } => Ok(*outward_normal),
            SurfaceGeometry::Cylinder {
                axis_point,
                axis_dir,
                material_side,
                ..
            } => {
                let v = p - *axis_point;
                let radial = v - axis_dir.as_vec() * v.dot(axis_dir.as_vec());
                let out = radial.normalized().ok_or(GeomError::PointOffSurface)?;
                Ok(side_normal(out, *material_side))
            }
            SurfaceGeometry::Cone {
                apex,
                axis_dir,
                half_angle,
                material_side,
            } => {
                let v = p - *apex;
                let t = v.dot(axis_dir.as_vec());
                let radial = v - axis_dir.as_vec() * t;
                let r_dir = radial.normalized().ok_or(GeomError::ApexSingularity)?;
                // Perpendicular to the ruling through p, tilted off the
                // radial direction by the half angle.
                let n = r_dir * half_angle.cos() - axis_dir.as_vec() * half_angle.sin();
                let out = n.normalized().ok_or(GeomError::PointOffSurface)?;
                Ok(side_normal(out, *material_side))
            }
            SurfaceGeometry::RuledSaddle => Err(GeomError::PointOffSurface),
        }
    }
}

fn side_normal(away_from_axis: Vec3, side: MaterialSide) -> UnitVec3 {
    let v = match side {
        MaterialSide::Outside => away_from_axis,
        MaterialSide::Inside => -away_from_axis,
    };
    UnitVec3::from_normalized(v).expect("normalized")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub id: VertexId,
    pub position: Point3,
}

/// Curve geometry of an edge. `FullCircle` edges are closed and carry no
/// vertices; `CircularArc` runs counterclockwise around `axis` from the
/// first endpoint to the second.
#[derive(Debug, Clone, PartialEq)]
pub enum EdgeCurve {
    LineSegment,
    CircularArc {
        center: Point3,
        axis: UnitVec3,
        radius: f64,
    },
    FullCircle {
        center: Point3,
        axis: UnitVec3,
        radius: f64,
    },
}

/// Oriented manifold edge. Traversing the edge in its stored direction
/// keeps `adjacent_faces.0` on the left (faces' outward normals up).
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub id: EdgeId,
    pub endpoints: Option<(VertexId, VertexId)>,
    pub curve: EdgeCurve,
    pub adjacent_faces: (FaceId, FaceId),
    /// Representative point on the edge (the true midpoint for open edges).
    pub midpoint: Point3,
}

impl Edge {
    pub fn is_closed(&self) -> bool {
        self.endpoints.is_none()
    }

    pub fn left_face(&self) -> FaceId {
        self.adjacent_faces.0
    }

    pub fn right_face(&self) -> FaceId {
        self.adjacent_faces.1
    }

    pub fn faces(&self) -> [FaceId; 2] {
        [self.adjacent_faces.0, self.adjacent_faces.1]
    }

    /// Unit tangent at the stored midpoint, in the stored direction.
    pub fn tangent_at_midpoint(&self, model: &SolidModel) -> Option<UnitVec3> {
        match &self.curve {
            EdgeCurve::LineSegment => {
                let (a, b) = self.endpoints?;
                let dir = model.vertices[b.index()].position - model.vertices[a.index()].position;
                UnitVec3::from_normalized(dir)
            }
            EdgeCurve::CircularArc { center, axis, .. }
            | EdgeCurve::FullCircle { center, axis, .. } => {
                UnitVec3::from_normalized(axis.as_vec().cross(self.midpoint - *center))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Face {
    pub id: FaceId,
    pub surface: SurfaceGeometry,
    /// All bounding edges, every loop flattened, ascending id.
    pub bounding_edges: Vec<EdgeId>,
    /// A point on the surface in the face's interior.
    pub representative_point: Point3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationKind {
    NonManifoldEdge,
    DanglingReference,
    BadNormal,
    EulerMismatch,
}

impl std::fmt::Display for ValidationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ValidationKind::NonManifoldEdge => "NonManifoldEdge",
            ValidationKind::DanglingReference => "DanglingReference",
            ValidationKind::BadNormal => "BadNormal",
            ValidationKind::EulerMismatch => "EulerMismatch",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("validation failed: {kind} at {entity}")]
pub struct ValidationError {
    pub kind: ValidationKind,
    /// Display form of the offending entity id (e.g. "E3"), or a summary.
    pub entity: String,
}

impl ValidationError {
    fn new(kind: ValidationKind, entity: impl ToString) -> Self {
        ValidationError {
            kind,
            entity: entity.to_string(),
        }
    }
}

/// A validated two-manifold B-REP solid. Immutable after construction;
/// freely shareable across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct SolidModel {
    pub name: String,
    pub genus: u32,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

impl SolidModel {
    pub fn vertex(&self, id: VertexId) -> &Vertex {
        &self.vertices[id.index()]
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.index()]
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id.index()]
    }

    /// Edges incident to each vertex, ascending edge id.
    pub fn edges_at_vertices(&self) -> Vec<Vec<EdgeId>> {
        let mut incidence = vec![Vec::new(); self.vertices.len()];
        for edge in &self.edges {
            if let Some((a, b)) = edge.endpoints {
                incidence[a.index()].push(edge.id);
                incidence[b.index()].push(edge.id);
            }
        }
        incidence
    }

    /// Outward normal of `face` at `p`; `p` must lie on its surface.
    pub fn outward_normal_at(&self, face: FaceId, p: Point3) -> Result<UnitVec3, GeomError> {
        self.face(face).surface.outward_normal_at(p)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        use ValidationKind::*;

        // The smallest closed solid has four faces.
        if self.faces.len() < 4 {
            return Err(ValidationError::new(DanglingReference, "solid"));
        }

        for (i, v) in self.vertices.iter().enumerate() {
            if v.id.index() != i {
                return Err(ValidationError::new(DanglingReference, v.id));
            }
        }

        // Every vertex must be referenced by some edge.
        let mut used = vec![false; self.vertices.len()];
        for e in &self.edges {
            if let Some((a, b)) = e.endpoints {
                if a.index() < used.len() {
                    used[a.index()] = true;
                }
                if b.index() < used.len() {
                    used[b.index()] = true;
                }
            }
        }
        if let Some(i) = used.iter().position(|&u| !u) {
            return Err(ValidationError::new(DanglingReference, VertexId(i as u32)));
        }
        for (i, f) in self.faces.iter().enumerate() {
            if f.id.index() != i {
                return Err(ValidationError::new(DanglingReference, f.id));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.id.index() != i {
                return Err(ValidationError::new(DanglingReference, e.id));
            }
        }

        // Distinct vertices must not coincide within the merge tolerance.
        for a in &self.vertices {
            for b in &self.vertices[a.id.index() + 1..] {
                if a.position.distance(b.position) <= MERGE_TOL {
                    return Err(ValidationError::new(BadNormal, b.id));
                }
            }
        }

        for e in &self.edges {
            let (fl, fr) = e.adjacent_faces;
            if fl == fr {
                return Err(ValidationError::new(NonManifoldEdge, e.id));
            }
            if fl.index() >= self.faces.len() || fr.index() >= self.faces.len() {
                return Err(ValidationError::new(DanglingReference, e.id));
            }
            match (&e.curve, e.endpoints) {
                (EdgeCurve::FullCircle { .. }, Some(_)) | (EdgeCurve::FullCircle { .. }, None)
                    if e.endpoints.is_some() =>
                {
                    return Err(ValidationError::new(DanglingReference, e.id));
                }
                (EdgeCurve::LineSegment, None) | (EdgeCurve::CircularArc { .. }, None) => {
                    return Err(ValidationError::new(DanglingReference, e.id));
                }
                _ => {}
            }
            if let Some((a, b)) = e.endpoints {
                if a.index() >= self.vertices.len() || b.index() >= self.vertices.len() {
                    return Err(ValidationError::new(DanglingReference, e.id));
                }
                if a == b {
                    return Err(ValidationError::new(NonManifoldEdge, e.id));
                }
            }
            if let EdgeCurve::CircularArc { radius, .. } | EdgeCurve::FullCircle { radius, .. } =
                e.curve
            {
                if radius <= 0.0 {
                    return Err(ValidationError::new(BadNormal, e.id));
                }
            }
            // The representative point must lie on both adjacent surfaces.
            for f in e.faces() {
                if !self.face(f).surface.contains(e.midpoint, ON_SURFACE_TOL) {
                    return Err(ValidationError::new(BadNormal, e.id));
                }
            }
        }

        for f in &self.faces {
            if f.bounding_edges.is_empty() {
                return Err(ValidationError::new(DanglingReference, f.id));
            }
            for &e in &f.bounding_edges {
                if e.index() >= self.edges.len() {
                    return Err(ValidationError::new(DanglingReference, f.id));
                }
                if !self.edge(e).faces().contains(&f.id) {
                    return Err(ValidationError::new(DanglingReference, f.id));
                }
            }
            match &f.surface {
                SurfaceGeometry::Cylinder { radius, .. } if *radius <= 0.0 => {
                    return Err(ValidationError::new(BadNormal, f.id));
                }
                SurfaceGeometry::Cone { half_angle, .. }
                    if *half_angle <= 0.0 || *half_angle >= std::f64::consts::FRAC_PI_2 =>
                {
                    return Err(ValidationError::new(BadNormal, f.id));
                }
                SurfaceGeometry::RuledSaddle => {}
                s => {
                    if !s.contains(f.representative_point, ON_SURFACE_TOL) {
                        return Err(ValidationError::new(BadNormal, f.id));
                    }
                }
            }
        }

        // Cross-check edge->face against face->edge symmetry.
        for e in &self.edges {
            for f in e.faces() {
                if !self.face(f).bounding_edges.contains(&e.id) {
                    return Err(ValidationError::new(DanglingReference, e.id));
                }
            }
        }

        self.check_euler()?;
        Ok(())
    }

    /// Euler consistency: chi = (V + C) - E - sum_f(loops(f) - 1) + F must
    /// equal 2 - 2*genus, where C counts closed edges (each carries an
    /// implicit vertex) and a face's loops are the connected components of
    /// its bounding edge set.
    fn check_euler(&self) -> Result<(), ValidationError> {
        let v = self.vertices.len() as i64;
        let e = self.edges.len() as i64;
        let f = self.faces.len() as i64;
        let closed = self.edges.iter().filter(|e| e.is_closed()).count() as i64;
        let extra_loops: i64 = self
            .faces
            .iter()
            .map(|face| (self.face_boundary_components(face) as i64 - 1).max(0))
            .sum();
        let chi = v + closed - e - extra_loops + f;
        let expected = 2 - 2 * self.genus as i64;
        if chi != expected {
            return Err(ValidationError::new(
                ValidationKind::EulerMismatch,
                format!("chi={} expected={}", chi, expected),
            ));
        }
        Ok(())
    }

    /// Number of connected components of a face's bounding edge set.
    /// Closed edges are components of their own.
    pub fn face_boundary_components(&self, face: &Face) -> usize {
        let mut components = 0usize;
        let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
        for &start in &face.bounding_edges {
            if seen.contains(&start) {
                continue;
            }
            components += 1;
            let mut queue = vec![start];
            seen.insert(start);
            while let Some(cur) = queue.pop() {
                let Some((a, b)) = self.edge(cur).endpoints else {
                    continue;
                };
                for &other in &face.bounding_edges {
                    if seen.contains(&other) {
                        continue;
                    }
                    if let Some((c, d)) = self.edge(other).endpoints {
                        if a == c || a == d || b == c || b == d {
                            seen.insert(other);
                            queue.push(other);
                        }
                    }
                }
            }
        }
        components
    }

    /// Direction at `p` that is tangent to `face`, perpendicular to the
    /// edge tangent `t`, and points into the face's interior. Independent of
    /// the edge's stored orientation and left/right labeling.
    ///
    /// Plane faces use a crossing-parity point-in-face test against the
    /// face's full bounding curve set, which handles non-convex outlines and
    /// inner loops. Curved faces use the chord toward the representative
    /// point, which is exact for the wall patches this kernel supports.
    pub fn interior_direction(
        &self,
        face_id: FaceId,
        p: Point3,
        t: UnitVec3,
    ) -> Result<UnitVec3, GeomError> {
        let face = self.face(face_id);
        let n = face.surface.outward_normal_at(p)?;
        let candidate = n.as_vec().cross(t.as_vec());
        let candidate = candidate.normalized().ok_or(GeomError::PointOffSurface)?;

        match &face.surface {
            SurfaceGeometry::Plane { .. } => {
                let step = 1e-4;
                for dir in [candidate, -candidate] {
                    if self.point_in_plane_face(face, p + dir * step) {
                        return Ok(UnitVec3::from_normalized(dir).expect("unit"));
                    }
                }
                Err(GeomError::PointOffSurface)
            }
            _ => {
                let chord = face.representative_point - p;
                let s = chord.dot(candidate);
                if s.abs() < 1e-12 {
                    return Err(GeomError::PointOffSurface);
                }
                let dir = if s > 0.0 { candidate } else { -candidate };
                Ok(UnitVec3::from_normalized(dir).expect("unit"))
            }
        }
    }

    /// Crossing-parity test in the plane of a planar face.
    fn point_in_plane_face(&self, face: &Face, q: Point3) -> bool {
        let SurfaceGeometry::Plane {
            point,
            outward_normal,
        } = &face.surface
        else {
            return false;
        };
        let n = outward_normal.as_vec();
        let u = n.any_perpendicular();
        let v = n.cross(u);
        let origin = *point;
        let to2d = |p: Point3| -> (f64, f64) {
            let d = p - origin;
            (d.dot(u), d.dot(v))
        };
        let (qx, qy) = to2d(q);
        // Fixed irrational-ish ray direction dodges vertex/tangency grazing
        // for the axis-aligned fixtures this kernel deals in.
        let (rx, ry) = (0.932_419_306_271f64, 0.361_338_772_491f64);

        let mut crossings = 0usize;
        for &eid in &face.bounding_edges {
            let edge = self.edge(eid);
            match &edge.curve {
                EdgeCurve::LineSegment => {
                    let (a, b) = edge.endpoints.expect("line has endpoints");
                    let (ax, ay) = to2d(self.vertex(a).position);
                    let (bx, by) = to2d(self.vertex(b).position);
                    // Solve q + s*r = a + w*(b - a), s > 0, 0 <= w < 1.
                    let (dx, dy) = (bx - ax, by - ay);
                    let det = rx * dy - ry * dx;
                    if det.abs() < 1e-15 {
                        continue;
                    }
                    let s = ((ax - qx) * dy - (ay - qy) * dx) / det;
                    let w = (rx * (ay - qy) - ry * (ax - qx)) / -det;
                    if s > 0.0 && (0.0..1.0).contains(&w) {
                        crossings += 1;
                    }
                }
                EdgeCurve::CircularArc {
                    center,
                    radius,
                    axis,
                }
                | EdgeCurve::FullCircle {
                    center,
                    radius,
                    axis,
                } => {
                    let (cx, cy) = to2d(*center);
                    // Ray-circle intersection: |q + s*r - c|^2 = R^2.
                    let (ox, oy) = (qx - cx, qy - cy);
                    let b = ox * rx + oy * ry;
                    let c = ox * ox + oy * oy - radius * radius;
                    let disc = b * b - c;
                    if disc <= 0.0 {
                        continue;
                    }
                    let sq = disc.sqrt();
                    for s in [-b - sq, -b + sq] {
                        if s <= 0.0 {
                            continue;
                        }
                        let (hx, hy) = (ox + s * rx, oy + s * ry);
                        if self.arc_contains_2d(edge, *axis, *center, u, v, origin, hx, hy) {
                            crossings += 1;
                        }
                    }
                }
            }
        }
        crossings % 2 == 1
    }

    /// Whether the 2D hit point (relative to the arc's center) lies within
    /// the arc's angular sweep. Full circles always contain the hit.
    #[allow(clippy::too_many_arguments)]
    fn arc_contains_2d(
        &self,
        edge: &Edge,
        axis: UnitVec3,
        center: Point3,
        u: Vec3,
        v: Vec3,
        origin: Point3,
        hx: f64,
        hy: f64,
    ) -> bool {
        let Some((a, b)) = edge.endpoints else {
            return true;
        };
        // Angles measured counterclockwise around the arc's own axis; the
        // face plane's (u, v) frame may be either-handed relative to it.
        let axis_n = axis.as_vec();
        let sign = u.cross(v).dot(axis_n).signum();
        let ang = |x: f64, y: f64| -> f64 {
            let raw = y.atan2(x);
            if sign >= 0.0 {
                raw
            } else {
                -raw
            }
        };
        let to2d = |p: Point3| -> (f64, f64) {
            let d = p - origin;
            (
                d.dot(u) - (center - origin).dot(u),
                d.dot(v) - (center - origin).dot(v),
            )
        };
        let (ax2, ay2) = to2d(self.vertex(a).position);
        let (bx2, by2) = to2d(self.vertex(b).position);
        let start = ang(ax2, ay2);
        let end = ang(bx2, by2);
        let hit = ang(hx, hy);
        let tau = std::f64::consts::TAU;
        let sweep = (end - start).rem_euclid(tau);
        let off = (hit - start).rem_euclid(tau);
        off <= sweep + 1e-12
    }
}

/// Reflects a model through the plane x = 0, preserving validity and the
/// left-face orientation convention. Mirroring flips handedness, so every
/// edge is also reversed, which restores the face order: line endpoints are
/// swapped, and circular curves keep their mirrored axis (the cross product
/// in the tangent is a pseudovector, so the mirrored traversal is already
/// the reversed one).
pub fn mirror_x(model: &SolidModel) -> SolidModel {
    let mp = |p: Point3| point3(-p.x, p.y, p.z);
    let mv = |v: Vec3| vec3(-v.x, v.y, v.z);
    let mu = |u: UnitVec3| UnitVec3::from_normalized(mv(u.as_vec())).expect("unit");

    let vertices = model
        .vertices
        .iter()
        .map(|v| Vertex {
            id: v.id,
            position: mp(v.position),
        })
        .collect();
    let faces = model
        .faces
        .iter()
        .map(|f| Face {
            id: f.id,
            surface: match &f.surface {
                SurfaceGeometry::Plane {
                    point,
                    outward_normal,
                } => SurfaceGeometry::Plane {
                    point: mp(*point),
                    outward_normal: mu(*outward_normal),
                },
                SurfaceGeometry::Cylinder {
                    axis_point,
                    axis_dir,
                    radius,
                    material_side,
                } => SurfaceGeometry::Cylinder {
                    axis_point: mp(*axis_point),
                    axis_dir: mu(*axis_dir),
                    radius: *radius,
                    material_side: *material_side,
                },
                SurfaceGeometry::Cone {
                    apex,
                    axis_dir,
                    half_angle,
                    material_side,
                } => SurfaceGeometry::Cone {
                    apex: mp(*apex),
                    axis_dir: mu(*axis_dir),
                    half_angle: *half_angle,
                    material_side: *material_side,
                },
                SurfaceGeometry::RuledSaddle => SurfaceGeometry::RuledSaddle,
            },
            bounding_edges: f.bounding_edges.clone(),
            representative_point: mp(f.representative_point),
        })
        .collect();
    let edges = model
        .edges
        .iter()
        .map(|e| Edge {
            id: e.id,
            endpoints: e.endpoints.map(|(a, b)| (b, a)),
            curve: match &e.curve {
                EdgeCurve::LineSegment => EdgeCurve::LineSegment,
                EdgeCurve::CircularArc {
                    center,
                    axis,
                    radius,
                } => EdgeCurve::CircularArc {
                    center: mp(*center),
                    axis: mu(*axis),
                    radius: *radius,
                },
                EdgeCurve::FullCircle {
                    center,
                    axis,
                    radius,
                } => EdgeCurve::FullCircle {
                    center: mp(*center),
                    axis: mu(*axis),
                    radius: *radius,
                },
            },
            adjacent_faces: e.adjacent_faces,
            midpoint: mp(e.midpoint),
        })
        .collect();

    SolidModel {
        name: model.name.clone(),
        genus: model.genus,
        vertices,
        edges,
        faces,
    }
}
