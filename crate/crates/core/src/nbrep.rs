//! The `.nbrep` neutral B-REP text format: line-oriented, `#` comments.
//!
//! ```text
//! nbrep 1
//! solid <name> genus <g>
//! v <id> <x> <y> <z>
//! f <id> plane <px> <py> <pz> <nx> <ny> <nz>
//! f <id> cylinder <ax> <ay> <az> <dx> <dy> <dz> <radius> <outside|inside>
//! f <id> cone <ax> <ay> <az> <dx> <dy> <dz> <half_angle_rad> <outside|inside>
//! f <id> saddle
//! e <id> <v1|-> <v2|-> <f_left> <f_right> line m <mx> <my> <mz>
//! e <id> <v1|-> <v2|-> <f_left> <f_right> arc <cx> <cy> <cz> <ax> <ay> <az> <r> m <mx> <my> <mz>
//! e <id> - - <f_left> <f_right> circle <cx> <cy> <cz> <ax> <ay> <az> <r> m <mx> <my> <mz>
//! ```
//!
//! Ids are dense from 0 per kind. A plane's `<px py pz>` doubles as the
//! face's interior representative point; curved faces derive theirs from
//! their bounding edges, so the derivation is a pure function of the
//! document and round-trips exactly.

use std::fmt::Write as _;

use thiserror::Error;

use crate::brep::{
    Edge, EdgeCurve, EdgeId, Face, FaceId, MaterialSide, SolidModel, SurfaceGeometry,
    ValidationError, Vertex, VertexId,
};
use crate::geom::{point3, vec3, Point3, UnitVec3};

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at line {line}, col {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Error, PartialEq)]
pub enum SerializeError {
    #[error("a closed solid needs at least 4 faces, model has {0}")]
    TooFewFaces(usize),
}

fn syntax(line: usize, col: usize, msg: impl ToString) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.to_string(),
    }
}

struct Cursor<'a> {
    tokens: Vec<(usize, &'a str)>, // (column, token)
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(line_no: usize, text: &'a str) -> Self {
        let mut tokens = Vec::new();
        let mut col = 0usize;
        for tok in text.split_whitespace() {
            let at = text[col..].find(tok).map(|i| col + i).unwrap_or(col);
            tokens.push((at + 1, tok));
            col = at + tok.len();
        }
        Cursor {
            tokens,
            pos: 0,
            line: line_no,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let item = self.tokens.get(self.pos).copied();
        self.pos += 1;
        item.ok_or_else(|| {
            syntax(
                self.line,
                self.tokens.last().map(|t| t.0).unwrap_or(1),
                format!("expected {what}"),
            )
        })
    }

    fn f64(&mut self, what: &str) -> Result<f64, ParseError> {
        let (col, tok) = self.next(what)?;
        tok.parse::<f64>()
            .map_err(|_| syntax(self.line, col, format!("expected {what}, got `{tok}`")))
    }

    fn u32(&mut self, what: &str) -> Result<u32, ParseError> {
        let (col, tok) = self.next(what)?;
        tok.parse::<u32>()
            .map_err(|_| syntax(self.line, col, format!("expected {what}, got `{tok}`")))
    }

    fn point(&mut self, what: &str) -> Result<Point3, ParseError> {
        Ok(point3(self.f64(what)?, self.f64(what)?, self.f64(what)?))
    }

    fn unit(&mut self, what: &str) -> Result<UnitVec3, ParseError> {
        let col = self.tokens.get(self.pos).map(|t| t.0).unwrap_or(1);
        let v = vec3(self.f64(what)?, self.f64(what)?, self.f64(what)?);
        UnitVec3::new(v).ok_or_else(|| {
            ParseError::Validation(ValidationError {
                kind: crate::brep::ValidationKind::BadNormal,
                entity: format!("line {} col {col}", self.line),
            })
        })
    }

    fn done(&mut self) -> Result<(), ParseError> {
        if self.pos < self.tokens.len() {
            let (col, tok) = self.tokens[self.pos];
            return Err(syntax(
                self.line,
                col,
                format!("unexpected trailing `{tok}`"),
            ));
        }
        Ok(())
    }
}

/// Parses and fully validates a neutral-format document.
pub fn parse_model(text: &str) -> Result<SolidModel, ParseError> {
    let mut name = None;
    let mut genus = 0u32;
    let mut saw_magic = false;
    let mut vertices: Vec<(u32, Point3)> = Vec::new();
    let mut faces: Vec<(u32, SurfaceGeometry, Option<Point3>)> = Vec::new();
    #[allow(clippy::type_complexity)]
    let mut edges: Vec<(u32, Option<(u32, u32)>, (u32, u32), EdgeCurve, Point3)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::new(line_no, body);
        let (col, kw) = cur.next("keyword")?;
        match kw {
            "nbrep" => {
                let version = cur.u32("format version")?;
                if version != 1 {
                    return Err(syntax(
                        line_no,
                        col,
                        format!("unsupported version {version}"),
                    ));
                }
                saw_magic = true;
                cur.done()?;
            }
            "solid" => {
                let (_, n) = cur.next("solid name")?;
                let (gcol, g) = cur.next("`genus`")?;
                if g != "genus" {
                    return Err(syntax(line_no, gcol, "expected `genus`"));
                }
                genus = cur.u32("genus value")?;
                name = Some(n.to_string());
                cur.done()?;
            }
            "v" => {
                let id = cur.u32("vertex id")?;
                let p = cur.point("vertex coordinate")?;
                vertices.push((id, p));
                cur.done()?;
            }
            "f" => {
                let id = cur.u32("face id")?;
                let (kcol, kind) = cur.next("surface kind")?;
                let surface = match kind {
                    "plane" => {
                        let p = cur.point("plane point")?;
                        let n = cur.unit("plane normal")?;
                        (
                            SurfaceGeometry::Plane {
                                point: p,
                                outward_normal: n,
                            },
                            Some(p),
                        )
                    }
                    "cylinder" => {
                        let axis_point = cur.point("axis point")?;
                        let axis_dir = cur.unit("axis direction")?;
                        let radius = cur.f64("radius")?;
                        let side = parse_side(&mut cur)?;
                        (
                            SurfaceGeometry::Cylinder {
                                axis_point,
                                axis_dir,
                                radius,
                                material_side: side,
                            },
                            None,
                        )
                    }
                    "cone" => {
                        let apex = cur.point("apex")?;
                        let axis_dir = cur.unit("axis direction")?;
                        let half_angle = cur.f64("half angle")?;
                        let side = parse_side(&mut cur)?;
                        (
                            SurfaceGeometry::Cone {
                                apex,
                                axis_dir,
                                half_angle,
                                material_side: side,
                            },
                            None,
                        )
                    }
                    "saddle" => (SurfaceGeometry::RuledSaddle, None),
                    other => {
                        return Err(syntax(line_no, kcol, format!("unknown surface `{other}`")))
                    }
                };
                faces.push((id, surface.0, surface.1));
                cur.done()?;
            }
            "e" => {
                let id = cur.u32("edge id")?;
                let v1 = parse_opt_id(&mut cur, "first endpoint")?;
                let v2 = parse_opt_id(&mut cur, "second endpoint")?;
                let fl = cur.u32("left face id")?;
                let fr = cur.u32("right face id")?;
                let (ccol, ckind) = cur.next("curve kind")?;
                let curve = match ckind {
                    "line" => EdgeCurve::LineSegment,
                    "arc" => EdgeCurve::CircularArc {
                        center: cur.point("arc center")?,
                        axis: cur.unit("arc axis")?,
                        radius: cur.f64("arc radius")?,
                    },
                    "circle" => EdgeCurve::FullCircle {
                        center: cur.point("circle center")?,
                        axis: cur.unit("circle axis")?,
                        radius: cur.f64("circle radius")?,
                    },
                    other => return Err(syntax(line_no, ccol, format!("unknown curve `{other}`"))),
                };
                let (mcol, m) = cur.next("`m`")?;
                if m != "m" {
                    return Err(syntax(line_no, mcol, "expected `m`"));
                }
                let midpoint = cur.point("midpoint")?;
                let endpoints = match (v1, v2) {
                    (Some(a), Some(b)) => Some((a, b)),
                    (None, None) => None,
                    _ => {
                        return Err(syntax(
                            line_no,
                            col,
                            "endpoints must both be ids or both `-`",
                        ))
                    }
                };
                edges.push((id, endpoints, (fl, fr), curve, midpoint));
                cur.done()?;
            }
            other => return Err(syntax(line_no, col, format!("unknown record `{other}`"))),
        }
    }

    if !saw_magic {
        return Err(syntax(1, 1, "missing `nbrep 1` header"));
    }
    let name = name.ok_or_else(|| syntax(1, 1, "missing `solid` header"))?;

    let vertices = dense(vertices, "v")?
        .into_iter()
        .enumerate()
        .map(|(i, p)| Vertex {
            id: VertexId(i as u32),
            position: p,
        })
        .collect::<Vec<_>>();

    let face_records = dense(
        faces
            .into_iter()
            .map(|(id, s, rep)| (id, (s, rep)))
            .collect(),
        "f",
    )?;
    let edge_records = dense(
        edges
            .into_iter()
            .map(|(id, ep, fs, c, m)| (id, (ep, fs, c, m)))
            .collect(),
        "e",
    )?;

    let edges: Vec<Edge> = edge_records
        .into_iter()
        .enumerate()
        .map(|(i, (ep, (fl, fr), curve, midpoint))| Edge {
            id: EdgeId(i as u32),
            endpoints: ep.map(|(a, b)| (VertexId(a), VertexId(b))),
            curve,
            adjacent_faces: (FaceId(fl), FaceId(fr)),
            midpoint,
        })
        .collect();

    let mut bounding: Vec<Vec<EdgeId>> = vec![Vec::new(); face_records.len()];
    for e in &edges {
        for f in e.faces() {
            if f.index() < bounding.len() {
                bounding[f.index()].push(e.id);
            }
        }
    }

    let faces: Vec<Face> = face_records
        .into_iter()
        .enumerate()
        .map(|(i, (surface, stored_rep))| {
            let bounding_edges = bounding[i].clone();
            let representative_point = stored_rep
                .unwrap_or_else(|| derive_representative_point(&surface, &bounding_edges, &edges));
            Face {
                id: FaceId(i as u32),
                surface,
                bounding_edges,
                representative_point,
            }
        })
        .collect();

    let model = SolidModel {
        name,
        genus,
        vertices,
        edges,
        faces,
    };
    model.validate()?;
    Ok(model)
}

fn parse_side(cur: &mut Cursor) -> Result<MaterialSide, ParseError> {
    let (col, tok) = cur.next("outside|inside")?;
    match tok {
        "outside" => Ok(MaterialSide::Outside),
        "inside" => Ok(MaterialSide::Inside),
        other => Err(syntax(
            cur.line,
            col,
            format!("expected outside|inside, got `{other}`"),
        )),
    }
}

fn parse_opt_id(cur: &mut Cursor, what: &str) -> Result<Option<u32>, ParseError> {
    let (col, tok) = cur.next(what)?;
    if tok == "-" {
        Ok(None)
    } else {
        tok.parse::<u32>().map(Some).map_err(|_| {
            syntax(
                cur.line,
                col,
                format!("expected {what} or `-`, got `{tok}`"),
            )
        })
    }
}

fn dense<T>(mut items: Vec<(u32, T)>, kind: &str) -> Result<Vec<T>, ParseError> {
    items.sort_by_key(|(id, _)| *id);
    for (i, (id, _)) in items.iter().enumerate() {
        if *id as usize != i {
            return Err(syntax(
                1,
                1,
                format!("`{kind}` ids must be dense from 0, got {id} at position {i}"),
            ));
        }
    }
    Ok(items.into_iter().map(|(_, t)| t).collect())
}

/// Canonical interior representative point for a curved face, derived from
/// its bounding edges: mean axial station combined with the radial direction
/// of the lowest-id bounding edge's midpoint. Saddles take the centroid of
/// their edges' midpoints.
pub(crate) fn derive_representative_point(
    surface: &SurfaceGeometry,
    bounding: &[EdgeId],
    edges: &[Edge],
) -> Point3 {
    let mids: Vec<Point3> = bounding.iter().map(|e| edges[e.index()].midpoint).collect();
    let centroid = || -> Point3 {
        let mut acc = vec3(0.0, 0.0, 0.0);
        for m in &mids {
            acc = acc + m.to_vec();
        }
        let n = mids.len().max(1) as f64;
        point3(acc.x / n, acc.y / n, acc.z / n)
    };
    match surface {
        SurfaceGeometry::Cylinder {
            axis_point,
            axis_dir,
            radius,
            ..
        } => {
            if mids.is_empty() {
                return *axis_point;
            }
            let a = axis_dir.as_vec();
            let mean_t: f64 =
                mids.iter().map(|m| (*m - *axis_point).dot(a)).sum::<f64>() / mids.len() as f64;
            let first = mids[0];
            let radial = (first - *axis_point) - a * (first - *axis_point).dot(a);
            match radial.normalized() {
                Some(r) => *axis_point + a * mean_t + r * *radius,
                None => *axis_point + a * mean_t,
            }
        }
        SurfaceGeometry::Cone {
            apex,
            axis_dir,
            half_angle,
            ..
        } => {
            if mids.is_empty() {
                return *apex;
            }
            let a = axis_dir.as_vec();
            let mean_t: f64 =
                mids.iter().map(|m| (*m - *apex).dot(a)).sum::<f64>() / mids.len() as f64;
            let first = mids[0];
            let radial = (first - *apex) - a * (first - *apex).dot(a);
            match radial.normalized() {
                Some(r) => *apex + a * mean_t + r * (mean_t * half_angle.tan()),
                None => *apex + a * mean_t,
            }
        }
        SurfaceGeometry::Plane { point, .. } => *point,
        SurfaceGeometry::RuledSaddle => centroid(),
    }
}

/// Serializes a model so that `parse_model(serialize_model(m))` is
/// entity-wise identical to `m`. Floats use Rust's shortest round-trip
/// formatting, so the byte form is stable and exact.
pub fn serialize_model(model: &SolidModel) -> Result<String, SerializeError> {
    if model.faces.len() < 4 {
        return Err(SerializeError::TooFewFaces(model.faces.len()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "nbrep 1");
    let _ = writeln!(out, "solid {} genus {}", model.name, model.genus);
    for v in &model.vertices {
        let _ = writeln!(
            out,
            "v {} {} {} {}",
            v.id.0, v.position.x, v.position.y, v.position.z
        );
    }
    for f in &model.faces {
        match &f.surface {
            SurfaceGeometry::Plane { outward_normal, .. } => {
                // The stored plane point is the representative point.
                let p = f.representative_point;
                let n = outward_normal.as_vec();
                let _ = writeln!(
                    out,
                    "f {} plane {} {} {} {} {} {}",
                    f.id.0, p.x, p.y, p.z, n.x, n.y, n.z
                );
            }
            SurfaceGeometry::Cylinder {
                axis_point,
                axis_dir,
                radius,
                material_side,
            } => {
                let a = axis_point;
                let d = axis_dir.as_vec();
                let _ = writeln!(
                    out,
                    "f {} cylinder {} {} {} {} {} {} {} {}",
                    f.id.0,
                    a.x,
                    a.y,
                    a.z,
                    d.x,
                    d.y,
                    d.z,
                    radius,
                    side_str(*material_side)
                );
            }
            SurfaceGeometry::Cone {
                apex,
                axis_dir,
                half_angle,
                material_side,
            } => {
                let d = axis_dir.as_vec();
                let _ = writeln!(
                    out,
                    "f {} cone {} {} {} {} {} {} {} {}",
                    f.id.0,
                    apex.x,
                    apex.y,
                    apex.z,
                    d.x,
                    d.y,
                    d.z,
                    half_angle,
                    side_str(*material_side)
                );
            }
            SurfaceGeometry::RuledSaddle => {
                let _ = writeln!(out, "f {} saddle", f.id.0);
            }
        }
    }
    for e in &model.edges {
        let (v1, v2) = match e.endpoints {
            Some((a, b)) => (a.0.to_string(), b.0.to_string()),
            None => ("-".to_string(), "-".to_string()),
        };
        let (fl, fr) = e.adjacent_faces;
        let m = e.midpoint;
        match &e.curve {
            EdgeCurve::LineSegment => {
                let _ = writeln!(
                    out,
                    "e {} {} {} {} {} line m {} {} {}",
                    e.id.0, v1, v2, fl.0, fr.0, m.x, m.y, m.z
                );
            }
            EdgeCurve::CircularArc {
                center,
                axis,
                radius,
            } => {
                let a = axis.as_vec();
                let _ = writeln!(
                    out,
                    "e {} {} {} {} {} arc {} {} {} {} {} {} {} m {} {} {}",
                    e.id.0,
                    v1,
                    v2,
                    fl.0,
                    fr.0,
                    center.x,
                    center.y,
                    center.z,
                    a.x,
                    a.y,
                    a.z,
                    radius,
                    m.x,
                    m.y,
                    m.z
                );
            }
            EdgeCurve::FullCircle {
                center,
                axis,
                radius,
            } => {
                let a = axis.as_vec();
                let _ = writeln!(
                    out,
                    "e {} {} {} {} {} circle {} {} {} {} {} {} {} m {} {} {}",
                    e.id.0,
                    v1,
                    v2,
                    fl.0,
                    fr.0,
                    center.x,
                    center.y,
                    center.z,
                    a.x,
                    a.y,
                    a.z,
                    radius,
                    m.x,
                    m.y,
                    m.z
                );
            }
        }
    }
    Ok(out)
}

fn side_str(side: MaterialSide) -> &'static str {
    match side {
        MaterialSide::Outside => "outside",
        MaterialSide::Inside => "inside",
    }
}
