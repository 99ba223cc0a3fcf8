//! JSON and CSV serialization of patches and reports.

use std::fmt::Write as _;

use penrose_core::generator::Patch;
use penrose_core::similarity::{InflationCenter, VerificationReport};
use penrose_core::{GoldenNumber, GoldenVector, InternalPoint, LatticePoint};
use serde_json::{json, Value};
use thiserror::Error;

use crate::render::RenderBasis;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed document: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] penrose_core::Error),
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

fn point_json(x: &LatticePoint) -> Value {
    json!(x.coords())
}

pub fn patch_to_json(p: &Patch) -> Value {
    let offset: Vec<String> = p.offset().coords().iter().map(|c| c.to_string()).collect();
    let points: Vec<Value> = p.points().iter().map(point_json).collect();
    let edges: Vec<Value> = p
        .edges()
        .iter()
        .map(|e| json!([e.from, e.direction]))
        .collect();
    let faces: Vec<Value> = p
        .faces()
        .iter()
        .map(|f| json!([f.corner, f.j, f.k, f.kind.name()]))
        .collect();
    json!({
        "offset": offset,
        "radius_squared": p.radius_squared().to_string(),
        "points": points,
        "edges": edges,
        "faces": faces,
    })
}

/// Compact JSON with a trailing newline.
pub fn export_json(p: &Patch) -> String {
    let mut s = patch_to_json(p).to_string();
    s.push('\n');
    s
}

fn golden(v: &Value) -> Result<GoldenNumber, IoError> {
    let s = v
        .as_str()
        .ok_or_else(|| schema("expected a golden-number string"))?;
    Ok(s.parse::<GoldenNumber>()
        .map_err(penrose_core::Error::from)?)
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, IoError> {
    v.as_array()
        .ok_or_else(|| schema(format!("`{what}` must be an array")))
}

fn int(v: &Value) -> Result<i64, IoError> {
    v.as_i64().ok_or_else(|| schema("expected an integer"))
}

pub fn parse_point(v: &Value) -> Result<LatticePoint, IoError> {
    let a = array(v, "point")?;
    if a.len() != 5 {
        return Err(schema("points have five coordinates"));
    }
    let mut c = [0i64; 5];
    for (slot, x) in c.iter_mut().zip(a) {
        *slot = int(x)?;
    }
    Ok(LatticePoint::new(c))
}

/// Parses a patch document. Edges and faces are re-derived from the points and
/// must agree with the stored ones.
pub fn patch_from_json(v: &Value) -> Result<Patch, IoError> {
    let get = |k: &str| v.get(k).ok_or_else(|| schema(format!("missing `{k}`")));
    let offset = array(get("offset")?, "offset")?;
    if offset.len() != 5 {
        return Err(schema("offset has five coordinates"));
    }
    let mut coords = GoldenVector::<5>::zero();
    for (i, c) in offset.iter().enumerate() {
        coords[i] = golden(c)?;
    }
    let offset = InternalPoint::new(coords)?;
    let radius_squared = golden(get("radius_squared")?)?;
    let points = array(get("points")?, "points")?
        .iter()
        .map(parse_point)
        .collect::<Result<Vec<_>, _>>()?;
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(schema("points must be strictly sorted"));
    }
    let patch = Patch::from_points(offset, radius_squared, points).with_tiles();

    let edges = array(get("edges")?, "edges")?;
    let edges_ok = edges.len() == patch.edges().len()
        && edges
            .iter()
            .zip(patch.edges())
            .all(|(e, d)| *e == json!([d.from, d.direction]));
    if !edges_ok {
        return Err(schema("edges do not match the points"));
    }
    let faces = array(get("faces")?, "faces")?;
    let faces_ok = faces.len() == patch.faces().len()
        && faces
            .iter()
            .zip(patch.faces())
            .all(|(f, d)| *f == json!([d.corner, d.j, d.k, d.kind.name()]));
    if !faces_ok {
        return Err(schema("faces do not match the points"));
    }
    Ok(patch)
}

pub fn import_json(s: &str) -> Result<Patch, IoError> {
    patch_from_json(&serde_json::from_str(s)?)
}

/// Formats with `digits` significant digits, dropping trailing zeros.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() {
            "0".into()
        } else {
            v.to_string()
        };
    }
    let exp = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - exp).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// Render coordinates are sums of at most a few hundred unit vectors, so
/// anything this small is cancellation noise.
const RENDER_ZERO: f64 = 1e-9;

fn render_coord(v: f64) -> String {
    format_significant(if v.abs() < RENDER_ZERO { 0.0 } else { v }, 12)
}

/// One line per point: `x1,x2,x3,x4,x5,n,px,py`, no header.
pub fn export_csv(p: &Patch) -> String {
    let r = RenderBasis::new();
    let mut out = String::new();
    for x in p.points() {
        let c = x.coords();
        let [px, py] = r.physical(x);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            c[0],
            c[1],
            c[2],
            c[3],
            c[4],
            x.n(),
            render_coord(px),
            render_coord(py)
        );
    }
    out
}

pub fn report_to_json(r: &VerificationReport) -> Value {
    json!({
        "k": r.factor.k,
        "m": r.factor.m,
        "center": r.center.coords(),
        "points_tested": r.points_tested,
        "failures": r.failures.iter().map(point_json).collect::<Vec<_>>(),
    })
}

pub fn center_to_json(c: &InflationCenter) -> Value {
    json!({
        "y": c.y.coords(),
        "certified": c.certified,
        "delta_squared": c.delta_squared.as_ref().map(|d| d.to_string()),
        "within_delta": c.within_delta,
    })
}
