//! Static SVG figures of patches, optionally overlaid with the image of the
//! patch edges under a self-similarity.

use std::fmt::Write as _;

use penrose_core::generator::{Patch, RhombKind};
use penrose_core::projections::LatticePoint;
use penrose_core::similarity::{image_point, ScalingFactor};

use crate::render::RenderBasis;

pub const PX_PER_UNIT: f64 = 40.0;
const MARGIN: f64 = 1.0;
const THICK_FILL: &str = "#e3b25b";
const THIN_FILL: &str = "#4f7cac";
const OVERLAY_STROKE: &str = "#c0392b";

/// Similarity whose edge images are drawn over the patch.
#[derive(Clone, Copy, Debug)]
pub struct Overlay {
    factor: ScalingFactor,
    center: LatticePoint,
}

impl Overlay {
    pub fn new(factor: ScalingFactor, center: LatticePoint) -> Result<Self, penrose_core::Error> {
        factor.admissible_or_err()?;
        Ok(Overlay { factor, center })
    }

    fn image(&self, x: &LatticePoint) -> LatticePoint {
        image_point(&self.factor, &self.center, x).expect("checked in Overlay::new")
    }
}

struct Frame {
    min: [f64; 2],
    max: [f64; 2],
}

impl Frame {
    fn of(points: &[[f64; 2]]) -> Self {
        if points.is_empty() {
            return Frame {
                min: [0.0; 2],
                max: [0.0; 2],
            };
        }
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in points {
            for i in 0..2 {
                min[i] = min[i].min(p[i]);
                max[i] = max[i].max(p[i]);
            }
        }
        Frame { min, max }
    }

    fn width(&self) -> f64 {
        (self.max[0] - self.min[0] + 2.0 * MARGIN) * PX_PER_UNIT
    }

    fn height(&self) -> f64 {
        (self.max[1] - self.min[1] + 2.0 * MARGIN) * PX_PER_UNIT
    }

    /// Pixel coordinates; SVG's y axis points down.
    fn px(&self, p: [f64; 2]) -> (f64, f64) {
        (
            (p[0] - self.min[0] + MARGIN) * PX_PER_UNIT,
            (self.max[1] - p[1] + MARGIN) * PX_PER_UNIT,
        )
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn emit_svg(patch: &Patch, overlay: Option<&Overlay>) -> String {
    let basis = RenderBasis::new();
    let rendered: Vec<[f64; 2]> = patch.points().iter().map(|x| basis.physical(x)).collect();
    let frame = Frame::of(&rendered);
    let mut out = String::new();
    let (w, h) = (num(frame.width()), num(frame.height()));
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect width="100%" height="100%" fill="#ffffff"/>"##
    );

    let _ = writeln!(out, r##"<g stroke="#222222" stroke-width="1">"##);
    for f in patch.faces() {
        let fill = match f.kind {
            RhombKind::Thick => THICK_FILL,
            RhombKind::Thin => THIN_FILL,
        };
        let pts: Vec<String> = patch
            .face_corners(f)
            .iter()
            .map(|c| {
                let (x, y) = frame.px(basis.physical(c));
                format!("{},{}", num(x), num(y))
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon class="{}" fill="{fill}" points="{}"/>"#,
            f.kind.name(),
            pts.join(" ")
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g fill="#111111">"##);
    for p in &rendered {
        let (x, y) = frame.px(*p);
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="2"/>"#, num(x), num(y));
    }
    let _ = writeln!(out, "</g>");

    if let Some(o) = overlay {
        let _ = writeln!(
            out,
            r#"<g stroke="{OVERLAY_STROKE}" stroke-width="2" fill="none" opacity="0.8">"#
        );
        for e in patch.edges() {
            let a = patch.points()[e.from];
            let b = a.step(e.direction.into());
            let (x1, y1) = frame.px(basis.physical(&o.image(&a)));
            let (x2, y2) = frame.px(basis.physical(&o.image(&b)));
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(x1),
                num(y1),
                num(x2),
                num(y2)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}
