use std::fmt::Write;

use crate::generate::TilingScene;
use crate::geom::{Geodesic, Pt};
use crate::Geometry;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgStyle {
    pub size_px: u32,
    pub stroke: String,
    pub stroke_width: f64,
    pub even_fill: String,
    pub odd_fill: String,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            size_px: 800,
            stroke: "#808080".into(),
            stroke_width: 0.002,
            even_fill: "#ffffff".into(),
            odd_fill: "#000000".into(),
        }
    }
}

/// Fixed generic rotation so no vertex of a spherical scene sits at the pole
/// of the stereographic projection.
fn tilt(p: &Pt) -> Pt {
    let (a, b) = (0.7f64, 0.3f64);
    let (ca, sa, cb, sb) = (a.cos(), a.sin(), b.cos(), b.sin());
    let x = p[0];
    let y = ca * p[1] - sa * p[2];
    let z = sa * p[1] + ca * p[2];
    [cb * x + sb * z, y, -sb * x + cb * z]
}

fn stereo(p: &Pt) -> [f64; 2] {
    let q = tilt(p);
    [q[0] / (1.0 - q[2]), q[1] / (1.0 - q[2])]
}

fn fmt_pt(out: &mut String, p: [f64; 2]) {
    let _ = write!(out, "{:.6} {:.6}", p[0], p[1]);
}

fn edge_path(out: &mut String, geometry: Geometry, a: &Pt, b: &Pt) {
    match geometry {
        Geometry::Euclidean => {
            out.push_str(" L ");
            fmt_pt(out, [b[0], b[1]]);
        }
        Geometry::Hyperbolic => match Geodesic::through(geometry, a, b) {
            Geodesic::DiskCircle { center, radius } => {
                let cross = (a[0] - center[0]) * (b[1] - center[1]) - (a[1] - center[1]) * (b[0] - center[0]);
                let sweep = u8::from(cross > 0.0);
                let _ = write!(out, " A {radius:.6} {radius:.6} 0 0 {sweep} ");
                fmt_pt(out, [b[0], b[1]]);
            }
            _ => {
                out.push_str(" L ");
                fmt_pt(out, [b[0], b[1]]);
            }
        },
        Geometry::Elliptic => {
            // great-circle arc, sampled
            let steps = 16;
            let omega = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]).clamp(-1.0, 1.0).acos();
            for k in 1..=steps {
                let t = k as f64 / steps as f64;
                let (wa, wb) = if omega < 1e-12 {
                    (1.0 - t, t)
                } else {
                    (((1.0 - t) * omega).sin() / omega.sin(), (t * omega).sin() / omega.sin())
                };
                let p = [wa * a[0] + wb * b[0], wa * a[1] + wb * b[1], wa * a[2] + wb * b[2]];
                out.push_str(" L ");
                fmt_pt(out, stereo(&p));
            }
        }
    }
}

fn project(geometry: Geometry, p: &Pt) -> [f64; 2] {
    match geometry {
        Geometry::Elliptic => stereo(p),
        _ => [p[0], p[1]],
    }
}

/// SVG 1.1 document with one path per triangle, filled by reflection parity.
/// Disk scenes include the boundary circle.
pub fn emit_svg(scene: &TilingScene, style: &SvgStyle) -> String {
    let extent = match scene.geometry {
        Geometry::Hyperbolic => 1.05,
        _ => {
            scene
                .triangles
                .iter()
                .flat_map(|t| t.vertices.iter().map(|v| project(scene.geometry, v)))
                .map(|p| p[0].abs().max(p[1].abs()))
                .filter(|x| x.is_finite())
                .fold(1.0f64, f64::max)
                .min(6.0)
                * 1.05
        }
    };
    let sw = style.stroke_width * extent;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="{1:.4} {1:.4} {2:.4} {2:.4}">"#,
        style.size_px,
        -extent,
        2.0 * extent
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1)" stroke="{}" stroke-width="{sw:.5}">"#, style.stroke);
    if scene.geometry == Geometry::Hyperbolic {
        let _ = writeln!(out, r#"<circle cx="0" cy="0" r="1" fill="none"/>"#);
    }
    for t in &scene.triangles {
        let mut d = String::from("M ");
        fmt_pt(&mut d, project(scene.geometry, &t.vertices[0]));
        for k in 0..3 {
            edge_path(&mut d, scene.geometry, &t.vertices[k], &t.vertices[(k + 1) % 3]);
        }
        d.push_str(" Z");
        let fill = if t.parity { &style.odd_fill } else { &style.even_fill };
        let _ = writeln!(out, r#"<path class="tile" d="{d}" fill="{fill}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{generate_tiling, Limit, TriangleSignature};

    fn well_formed(doc: &str) -> bool {
        // tag balance over the elements this writer emits
        let opens = doc.matches("<svg").count() + doc.matches("<g ").count();
        let closes = doc.matches("</svg>").count() + doc.matches("</g>").count();
        opens == closes && doc.starts_with("<?xml") && doc.trim_end().ends_with("</svg>")
    }

    #[test]
    fn hyperbolic_scene() {
        let scene = generate_tiling(&TriangleSignature::new(2, 3, 7), Some(Limit::MaxWord(6))).unwrap();
        let doc = emit_svg(&scene, &SvgStyle::default());
        assert!(well_formed(&doc));
        assert_eq!(doc.matches("class=\"tile\"").count(), scene.triangles.len());
        assert!(doc.contains("<circle"));
        assert!(doc.contains(" A "));
    }

    #[test]
    fn spherical_scene() {
        let scene = generate_tiling(&TriangleSignature::new(2, 3, 3), None).unwrap();
        let doc = emit_svg(&scene, &SvgStyle::default());
        assert_eq!(doc.matches("class=\"tile\"").count(), 24);
        assert!(!doc.contains("NaN") && !doc.contains("inf"));
    }

    #[test]
    fn empty_scene() {
        let mut scene = generate_tiling(&TriangleSignature::new(2, 3, 3), None).unwrap();
        scene.triangles.clear();
        let doc = emit_svg(&scene, &SvgStyle::default());
        assert!(well_formed(&doc));
        assert_eq!(doc.matches("<path").count(), 0);
    }
}
