//! SVG rendering of drawings. Presentation only: coordinates are realized
//! numerically with the default basis assignment and fitted to the viewport
//! by a uniform (slope-preserving) transform; raw floats, no grid snapping.

use std::fmt::Write;

use crate::drawer::Drawing;
use crate::error::RealizeError;
use crate::geometry::{numeric_realize, BasisAssignment};

const VIEW: f64 = 800.0;
const MARGIN: f64 = 40.0;

/// Renders the drawing as a standalone SVG 1.1 document.
pub fn render_svg(d: &Drawing) -> Result<String, RealizeError> {
    let assignment = BasisAssignment::default_for(d.max_symbol());
    let raw = numeric_realize(&d.pos, &assignment, 1e-9)?;

    let (min_x, max_x) = min_max(raw.iter().map(|p| p.0));
    let (min_y, max_y) = min_max(raw.iter().map(|p| p.1));
    let span = (max_x - min_x).max(max_y - min_y).max(1e-12);
    let scale = (VIEW - 2.0 * MARGIN) / span;
    // Uniform scale plus flip to screen coordinates (y grows downward).
    let place = |(x, y): (f64, f64)| -> (f64, f64) {
        (
            MARGIN + (x - min_x) * scale,
            VIEW - MARGIN - (y - min_y) * scale,
        )
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{VIEW}\" height=\"{VIEW}\" viewBox=\"0 0 {VIEW} {VIEW}\">"
    );
    let _ = writeln!(out, "  <g stroke=\"#333\" stroke-width=\"1.5\">");
    for (u, v) in d.graph.edges() {
        let (x1, y1) = place(raw[u]);
        let (x2, y2) = place(raw[v]);
        let _ = writeln!(
            out,
            "    <line x1=\"{x1:.6}\" y1=\"{y1:.6}\" x2=\"{x2:.6}\" y2=\"{y2:.6}\"/>"
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "  <g fill=\"#c22\">");
    for (v, &p) in raw.iter().enumerate() {
        let (cx, cy) = place(p);
        let _ = writeln!(
            out,
            "    <circle cx=\"{cx:.6}\" cy=\"{cy:.6}\" r=\"4\"><title>v{v}</title></circle>"
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

fn min_max(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for v in values {
        min = min.min(v);
        max = max.max(v);
    }
    if min > max {
        (0.0, 0.0)
    } else {
        (min, max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawer::{fixture_drawing, FixtureName};

    #[test]
    fn renders_fixture() {
        let svg = render_svg(&fixture_drawing(FixtureName::Petersen)).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<line").count(), 15);
        assert_eq!(svg.matches("<circle").count(), 10);
    }

    #[test]
    fn deterministic_output() {
        let a = render_svg(&fixture_drawing(FixtureName::Heawood)).unwrap();
        let b = render_svg(&fixture_drawing(FixtureName::Heawood)).unwrap();
        assert_eq!(a, b);
    }
}
