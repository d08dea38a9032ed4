//! Static SVG output of the singular-value model and an arc, for
//! documentation. Output only; coordinates are converted to floats for
//! drawing.

use crate::arc::{crossing_word, Arc, Circle, SingularModel, CUSP_RAYS};
use num_traits::ToPrimitive;

const SIZE: f64 = 540.0;
const SCALE: f64 = 60.0;

fn map(x: f64, y: f64) -> (f64, f64) {
    (SIZE / 2.0 + SCALE * x, SIZE / 2.0 - SCALE * y)
}

/// Render the model circles, cusp rays, branch cut, edge labels, the arc
/// polyline, and its crossing events.
pub fn render_svg(arc: &Arc) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    s.push_str(&format!(
        "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"
    ));
    let (cx, cy) = map(0.0, 0.0);
    for (r, dash, color) in [
        (1.0, "4 3", "#555"),
        (2.0, "4 3", "#555"),
        (3.0, "", "#111"),
        (4.0, "2 5", "#999"),
    ] {
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(" stroke-dasharray=\"{dash}\"")
        };
        s.push_str(&format!(
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"none\" stroke=\"{color}\"{dash_attr}/>\n",
            SCALE * r
        ));
    }
    // cusp rays between the two cusped circles
    for (x, y) in CUSP_RAYS {
        let n = ((x * x + y * y) as f64).sqrt();
        let (ux, uy) = (x as f64 / n, y as f64 / n);
        let (x1, y1) = map(ux, uy);
        let (x2, y2) = map(2.0 * ux, 2.0 * uy);
        s.push_str(&format!(
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#c33\" stroke-width=\"1\"/>\n"
        ));
    }
    // branch cut
    let (x1, y1) = map(1.0, 0.0);
    let (x2, y2) = map(2.0, 0.0);
    s.push_str(&format!(
        "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#36c\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n"
    ));
    for (label, ang) in [("a2", 0.45f64), ("b2", 2.0), ("c2'", 4.2), ("a2'", 5.9)] {
        let (lx, ly) = map(2.25 * ang.cos(), 2.25 * ang.sin());
        s.push_str(&format!(
            "<text x=\"{lx}\" y=\"{ly}\" font-size=\"13\" fill=\"#333\">{label}</text>\n"
        ));
    }
    // the arc
    let pts: Vec<(f64, f64)> = arc
        .vertices()
        .iter()
        .map(|(x, y)| map(x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0)))
        .collect();
    let path: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    s.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#090\" stroke-width=\"2\"/>\n",
        path.join(" ")
    ));
    if let Ok(word) = crossing_word(arc, &SingularModel::standard()) {
        for e in &word.events {
            let (px, py) = map(e.approx.0, e.approx.1);
            let color = match e.circle {
                Circle::Outer => "#d60",
                Circle::Inner => "#60d",
                Circle::Definite => "#333",
            };
            s.push_str(&format!(
                "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"3\" fill=\"{color}\"/>\n"
            ));
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{standard_arc, StandardArc};

    #[test]
    fn produces_svg() {
        let svg = render_svg(&standard_arc(StandardArc::Cb));
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("polyline"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
