//! Deterministic SVG drawings: labeled point disks, straight edges, shaded
//! convex blocks for mechanism overlays. Exact coordinates become floats
//! only here, at the output boundary.

use pptope_core::geometry::{convex_hull, PointSet};
use pptope_core::graph::EmbeddedGraph;

const CANVAS: f64 = 640.0;

struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(ps: &PointSet) -> Frame {
        let xs: Vec<f64> = ps.points().iter().map(|p| p.x.to_f64()).collect();
        let ys: Vec<f64> = ps.points().iter().map(|p| p.y.to_f64()).collect();
        let (min_x, max_x) = bounds(&xs);
        let (min_y, max_y) = bounds(&ys);
        let span_x = (max_x - min_x).max(1.0);
        let span_y = (max_y - min_y).max(1.0);
        // pad the bounding box by 10 percent on each side
        let pad_x = span_x * 0.1;
        let pad_y = span_y * 0.1;
        let scale = CANVAS / (span_x + 2.0 * pad_x);
        Frame {
            min_x: min_x - pad_x,
            min_y: min_y - pad_y,
            scale,
            height: (span_y + 2.0 * pad_y) * scale,
        }
    }

    // y axis flipped so the drawing matches the mathematical orientation
    fn x(&self, ps: &PointSet, i: usize) -> f64 {
        (ps.point(i).x.to_f64() - self.min_x) * self.scale
    }

    fn y(&self, ps: &PointSet, i: usize) -> f64 {
        self.height - (ps.point(i).y.to_f64() - self.min_y) * self.scale
    }
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

pub fn render_svg(ps: &PointSet, graph: Option<&EmbeddedGraph>, overlay: &[Vec<usize>]) -> String {
    let frame = Frame::fit(ps);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.3}\" height=\"{:.3}\" \
         viewBox=\"0 0 {:.3} {:.3}\">\n",
        CANVAS, frame.height, CANVAS, frame.height
    ));

    for component in overlay {
        if component.len() < 3 {
            continue;
        }
        let sub = PointSet::new(component.iter().map(|&i| ps.point(i).clone()).collect());
        let Ok(sub) = sub else { continue };
        let hull = convex_hull(&sub);
        let points: Vec<String> = hull
            .iter()
            .map(|&k| {
                let i = component[k];
                format!("{:.3},{:.3}", frame.x(ps, i), frame.y(ps, i))
            })
            .collect();
        out.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"#c8c8c8\" stroke=\"none\"/>\n",
            points.join(" ")
        ));
    }

    if let Some(g) = graph {
        for e in g.edges() {
            out.push_str(&format!(
                "  <line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" \
                 stroke=\"#333333\" stroke-width=\"2\"/>\n",
                frame.x(ps, e.lo()),
                frame.y(ps, e.lo()),
                frame.x(ps, e.hi()),
                frame.y(ps, e.hi())
            ));
        }
    }

    for i in 0..ps.len() {
        let (x, y) = (frame.x(ps, i), frame.y(ps, i));
        out.push_str(&format!(
            "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"5\" fill=\"#1f6feb\"/>\n"
        ));
        out.push_str(&format!(
            "  <text x=\"{:.3}\" y=\"{:.3}\" font-size=\"14\" font-family=\"monospace\">{i}</text>\n",
            x + 8.0,
            y - 8.0
        ));
    }

    out.push_str("</svg>\n");
    out
}
