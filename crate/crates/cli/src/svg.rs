//! Standalone SVG 1.1 drawings: translucent rectangles, optional dashed
//! piercing lines, and vertices of depth at most `k` coloured by depth.

use std::fmt::Write as _;

use rectlevel_core::{ArrangementProfile, Coord, Family, PiercingStructure};

/// Longer side of the drawing area, before margins.
const EXTENT: f64 = 800.0;
const MARGIN: f64 = 0.05;
const DOT_RADIUS: f64 = 3.0;
const DEPTH_COLOURS: [&str; 8] =
    ["#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#17becf", "#1f77b4", "#9467bd", "#7f7f7f"];

struct Frame {
    x0: Coord,
    y1: Coord,
    scale: f64,
    mx: f64,
    my: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(f: &Family) -> Frame {
        let (x0, y0, x1, y1) = f.bounding_box().unwrap_or((0, 0, 1, 1));
        let (w, h) = (((x1 - x0) as f64).max(1.0), ((y1 - y0) as f64).max(1.0));
        let scale = EXTENT / w.max(h);
        let (mx, my) = (MARGIN * w * scale, MARGIN * h * scale);
        Frame { x0, y1, scale, mx, my, width: w * scale + 2.0 * mx, height: h * scale + 2.0 * my }
    }

    fn x(&self, x: Coord) -> f64 {
        self.mx + (x - self.x0) as f64 * self.scale
    }

    /// SVG y grows downwards.
    fn y(&self, y: Coord) -> f64 {
        self.my + (self.y1 - y) as f64 * self.scale
    }
}

pub fn depth_colour(depth: u32) -> &'static str {
    DEPTH_COLOURS[(depth as usize).min(DEPTH_COLOURS.len() - 1)]
}

pub fn render(
    f: &Family,
    profile: &ArrangementProfile,
    lines: Option<(&PiercingStructure, &PiercingStructure)>,
    k: u32,
) -> String {
    let fr = Frame::new(f);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = fr.width,
        h = fr.height
    );
    let _ = writeln!(
        out,
        r##"<g id="rectangles" fill="#4477aa" fill-opacity="0.12" stroke="#223355" stroke-width="1">"##
    );
    for r in f {
        let _ = writeln!(
            out,
            r#"<rect data-id="{}" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/>"#,
            r.id,
            fr.x(r.x_min),
            fr.y(r.y_max),
            (r.x_max - r.x_min) as f64 * fr.scale,
            (r.y_max - r.y_min) as f64 * fr.scale
        );
    }
    let _ = writeln!(out, "</g>");

    if let Some((horizontal, vertical)) = lines {
        let _ = writeln!(
            out,
            r##"<g id="lines" stroke="#555555" stroke-width="1" stroke-dasharray="6 4" font-family="sans-serif" font-size="12" fill="#333333">"##
        );
        for (i, &y) in horizontal.lines.iter().enumerate() {
            let py = fr.y(y);
            let _ = writeln!(
                out,
                r#"<line class="horizontal" data-at="{y}" x1="0" y1="{py:.2}" x2="{:.2}" y2="{py:.2}"/>"#,
                fr.width
            );
            let _ = writeln!(out, r#"<text stroke="none" x="2" y="{:.2}">ℓ{i}</text>"#, py - 2.0);
        }
        for (i, &x) in vertical.lines.iter().enumerate() {
            let px = fr.x(x);
            let _ = writeln!(
                out,
                r#"<line class="vertical" data-at="{x}" x1="{px:.2}" y1="0" x2="{px:.2}" y2="{:.2}"/>"#,
                fr.height
            );
            let _ = writeln!(out, r#"<text stroke="none" x="{:.2}" y="12">h{i}</text>"#, px + 2.0);
        }
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(out, r#"<g id="vertices">"#);
    for v in profile.vertices.iter().filter(|v| v.depth <= k) {
        let _ = writeln!(
            out,
            r#"<circle data-depth="{}" cx="{:.2}" cy="{:.2}" r="{DOT_RADIUS}" fill="{}"/>"#,
            v.depth,
            fr.x(v.x),
            fr.y(v.y),
            depth_colour(v.depth)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
