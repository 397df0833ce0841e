//! Cross-section drawings of the fan.
//!
//! In the barycentric chart a ray `w` is drawn at `w / (w1 + w2 + w3)`
//! inside the reference triangle `e1 e2 e3`. In the affine chart it is drawn
//! at `(w3, w1) / (w2 + w3)`: `e2` and `e3` sit at the ends of the bottom
//! edge and `e1` is at infinity straight up, so cones through `e1` are
//! clipped at the top of the picture.

use std::collections::BTreeSet;
use std::fmt::Write;

use ghilb_core::geometry::{cross, primitive_dir};
use ghilb_core::ExponentTriple;
use num_integer::Integer;
use thiserror::Error;

use crate::document::FanDocument;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Chart {
    #[default]
    Barycentric,
    AffineYz,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("image dimensions must be positive, got {width}x{height}")]
    EmptyImage { width: u32, height: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderConfig {
    chart: Chart,
    width: u32,
    height: u32,
    label_rays: bool,
    mark_triangles: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig { chart: Chart::Barycentric, width: 800, height: 720, label_rays: true, mark_triangles: true }
    }
}

impl RenderConfig {
    pub fn new(
        chart: Chart,
        width: u32,
        height: u32,
        label_rays: bool,
        mark_triangles: bool,
    ) -> Result<Self, ConfigError> {
        if width == 0 || height == 0 {
            return Err(ConfigError::EmptyImage { width, height });
        }
        Ok(RenderConfig { chart, width, height, label_rays, mark_triangles })
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn label_rays(&self) -> bool {
        self.label_rays
    }

    pub fn mark_triangles(&self) -> bool {
        self.mark_triangles
    }
}

const MARGIN: f64 = 40.0;

/// Chart coordinates to pixels. `None` marks `e1` in the affine chart.
struct Projection {
    chart: Chart,
    width: f64,
    height: f64,
    /// Largest finite height in the affine chart.
    top: f64,
}

impl Projection {
    fn new(cfg: &RenderConfig, rays: &[[i64; 3]]) -> Self {
        let top = rays
            .iter()
            .filter(|w| w[1] + w[2] > 0)
            .map(|w| w[0] as f64 / (w[1] + w[2]) as f64)
            .fold(0.0, f64::max)
            .max(0.5)
            * 1.15;
        Projection { chart: cfg.chart, width: cfg.width as f64, height: cfg.height as f64, top }
    }

    fn chart_point(&self, w: &[i64; 3]) -> Option<(f64, f64)> {
        let [w1, w2, w3] = w.map(|c| c as f64);
        match self.chart {
            Chart::Barycentric => {
                let s = w1 + w2 + w3;
                let (l1, l2, l3) = (w1 / s, w2 / s, w3 / s);
                // e1 top centre, e2 bottom left, e3 bottom right
                let e = [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0)];
                Some((l1 * e[0].0 + l2 * e[1].0 + l3 * e[2].0, l1 * e[0].1 + l2 * e[1].1 + l3 * e[2].1))
            }
            Chart::AffineYz if w2 + w3 == 0.0 => None,
            Chart::AffineYz => Some((w3 / (w2 + w3), w1 / (w2 + w3) / self.top)),
        }
    }

    fn to_pixels(&self, (u, v): (f64, f64)) -> (f64, f64) {
        let inner_w = self.width - 2.0 * MARGIN;
        let inner_h = self.height - 2.0 * MARGIN;
        (MARGIN + u * inner_w, self.height - MARGIN - v * inner_h)
    }

    fn pixel(&self, w: &[i64; 3]) -> Option<(f64, f64)> {
        self.chart_point(w).map(|p| self.to_pixels(p))
    }

    /// The point where the vertical line above `w` leaves the picture.
    fn clipped_above(&self, w: &[i64; 3]) -> (f64, f64) {
        let (u, _) = self.chart_point(w).expect("finite");
        self.to_pixels((u, 1.0))
    }

    /// Pixel outline of a cone; `e1` in the affine chart is replaced by the
    /// two points where the adjacent edges leave the picture.
    fn polygon(&self, rays: &[[i64; 3]]) -> Vec<(f64, f64)> {
        let n = rays.len();
        let mut out = Vec::new();
        for (k, w) in rays.iter().enumerate() {
            match self.pixel(w) {
                Some(p) => out.push(p),
                None => {
                    out.push(self.clipped_above(&rays[(k + n - 1) % n]));
                    out.push(self.clipped_above(&rays[(k + 1) % n]));
                }
            }
        }
        out
    }
}

fn points(ps: &[(f64, f64)]) -> String {
    ps.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect::<Vec<_>>().join(" ")
}

/// The primitive invariant monomial orthogonal to the wall through `u` and
/// `v`, signed so that its first nonzero exponent is positive.
pub fn wall_label(r: i64, a: i64, u: &[i64; 3], v: &[i64; 3]) -> ExponentTriple {
    let mut d = primitive_dir(&cross(u, v));
    if d.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
        d = d.map(|c| -c);
    }
    let weight = (d[0] + a * d[1] + (r - a) * d[2]).rem_euclid(r);
    let k = r / r.gcd(&weight);
    ExponentTriple::new(d[0] * k, d[1] * k, d[2] * k)
}

pub fn export_svg(doc: &FanDocument, cfg: &RenderConfig) -> String {
    let proj = Projection::new(cfg, &doc.rays);
    let mut out = String::new();
    let (w, h) = (cfg.width, cfg.height);
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let chart = match cfg.chart {
        Chart::Barycentric => "barycentric",
        Chart::AffineYz => "affine",
    };
    let _ = writeln!(out, "<title>G-Hilbert fan of 1/{}(1,{},{}) ({chart})</title>", doc.r, doc.a, doc.r - doc.a);
    let _ = writeln!(
        out,
        "<style>.cone{{fill:#f4f1e8;stroke:#333;stroke-width:0.8}}.quadric{{fill:#dfe8f1}}\
         .triangle{{fill:none;stroke:#000;stroke-width:3}}.ray{{fill:#000}}\
         text{{font-family:sans-serif;font-size:10px}}.wall{{fill:#7a2d2d;font-size:8px}}</style>"
    );
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);

    let _ = writeln!(out, r#"<g id="cones">"#);
    for c in &doc.cones {
        let rays: Vec<[i64; 3]> = c.rays.iter().map(|&i| doc.rays[i]).collect();
        let class = if c.kind == "quadric" { "cone quadric" } else { "cone" };
        let _ = writeln!(
            out,
            r#"<polygon class="{class}" data-gset="{}" points="{}"><title>{}</title></polygon>"#,
            c.gset,
            points(&proj.polygon(&rays)),
            doc.gsets[c.gset].span
        );
    }
    let _ = writeln!(out, "</g>");

    if cfg.mark_triangles {
        let _ = writeln!(out, r#"<g id="triangles">"#);
        for t in &doc.triangles {
            let rays: Vec<[i64; 3]> = t.support.iter().map(|&i| doc.rays[i]).collect();
            let _ = writeln!(
                out,
                r#"<polygon class="triangle" data-triangle="{}" points="{}"/>"#,
                t.n,
                points(&proj.polygon(&rays))
            );
        }
        let _ = writeln!(out, "</g>");
    }

    if cfg.label_rays {
        let mut walls = BTreeSet::new();
        for c in &doc.cones {
            let n = c.rays.len();
            for k in 0..n {
                let (p, q) = (c.rays[k], c.rays[(k + 1) % n]);
                walls.insert((p.min(q), p.max(q)));
            }
        }
        let _ = writeln!(out, r#"<g id="walls">"#);
        for (p, q) in walls {
            let (u, v) = (doc.rays[p], doc.rays[q]);
            if (0..3).any(|k| u[k] == 0 && v[k] == 0) {
                continue;
            }
            let (Some(a), Some(b)) = (proj.pixel(&u), proj.pixel(&v)) else { continue };
            let label = wall_label(doc.r, doc.a, &u, &v);
            let _ = writeln!(
                out,
                r#"<text class="wall" x="{:.2}" y="{:.2}" text-anchor="middle">{label}</text>"#,
                (a.0 + b.0) / 2.0,
                (a.1 + b.1) / 2.0
            );
        }
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(out, r#"<g id="rays">"#);
    for (id, wv) in doc.rays.iter().enumerate() {
        let (x, y, note) = match proj.pixel(wv) {
            Some((x, y)) => (x, y, String::new()),
            None => (proj.width / 2.0, MARGIN / 2.0, " (at infinity)".to_string()),
        };
        let _ = writeln!(out, r#"<circle class="ray" data-ray="{id}" cx="{x:.2}" cy="{y:.2}" r="2.5"/>"#);
        if cfg.label_rays {
            let _ = writeln!(
                out,
                r#"<text class="ray-label" x="{:.2}" y="{:.2}">({},{},{}){note}</text>"#,
                x + 4.0,
                y - 4.0,
                wv[0],
                wv[1],
                wv[2]
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
