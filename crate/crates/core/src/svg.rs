//! Deterministic SVG pictures of bivariate signomials.
//!
//! The left panel shades the negative grid nodes of f in logarithmic
//! coordinates. The right panel shows the signed support (negative
//! exponents filled, positive ones hollow), the Newton polygon and any
//! requested lines v·μ = a.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::oracle::{self, GridSpec};
use crate::polytope::Polytope;
use crate::rational::{self, Rational};
use crate::signomial::Signomial;

const PANEL: f64 = 360.0;
const MARGIN: f64 = 48.0;
const NEG_FILL: &str = "#3b6fb6";
const POS_STROKE: &str = "#c0392b";

/// A line v·μ = a drawn in exponent space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlay {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

pub fn render(f: &Signomial, grid: &GridSpec, overlays: &[Overlay]) -> Result<String> {
    if f.dimension() != 2 {
        return Err(Error::Unsupported(format!(
            "plots need exactly two variables, got {}",
            f.dimension()
        )));
    }
    let mask = oracle::negative_mask(f, grid)?;
    let width = 3.0 * MARGIN + 2.0 * PANEL;
    let height = 2.0 * MARGIN + PANEL;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="11">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    region_panel(&mut s, grid, &mask, MARGIN, MARGIN);
    support_panel(&mut s, f, overlays, 2.0 * MARGIN + PANEL, MARGIN);
    s.push_str("</svg>\n");
    Ok(s)
}

fn region_panel(s: &mut String, grid: &GridSpec, mask: &[bool], x0: f64, y0: f64) {
    let r = grid.resolution;
    let (xlo, xhi) = grid.bounds[0];
    let (ylo, yhi) = grid.bounds[1];
    let cell = PANEL / r as f64;
    writeln!(s, r#"<g id="negative-region" fill="{NEG_FILL}" stroke="none">"#).unwrap();
    // one rectangle per horizontal run of negative nodes
    for row in 0..r {
        let mut col = 0;
        while col < r {
            if !mask[row * r + col] {
                col += 1;
                continue;
            }
            let start = col;
            while col < r && mask[row * r + col] {
                col += 1;
            }
            let x = x0 + start as f64 * cell;
            let y = y0 + PANEL - (row + 1) as f64 * cell;
            writeln!(
                s,
                r#"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{cell:.2}"/>"#,
                (col - start) as f64 * cell
            )
            .unwrap();
        }
    }
    s.push_str("</g>\n");
    frame(s, x0, y0, "log x", "log y", (xlo, xhi), (ylo, yhi));
}

fn frame(s: &mut String, x0: f64, y0: f64, xlabel: &str, ylabel: &str, xr: (f64, f64), yr: (f64, f64)) {
    writeln!(
        s,
        r#"<rect x="{x0:.2}" y="{y0:.2}" width="{PANEL:.2}" height="{PANEL:.2}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    for (k, t) in ticks(xr).into_iter().enumerate() {
        let x = x0 + (t - xr.0) / (xr.1 - xr.0) * PANEL;
        let y = y0 + PANEL;
        writeln!(s, r#"<line x1="{x:.2}" y1="{y:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#, y + 4.0).unwrap();
        writeln!(s, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle" id="xt{k}">{}</text>"#, y + 16.0, fmt_tick(t))
            .unwrap();
    }
    for t in ticks(yr) {
        let y = y0 + PANEL - (t - yr.0) / (yr.1 - yr.0) * PANEL;
        writeln!(s, r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="black"/>"#, x0 - 4.0).unwrap();
        writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, x0 - 6.0, y + 4.0, fmt_tick(t)).unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{xlabel}</text>"#,
        x0 + PANEL / 2.0,
        y0 + PANEL + 32.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" transform="rotate(-90 {:.2} {:.2})">{ylabel}</text>"#,
        x0 - 32.0,
        y0 + PANEL / 2.0,
        x0 - 32.0,
        y0 + PANEL / 2.0
    )
    .unwrap();
}

fn ticks((lo, hi): (f64, f64)) -> Vec<f64> {
    let span = hi - lo;
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|st| *st >= raw)
        .unwrap_or(10.0 * mag);
    let mut t = (lo / step).ceil() * step;
    let mut out = Vec::new();
    while t <= hi + 1e-9 * span {
        out.push(if t.abs() < 1e-12 { 0.0 } else { t });
        t += step;
    }
    out
}

fn fmt_tick(t: f64) -> String {
    if t.fract() == 0.0 {
        format!("{t:.0}")
    } else {
        format!("{t}")
    }
}

fn support_panel(s: &mut String, f: &Signomial, overlays: &[Overlay], x0: f64, y0: f64) {
    let pts: Vec<(f64, f64, bool)> = f
        .terms()
        .iter()
        .map(|t| {
            let e = t.exponent.to_f64();
            (e[0], e[1], t.coefficient < Rational::from_integer(0.into()))
        })
        .collect();
    let (mut xr, mut yr) = ((0.0f64, 1.0f64), (0.0f64, 1.0f64));
    for &(x, y, _) in &pts {
        xr = (xr.0.min(x), xr.1.max(x));
        yr = (yr.0.min(y), yr.1.max(y));
    }
    let pad = 0.5;
    let lo = xr.0.min(yr.0) - pad;
    let hi = xr.1.max(yr.1) + pad;
    let (xr, yr) = ((lo, hi), (lo, hi));
    let map = |x: f64, y: f64| {
        (
            x0 + (x - xr.0) / (xr.1 - xr.0) * PANEL,
            y0 + PANEL - (y - yr.0) / (yr.1 - yr.0) * PANEL,
        )
    };
    frame(s, x0, y0, "exponent of x", "exponent of y", xr, yr);

    if !f.is_empty() {
        if let Ok(p) = Polytope::new(f.support()) {
            if let Some(poly) = polygon_order(&p) {
                let coords: Vec<String> = poly
                    .iter()
                    .map(|&(x, y)| {
                        let (u, v) = map(x, y);
                        format!("{u:.2},{v:.2}")
                    })
                    .collect();
                writeln!(
                    s,
                    r##"<polygon id="newton-polytope" points="{}" fill="#eeeeee" stroke="#777777"/>"##,
                    coords.join(" ")
                )
                .unwrap();
            }
        }
    }
    for (k, o) in overlays.iter().enumerate() {
        if let Some(((ax, ay), (bx, by))) = clip_line(o, xr, yr) {
            let (p1, p2) = (map(ax, ay), map(bx, by));
            writeln!(
                s,
                r#"<line id="overlay{k}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-dasharray="5,3"/>"#,
                p1.0, p1.1, p2.0, p2.1
            )
            .unwrap();
        }
    }
    for &(x, y, negative) in &pts {
        let (u, v) = map(x, y);
        if negative {
            writeln!(s, r#"<circle cx="{u:.2}" cy="{v:.2}" r="4" fill="{NEG_FILL}"/>"#).unwrap();
        } else {
            writeln!(
                s,
                r#"<circle cx="{u:.2}" cy="{v:.2}" r="4" fill="white" stroke="{POS_STROKE}" stroke-width="1.5"/>"#
            )
            .unwrap();
        }
    }
}

/// Vertices of a 2-D Newton polytope in boundary order, or the endpoints
/// of a segment.
fn polygon_order(p: &Polytope) -> Option<Vec<(f64, f64)>> {
    let verts: Vec<(f64, f64)> = p
        .vertices()
        .iter()
        .map(|&i| {
            let e = p.point(i).to_f64();
            (e[0], e[1])
        })
        .collect();
    if verts.len() < 3 {
        return (verts.len() == 2).then_some(verts);
    }
    let cx = verts.iter().map(|v| v.0).sum::<f64>() / verts.len() as f64;
    let cy = verts.iter().map(|v| v.1).sum::<f64>() / verts.len() as f64;
    let mut sorted = verts;
    sorted.sort_by(|a, b| {
        let ta = (a.1 - cy).atan2(a.0 - cx);
        let tb = (b.1 - cy).atan2(b.0 - cx);
        ta.total_cmp(&tb)
    });
    Some(sorted)
}

/// The part of v·μ = a inside the window, if any.
fn clip_line(o: &Overlay, xr: (f64, f64), yr: (f64, f64)) -> Option<((f64, f64), (f64, f64))> {
    let v0 = rational::to_f64(&o.normal[0]);
    let v1 = rational::to_f64(&o.normal[1]);
    let a = rational::to_f64(&o.offset);
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if v1 != 0.0 {
        for x in [xr.0, xr.1] {
            let y = (a - v0 * x) / v1;
            if y >= yr.0 && y <= yr.1 {
                hits.push((x, y));
            }
        }
    }
    if v0 != 0.0 {
        for y in [yr.0, yr.1] {
            let x = (a - v1 * y) / v0;
            if x >= xr.0 && x <= xr.1 {
                hits.push((x, y));
            }
        }
    }
    hits.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-12 && (p.1 - q.1).abs() < 1e-12);
    (hits.len() >= 2).then(|| (hits[0], hits[hits.len() - 1]))
}
