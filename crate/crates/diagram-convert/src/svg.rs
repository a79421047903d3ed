//! Deterministic SVG rendering for petal roses and grid diagrams.

use std::f64::consts::PI;
use std::fmt::Write as _;

use petal_core::PetalSequence;

use crate::GridDiagram;

const SVG_HEADER: &str = concat!(
    r#"<?xml version="1.0" encoding="UTF-8"?>"#,
    "\n",
    r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" "#,
);

/// Renders a petal sequence as a rose: one loop per petal around a single
/// central multi-crossing, with the petal levels written along the strands.
///
/// Output is a standalone SVG 1.1 document and is byte-for-byte
/// deterministic for a given input.
pub fn render_svg(s: &PetalSequence) -> String {
    let p = s.petals();
    let levels = s.levels();
    let (w, h) = (420.0, 440.0);
    let (cx, cy) = (210.0, 200.0);
    let radius = 140.0;

    // Node m sits at angle m*pi/p; strand j runs from node (j-1)(p+1) mod 2p
    // straight through the center to its antipode.
    let node = |m: usize| -> (f64, f64) {
        let theta = m as f64 * PI / p as f64;
        (cx + radius * theta.cos(), cy - radius * theta.sin())
    };

    let mut out = String::new();
    out.push_str(SVG_HEADER);
    let _ = writeln!(out, r#"width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);

    // Petal loops: join each strand's exit node to the next strand's entry
    // node by an arc bulging outward.
    for j in 0..p {
        let exit = (j * (p + 1) + p) % (2 * p);
        let (x1, y1) = node(exit);
        let (x2, y2) = node((exit + 1) % (2 * p));
        let theta = (exit as f64 + 0.5) * PI / p as f64;
        let bulge = radius * if p == 1 { 1.9 } else { 1.55 };
        let (qx, qy) = (cx + bulge * theta.cos(), cy - bulge * theta.sin());
        let _ = writeln!(
            out,
            r#"<path class="petal" d="M {x1:.2} {y1:.2} Q {qx:.2} {qy:.2} {x2:.2} {y2:.2}" fill="none" stroke="black" stroke-width="2"/>"#
        );
    }

    // Strands through the central crossing.
    for j in 0..p {
        let entry = (j * (p + 1)) % (2 * p);
        let (x1, y1) = node(entry);
        let (x2, y2) = node((entry + p) % (2 * p));
        let _ = writeln!(
            out,
            r#"<line class="strand" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="2"/>"#
        );
    }

    // Level labels along each strand, staggered near the center.
    for j in 0..p {
        let entry = (j * (p + 1)) % (2 * p);
        let (ex, ey) = node(entry);
        let t = 0.30;
        let (lx, ly) = (cx + (ex - cx) * t, cy + (ey - cy) * t);
        let _ = writeln!(
            out,
            r#"<text class="level-label" x="{lx:.2}" y="{ly:.2}" font-size="13" font-family="monospace" text-anchor="middle">{}</text>"#,
            levels[j]
        );
    }

    if p > 1 {
        let _ = writeln!(
            out,
            r#"<circle class="crossing" cx="{cx:.2}" cy="{cy:.2}" r="3" fill="black"/>"#
        );
    }

    let _ = writeln!(
        out,
        r#"<text class="caption" x="{cx:.2}" y="428" font-size="16" font-family="monospace" text-anchor="middle">{s}</text>"#
    );
    out.push_str("</svg>\n");
    out
}

/// Renders a grid diagram: O and X markers on a square board, horizontal
/// segments joining each row's markers, and vertical segments drawn over
/// them (with a casing gap where they cross).
///
/// Output is a standalone SVG 1.1 document and is byte-for-byte
/// deterministic for a given input.
pub fn render_grid_svg(g: &GridDiagram) -> String {
    let n = g.size();
    let cell = 44.0;
    let margin = 40.0;
    let side = margin * 2.0 + cell * (n as f64 - 1.0);
    // Rows grow upward: row r maps to y = side - margin - (r-1)*cell.
    let xc = |c: usize| margin + (c as f64 - 1.0) * cell;
    let yr = |r: usize| side - margin - (r as f64 - 1.0) * cell;

    let mut out = String::new();
    out.push_str(SVG_HEADER);
    let _ = writeln!(
        out,
        r#"width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(out, r#"<rect width="{side}" height="{side}" fill="white"/>"#);

    let o_col = g.o_cols();
    let x_col = g.x_cols();
    for r in 1..=n {
        let _ = writeln!(
            out,
            r#"<line class="grid-h" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2"/>"#,
            xc(x_col[r - 1]),
            yr(r),
            xc(o_col[r - 1]),
            yr(r)
        );
    }
    // Verticals after horizontals: a wide white casing then the stroke, so
    // every vertical visibly passes over every horizontal it meets.
    for c in 1..=n {
        let (y1, y2) = (yr(g.o_rows()[c - 1]), yr(g.x_rows()[c - 1]));
        let _ = writeln!(
            out,
            r#"<line class="grid-v-casing" x1="{x:.2}" y1="{y1:.2}" x2="{x:.2}" y2="{y2:.2}" stroke="white" stroke-width="8"/>"#,
            x = xc(c)
        );
        let _ = writeln!(
            out,
            r#"<line class="grid-v" x1="{x:.2}" y1="{y1:.2}" x2="{x:.2}" y2="{y2:.2}" stroke="black" stroke-width="2"/>"#,
            x = xc(c)
        );
    }
    for c in 1..=n {
        let (x, yo) = (xc(c), yr(g.o_rows()[c - 1]));
        let _ = writeln!(
            out,
            r#"<circle class="marker-o" cx="{x:.2}" cy="{yo:.2}" r="7" fill="white" stroke="black" stroke-width="2"/>"#
        );
        let yx = yr(g.x_rows()[c - 1]);
        let _ = writeln!(
            out,
            r#"<path class="marker-x" d="M {:.2} {:.2} L {:.2} {:.2} M {:.2} {:.2} L {:.2} {:.2}" stroke="black" stroke-width="2"/>"#,
            x - 6.0,
            yx - 6.0,
            x + 6.0,
            yx + 6.0,
            x - 6.0,
            yx + 6.0,
            x + 6.0,
            yx - 6.0
        );
    }
    out.push_str("</svg>\n");
    out
}
