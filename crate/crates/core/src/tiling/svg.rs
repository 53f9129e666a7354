//! SVG pictures of tilings, recovered from their path families.

use std::collections::HashSet;
use std::fmt::Write;

use super::{validate_family, LatticePoint, PathFamily, PuncturedHexagon, Step};
use crate::error::Result;

const SCALE: f64 = 30.0;
const MARGIN: f64 = 10.0;

/// A triangular-lattice vertex `(col, row)`.
type Vertex = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Orientation {
    /// Crossed by an east step.
    Flat,
    /// Crossed by a south step.
    Descending,
    /// Not crossed by any path.
    Upright,
}

impl Orientation {
    fn class(self) -> &'static str {
        match self {
            Orientation::Flat => "flat",
            Orientation::Descending => "descending",
            Orientation::Upright => "upright",
        }
    }

    fn fill(self) -> &'static str {
        match self {
            Orientation::Flat => "#e8b04a",
            Orientation::Descending => "#5b8fc9",
            Orientation::Upright => "#d9d9d9",
        }
    }
}

fn edge(p: LatticePoint) -> Vertex {
    (p.x - p.y, p.y)
}

fn rhombi(h: &PuncturedHexagon, family: &PathFamily) -> Vec<(Orientation, [Vertex; 4])> {
    let mut out = Vec::new();
    let mut visited = HashSet::new();
    for path in &family.paths {
        let mut p = path.start;
        visited.insert(p);
        for &s in &path.steps {
            let (c, r) = edge(p);
            out.push(match s {
                Step::East => (Orientation::Flat, [(c, r), (c + 1, r), (c + 1, r + 1), (c, r + 1)]),
                Step::South => (Orientation::Descending, [(c, r), (c + 1, r - 1), (c + 1, r), (c, r + 1)]),
            });
            p = p.step(s);
            visited.insert(p);
        }
    }
    let (a, b, c) = (h.a() as i64, h.b() as i64, h.c() as i64);
    for y in 0..=a + c {
        for x in 0..=a + b {
            let p = LatticePoint::new(x, y);
            let col = x - y;
            if h.contains(p) && col > -c - 1 && col < b && !visited.contains(&p) {
                let (cc, r) = edge(p);
                out.push((Orientation::Upright, [(cc - 1, r + 1), (cc, r), (cc + 1, r), (cc, r + 1)]));
            }
        }
    }
    out
}

/// Number of rhombi in any tiling of `h`.
pub fn rhombus_count(h: &PuncturedHexagon) -> usize {
    (h.area() - 1) / 2
}

fn plane(v: Vertex) -> (f64, f64) {
    let (c, r) = (v.0 as f64, v.1 as f64);
    (c * 3f64.sqrt() / 2.0, r + c / 2.0)
}

/// Renders the tiling of `h` encoded by `family` as an SVG 1.1 document.
pub fn render_tiling_svg(h: &PuncturedHexagon, family: &PathFamily) -> Result<String> {
    validate_family(h, family)?;
    let tiles = rhombi(h, family);
    let hole = edge(h.puncture());
    let hole = [hole, (hole.0, hole.1 + 1), (hole.0 - 1, hole.1 + 1)];

    let all = tiles.iter().flat_map(|(_, vs)| vs.iter()).chain(hole.iter()).map(|&v| plane(v));
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (x, y) in all {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let to_svg = |v: Vertex| {
        let (x, y) = plane(v);
        (MARGIN + (x - xmin) * SCALE, MARGIN + (ymax - y) * SCALE)
    };
    let points = |vs: &[Vertex]| {
        vs.iter()
            .map(|&v| {
                let (x, y) = to_svg(v);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let width = 2.0 * MARGIN + (xmax - xmin) * SCALE;
    let height = 2.0 * MARGIN + (ymax - ymin) * SCALE;
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(
        svg,
        "<title>Rhombus tiling of the ({},{},{}) hexagon</title>",
        h.a(),
        h.b(),
        h.c()
    );
    let _ = writeln!(svg, r#"<g stroke="black" stroke-width="1" stroke-linejoin="round">"#);
    for (o, vs) in &tiles {
        let _ = writeln!(
            svg,
            r#"<polygon class="rhombus {}" fill="{}" points="{}"/>"#,
            o.class(),
            o.fill(),
            points(vs)
        );
    }
    let _ = writeln!(svg, r#"<polygon class="puncture" fill="black" points="{}"/>"#, points(&hole));
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
