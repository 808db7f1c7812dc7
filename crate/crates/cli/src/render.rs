//! ASCII and SVG pictures of a face inside its ladder diagram.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use gc_fibers::{rigid_l_blocks, w_decomposition, Edge, Face, Point, Result};

/// Face edges are bold, rigid L-blocks are shaded and, with `overlay = Some(k)`, each box of
/// W_k inside the diagram is labelled by its region.
struct Picture {
    size: usize,
    vertices: BTreeSet<Point>,
    diagram_edges: Vec<Edge>,
    face_edges: BTreeSet<Edge>,
    shaded: BTreeSet<Point>,
    labels: BTreeMap<Point, char>,
}

fn region_label(i: usize) -> char {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    LETTERS.get(i).map_or('?', |&c| c as char)
}

impl Picture {
    fn new(face: &Face, overlay: Option<usize>) -> Result<Self> {
        let d = face.diagram();
        let shaded = rigid_l_blocks(face)
            .iter()
            .flat_map(|b| b.boxes())
            .collect();
        let mut labels = BTreeMap::new();
        if let Some(k) = overlay {
            let w = w_decomposition(face, k)?;
            for (i, region) in w.regions.iter().enumerate() {
                for &b in region {
                    if d.has_box(b) {
                        labels.insert(b, region_label(i));
                    }
                }
            }
        }
        Ok(Picture {
            size: d.n(),
            vertices: d.vertices().iter().copied().collect(),
            diagram_edges: d.edges().to_vec(),
            face_edges: face.edges().into_iter().collect(),
            shaded,
            labels,
        })
    }

    fn has_diagram_edge(&self, e: Edge) -> bool {
        self.diagram_edges.contains(&e)
    }
}

/// Text picture, top row first. `+` marks diagram vertices, `===` and `#` mark face edges,
/// `---` and `|` the other diagram edges, `%` shades rigid L-blocks.
pub fn ascii(face: &Face, overlay: Option<usize>) -> Result<String> {
    let p = Picture::new(face, overlay)?;
    let n = p.size;
    let mut out = String::new();
    for b in (0..=n).rev() {
        let mut line = String::new();
        for a in 0..=n {
            line.push(if p.vertices.contains(&(a, b)) {
                '+'
            } else {
                ' '
            });
            if a < n {
                let e = Edge::new((a, b), (a + 1, b));
                line.push_str(if p.face_edges.contains(&e) {
                    "==="
                } else if p.has_diagram_edge(e) {
                    "---"
                } else {
                    "   "
                });
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if b == 0 {
            break;
        }
        let mut line = String::new();
        for a in 0..=n {
            let e = Edge::new((a, b - 1), (a, b));
            line.push(if p.face_edges.contains(&e) {
                '#'
            } else if p.has_diagram_edge(e) {
                '|'
            } else {
                ' '
            });
            if a < n {
                let cell = (a + 1, b);
                let fill = if p.shaded.contains(&cell) { '%' } else { ' ' };
                let mid = p.labels.get(&cell).copied().unwrap_or(fill);
                line.push(fill);
                line.push(mid);
                line.push(fill);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out.trim_start_matches('\n').to_string())
}

const UNIT: usize = 40;
const MARGIN: usize = 20;

/// SVG picture: grid 1px, face edges (walls) 3px, rigid L-blocks filled at 20% opacity.
pub fn svg(face: &Face, overlay: Option<usize>) -> Result<String> {
    let p = Picture::new(face, overlay)?;
    let n = p.size;
    let side = 2 * MARGIN + n * UNIT;
    let x = |a: usize| MARGIN + a * UNIT;
    let y = |b: usize| MARGIN + (n - b) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(
        s,
        r##"<rect width="{side}" height="{side}" fill="#ffffff"/>"##
    );
    for &(a, b) in &p.shaded {
        let _ = writeln!(
            s,
            r##"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="#1f77b4" fill-opacity="0.2"/>"##,
            x(a - 1),
            y(b)
        );
    }
    for e in &p.diagram_edges {
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999999" stroke-width="1"/>"##,
            x(e.from.0),
            y(e.from.1),
            x(e.to.0),
            y(e.to.1)
        );
    }
    for e in &p.face_edges {
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-width="3" stroke-linecap="square"/>"##,
            x(e.from.0),
            y(e.from.1),
            x(e.to.0),
            y(e.to.1)
        );
    }
    for (&(a, b), &c) in &p.labels {
        let _ = writeln!(
            s,
            r##"<text x="{}" y="{}" font-family="monospace" font-size="14" text-anchor="middle" fill="#d62728">{c}</text>"##,
            x(a - 1) + UNIT / 2,
            y(b) + UNIT / 2 + 5
        );
    }
    for &(a, b) in &p.vertices {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="2" fill="#333333"/>"##,
            x(a),
            y(b)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
