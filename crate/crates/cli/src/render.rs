//! ASCII and SVG drawings of a path.
//!
//! Both use the path's own vertex set, so cells of the notch (never on a
//! Hamiltonian path) come out blank.

use std::collections::HashMap;
use std::fmt::Write;

use cgrid_ham::grid::Vertex;

const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;

fn links(path: &[Vertex]) -> HashMap<Vertex, u8> {
    let mut out: HashMap<Vertex, u8> = path.iter().map(|&v| (v, 0)).collect();
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (ab, ba) = match (b.x - a.x, b.y - a.y) {
            (1, 0) => (RIGHT, LEFT),
            (-1, 0) => (LEFT, RIGHT),
            (0, 1) => (DOWN, UP),
            (0, -1) => (UP, DOWN),
            _ => (0, 0),
        };
        *out.entry(a).or_default() |= ab;
        *out.entry(b).or_default() |= ba;
    }
    out
}

fn extent(path: &[Vertex]) -> (i32, i32) {
    path.iter().fold((0, 0), |(w, h), v| (w.max(v.x), h.max(v.y)))
}

/// One character per lattice point from `(1,1)` to the far corner of the
/// path; blanks where the path does not go.
pub fn ascii(path: &[Vertex]) -> String {
    let links = links(path);
    let (w, h) = extent(path);
    let (first, last) = (path.first().copied(), path.last().copied());
    let mut out = String::new();
    for y in 1..=h {
        let row: String = (1..=w)
            .map(|x| {
                let v = Vertex::new(x, y);
                if Some(v) == first {
                    return 'S';
                }
                if Some(v) == last {
                    return 'T';
                }
                match links.get(&v) {
                    None => ' ',
                    Some(&b) if b == LEFT | RIGHT => '-',
                    Some(&b) if b == UP | DOWN => '|',
                    Some(&b) if b == DOWN | RIGHT || b == UP | LEFT => '/',
                    Some(&b) if b == DOWN | LEFT || b == UP | RIGHT => '\\',
                    Some(_) => 'o',
                }
            })
            .collect();
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}

/// Unit squares centred on the vertices, the path as one polyline, `y`
/// pointing down.
pub fn svg(path: &[Vertex]) -> String {
    let (w, h) = extent(path);
    let mut cells: Vec<Vertex> = path.to_vec();
    cells.sort();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0.5 0.5 {w} {h}" width="{}" height="{}">"#,
        w * 20,
        h * 20
    );
    out.push_str(r##"<g fill="#f4f4f4" stroke="#bbb" stroke-width="0.04">"##);
    out.push('\n');
    for v in &cells {
        let _ = writeln!(out, r#"<rect x="{}" y="{}" width="1" height="1"/>"#, v.x as f64 - 0.5, v.y as f64 - 0.5);
    }
    out.push_str("</g>\n");
    let points: Vec<String> = path.iter().map(|v| format!("{},{}", v.x, v.y)).collect();
    let _ = writeln!(
        out,
        r##"<polyline fill="none" stroke="#c0392b" stroke-width="0.25" stroke-linejoin="round" points="{}"/>"##,
        points.join(" ")
    );
    if let (Some(s), Some(t)) = (path.first(), path.last()) {
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="0.3" fill="#27ae60"/>"##, s.x, s.y);
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="0.3" fill="#2c3e50"/>"##, t.x, t.y);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[(i32, i32)]) -> Vec<Vertex> {
        v.iter().map(|&(x, y)| Vertex::new(x, y)).collect()
    }

    #[test]
    fn c_shape_ascii_has_gap() {
        let path = p(&[(1, 1), (1, 2), (2, 2), (3, 2), (3, 1)]);
        assert_eq!(ascii(&path), "S T\n\\-/\n");
    }

    #[test]
    fn svg_polyline_has_one_point_per_vertex() {
        let path = p(&[(1, 1), (1, 2), (2, 2), (3, 2), (3, 1)]);
        let out = svg(&path);
        let line = out.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let pts = line.split("points=\"").nth(1).unwrap().trim_end_matches("\"/>");
        assert_eq!(pts.split(' ').count(), 5);
        assert_eq!(out.matches("<rect").count(), 5);
        assert_eq!(out, svg(&path));
    }
}
