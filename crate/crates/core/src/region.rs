//! Placed shapes: a bounding box at an arbitrary offset minus an optional
//! block cut out of its top border. Every part produced while separating a
//! rectangle, L-shape or C-shape is again one of these.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::grid::{white_in_box, Color, Shape, Vertex};

pub(crate) const DIRS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

/// Block removed from the top border of a region: columns `x0..x0+w`, rows
/// `top..top+depth` of the enclosing box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Notch {
    pub x0: i32,
    pub w: i32,
    pub depth: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionClass {
    Rect,
    /// Notch in the top-right corner (the canonical L orientation).
    LRight,
    /// Notch in the top-left corner.
    LLeft,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    pub x0: i32,
    pub y0: i32,
    pub w: i32,
    pub h: i32,
    pub notch: Option<Notch>,
}

/// Maps canonical shape coordinates to absolute coordinates and back.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub x0: i32,
    pub y0: i32,
    pub w: i32,
    pub mirror: bool,
}

impl Frame {
    pub fn to_abs(&self, v: Vertex) -> Vertex {
        let x = if self.mirror { self.x0 + self.w - v.x } else { self.x0 + v.x - 1 };
        Vertex::new(x, self.y0 + v.y - 1)
    }

    pub fn to_local(&self, v: Vertex) -> Vertex {
        let x = if self.mirror { self.x0 + self.w - v.x } else { v.x - self.x0 + 1 };
        Vertex::new(x, v.y - self.y0 + 1)
    }
}

impl Region {
    pub fn rect(x0: i32, y0: i32, w: i32, h: i32) -> Region {
        Region { x0, y0, w, h, notch: None }
    }

    /// Builds a region, folding a notch that spans the full width into a
    /// shorter rectangle.
    pub fn with_notch(x0: i32, y0: i32, w: i32, h: i32, notch: Option<Notch>) -> Region {
        match notch {
            Some(n) if n.depth <= 0 || n.w <= 0 => Region::rect(x0, y0, w, h),
            Some(n) if n.x0 <= x0 && n.x0 + n.w >= x0 + w => {
                Region::rect(x0, y0 + n.depth, w, h - n.depth)
            }
            Some(n) => {
                let lo = n.x0.max(x0);
                let hi = (n.x0 + n.w).min(x0 + w);
                Region { x0, y0, w, h, notch: Some(Notch { x0: lo, w: hi - lo, depth: n.depth }) }
            }
            None => Region::rect(x0, y0, w, h),
        }
    }

    pub fn from_shape(shape: &Shape) -> Region {
        match *shape {
            Shape::Rect { m, n } => Region::rect(1, 1, m, n),
            Shape::LShape { m, n, k, l } => Region {
                x0: 1,
                y0: 1,
                w: m,
                h: n,
                notch: Some(Notch { x0: m - k + 1, w: k, depth: l }),
            },
            Shape::CShape { m, n, k, l, d } => Region {
                x0: 1,
                y0: 1,
                w: m,
                h: n,
                notch: Some(Notch { x0: d + 1, w: k, depth: l }),
            },
        }
    }

    pub fn x1(&self) -> i32 {
        self.x0 + self.w - 1
    }

    pub fn y1(&self) -> i32 {
        self.y0 + self.h - 1
    }

    pub fn is_valid(&self) -> bool {
        if self.w < 1 || self.h < 1 {
            return false;
        }
        match self.notch {
            None => true,
            Some(n) => {
                n.depth >= 1
                    && n.depth < self.h
                    && n.w >= 1
                    && n.x0 >= self.x0
                    && n.x0 + n.w - 1 <= self.x1()
                    && n.w < self.w
            }
        }
    }

    pub fn class(&self) -> RegionClass {
        match self.notch {
            None => RegionClass::Rect,
            Some(n) if n.x0 + n.w - 1 == self.x1() => RegionClass::LRight,
            Some(n) if n.x0 == self.x0 => RegionClass::LLeft,
            Some(_) => RegionClass::C,
        }
    }

    pub fn in_notch(&self, v: Vertex) -> bool {
        match self.notch {
            Some(n) => v.x >= n.x0 && v.x < n.x0 + n.w && v.y >= self.y0 && v.y < self.y0 + n.depth,
            None => false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.x >= self.x0 && v.x <= self.x1() && v.y >= self.y0 && v.y <= self.y1() && !self.in_notch(v)
    }

    pub fn size(&self) -> i64 {
        let notch = self.notch.map(|n| n.w as i64 * n.depth as i64).unwrap_or(0);
        self.w as i64 * self.h as i64 - notch
    }

    pub fn white_count(&self) -> i64 {
        let notch = self
            .notch
            .map(|n| white_in_box(n.x0, n.x0 + n.w - 1, self.y0, self.y0 + n.depth - 1))
            .unwrap_or(0);
        white_in_box(self.x0, self.x1(), self.y0, self.y1()) - notch
    }

    /// Endpoint colors admit a Hamiltonian path: opposite colors when
    /// balanced, both of the surplus color when the surplus is one.
    pub fn color_compatible(&self, s: Vertex, t: Vertex) -> bool {
        let white = self.white_count();
        let black = self.size() - white;
        match white - black {
            0 => s.color() != t.color(),
            1 => s.color() == Color::White && t.color() == Color::White,
            -1 => s.color() == Color::Black && t.color() == Color::Black,
            _ => false,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (self.y0..=self.y1())
            .flat_map(move |y| (self.x0..=self.x1()).map(move |x| Vertex::new(x, y)))
            .filter(move |&v| self.contains(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        DIRS.iter().filter(|&&(dx, dy)| self.contains(v.offset(dx, dy))).count()
    }

    /// The canonical shape of this region and the frame mapping it back.
    pub fn canonical(&self) -> (Shape, Frame) {
        let plain = Frame { x0: self.x0, y0: self.y0, w: self.w, mirror: false };
        match (self.class(), self.notch) {
            (RegionClass::Rect, _) | (_, None) => (Shape::Rect { m: self.w, n: self.h }, plain),
            (RegionClass::LRight, Some(n)) => {
                (Shape::LShape { m: self.w, n: self.h, k: n.w, l: n.depth }, plain)
            }
            (RegionClass::LLeft, Some(n)) => (
                Shape::LShape { m: self.w, n: self.h, k: n.w, l: n.depth },
                Frame { mirror: true, ..plain },
            ),
            (RegionClass::C, Some(n)) => (
                Shape::CShape { m: self.w, n: self.h, k: n.w, l: n.depth, d: n.x0 - self.x0 },
                plain,
            ),
        }
    }

    /// Whether deleting `removed` leaves a disconnected (non-empty) graph.
    ///
    /// Maximal runs of identical columns (and rows) without deleted vertices
    /// are collapsed to a single line first; contracting such runs does not
    /// change connectivity, so the search runs on a bounded grid.
    pub fn disconnected_without(&self, removed: &[Vertex]) -> bool {
        let notch = self.notch.unwrap_or(Notch { x0: self.x0, w: 0, depth: 0 });
        let mut xs_special = vec![self.x0, self.x1(), notch.x0 - 1, notch.x0, notch.x0 + notch.w - 1, notch.x0 + notch.w];
        let mut ys_special = vec![self.y0, self.y1(), self.y0 + notch.depth - 1, self.y0 + notch.depth];
        for v in removed {
            xs_special.push(v.x);
            ys_special.push(v.y);
        }
        let xs = compress(self.x0, self.x1(), &xs_special);
        let ys = compress(self.y0, self.y1(), &ys_special);
        let (cw, ch) = (xs.len(), ys.len());
        let mut alive = vec![false; cw * ch];
        let mut count = 0usize;
        for (j, &y) in ys.iter().enumerate() {
            for (i, &x) in xs.iter().enumerate() {
                let v = Vertex::new(x, y);
                if self.contains(v) && !removed.contains(&v) {
                    alive[j * cw + i] = true;
                    count += 1;
                }
            }
        }
        let Some(start) = alive.iter().position(|&a| a) else {
            return false;
        };
        let mut seen = vec![false; cw * ch];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1usize;
        while let Some(c) = queue.pop_front() {
            let (i, j) = ((c % cw) as i32, (c / cw) as i32);
            for (dx, dy) in DIRS {
                let (ni, nj) = (i + dx, j + dy);
                if ni < 0 || nj < 0 || ni >= cw as i32 || nj >= ch as i32 {
                    continue;
                }
                let nc = nj as usize * cw + ni as usize;
                if alive[nc] && !seen[nc] {
                    seen[nc] = true;
                    reached += 1;
                    queue.push_back(nc);
                }
            }
        }
        reached != count
    }

    /// Vertices of degree one (candidates lie where both profiles change).
    pub fn degree_one_vertices(&self) -> Vec<Vertex> {
        let notch = self.notch.unwrap_or(Notch { x0: self.x0, w: 0, depth: 0 });
        let xs = [self.x0, self.x1(), notch.x0 - 1, notch.x0 + notch.w];
        let ys = [self.y0, self.y1(), self.y0 + notch.depth];
        let mut out = Vec::new();
        for &y in &ys {
            for &x in &xs {
                let v = Vertex::new(x, y);
                if self.contains(v) && self.degree(v) == 1 && !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

/// Keeps every special coordinate and the first coordinate of each gap.
fn compress(lo: i32, hi: i32, special: &[i32]) -> Vec<i32> {
    let mut keep: Vec<i32> = special
        .iter()
        .flat_map(|&x| [x, x + 1])
        .chain(std::iter::once(lo))
        .filter(|&x| x >= lo && x <= hi)
        .collect();
    keep.sort_unstable();
    keep.dedup();
    keep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_disconnected(r: &Region, removed: &[Vertex]) -> bool {
        let verts: Vec<Vertex> = r.vertices().filter(|v| !removed.contains(v)).collect();
        if verts.is_empty() {
            return false;
        }
        let mut seen = vec![verts[0]];
        let mut stack = vec![verts[0]];
        while let Some(v) = stack.pop() {
            for (dx, dy) in DIRS {
                let u = v.offset(dx, dy);
                if r.contains(u) && !removed.contains(&u) && !seen.contains(&u) {
                    seen.push(u);
                    stack.push(u);
                }
            }
        }
        seen.len() != verts.len()
    }

    #[test]
    fn compressed_connectivity_matches_direct_search() {
        let regions = [
            Region::rect(1, 1, 9, 2),
            Region::rect(3, 2, 1, 7),
            Region::from_shape(&Shape::cshape(9, 5, 3, 3, 2).unwrap()),
            Region::from_shape(&Shape::cshape(8, 4, 2, 3, 3).unwrap()),
            Region::from_shape(&Shape::lshape(7, 6, 4, 4).unwrap()),
            Region::with_notch(2, 3, 8, 5, Some(Notch { x0: 2, w: 5, depth: 2 })),
        ];
        for r in regions {
            let verts: Vec<Vertex> = r.vertices().collect();
            for &a in &verts {
                assert_eq!(r.disconnected_without(&[a]), brute_disconnected(&r, &[a]), "{r:?} {a}");
                for &b in &verts {
                    if a != b {
                        assert_eq!(
                            r.disconnected_without(&[a, b]),
                            brute_disconnected(&r, &[a, b]),
                            "{r:?} {a} {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degree_one_candidates_are_complete() {
        for m in 2..7 {
            for n in 2..6 {
                for k in 1..m {
                    for l in 1..n {
                        let shapes = [
                            Shape::lshape(m, n, k, l).ok(),
                            (1..m - k).next().and_then(|d| Shape::cshape(m, n, k, l, d).ok()),
                            Shape::cshape(m, n, k, l, m - k - 1).ok(),
                        ];
                        for shape in shapes.into_iter().flatten() {
                            let r = Region::from_shape(&shape);
                            let mut direct: Vec<Vertex> = r.vertices().filter(|&v| r.degree(v) == 1).collect();
                            let mut fast = r.degree_one_vertices();
                            direct.sort();
                            fast.sort();
                            assert_eq!(direct, fast, "{shape}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_frames_round_trip() {
        let r = Region::with_notch(5, 3, 6, 4, Some(Notch { x0: 5, w: 2, depth: 1 }));
        assert_eq!(r.class(), RegionClass::LLeft);
        let (shape, frame) = r.canonical();
        assert_eq!(shape, Shape::LShape { m: 6, n: 4, k: 2, l: 1 });
        for v in r.vertices() {
            let local = frame.to_local(v);
            assert!(shape.contains(local), "{v} -> {local}");
            assert_eq!(frame.to_abs(local), v);
        }
    }
}
