//! Hamiltonian cycles of rectangles and L-shapes.

use serde::{Deserialize, Serialize};

use crate::construct::ConstructError;
use crate::grid::{Cycle, Path, Shape, Vertex};
use crate::stitch;

/// A side of a rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Bottom, Side::Left, Side::Right];

    /// Vertex count of this side on a `w × h` rectangle.
    pub fn len(self, w: i32, h: i32) -> i32 {
        match self {
            Side::Top | Side::Bottom => w,
            Side::Left | Side::Right => h,
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// Unit step leaving the rectangle through this side.
    pub fn outward(self) -> (i32, i32) {
        match self {
            Side::Top => (0, -1),
            Side::Bottom => (0, 1),
            Side::Left => (-1, 0),
            Side::Right => (1, 0),
        }
    }
}

/// Even-length side to leave open when every other side must keep its
/// boundary edges: the opposite of `keep` if possible, otherwise a
/// perpendicular one (preferring `Top`/`Right`).
pub(crate) fn open_side_avoiding(keep: Side, w: i32, h: i32) -> Side {
    let opp = keep.opposite();
    if opp.len(w, h) % 2 == 0 {
        return opp;
    }
    match keep {
        Side::Left | Side::Right => Side::Top,
        Side::Top | Side::Bottom => Side::Right,
    }
}

/// Serpentine cycle of the `w × h` block at `(x0, y0)` keeping every boundary
/// edge except those of `open`. Requires `open` to have even length and both
/// dimensions at least 2.
pub(crate) fn serpentine(x0: i32, y0: i32, w: i32, h: i32, open: Side) -> Vec<Vertex> {
    debug_assert!(w >= 2 && h >= 2 && open.len(w, h) % 2 == 0);
    let (bw, bh) = match open {
        Side::Top | Side::Bottom => (w, h),
        Side::Left | Side::Right => (h, w),
    };
    let mut out = Vec::with_capacity((w * h) as usize);
    // Base pattern, open on top: down the left column, along the bottom,
    // up the right column, then snake through the remaining columns.
    let mut push = |x: i32, y: i32| {
        let (x, y) = match open {
            Side::Top => (x, y),
            Side::Bottom => (x, bh + 1 - y),
            Side::Left => (y, x),
            Side::Right => (bh + 1 - y, x),
        };
        out.push(Vertex::new(x0 + x - 1, y0 + y - 1));
    };
    for y in 1..=bh {
        push(1, y);
    }
    for x in 2..=bw {
        push(x, bh);
    }
    for y in (1..bh).rev() {
        push(bw, y);
    }
    for (i, x) in (2..bw).rev().enumerate() {
        if i % 2 == 0 {
            for y in 1..bh {
                push(x, y);
            }
        } else {
            for y in (1..bh).rev() {
                push(x, y);
            }
        }
    }
    out
}

/// Hamiltonian cycle of a rectangle containing every boundary edge of the
/// three sides other than `open_side`.
pub fn rect_cycle(shape: &Shape, open_side: Side) -> Result<Cycle, ConstructError> {
    let Shape::Rect { m, n } = *shape else {
        return Err(ConstructError::WrongClass { expected: "rect", found: *shape });
    };
    if m < 2 || n < 2 || (m * n) % 2 != 0 {
        return Err(ConstructError::NoCycle(*shape));
    }
    let len = open_side.len(m, n);
    if len % 2 != 0 {
        return Err(ConstructError::BadOpenSide { side: open_side, len });
    }
    Ok(Cycle(serpentine(1, 1, m, n, open_side)).canonical())
}

/// Hamiltonian cycle of an even-sized L with both legs at least two wide.
///
/// The L is cut into two rectangles (arm above foot, or left block beside
/// the lower right block) whose serpentine cycles are merged across their
/// interface. Each piece leaves its open side away from the interface, so
/// every boundary edge of a piece on the interface is present before the
/// merge. A width-one leg of even length is absorbed domino by domino into
/// the boundary of the other piece instead.
pub fn lshape_cycle(shape: &Shape) -> Result<Cycle, ConstructError> {
    let Shape::LShape { m, n, k, l } = *shape else {
        return Err(ConstructError::WrongClass { expected: "l", found: *shape });
    };
    let a = m - k;
    let b = n - l;
    if a < 2 || b < 2 || shape.size() % 2 != 0 {
        return Err(ConstructError::NoCycle(*shape));
    }
    let even = |x: i32| x % 2 == 0;
    let piece = |x0, y0, w, h, facing: Side| Cycle(serpentine(x0, y0, w, h, open_side_avoiding(facing, w, h)));
    let merged = if l >= 2 && even(a * l) && even(m * b) {
        let arm = piece(1, 1, a, l, Side::Bottom);
        let foot = piece(1, l + 1, m, b, Side::Top);
        stitch::merge_cycles(&foot, &arm)
    } else if k >= 2 && even(a * n) && even(k * b) {
        let left = piece(1, 1, a, n, Side::Right);
        let right = piece(a + 1, l + 1, k, b, Side::Left);
        stitch::merge_cycles(&left, &right)
    } else if l == 1 && even(a) {
        let foot = piece(1, 2, m, b, Side::Top);
        absorb_row(foot, (1..=a).map(|x| Vertex::new(x, 1)).collect())
    } else if k == 1 && even(b) {
        let left = piece(1, 1, a, n, Side::Right);
        absorb_row(left, (l + 1..=n).map(|y| Vertex::new(m, y)).collect())
    } else {
        return Err(ConstructError::NoCycle(*shape));
    };
    let cycle = merged.map_err(ConstructError::Stitch)?;
    Ok(cycle.canonical())
}

/// Absorbs a straight run of cells, two at a time, into a cycle running
/// along it.
fn absorb_row(cycle: Cycle, cells: Vec<Vertex>) -> Result<Cycle, stitch::StitchError> {
    // Open the cycle at an edge away from the run, absorb, and close again.
    let n = cycle.len();
    let cut = (0..n)
        .find(|&i| {
            let (u, v) = (cycle.0[i], cycle.0[(i + 1) % n]);
            !cells.iter().any(|c| c.is_adjacent(u) || c.is_adjacent(v))
        })
        .unwrap_or(0);
    let path = Path((1..=n).map(|j| cycle.0[(cut + j) % n]).collect());
    let mut path = path;
    for pair in cells.chunks(2) {
        path = stitch::absorb_two_vertex_strip(&path, pair)?;
    }
    Ok(Cycle(path.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary_edges(w: i32, h: i32, side: Side) -> Vec<(Vertex, Vertex)> {
        let v = Vertex::new;
        match side {
            Side::Top => (1..w).map(|x| (v(x, 1), v(x + 1, 1))).collect(),
            Side::Bottom => (1..w).map(|x| (v(x, h), v(x + 1, h))).collect(),
            Side::Left => (1..h).map(|y| (v(1, y), v(1, y + 1))).collect(),
            Side::Right => (1..h).map(|y| (v(w, y), v(w, y + 1))).collect(),
        }
    }

    #[test]
    fn serpentine_keeps_three_sides() {
        for w in 2..=6 {
            for h in 2..=6 {
                let shape = Shape::rect(w, h).unwrap();
                for open in Side::ALL {
                    let Ok(c) = rect_cycle(&shape, open) else { continue };
                    assert!(c.is_hamiltonian_in(&shape), "{shape} {open:?}");
                    for side in Side::ALL.into_iter().filter(|&s| s != open) {
                        for (a, b) in boundary_edges(w, h, side) {
                            assert!(c.has_edge(a, b), "{shape} open {open:?} misses {a}-{b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rect_cycle_errors() {
        let r33 = Shape::rect(3, 3).unwrap();
        assert_eq!(rect_cycle(&r33, Side::Top), Err(ConstructError::NoCycle(r33)));
        let r32 = Shape::rect(3, 2).unwrap();
        assert_eq!(rect_cycle(&r32, Side::Top), Err(ConstructError::BadOpenSide { side: Side::Top, len: 3 }));
        assert_eq!(rect_cycle(&Shape::rect(2, 2).unwrap(), Side::Top).unwrap().len(), 4);
    }

    #[test]
    fn small_l_cycles() {
        let l = Shape::lshape(3, 3, 1, 1).unwrap();
        assert!(lshape_cycle(&l).unwrap().is_hamiltonian_in(&l));
        let l = Shape::lshape(4, 4, 2, 2).unwrap();
        assert_eq!(lshape_cycle(&l).unwrap().len(), 12);
        let l = Shape::lshape(4, 4, 3, 2).unwrap();
        assert_eq!(lshape_cycle(&l), Err(ConstructError::NoCycle(l)));
    }
}
