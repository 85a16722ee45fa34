//! Cycles of peeled blocks that keep every boundary edge on one side.
//!
//! A rectangular block is a single serpentine. An L-shaped block is cut
//! into two rectangles at its inner corner; each keeps its interface side
//! and, where it reaches the block's facing side, that side too. The two
//! cycles are merged across the interface next to the facing side, which
//! supplies the frontier edge spanning the cut. A width-one piece of even
//! length is absorbed into the other piece two cells at a time.

use crate::acceptability::region_acceptable;
use crate::construct::cycles::{serpentine, Side};
use crate::grid::Vertex;
use crate::region::{Region, RegionClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Piece {
    Rect { r: Region, open: Side },
    Strip { r: Region },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BlockCycle {
    Rect { open: Side },
    /// `main` carries a cycle; `other` is merged into it across the
    /// interface at the pair of interface positions given by `at`.
    Pair { main: Piece, other: Piece, at: Option<(Vertex, Vertex)> },
    /// The whole side `side` walked straight, closed by a Hamiltonian path
    /// of the remaining cells between the two ends.
    Sided { side: Side },
}

/// `block` without the line along `side`, the ends of the closing path
/// (next to the last and first cell of the line), and the line itself.
pub(crate) fn sided_parts(block: &Region, side: Side) -> Option<(Region, Vertex, Vertex, Seam)> {
    let line = Seam::of_side(block, side);
    if !line.cells().all(|v| block.contains(v)) {
        return None;
    }
    let rest = match side {
        Side::Bottom => Region { h: block.h - 1, ..*block },
        Side::Left => Region::with_notch(block.x0 + 1, block.y0, block.w - 1, block.h, block.notch),
        Side::Right => Region::with_notch(block.x0, block.y0, block.w - 1, block.h, block.notch),
        Side::Top => return None,
    };
    if !rest.is_valid() || rest.h < 1 || rest.w < 1 {
        return None;
    }
    let (dx, dy) = side.outward();
    let first = line.cells().next()?;
    let last = line.cells().last()?;
    Some((rest, last.offset(-dx, -dy), first.offset(-dx, -dy), line))
}

fn sided_plan(block: &Region, seam: &Seam) -> Option<BlockCycle> {
    let (rest, a, b, _) = sided_parts(block, seam.side)?;
    let ok = rest.contains(a) && rest.contains(b) && region_acceptable(&rest, a, b);
    ok.then_some(BlockCycle::Sided { side: seam.side })
}

/// Straight run of block cells facing the rest across `side`: column
/// `line` (rows `lo..=hi`) for `Left`/`Right`, row `line` (columns
/// `lo..=hi`) for `Top`/`Bottom`. The block cycle must contain every edge
/// between two of these cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Seam {
    pub side: Side,
    pub line: i32,
    pub lo: i32,
    pub hi: i32,
}

impl Seam {
    /// The whole side `side` of the bounding box of `block`.
    pub fn of_side(block: &Region, side: Side) -> Seam {
        let (line, lo, hi) = match side {
            Side::Top => (block.y0, block.x0, block.x1()),
            Side::Bottom => (block.y1(), block.x0, block.x1()),
            Side::Left => (block.x0, block.y0, block.y1()),
            Side::Right => (block.x1(), block.y0, block.y1()),
        };
        Seam { side, line, lo, hi }
    }

    pub fn on(&self, v: Vertex) -> bool {
        let (across, along) = match self.side {
            Side::Top | Side::Bottom => (v.y, v.x),
            Side::Left | Side::Right => (v.x, v.y),
        };
        across == self.line && (self.lo..=self.hi).contains(&along)
    }

    fn edge(&self, a: Vertex, b: Vertex) -> bool {
        self.on(a) && self.on(b)
    }

    /// Cells of the seam in order.
    pub fn cells(&self) -> impl Iterator<Item = Vertex> {
        let Seam { side, line, lo, hi } = *self;
        (lo..=hi).map(move |i| match side {
            Side::Top | Side::Bottom => Vertex::new(i, line),
            Side::Left | Side::Right => Vertex::new(line, i),
        })
    }

    /// Whether side `side` of `piece` runs along the seam.
    fn covers(&self, piece: &Region) -> bool {
        let far = Seam::of_side(piece, self.side);
        far.line == self.line && far.lo <= self.hi && far.hi >= self.lo
    }
}

fn open_for(r: &Region, keep: &[Side]) -> Option<Side> {
    if r.w < 2 || r.h < 2 || (r.w * r.h) % 2 != 0 {
        return None;
    }
    [Side::Top, Side::Right, Side::Left, Side::Bottom]
        .into_iter()
        .find(|s| !keep.contains(s) && s.len(r.w, r.h) % 2 == 0)
}

/// Interface cells of `a` facing `b` across side `toward` of `a`.
fn interface(a: &Region, b: &Region, toward: Side) -> Vec<Vertex> {
    let (dx, dy) = toward.outward();
    let cells: Vec<Vertex> = match toward {
        Side::Top => (a.x0..=a.x1()).map(|x| Vertex::new(x, a.y0)).collect(),
        Side::Bottom => (a.x0..=a.x1()).map(|x| Vertex::new(x, a.y1())).collect(),
        Side::Left => (a.y0..=a.y1()).map(|y| Vertex::new(a.x0, y)).collect(),
        Side::Right => (a.y0..=a.y1()).map(|y| Vertex::new(a.x1(), y)).collect(),
    };
    cells.into_iter().filter(|c| b.contains(c.offset(dx, dy))).collect()
}

/// The two rectangles of an L, cut at the inner corner both ways, with the
/// side of the first facing the second.
fn decompositions(block: &Region) -> Vec<(Region, Region, Side)> {
    let Some(n) = block.notch else { return Vec::new() };
    let foot_y = block.y0 + n.depth;
    let foot = Region::rect(block.x0, foot_y, block.w, block.y1() - foot_y + 1);
    match block.class() {
        RegionClass::LRight => {
            let arm = Region::rect(block.x0, block.y0, n.x0 - block.x0, n.depth);
            let left = Region::rect(block.x0, block.y0, n.x0 - block.x0, block.h);
            let right = Region::rect(n.x0, foot_y, block.x1() - n.x0 + 1, foot.h);
            vec![(foot, arm, Side::Top), (left, right, Side::Right)]
        }
        RegionClass::LLeft => {
            let nx1 = n.x0 + n.w - 1;
            let arm = Region::rect(nx1 + 1, block.y0, block.x1() - nx1, n.depth);
            let right = Region::rect(nx1 + 1, block.y0, block.x1() - nx1, block.h);
            let left = Region::rect(block.x0, foot_y, n.w, foot.h);
            vec![(foot, arm, Side::Top), (right, left, Side::Left)]
        }
        _ => Vec::new(),
    }
}

/// How to cover `block` by a cycle containing every edge of `seam`.
pub(crate) fn plan(block: &Region, seam: &Seam) -> Option<BlockCycle> {
    let facing = seam.side;
    if block.notch.is_none() {
        let open = crate::construct::cycles::open_side_avoiding(facing, block.w, block.h);
        let ok = block.w >= 2 && block.h >= 2 && block.size() % 2 == 0;
        return ok.then_some(BlockCycle::Rect { open });
    }
    if block.size() % 2 != 0 {
        return None;
    }
    for (a, b, toward) in decompositions(block) {
        let back = toward.opposite();
        let keep = |r: &Region, inner: Side| {
            let mut k = vec![inner];
            if seam.covers(r) {
                k.push(facing);
            }
            k
        };
        let piece = |r: Region, inner: Side, other: &Region| -> Option<Piece> {
            if let Some(open) = open_for(&r, &keep(&r, inner)) {
                return Some(Piece::Rect { r, open });
            }
            let along = match inner {
                Side::Top | Side::Bottom => r.h == 1,
                Side::Left | Side::Right => r.w == 1,
            };
            let faced = interface(&r, other, inner).len() as i64 == r.size();
            if !(along && faced && r.size() % 2 == 0) {
                return None;
            }
            // Only the edges inside each domino survive, and each domino
            // replaces the edge of the other piece next to it.
            let cells: Vec<Vertex> = r.vertices().collect();
            let ok = cells.chunks(2).enumerate().all(|(i, d)| {
                let gap = i > 0 && seam.edge(cells[2 * i - 1], d[0]);
                !gap && !seam.edge(partner(other, d[0]), partner(other, d[1]))
            });
            ok.then_some(Piece::Strip { r })
        };
        let (Some(pa), Some(pb)) = (piece(a, toward, &b), piece(b, back, &a)) else {
            continue;
        };
        let (main, other, main_side) = match (pa, pb) {
            (Piece::Rect { .. }, _) => (pa, pb, toward),
            (_, Piece::Rect { .. }) => (pb, pa, back),
            _ => continue,
        };
        let (mr, or) = (region_of(main), region_of(other));
        let at = match other {
            Piece::Strip { .. } => None,
            Piece::Rect { .. } => {
                let cells = interface(&mr, &or, main_side);
                let across = |c: Vertex| seam.edge(c, partner(&or, c));
                // A seam edge across the cut only appears at the merge.
                let must = cells.iter().position(|&c| across(c));
                let found = (0..cells.len().saturating_sub(1)).find(|&i| {
                    let (a, b) = (cells[i], cells[i + 1]);
                    must.is_none_or(|j| j == i || j == i + 1)
                        && !seam.edge(a, b)
                        && !seam.edge(partner(&or, a), partner(&or, b))
                });
                let Some(i) = found else { continue };
                Some((cells[i], cells[i + 1]))
            }
        };
        return Some(BlockCycle::Pair { main, other, at });
    }
    sided_plan(block, seam)
}

fn region_of(p: Piece) -> Region {
    match p {
        Piece::Rect { r, .. } | Piece::Strip { r } => r,
    }
}

fn rect_cells(p: Piece) -> Vec<Vertex> {
    match p {
        Piece::Rect { r, open } => serpentine(r.x0, r.y0, r.w, r.h, open),
        Piece::Strip { r } => r.vertices().collect(),
    }
}

/// Inserts `ins` between cycle neighbours `a` and `b`, walking `ins` from
/// the end adjacent to `a`.
fn splice(cycle: &mut Vec<Vertex>, a: Vertex, b: Vertex, ins: &[Vertex]) {
    let n = cycle.len();
    let ia = cycle.iter().position(|&v| v == a).expect("splice anchor in cycle");
    let ib = (ia + 1) % n;
    if cycle[ib] == b {
        cycle.splice(ia + 1..ia + 1, ins.iter().copied());
    } else {
        debug_assert_eq!(cycle[(ia + n - 1) % n], b);
        cycle.splice(ia..ia, ins.iter().rev().copied());
    }
}

/// Ordered cycle of `block` following `plan`. A sided block takes its
/// closing path from `closing`.
pub(crate) fn build<E>(
    block: &Region,
    plan: &BlockCycle,
    closing: impl FnOnce(&Region, Vertex, Vertex) -> Result<Vec<Vertex>, E>,
) -> Result<Vec<Vertex>, E> {
    let cyc = match *plan {
        BlockCycle::Rect { open } => serpentine(block.x0, block.y0, block.w, block.h, open),
        BlockCycle::Sided { side } => {
            let (rest, a, b, line) = sided_parts(block, side).expect("sided plan has parts");
            let mut cyc: Vec<Vertex> = line.cells().collect();
            cyc.extend(closing(&rest, a, b)?);
            cyc
        }
        BlockCycle::Pair { main, other, at } => {
            let mut cyc = rect_cells(main);
            let mr = region_of(main);
            match other {
                Piece::Strip { r } => {
                    let cells: Vec<Vertex> = r.vertices().collect();
                    for d in cells.chunks(2) {
                        let (p0, p1) = (partner(&mr, d[0]), partner(&mr, d[1]));
                        // a -> d0 -> d1 -> b where a, b face d0, d1.
                        splice(&mut cyc, p0, p1, &[d[0], d[1]]);
                    }
                }
                Piece::Rect { .. } => {
                    let (u, v) = at.expect("merge position for two cycles");
                    let mut second = rect_cells(other);
                    let (u2, v2) = (partner_in(&second, u), partner_in(&second, v));
                    let n2 = second.len();
                    let iu = second.iter().position(|&x| x == u2).expect("partner in second cycle");
                    // Rotate so the walk starts at u2 and ends at v2.
                    if second[(iu + n2 - 1) % n2] == v2 {
                        second.rotate_left(iu);
                    } else {
                        second.reverse();
                        second.rotate_left(n2 - 1 - iu);
                    }
                    splice(&mut cyc, u, v, &second);
                }
            }
            cyc
        }
    };
    Ok(cyc)
}

/// The cell of `r` adjacent to `v`.
fn partner(r: &Region, v: Vertex) -> Vertex {
    crate::region::DIRS
        .iter()
        .map(|&(dx, dy)| v.offset(dx, dy))
        .find(|&u| r.contains(u))
        .expect("strip cell faces the main piece")
}

fn partner_in(cells: &[Vertex], v: Vertex) -> Vertex {
    crate::region::DIRS
        .iter()
        .map(|&(dx, dy)| v.offset(dx, dy))
        .find(|u| cells.contains(u))
        .expect("interface cell faces the other piece")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::Notch;

    fn check_cycle(block: &Region, facing: Side) -> Option<Vec<Vertex>> {
        let p = plan(block, &Seam::of_side(block, facing))?;
        let c = build(block, &p, |r, a, b| crate::construct::profile::path(r, a, b).ok_or(())).expect("block cycle");
        assert_eq!(c.len() as i64, block.size());
        let mut seen = std::collections::HashSet::new();
        for (i, &v) in c.iter().enumerate() {
            assert!(block.contains(v) && seen.insert(v));
            assert!(v.is_adjacent(c[(i + 1) % c.len()]), "{block:?} {facing:?}: {c:?}");
        }
        Some(c)
    }

    #[test]
    fn l_blocks_keep_facing_side() {
        let mut built = 0;
        for w in 2..=7 {
            for h in 2..=7 {
                for k in 1..w {
                    for l in 1..h {
                        for left in [false, true] {
                            let nx = if left { 1 } else { w - k + 1 };
                            let block = Region { x0: 1, y0: 1, w, h, notch: Some(Notch { x0: nx, w: k, depth: l }) };
                            for facing in Side::ALL {
                                let Some(c) = check_cycle(&block, facing) else { continue };
                                built += 1;
                                let has = |a: Vertex, b: Vertex| {
                                    let n = c.len();
                                    (0..n).any(|i| (c[i] == a && c[(i + 1) % n] == b) || (c[i] == b && c[(i + 1) % n] == a))
                                };
                                let line: Vec<Vertex> = match facing {
                                    Side::Bottom => (1..=w).map(|x| Vertex::new(x, h)).collect(),
                                    Side::Left => (1..=h).map(|y| Vertex::new(1, y)).filter(|v| block.contains(*v)).collect(),
                                    Side::Right => (1..=h).map(|y| Vertex::new(w, y)).filter(|v| block.contains(*v)).collect(),
                                    Side::Top => (1..=w).map(|x| Vertex::new(x, 1)).filter(|v| block.contains(*v)).collect(),
                                };
                                for e in line.windows(2).filter(|e| e[0].is_adjacent(e[1])) {
                                    assert!(has(e[0], e[1]), "{block:?} facing {facing:?} misses {}-{}", e[0], e[1]);
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(built > 100);
    }
}
