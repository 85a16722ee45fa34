//! Candidate separations of a region and the choice among them.

use serde::{Deserialize, Serialize};

use crate::acceptability::region_acceptable;
use crate::construct::blocks::{self, BlockCycle, Seam};
use crate::construct::cycles::Side;
use crate::grid::Vertex;
use crate::region::{Notch, Region, RegionClass};

/// How a region was separated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeparationKind {
    /// Cut along a column boundary.
    Vertical,
    /// Cut along a row boundary.
    Horizontal,
    /// A whole arm of a C taken off below the notch.
    LShaped,
    /// Both arms of a C cut at the same row.
    CShaped,
    /// No separation: the region is small enough for exhaustive search.
    Core,
}

/// A rectangle or L without endpoints, covered by a cycle and spliced into
/// the path of `rest` along the side `facing`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Peel {
    pub kind: SeparationKind,
    pub rest: Region,
    pub block: Region,
    /// Cells of `block` along which it is spliced into `rest`.
    pub seam: Seam,
    pub cycle: BlockCycle,
}

/// `s` reaches `p` inside `a`, crosses to `q`, and reaches `t` inside `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Bridge {
    pub kind: SeparationKind,
    pub a: Region,
    pub b: Region,
    pub p: Vertex,
    pub q: Vertex,
}

/// Parts traversed in order, each from its first to its second vertex,
/// consecutive parts joined by an edge; `blocks` are then spliced into
/// the parts they face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Chain {
    pub kind: SeparationKind,
    pub parts: Vec<(Region, Vertex, Vertex)>,
    pub blocks: Vec<Peel>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Move {
    Peel(Peel),
    Bridge(Bridge),
    Chain(Chain),
}

fn notch_range(r: &Region) -> Option<(i32, i32, i32)> {
    r.notch.map(|n| (n.x0, n.x0 + n.w - 1, n.depth))
}

/// Columns `x0..=xc` and `xc+1..=x1`.
pub(crate) fn split_v(r: &Region, xc: i32) -> Option<(Region, Region)> {
    if xc < r.x0 || xc >= r.x1() {
        return None;
    }
    let part = |x0: i32, x1: i32| {
        let notch = r.notch.and_then(|n| {
            let lo = n.x0.max(x0);
            let hi = (n.x0 + n.w - 1).min(x1);
            (lo <= hi).then_some(Notch { x0: lo, w: hi - lo + 1, depth: n.depth })
        });
        Region::with_notch(x0, r.y0, x1 - x0 + 1, r.h, notch)
    };
    let (a, b) = (part(r.x0, xc), part(xc + 1, r.x1()));
    (a.is_valid() && b.is_valid()).then_some((a, b))
}

/// Rows `y0..=yc` and `yc+1..=y1`.
pub(crate) fn split_h(r: &Region, yc: i32) -> Option<(Region, Region)> {
    if yc < r.y0 || yc >= r.y1() {
        return None;
    }
    let top_h = yc - r.y0 + 1;
    let bot_h = r.y1() - yc;
    let (top, bottom) = match r.notch {
        None => (Region::rect(r.x0, r.y0, r.w, top_h), Region::rect(r.x0, yc + 1, r.w, bot_h)),
        Some(n) => {
            let bottom = if n.depth > top_h {
                Region::with_notch(r.x0, yc + 1, r.w, bot_h, Some(Notch { depth: n.depth - top_h, ..n }))
            } else {
                Region::rect(r.x0, yc + 1, r.w, bot_h)
            };
            let top = if top_h > n.depth {
                Region { h: top_h, ..*r }
            } else {
                match r.class() {
                    RegionClass::LRight => Region::rect(r.x0, r.y0, n.x0 - r.x0, top_h),
                    RegionClass::LLeft => Region::rect(n.x0 + n.w, r.y0, r.x1() - n.x0 - n.w + 1, top_h),
                    _ => return None,
                }
            };
            (top, bottom)
        }
    };
    (top.is_valid() && bottom.is_valid()).then_some((top, bottom))
}

/// Cells of `rest` across the seam of `block`, in seam order.
pub(crate) fn frontier<'a>(block: &'a Region, rest: &'a Region, seam: &Seam) -> impl Iterator<Item = Vertex> + 'a {
    let (dx, dy) = seam.side.outward();
    seam.cells()
        .filter(move |&v| block.contains(v))
        .map(move |v| v.offset(dx, dy))
        .filter(move |&v| rest.contains(v))
}

/// Every Hamiltonian `(s,t)`-path of `rest` uses an edge between two
/// frontier cells: some frontier cell other than `s`, `t` has at most one
/// neighbour in `rest` off the frontier.
fn frontier_edge_forced(rest: &Region, block: &Region, seam: &Seam, s: Vertex, t: Vertex) -> bool {
    let (dx, dy) = seam.side.outward();
    let on_frontier = |v: Vertex| {
        let back = Vertex::new(v.x - dx, v.y - dy);
        seam.on(back) && block.contains(back) && rest.contains(v)
    };
    let mut cells = frontier(block, rest, seam);
    cells.any(|c| {
        if c == s || c == t {
            return false;
        }
        let off = crate::region::DIRS
            .iter()
            .map(|&(ex, ey)| Vertex::new(c.x + ex, c.y + ey))
            .filter(|&u| rest.contains(u) && !on_frontier(u))
            .count();
        off <= 1
    })
}

fn peel_candidate(
    kind: SeparationKind,
    rest: Region,
    block: Region,
    seam: Seam,
    s: Vertex,
    t: Vertex,
) -> Option<Peel> {
    if block.contains(s) || block.contains(t) || !rest.contains(s) || !rest.contains(t) {
        return None;
    }
    if !frontier_edge_forced(&rest, &block, &seam, s, t) {
        return None;
    }
    let cycle = blocks::plan(&block, &seam)?;
    Some(Peel { kind, rest, block, seam, cycle })
}

/// Up to four cut positions counting down from `hi` (or up from `lo`),
/// plus the same around each extra anchor.
fn near(anchors: &[i32], down: bool) -> Vec<i32> {
    let mut out: Vec<i32> = anchors
        .iter()
        .flat_map(|&a| (0..4).map(move |i| if down { a - i } else { a + i }))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// All peels worth trying, largest block first.
pub(crate) fn peels(r: &Region, s: Vertex, t: Vertex) -> Vec<Peel> {
    let mut out = Vec::new();
    let (lo_x, hi_x) = (s.x.min(t.x), s.x.max(t.x));
    let (lo_y, hi_y) = (s.y.min(t.y), s.y.max(t.y));
    let notch = notch_range(r);
    let mut x_anchors_left = vec![lo_x - 1];
    let mut x_anchors_right = vec![hi_x];
    let mut y_anchors_top = vec![lo_y - 1];
    let mut y_anchors_bottom = vec![hi_y];
    if let Some((nx0, nx1, dep)) = notch {
        x_anchors_left.extend([nx0 - 1, nx1]);
        x_anchors_right.extend([nx0 - 1, nx1]);
        y_anchors_top.extend([r.y0 + dep - 1, r.y0 + dep + 5]);
        y_anchors_bottom.push(r.y0 + dep);
    }
    use SeparationKind::*;
    for xc in near(&x_anchors_left, true).into_iter().filter(|&x| x < lo_x) {
        if let Some((block, rest)) = split_v(r, xc) {
            out.extend(peel_candidate(Vertical, rest, block, Seam::of_side(&block, Side::Right), s, t));
        }
    }
    for xc in near(&x_anchors_right, false).into_iter().filter(|&x| x >= hi_x) {
        if let Some((rest, block)) = split_v(r, xc) {
            out.extend(peel_candidate(Vertical, rest, block, Seam::of_side(&block, Side::Left), s, t));
        }
    }
    for yc in near(&y_anchors_top, true).into_iter().filter(|&y| y < lo_y) {
        if let Some((block, rest)) = split_h(r, yc) {
            out.extend(peel_candidate(Horizontal, rest, block, Seam::of_side(&block, Side::Bottom), s, t));
        }
    }
    for yc in near(&y_anchors_bottom, false).into_iter().filter(|&y| y >= hi_y) {
        if let Some((rest, block)) = split_h(r, yc) {
            out.extend(peel_candidate(Horizontal, rest, block, Seam::of_side(&block, Side::Top), s, t));
        }
    }
    if let (RegionClass::C, Some((nx0, nx1, dep))) = (r.class(), notch) {
        let left = Region::rect(r.x0, r.y0, nx0 - r.x0, dep);
        let rest = Region { notch: Some(Notch { x0: r.x0, w: nx1 - r.x0 + 1, depth: dep }), ..*r };
        out.extend(peel_candidate(LShaped, rest, left, Seam::of_side(&left, Side::Bottom), s, t));
        let right = Region::rect(nx1 + 1, r.y0, r.x1() - nx1, dep);
        let rest = Region { notch: Some(Notch { x0: nx0, w: r.x1() - nx0 + 1, depth: dep }), ..*r };
        out.extend(peel_candidate(LShaped, rest, right, Seam::of_side(&right, Side::Bottom), s, t));
    }
    if r.class() == RegionClass::C {
        hooks(r, s, t, &mut out);
    }
    // Sided blocks need their own solve; use them only when nothing else fits.
    out.sort_by_key(|p| (matches!(p.cycle, BlockCycle::Sided { .. }), std::cmp::Reverse(p.block.size())));
    out
}

/// L-shaped blocks made of a band of one side arm of a C together with a
/// band of rows along its bottom. The rest keeps the notch.
fn hooks(r: &Region, s: Vertex, t: Vertex, out: &mut Vec<Peel>) {
    let Some((nx0, nx1, dep)) = notch_range(r) else { return };
    let (lo_x, hi_x, hi_y) = (s.x.min(t.x), s.x.max(t.x), s.y.max(t.y));
    let rows: Vec<i32> = near(&[hi_y, r.y0 + dep], false).into_iter().filter(|&y| y >= hi_y && y < r.y1()).collect();
    let top_rows = r.y0 + dep;
    let mut push = |rest: Region, block: Region, seams: [Seam; 2]| {
        if !rest.is_valid() || !block.is_valid() || block.size() % 2 != 0 || rest.h <= dep {
            return;
        }
        for seam in seams {
            out.extend(peel_candidate(SeparationKind::LShaped, rest, block, seam, s, t));
        }
    };
    for &yc in &rows {
        if yc < top_rows {
            continue;
        }
        let band_h = yc - r.y0 + 1;
        for xc in near(&[lo_x - 1, nx0 - 1], true).into_iter().filter(|&x| x < lo_x && x >= r.x0 && x < nx0) {
            let block = Region::with_notch(r.x0, r.y0, r.w, r.h, Some(Notch { x0: xc + 1, w: r.x1() - xc, depth: band_h }));
            let rest = Region::with_notch(xc + 1, r.y0, r.x1() - xc, band_h, r.notch);
            let along = Seam { side: Side::Right, line: xc, lo: r.y0, hi: yc };
            let below = Seam { side: Side::Top, line: yc + 1, lo: xc + 1, hi: r.x1() };
            push(rest, block, [along, below]);
        }
        for xc in near(&[hi_x + 1, nx1 + 1], false).into_iter().filter(|&x| x > hi_x && x <= r.x1() && x > nx1) {
            let block = Region::with_notch(r.x0, r.y0, r.w, r.h, Some(Notch { x0: r.x0, w: xc - r.x0, depth: band_h }));
            let rest = Region::with_notch(r.x0, r.y0, xc - r.x0, band_h, r.notch);
            let along = Seam { side: Side::Left, line: xc, lo: r.y0, hi: yc };
            let below = Seam { side: Side::Top, line: yc + 1, lo: r.x0, hi: xc - 1 };
            push(rest, block, [along, below]);
        }
    }
}

/// The largest peel whose remainder stays acceptable.
pub(crate) fn best_peel(r: &Region, s: Vertex, t: Vertex) -> Option<Peel> {
    peels(r, s, t).into_iter().find(|p| region_acceptable(&p.rest, s, t))
}

fn spread(lo: i32, hi: i32, extra: &[i32]) -> Vec<i32> {
    let mid = lo + (hi - lo) / 2;
    let mut out = vec![mid, mid - 1, mid + 1, lo, lo + 1, hi, hi - 1];
    for &e in extra {
        out.extend([e - 1, e, e + 1]);
    }
    let mut seen = Vec::new();
    out.retain(|&c| {
        let keep = c >= lo && c <= hi && !seen.contains(&c);
        seen.push(c);
        keep
    });
    out
}

/// A split of `s` from `t` across one edge, both halves acceptable.
pub(crate) fn bridge(r: &Region, s: Vertex, t: Vertex) -> Option<Bridge> {
    let notch = notch_range(r);
    let (nx0, nx1, dep) = notch.unwrap_or((r.x0, r.x0 - 1, 0));
    let rows_of_interest = {
        let mut v = vec![s.y, t.y, s.y - 1, s.y + 1, t.y - 1, t.y + 1, r.y0, r.y0 + 1, r.y1(), r.y1() - 1];
        v.extend([r.y0 + dep, r.y0 + dep + 1, r.y0 + dep - 1, (r.y0 + r.y1()) / 2]);
        v
    };
    let cols_of_interest = {
        let mut v = vec![s.x, t.x, s.x - 1, s.x + 1, t.x - 1, t.x + 1, r.x0, r.x0 + 1, r.x1(), r.x1() - 1];
        v.extend([nx0, nx0 - 1, nx0 + 1, nx1, nx1 - 1, nx1 + 1, (r.x0 + r.x1()) / 2]);
        v
    };
    let try_pair = |a: Region, b: Region, p: Vertex, q: Vertex, kind| {
        let fits = a.contains(p) && b.contains(q) && a.contains(s) && b.contains(t);
        (fits && region_acceptable(&a, s, p) && region_acceptable(&b, q, t)).then_some(Bridge { kind, a, b, p, q })
    };
    if s.x != t.x {
        let (lo, hi) = (s.x.min(t.x), s.x.max(t.x) - 1);
        for xc in spread(lo, hi, &[nx0 - 1, nx1]) {
            let Some((left, right)) = split_v(r, xc) else { continue };
            let (a, b, dx) = if s.x <= xc { (left, right, 1) } else { (right, left, -1) };
            let px = if dx == 1 { xc } else { xc + 1 };
            let mut seen = Vec::new();
            for &y in &rows_of_interest {
                if seen.contains(&y) {
                    continue;
                }
                seen.push(y);
                let (p, q) = (Vertex::new(px, y), Vertex::new(px + dx, y));
                if let Some(found) = try_pair(a, b, p, q, SeparationKind::Vertical) {
                    return Some(found);
                }
            }
        }
    }
    if s.y != t.y {
        let (lo, hi) = (s.y.min(t.y), s.y.max(t.y) - 1);
        for yc in spread(lo, hi, &[r.y0 + dep - 1]) {
            let Some((top, bottom)) = split_h(r, yc) else { continue };
            let (a, b, dy) = if s.y <= yc { (top, bottom, 1) } else { (bottom, top, -1) };
            let py = if dy == 1 { yc } else { yc + 1 };
            let mut seen = Vec::new();
            for &x in &cols_of_interest {
                if seen.contains(&x) {
                    continue;
                }
                seen.push(x);
                let (p, q) = (Vertex::new(x, py), Vertex::new(x, py + dy));
                if let Some(found) = try_pair(a, b, p, q, SeparationKind::Horizontal) {
                    return Some(found);
                }
            }
        }
    }
    None
}

/// Cuts both arms of a C after row `y`: the two arm tops and the lower C.
fn arm_cut(r: &Region, y: i32) -> Option<[Region; 3]> {
    let n = r.notch?;
    let top = y - r.y0 + 1;
    if r.class() != RegionClass::C || top < 1 || top >= n.depth {
        return None;
    }
    let left = Region::rect(r.x0, r.y0, n.x0 - r.x0, top);
    let right = Region::rect(n.x0 + n.w, r.y0, r.x1() - n.x0 - n.w + 1, top);
    let lower = Region { y0: y + 1, h: r.h - top, notch: Some(Notch { depth: n.depth - top, ..n }), ..*r };
    Some([left, right, lower])
}

/// Cells of the bottom row of `arm` worth trying as a crossing point.
fn crossings(arm: &Region, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let mut xs = vec![arm.x0, arm.x0 + 1, arm.x1(), arm.x1() - 1, s.x - 1, s.x, s.x + 1, t.x - 1, t.x, t.x + 1];
    xs.retain(|&x| x >= arm.x0 && x <= arm.x1());
    xs.sort_unstable();
    xs.dedup();
    xs.into_iter().map(|x| Vertex::new(x, arm.y1())).collect()
}

/// Separations that cut both arms of a C at one row. An arm top holding
/// an endpoint becomes a part of the chain; one without is spliced into
/// the lower C as a cycle.
pub(crate) fn arm_chain(r: &Region, s: Vertex, t: Vertex) -> Option<Chain> {
    let (_, _, dep) = notch_range(r)?;
    let last = r.y0 + dep - 2;
    let mut rows = vec![r.y0, r.y0 + 1, last, last - 1, last - 2];
    for v in [s, t] {
        rows.extend([v.y - 2, v.y - 1, v.y, v.y + 1]);
    }
    rows.retain(|&y| y >= r.y0 && y <= last);
    rows.sort_unstable();
    rows.dedup();
    use SeparationKind::CShaped;
    let below = |v: Vertex| v.offset(0, 1);
    let absorbed = |arm: Region, lower: Region, a: Vertex, b: Vertex| {
        peel_candidate(CShaped, lower, arm, Seam::of_side(&arm, Side::Bottom), a, b)
    };
    for y in rows.into_iter().rev() {
        let Some([left, right, lower]) = arm_cut(r, y) else { continue };
        let arms = [left, right];
        let home = |v: Vertex| arms.iter().position(|a| a.contains(v));
        match (home(s), home(t)) {
            (None, None) => {
                if !region_acceptable(&lower, s, t) {
                    continue;
                }
                let (Some(a), Some(b)) = (absorbed(left, lower, s, t), absorbed(right, lower, s, t)) else { continue };
                return Some(Chain { kind: CShaped, parts: vec![(lower, s, t)], blocks: vec![a, b] });
            }
            (Some(i), None) | (None, Some(i)) => {
                let from_arm = home(s).is_some();
                let (arm, other) = (arms[i], arms[1 - i]);
                for p in crossings(&arm, s, t) {
                    let q = below(p);
                    let (arm_ok, lower_ok) = if from_arm {
                        (region_acceptable(&arm, s, p), region_acceptable(&lower, q, t))
                    } else {
                        (region_acceptable(&arm, p, t), region_acceptable(&lower, s, q))
                    };
                    if !(arm_ok && lower_ok) {
                        continue;
                    }
                    let block = if from_arm { absorbed(other, lower, q, t) } else { absorbed(other, lower, s, q) };
                    let Some(block) = block else { continue };
                    let parts = if from_arm { vec![(arm, s, p), (lower, q, t)] } else { vec![(lower, s, q), (arm, p, t)] };
                    return Some(Chain { kind: CShaped, parts, blocks: vec![block] });
                }
            }
            (Some(i), Some(j)) if i != j => {
                let (a, b) = (arms[i], arms[j]);
                for p in crossings(&a, s, t) {
                    if !region_acceptable(&a, s, p) {
                        continue;
                    }
                    for p2 in crossings(&b, s, t) {
                        let (q, q2) = (below(p), below(p2));
                        if region_acceptable(&lower, q, q2) && region_acceptable(&b, p2, t) {
                            return Some(Chain { kind: CShaped, parts: vec![(a, s, p), (lower, q, q2), (b, p2, t)], blocks: Vec::new() });
                        }
                    }
                }
            }
            _ => {}
        }
    }
    None
}

/// The move the constructor makes on a region that is too large for the
/// exhaustive core.
pub(crate) fn choose(r: &Region, s: Vertex, t: Vertex) -> Option<Move> {
    if let Some(p) = best_peel(r, s, t) {
        return Some(Move::Peel(p));
    }
    if let Some(b) = bridge(r, s, t) {
        return Some(Move::Bridge(b));
    }
    arm_chain(r, s, t).map(Move::Chain)
}

