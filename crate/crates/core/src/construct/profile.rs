//! Hamiltonian `(s,t)`-paths on thin regions by a frontier dynamic program.
//!
//! Cells are scanned row by row across the narrow side. The state is the
//! row of plugs crossing the scan line: `(` and `)` pair the two loose ends
//! of a path fragment, `|` marks a fragment whose other end is `s` or `t`.
//! Every layer keeps a parent link per state, so one backward walk recovers
//! the edges of a solution.

use std::collections::HashMap;

use crate::grid::Vertex;
use crate::region::Region;

/// Widest scan line the plug encoding holds.
pub(crate) const MAX_WIDTH: i32 = 30;

/// Upper bound on stored states over all layers.
const MAX_STORED: usize = 40_000_000;

/// Upper bound on the states of one layer.
const MAX_LAYER: usize = 2_000_000;

const OPEN: u8 = 1;
const CLOSE: u8 = 2;
const END: u8 = 3;
const DONE: u64 = 1 << 63;

#[derive(Clone, Copy)]
struct Plugs(u64);

impl Plugs {
    fn get(self, i: usize) -> u8 {
        ((self.0 >> (2 * i)) & 3) as u8
    }

    fn set(&mut self, i: usize, v: u8) {
        self.0 = (self.0 & !(3 << (2 * i))) | ((v as u64) << (2 * i));
    }

    /// Index of the bracket matching the one at `i`.
    fn partner(self, i: usize, len: usize) -> usize {
        let mut depth = 0i32;
        if self.get(i) == OPEN {
            for j in i..len {
                match self.get(j) {
                    OPEN => depth += 1,
                    CLOSE => {
                        depth -= 1;
                        if depth == 0 {
                            return j;
                        }
                    }
                    _ => {}
                }
            }
        } else {
            for j in (0..=i).rev() {
                match self.get(j) {
                    CLOSE => depth += 1,
                    OPEN => {
                        depth -= 1;
                        if depth == 0 {
                            return j;
                        }
                    }
                    _ => {}
                }
            }
        }
        unreachable!("unbalanced plugs")
    }
}

struct Layer {
    cell: (i32, i32),
    parent: Vec<u32>,
    /// Bit 0: edge to the next cell in the row, bit 1: edge to the next row.
    edges: Vec<u8>,
}

fn mask(i: usize) -> u64 {
    3 << (2 * i)
}

/// A Hamiltonian path of `r` from `s` to `t`, or `None` when there is none,
/// the scan line is wider than [`MAX_WIDTH`], or the tables outgrow their
/// budget.
pub(crate) fn path(r: &Region, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let transpose = r.w > r.h;
    let (width, height) = if transpose { (r.h, r.w) } else { (r.w, r.h) };
    if width > MAX_WIDTH || s == t {
        return None;
    }
    let at = |i: i32, j: i32| {
        if transpose {
            Vertex::new(r.x0 + j, r.y0 + i)
        } else {
            Vertex::new(r.x0 + i, r.y0 + j)
        }
    };
    let inside = |i: i32, j: i32| i >= 0 && j >= 0 && i < width && j < height && r.contains(at(i, j));
    let w = width as usize;

    let mut layers: Vec<Layer> = Vec::new();
    let mut stored = 0usize;
    // Live states with their index in the last stored layer.
    let mut live: Vec<(u64, u32)> = vec![(0, u32::MAX)];

    for j in 0..height {
        for i in 0..width {
            let iu = i as usize;
            if i == 0 {
                // New row: the horizontal plug enters at position 0.
                live.retain(|&(raw, _)| raw & mask(w) == 0);
                for (raw, _) in live.iter_mut() {
                    *raw = ((*raw & !DONE) << 2) | (*raw & DONE);
                }
            }
            if !inside(i, j) {
                live.retain(|&(raw, _)| raw & (mask(iu) | mask(iu + 1)) == 0);
                continue;
            }
            let (has_r, has_d) = (inside(i + 1, j), inside(i, j + 1));
            let v = at(i, j);
            let endpoint = v == s || v == t;
            let mut next: HashMap<u64, u32> = HashMap::new();
            let mut layer = Layer { cell: (i, j), parent: Vec::new(), edges: Vec::new() };
            let mut states: Vec<(u64, u32)> = Vec::new();
            let mut emit = |state: u64, parent: u32, edges: u8, layer: &mut Layer| {
                if let std::collections::hash_map::Entry::Vacant(e) = next.entry(state) {
                    e.insert(states.len() as u32);
                    states.push((state, states.len() as u32));
                    layer.parent.push(parent);
                    layer.edges.push(edges);
                }
            };
            for &(raw, idx) in &live {
                if raw & DONE != 0 {
                    continue;
                }
                let p = Plugs(raw);
                let (left, up) = (p.get(iu), p.get(iu + 1));
                let place = |p: Plugs, d: u8, rr: u8| {
                    let mut q = p;
                    q.set(iu, d);
                    q.set(iu + 1, rr);
                    q
                };
                match (left, up, endpoint) {
                    (0, 0, false) => {
                        if has_r && has_d {
                            emit(place(p, OPEN, CLOSE).0, idx, 3, &mut layer);
                        }
                    }
                    (0, 0, true) => {
                        if has_d {
                            emit(place(p, END, 0).0, idx, 2, &mut layer);
                        }
                        if has_r {
                            emit(place(p, 0, END).0, idx, 1, &mut layer);
                        }
                    }
                    (x, 0, false) | (0, x, false) => {
                        if has_d {
                            emit(place(p, x, 0).0, idx, 2, &mut layer);
                        }
                        if has_r {
                            emit(place(p, 0, x).0, idx, 1, &mut layer);
                        }
                    }
                    (x, 0, true) | (0, x, true) => {
                        let at_x = if left != 0 { iu } else { iu + 1 };
                        let mut q = p;
                        if x == END {
                            q = place(q, 0, 0);
                            if q.0 == 0 {
                                emit(DONE, idx, 0, &mut layer);
                            }
                        } else {
                            let m = q.partner(at_x, w + 1);
                            q.set(m, END);
                            emit(place(q, 0, 0).0, idx, 0, &mut layer);
                        }
                    }
                    (_, _, true) => {}
                    (a, b, false) => {
                        let mut q = p;
                        match (a, b) {
                            (END, END) => {
                                q = place(q, 0, 0);
                                if q.0 == 0 {
                                    emit(DONE, idx, 0, &mut layer);
                                }
                                continue;
                            }
                            (END, _) => {
                                let m = q.partner(iu + 1, w + 1);
                                q.set(m, END);
                            }
                            (_, END) => {
                                let m = q.partner(iu, w + 1);
                                q.set(m, END);
                            }
                            (OPEN, CLOSE) => continue,
                            (CLOSE, OPEN) => {}
                            (OPEN, OPEN) => {
                                let m = q.partner(iu + 1, w + 1);
                                q.set(m, OPEN);
                            }
                            (CLOSE, CLOSE) => {
                                let m = q.partner(iu, w + 1);
                                q.set(m, CLOSE);
                            }
                            _ => unreachable!(),
                        }
                        emit(place(q, 0, 0).0, idx, 0, &mut layer);
                    }
                }
            }
            stored += states.len();
            if states.is_empty() || stored > MAX_STORED || states.len() > MAX_LAYER {
                return None;
            }
            live = states;
            layers.push(layer);
        }
    }
    let mut idx = live.iter().find(|&&(raw, _)| raw == DONE)?.1;
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    let mut add = |a: Vertex, b: Vertex| {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    };
    for layer in layers.iter().rev() {
        let (i, j) = layer.cell;
        let e = layer.edges[idx as usize];
        if e & 1 != 0 {
            add(at(i, j), at(i + 1, j));
        }
        if e & 2 != 0 {
            add(at(i, j), at(i, j + 1));
        }
        idx = layer.parent[idx as usize];
    }
    let mut out = vec![s];
    let (mut prev, mut cur) = (s, s);
    while cur != t {
        let next = *adj.get(&cur)?.iter().find(|&&n| n != prev)?;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    (out.len() as i64 == r.size()).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acceptability::check_region;
    use crate::region::Notch;

    #[test]
    fn agrees_with_checker_on_small_regions() {
        let regions = [
            Region::rect(1, 1, 4, 3),
            Region::rect(2, 3, 5, 5),
            Region { x0: 1, y0: 1, w: 6, h: 4, notch: Some(Notch { x0: 3, w: 2, depth: 1 }) },
            Region { x0: 1, y0: 1, w: 5, h: 6, notch: Some(Notch { x0: 4, w: 2, depth: 2 }) },
            Region { x0: 1, y0: 1, w: 7, h: 3, notch: Some(Notch { x0: 1, w: 3, depth: 1 }) },
        ];
        for r in regions {
            let vs: Vec<Vertex> = r.vertices().collect();
            for &s in &vs {
                for &t in &vs {
                    if s == t {
                        continue;
                    }
                    let found = path(&r, s, t);
                    assert_eq!(found.is_some(), check_region(&r, s, t).is_acceptable(), "{r:?} {s} {t}");
                    if let Some(p) = found {
                        assert_eq!(p.len() as i64, r.size());
                        assert!(p.windows(2).all(|w| w[0].is_adjacent(w[1])));
                        let mut seen = p.clone();
                        seen.sort_by_key(|v| (v.x, v.y));
                        seen.dedup();
                        assert_eq!(seen.len(), p.len());
                    }
                }
            }
        }
    }
}
