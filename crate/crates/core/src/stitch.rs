//! Merge primitives: splicing a cycle into a path along parallel edges,
//! joining two paths across a bridge edge, and absorbing dominoes.

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{Cycle, Path, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StitchError {
    #[error("no edge of the path is parallel to an edge of the part being merged")]
    NoParallelEdge,
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("{0} occurs in both inputs")]
    Overlap(Vertex),
    #[error("a strip is one or two disjoint edges, got {0} vertices")]
    BadStrip(usize),
    #[error("empty input")]
    Empty,
}

/// Two nonincident edges facing each other: `e1.0` is adjacent to `e2.0`
/// and `e1.1` to `e2.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParallelEdgePair {
    pub e1: (Vertex, Vertex),
    pub e2: (Vertex, Vertex),
}

impl ParallelEdgePair {
    pub fn new(e1: (Vertex, Vertex), e2: (Vertex, Vertex)) -> Option<Self> {
        let ok = e1.0.is_adjacent(e1.1)
            && e2.0.is_adjacent(e2.1)
            && e1.0.is_adjacent(e2.0)
            && e1.1.is_adjacent(e2.1)
            && [e1.0, e1.1].iter().all(|v| *v != e2.0 && *v != e2.1);
        ok.then_some(ParallelEdgePair { e1, e2 })
    }
}

const SIDES: [(i32, i32); 4] = [(0, -1), (-1, 0), (1, 0), (0, 1)];

fn shift(v: Vertex, (dx, dy): (i32, i32)) -> Vertex {
    Vertex::new(v.x + dx, v.y + dy)
}

/// Path edges as index pairs, ordered by their smaller endpoint (row-major)
/// and then the larger one.
fn edges_in_scan_order(p: &[Vertex]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..p.len().saturating_sub(1)).collect();
    let key = |i: usize| {
        let (a, b) = (p[i], p[i + 1]);
        (a.min(b), a.max(b))
    };
    idx.sort_by_key(|&i| key(i));
    idx
}

fn disjoint(a: &[Vertex], b: &[Vertex]) -> Result<(), StitchError> {
    let seen: FxHashSet<Vertex> = a.iter().copied().collect();
    match b.iter().find(|v| seen.contains(v)) {
        Some(&v) => Err(StitchError::Overlap(v)),
        None => Ok(()),
    }
}

/// First parallel pair between an edge of `p` and an edge of `c`, scanning
/// the path edges in row-major order.
pub fn find_parallel_pair(p: &Path, c: &Cycle) -> Option<ParallelEdgePair> {
    let cyc = c.vertices();
    let n = cyc.len();
    let pos: FxHashMap<Vertex, usize> = cyc.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adjacent_in_cycle = |i: usize, j: usize| (i + 1) % n == j || (j + 1) % n == i;
    let pv = p.vertices();
    for i in edges_in_scan_order(pv) {
        let (a, b) = (pv[i], pv[i + 1]);
        for d in SIDES {
            let (a2, b2) = (shift(a, d), shift(b, d));
            if let (Some(&ia), Some(&ib)) = (pos.get(&a2), pos.get(&b2)) {
                if adjacent_in_cycle(ia, ib) {
                    return Some(ParallelEdgePair { e1: (a, b), e2: (a2, b2) });
                }
            }
        }
    }
    None
}

/// Walks `c` from `from` to its neighbour `to` the long way round.
fn long_way(c: &[Vertex], from: usize, to: usize) -> impl Iterator<Item = Vertex> + '_ {
    let n = c.len();
    let forward = (to + 1) % n == from;
    (0..n).map(move |k| if forward { c[(from + k) % n] } else { c[(from + n - k) % n] })
}

/// Replaces one path edge `(a,b)` by `a, a', ..., b', b` where `(a',b')` is
/// the parallel cycle edge and the cycle is walked the long way round.
pub fn merge_cycle_via_parallel_edges(p: &Path, c: &Cycle) -> Result<Path, StitchError> {
    disjoint(p.vertices(), c.vertices())?;
    let pair = find_parallel_pair(p, c).ok_or(StitchError::NoParallelEdge)?;
    let pv = p.vertices();
    let cyc = c.vertices();
    let i = (0..pv.len() - 1).find(|&i| (pv[i], pv[i + 1]) == pair.e1).expect("pair edge is a path edge");
    let ia = cyc.iter().position(|&v| v == pair.e2.0).expect("pair edge is a cycle edge");
    let ib = cyc.iter().position(|&v| v == pair.e2.1).expect("pair edge is a cycle edge");
    let mut out = Vec::with_capacity(pv.len() + cyc.len());
    out.extend_from_slice(&pv[..=i]);
    out.extend(long_way(cyc, ia, ib));
    out.extend_from_slice(&pv[i + 1..]);
    Ok(Path(out))
}

/// Joins two vertex-disjoint cycles along a parallel pair of edges.
pub fn merge_cycles(c1: &Cycle, c2: &Cycle) -> Result<Cycle, StitchError> {
    disjoint(c1.vertices(), c2.vertices())?;
    let (a, b) = (c1.vertices(), c2.vertices());
    let n1 = a.len();
    let pos2: FxHashMap<Vertex, usize> = b.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n2 = b.len();
    let mut order: Vec<usize> = (0..n1).collect();
    order.sort_by_key(|&i| {
        let (u, v) = (a[i], a[(i + 1) % n1]);
        (u.min(v), u.max(v))
    });
    for i in order {
        let (u, v) = (a[i], a[(i + 1) % n1]);
        for d in SIDES {
            let (Some(&iu), Some(&iv)) = (pos2.get(&shift(u, d)), pos2.get(&shift(v, d))) else {
                continue;
            };
            if (iu + 1) % n2 != iv && (iv + 1) % n2 != iu {
                continue;
            }
            // u -> (c2 from u' to v' the long way) -> v -> (rest of c1) -> u
            let mut out = Vec::with_capacity(n1 + n2);
            out.push(u);
            out.extend(long_way(b, iu, iv));
            out.extend((1..n1).map(|k| a[(i + k) % n1]));
            return Ok(Cycle(out));
        }
    }
    Err(StitchError::NoParallelEdge)
}

/// Concatenates `p1` (ending at `p`) and `p2` (starting at `q`) across the
/// bridge edge `(p,q)`.
pub fn join_at_bridge(p1: &Path, p2: &Path) -> Result<Path, StitchError> {
    let p = p1.last().ok_or(StitchError::Empty)?;
    let q = p2.first().ok_or(StitchError::Empty)?;
    if !p.is_adjacent(q) {
        return Err(StitchError::NotAdjacent(p, q));
    }
    disjoint(p1.vertices(), p2.vertices())?;
    let mut out = p1.vertices().to_vec();
    out.extend_from_slice(p2.vertices());
    Ok(Path(out))
}

/// Inserts one or two dominoes `(v1,v2)` (and `(v3,v4)`) into the path,
/// each next to a parallel path edge.
pub fn absorb_two_vertex_strip(p: &Path, strip: &[Vertex]) -> Result<Path, StitchError> {
    if !(strip.len() == 2 || strip.len() == 4) || strip.chunks(2).any(|e| !e[0].is_adjacent(e[1])) {
        return Err(StitchError::BadStrip(strip.len()));
    }
    disjoint(p.vertices(), strip)?;
    let mut path = p.clone();
    for e in strip.chunks(2) {
        let domino = Cycle(vec![e[0], e[1]]);
        path = merge_domino(&path, &domino)?;
    }
    Ok(path)
}

fn merge_domino(p: &Path, d: &Cycle) -> Result<Path, StitchError> {
    let (v1, v2) = (d.0[0], d.0[1]);
    let pv = p.vertices();
    for i in edges_in_scan_order(pv) {
        let (a, b) = (pv[i], pv[i + 1]);
        let ins = if a.is_adjacent(v1) && b.is_adjacent(v2) {
            Some([v1, v2])
        } else if a.is_adjacent(v2) && b.is_adjacent(v1) {
            Some([v2, v1])
        } else {
            None
        };
        if let Some(ins) = ins {
            let mut out = Vec::with_capacity(pv.len() + 2);
            out.extend_from_slice(&pv[..=i]);
            out.extend(ins);
            out.extend_from_slice(&pv[i + 1..]);
            return Ok(Path(out));
        }
    }
    Err(StitchError::NoParallelEdge)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(pts: &[(i32, i32)]) -> Vec<Vertex> {
        pts.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn merges_square_into_domino_path() {
        let p = Path(vs(&[(1, 1), (1, 2)]));
        let c = Cycle(vs(&[(2, 1), (2, 2), (3, 2), (3, 1)]));
        let out = merge_cycle_via_parallel_edges(&p, &c).unwrap();
        assert_eq!(out.vertices(), vs(&[(1, 1), (2, 1), (3, 1), (3, 2), (2, 2), (1, 2)]).as_slice());
    }

    #[test]
    fn far_apart_parts_do_not_merge() {
        let p = Path(vs(&[(1, 1), (1, 2)]));
        let c = Cycle(vs(&[(5, 1), (5, 2), (6, 2), (6, 1)]));
        assert_eq!(merge_cycle_via_parallel_edges(&p, &c), Err(StitchError::NoParallelEdge));
    }

    #[test]
    fn bridge_join() {
        let out = join_at_bridge(&Path(vs(&[(1, 1)])), &Path(vs(&[(1, 2)]))).unwrap();
        assert_eq!(out.vertices(), vs(&[(1, 1), (1, 2)]).as_slice());
        let err = join_at_bridge(&Path(vs(&[(1, 1)])), &Path(vs(&[(3, 1)])));
        assert_eq!(err, Err(StitchError::NotAdjacent((1, 1).into(), (3, 1).into())));
    }

    #[test]
    fn absorbs_dominoes() {
        let p = Path(vs(&[(1, 1), (1, 2), (1, 3), (1, 4)]));
        let one = absorb_two_vertex_strip(&p, &vs(&[(2, 1), (2, 2)])).unwrap();
        assert_eq!(one.len(), 6);
        let two = absorb_two_vertex_strip(&p, &vs(&[(2, 1), (2, 2), (2, 3), (2, 4)])).unwrap();
        assert_eq!(two.len(), 8);
        for w in two.vertices().windows(2) {
            assert!(w[0].is_adjacent(w[1]));
        }
        assert_eq!(absorb_two_vertex_strip(&p, &vs(&[(4, 1), (4, 2)])), Err(StitchError::NoParallelEdge));
    }

    #[test]
    fn cycles_merge_into_one() {
        let a = Cycle(vs(&[(1, 1), (2, 1), (2, 2), (1, 2)]));
        let b = Cycle(vs(&[(3, 1), (4, 1), (4, 2), (3, 2)]));
        let m = merge_cycles(&a, &b).unwrap();
        let shape = crate::grid::Shape::rect(4, 2).unwrap();
        assert!(m.is_hamiltonian_in(&shape));
    }
}
