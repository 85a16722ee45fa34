//! Forbidden conditions compiled to coordinate predicates.
//!
//! Each predicate is written for one canonical frame (L notch top-right,
//! C notch on the top border) and one endpoint order. The `*_first`
//! entry points evaluate the symmetry closure of every predicate, because a
//! Hamiltonian path survives reflections of the shape and reversal.
//!
//! Readings fixed against the exhaustive search:
//! - when a clause substitutes a connector for an endpoint that lies outside
//!   `G1`, the connector is chosen among those the path can actually leave
//!   through (color counts of `G1`), and the clause fires only if it holds for
//!   every such choice. F16 substitutes its fixed connector only when the
//!   colors admit it.

use crate::acceptability::{has_cut, region_acceptable, ConditionId};
use crate::grid::{Color, Vertex};
use crate::region::{Notch, Region};

fn v(x: i32, y: i32) -> Vertex {
    Vertex::new(x, y)
}

fn even(x: i32) -> bool {
    x % 2 == 0
}

fn odd(x: i32) -> bool {
    x % 2 != 0
}

fn black(p: Vertex) -> bool {
    p.color() == Color::Black
}

// ---------------------------------------------------------------- rectangles

/// F2 in its base orientation: `m` even, `n = 3`, `s` black, `t` white.
fn f2_base(m: i32, n: i32, s: Vertex, t: Vertex) -> bool {
    even(m)
        && n == 3
        && black(s)
        && !black(t)
        && ((s.y == 2 && s.x < t.x) || (s.y != 2 && s.x < t.x - 1))
}

/// F2 over the dihedral group of the rectangle and endpoint reversal.
pub(crate) fn rect_f2(m: i32, n: i32, s: Vertex, t: Vertex) -> bool {
    if !(n == 3 && even(m)) && !(m == 3 && even(n)) {
        return false;
    }
    for transpose in [false, true] {
        let (mm, nn) = if transpose { (n, m) } else { (m, n) };
        for fx in [false, true] {
            for fy in [false, true] {
                let map = |p: Vertex| {
                    let p = if transpose { v(p.y, p.x) } else { p };
                    let x = if fx { mm + 1 - p.x } else { p.x };
                    let y = if fy { nn + 1 - p.y } else { p.y };
                    v(x, y)
                };
                let (a, b) = (map(s), map(t));
                if f2_base(mm, nn, a, b) || f2_base(mm, nn, b, a) {
                    return true;
                }
            }
        }
    }
    false
}

/// F2 for endpoints given in the absolute frame of a rectangular region.
fn region_f2(r: &Region, s: Vertex, t: Vertex) -> bool {
    r.notch.is_none() && rect_f2(r.w, r.h, local(r, s), local(r, t))
}

fn local(r: &Region, p: Vertex) -> Vertex {
    v(p.x - r.x0 + 1, p.y - r.y0 + 1)
}

// ----------------------------------------------------------------- L-shapes

/// `L(m,n,k,l)`: notch at columns `m-k+1..m`, rows `1..l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct LParams {
    pub m: i32,
    pub n: i32,
    pub k: i32,
    pub l: i32,
}

impl LParams {
    fn size(&self) -> i32 {
        self.m * self.n - self.k * self.l
    }

    fn even_sized(&self) -> bool {
        even(self.size())
    }

    /// Reflection in the anti-diagonal, which keeps the notch top-right.
    fn reflect(&self) -> LParams {
        LParams { m: self.n, n: self.m, k: self.l, l: self.k }
    }

    fn reflect_vertex(&self, p: Vertex) -> Vertex {
        v(self.n + 1 - p.y, self.m + 1 - p.x)
    }
}

fn f4(g: LParams, s: Vertex, t: Vertex) -> bool {
    let LParams { m, n, k, l } = g;
    k == 1
        && l == 1
        && g.even_sized()
        && even(m - 1)
        && m - 1 > 2
        && even(n - 1)
        && n - 1 > 2
        && s == v(m - 1, 2)
        && t != v(m - 1, 1)
        && t != v(m, 2)
}

fn f5(g: LParams, s: Vertex, t: Vertex) -> bool {
    let LParams { m, n, k, l } = g;
    !g.even_sized()
        && n - l == 2
        && odd(m - k)
        && m - k >= 3
        && ((s.x > m - k && t.x > m - k) || (s == v(m - k, n) && t.x > m - k))
}

fn f6(g: LParams, s: Vertex, t: Vertex) -> bool {
    let LParams { m, n, k, l } = g;
    g.even_sized()
        && n - l == 2
        && m - k == 2
        && ((s == v(1, l + 1) && t.x > 2) || (s == v(2, n) && t.y < l) || (t == v(2, n) && s.y <= l))
}

fn f7(g: LParams, s: Vertex, t: Vertex) -> bool {
    let LParams { m, n, k, l } = g;
    g.even_sized()
        && ((n == 3 && l == 1 && even(m - k) && m - k > 2 && s == v(m - k - 1, 1) && t == v(m - k, 3))
            || (m == 3 && k == 1 && even(n - l) && n - l > 2 && s == v(1, l + 1) && t == v(m, l + 2)))
}

/// Connectors of `g1` from which a path starting at `from` inside `g1` can
/// leave after covering it.
fn exits(g1: &Region, from: Vertex, connectors: &[Vertex]) -> Vec<Vertex> {
    connectors
        .iter()
        .copied()
        .filter(|&x| x != from && g1.color_compatible(from, x))
        .collect()
}

/// Endpoint pairs for `g1` after replacing an endpoint outside `g1` by an
/// exit connector. `None` when both endpoints lie outside.
fn substituted(g1: &Region, s: Vertex, t: Vertex, connectors: &[Vertex]) -> Option<Vec<(Vertex, Vertex)>> {
    match (g1.contains(s), g1.contains(t)) {
        (true, true) => Some(vec![(s, t)]),
        (true, false) => Some(exits(g1, s, connectors).into_iter().map(|x| (s, x)).collect()),
        (false, true) => Some(exits(g1, t, connectors).into_iter().map(|x| (x, t)).collect()),
        (false, false) => None,
    }
}

/// Clause holds for every admissible substitution. With no admissible
/// connector at all the path cannot cross into `g1`, which also fires.
fn all_substituted(
    g1: &Region,
    s: Vertex,
    t: Vertex,
    connectors: &[Vertex],
    pred: impl Fn(Vertex, Vertex) -> bool,
) -> bool {
    match substituted(g1, s, t, connectors) {
        Some(pairs) => pairs.iter().all(|&(a, b)| pred(a, b)),
        None => false,
    }
}

fn f8(g: LParams, s: Vertex, t: Vertex) -> bool {
    let LParams { m, n, k, l } = g;
    if !g.even_sized() {
        return false;
    }
    let (g1, conns) = if m - k == 2 && n - l > 2 {
        (Region::rect(1, l + 1, m, n - l), [v(1, l + 1), v(2, l + 1)])
    } else if n - l == 2 && m - k > 2 {
        (Region::rect(1, 1, m - k, n), [v(m - k, l + 1), v(m - k, l + 2)])
    } else {
        return false;
    };
    if !g1.contains(s) && !g1.contains(t) {
        let [a, b] = conns;
        return region_f2(&g1, a, b);
    }
    all_substituted(&g1, s, t, &conns, |a, b| region_f2(&g1, a, b))
}

/// F9 tries every 3-rectangle `G1` cut off by a straight separation of
/// the L, plus the cut around the bottom of the inner corner.
fn f9(g: LParams, s: Vertex, t: Vertex) -> bool {
    let LParams { m, n, k, l } = g;
    if !g.even_sized() || !((m - k == 3 && n - l >= 3) || (m - k > 3 && n - l == 3)) {
        return false;
    }
    let row = |y: i32, x0: i32| [v(x0, y), v(x0 + 1, y), v(x0 + 2, y)];
    let col = |x: i32, y0: i32| [v(x, y0), v(x, y0 + 1), v(x, y0 + 2)];
    // (G1, G2, connectors of G1)
    let mut seps: Vec<(Region, Region, [Vertex; 3])> = Vec::new();
    if m - k == 3 {
        seps.push((Region::rect(1, 1, 3, l), Region::rect(1, l + 1, m, n - l), row(l, 1)));
    }
    if n - l == 3 {
        seps.push((Region::rect(m - k + 1, l + 1, k, 3), Region::rect(1, 1, m - k, n), col(m - k + 1, l + 1)));
        if m - k == 3 {
            seps.push((Region::rect(1, 1, 3, n), Region::rect(4, l + 1, k, 3), col(3, l + 1)));
            seps.push((Region::rect(1, l + 1, m, 3), Region::rect(1, 1, 3, l), row(l + 1, 1)));
        }
    }
    let hit = seps.into_iter().any(|(g1, g2, conns)| {
        (g1.w == 3 || g1.h == 3)
            && even(g1.size() as i32)
            && even(g2.size() as i32)
            && nine_sub(&g1, s, t, conns)
    });
    hit || (even(m)
        && odd(n)
        && odd(k)
        && even(l)
        && n - l == 3
        && m - k >= 5
        && nine_sub(&Region::rect(m - k, l + 1, k + 1, 3), s, t, col(m - k, l + 1)))
}

/// The F9 substitution: an endpoint outside `g1` becomes the middle connector.
fn nine_sub(g1: &Region, s: Vertex, t: Vertex, conns: [Vertex; 3]) -> bool {
    let w = conns[1];
    let s1 = if g1.contains(s) { s } else { w };
    let t1 = if g1.contains(t) { t } else { w };
    s1 != t1 && region_f2(g1, s1, t1)
}

fn l_literal(id: ConditionId, g: LParams, s: Vertex, t: Vertex) -> bool {
    match id {
        ConditionId::F4 => f4(g, s, t),
        ConditionId::F5 => f5(g, s, t),
        ConditionId::F6 => f6(g, s, t),
        ConditionId::F7 => f7(g, s, t),
        ConditionId::F8 => f8(g, s, t),
        ConditionId::F9 => f9(g, s, t),
        _ => false,
    }
}

/// Condition `id` on `L(m,n,k,l)` under anti-diagonal reflection and reversal.
pub(crate) fn l_holds(id: ConditionId, g: LParams, s: Vertex, t: Vertex) -> bool {
    let r = g.reflect();
    let (rs, rt) = (g.reflect_vertex(s), g.reflect_vertex(t));
    l_literal(id, g, s, t) || l_literal(id, g, t, s) || l_literal(id, r, rs, rt) || l_literal(id, r, rt, rs)
}

pub(crate) fn l_first(g: LParams, s: Vertex, t: Vertex) -> Option<ConditionId> {
    use ConditionId::*;
    [F4, F5, F6, F7, F8, F9].into_iter().find(|&id| l_holds(id, g, s, t))
}

/// Condition `id` on a region whose canonical shape is an L.
fn region_l_holds(r: &Region, ids: &[ConditionId], s: Vertex, t: Vertex) -> bool {
    let (shape, frame) = r.canonical();
    let crate::grid::Shape::LShape { m, n, k, l } = shape else {
        return false;
    };
    let g = LParams { m, n, k, l };
    let (a, b) = (frame.to_local(s), frame.to_local(t));
    ids.iter().any(|&id| l_holds(id, g, a, b))
}

// ----------------------------------------------------------------- C-shapes

/// `C(m,n,k,l)` with notch at columns `d+1..d+k`, rows `1..l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct CParams {
    pub m: i32,
    pub n: i32,
    pub k: i32,
    pub l: i32,
    pub d: i32,
}

impl CParams {
    fn c(&self) -> i32 {
        self.m - self.d - self.k
    }

    fn size(&self) -> i32 {
        self.m * self.n - self.k * self.l
    }

    fn even_sized(&self) -> bool {
        even(self.size())
    }

    fn mirror(&self) -> CParams {
        CParams { d: self.c(), ..*self }
    }

    fn mirror_vertex(&self, p: Vertex) -> Vertex {
        v(self.m + 1 - p.x, p.y)
    }

    /// Columns `1..=d+k` (an L with its notch top-right).
    fn left_l(&self) -> Region {
        Region { x0: 1, y0: 1, w: self.d + self.k, h: self.n, notch: Some(Notch { x0: self.d + 1, w: self.k, depth: self.l }) }
    }

    /// Columns `d+k+1..=m`.
    fn right_rect(&self) -> Region {
        Region::rect(self.d + self.k + 1, 1, self.c(), self.n)
    }
}

pub(crate) fn c_f12(g: CParams) -> bool {
    // Odd x odd minus an odd x odd notch whose corners are black.
    odd(g.m) && odd(g.n) && odd(g.k) && odd(g.l) && black(v(g.d + 1, 1))
}

fn f10(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { n, k, l, d, .. } = g;
    let c = g.c();
    if !(n - l == 1 && c > 1 && d > 1) {
        return false;
    }
    if (s.x <= d && t.x <= d) || (s.x > d + k && t.x > d + k) {
        return true;
    }
    if !g.even_sized() {
        return false;
    }
    let (g1, g2) = (g.left_l(), g.right_rect());
    let (w, z) = (v(d + k, n), v(d + k + 1, n));
    g1.contains(s) && g2.contains(t) && (!region_acceptable(&g1, s, w) || !region_acceptable(&g2, z, t))
}

fn f11(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { m, n, k, l, d } = g;
    if !(n - l > 1 && d == 1 && g.c() > 1 && s == v(1, 1)) {
        return false;
    }
    let g2 = Region { x0: 1, y0: 1, w: m, h: n, notch: Some(Notch { x0: 1, w: k + 1, depth: l }) };
    let z = v(1, l + 1);
    g2.contains(t) && !region_acceptable(&g2, z, t)
}

fn f13(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { m, n, k, l, d } = g;
    let c = g.c();
    if !(odd(n) && n - l == 2 && d > 1 && c > 1) {
        return false;
    }
    let (g1, g2) = (g.left_l(), g.right_rect());
    let conns = [v(d + k, l + 1), v(d + k, l + 2)];
    let (g1_even, g2_even) = (even(g1.size() as i32), even(g2.size() as i32));
    let one_way = g1.contains(s) && g2.contains(t);
    if !g.even_sized() {
        if !g1_even && g2_even {
            if g2.contains(s) && g2.contains(t) {
                return true;
            }
            if one_way && all_substituted(&g1, s, t, &conns, |a, b| has_cut(&g1, a, b)) {
                return true;
            }
        }
        if even(m)
            && g1_even
            && !g2_even
            && one_way
            && all_substituted(&g1, s, t, &conns, |a, b| {
                region_l_holds(&g1, &[ConditionId::F6, ConditionId::F8], a, b)
            })
        {
            return true;
        }
        false
    } else if odd(d) && odd(c) {
        (g1.contains(s) && g1.contains(t))
            || (s.x <= d
                && t.x > d + k
                && all_substituted(&g1, s, t, &conns, |a, b| !region_acceptable(&g1, a, b)))
    } else {
        false
    }
}

fn f14(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { m, n, k, l, d } = g;
    let c = g.c();
    if !(odd(n) && n - l > 2 && odd(d) && d > 1 && c == 2) {
        return false;
    }
    if !(!g.even_sized() || (even(m) && odd(k) && even(l))) {
        return false;
    }
    let g2 = Region::rect(m - 1, 1, 2, l);
    let g1 = Region { x0: 1, y0: 1, w: m, h: n, notch: Some(Notch { x0: d + 1, w: k + 2, depth: l }) };
    let conns = [v(m - 1, l + 1), v(m, l + 1)];
    if !g.even_sized() {
        if !(even(m) || even(k)) {
            return false;
        }
        if g2.contains(s) && g2.contains(t) {
            return true;
        }
        if conns.contains(&s) && g2.contains(t) {
            return true;
        }
        odd(m)
            && odd(l)
            && g1.contains(s)
            && g2.contains(t)
            && all_substituted(&g1, s, t, &conns, |a, b| has_cut(&g1, a, b))
    } else {
        all_substituted(&g1, s, t, &conns, |a, b| region_l_holds(&g1, &[ConditionId::F9], a, b))
    }
}

fn f15(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { m, n, k, l, d } = g;
    let c = g.c();
    !g.even_sized()
        && even(m)
        && odd(n)
        && n - l == 4
        && odd(d)
        && d > 1
        && ((l == 1 && even(c) && c >= 4) || (s.y > l && t.y > l && c == 2))
        && s.x > d + k + 1
        && t.x > d + k + 1
}

fn f16(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { m, n, k, l, d } = g;
    let c = g.c();
    if !(g.even_sized() && even(m) && odd(n) && odd(c) && c > 1 && odd(d) && d > 1 && odd(n - l) && n - l > 1) {
        return false;
    }
    let g1 = Region { x0: 1, y0: 1, w: d + 1, h: n, notch: Some(Notch { x0: d + 1, w: 1, depth: l }) };
    let g2 = Region::with_notch(d + 2, 1, m - d - 1, n, Some(Notch { x0: d + 2, w: k - 1, depth: l }));
    let (w, y) = (v(d + 1, l + 2), v(d + 2, l + 2));
    let first = g1.contains(s) && {
        let t1 = if g1.contains(t) { t } else { w };
        s != t1 && (g1.contains(t) || g1.color_compatible(s, t1)) && region_l_holds(&g1, &[ConditionId::F9], s, t1)
    };
    let second = g2.contains(t) && {
        let s2 = if g2.contains(s) { s } else { y };
        s2 != t && (g2.contains(s) || g2.color_compatible(s2, t)) && region_l_holds(&g2, &[ConditionId::F9], s2, t)
    };
    first || second
}

fn f17_parity(g: CParams) -> bool {
    let CParams { m, n, k, l, d } = g;
    let c = g.c();
    if !g.even_sized() {
        even(n) || even(m) || (odd(k) && even(l)) || (even(k) && odd(l))
    } else {
        (odd(m) && odd(n))
            || even(n)
            || (even(m)
                && odd(n)
                && ((even(c) && even(d)) || (even(c) && c >= 4 && odd(d)) || (odd(c) && even(d) && d >= 4)))
    }
}

fn f17(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { n, k, l, d, .. } = g;
    let c = g.c();
    if !(n - l >= 2 && d > 1 && c > 1 && f17_parity(g)) {
        return false;
    }
    if odd(c * n) {
        return false;
    }
    if g.even_sized() && k == 1 && even(n - l) && n - l >= 4 && d <= 2 {
        return false;
    }
    let g1 = g.left_l();
    let conns: Vec<Vertex> = (l + 1..=n).map(|y| v(d + k, y)).collect();
    use ConditionId::*;
    all_substituted(&g1, s, t, &conns, |a, b| region_l_holds(&g1, &[F5, F6, F7, F8, F9], a, b))
}

fn f18(g: CParams, s: Vertex, t: Vertex) -> bool {
    let CParams { m, n, k, l, d } = g;
    let c = g.c();
    if !(g.even_sized() && odd(n) && odd(d) && d > 1 && odd(c) && c > 1 && even(n - l) && n - l >= 4) {
        return false;
    }
    if d == 3 {
        let g1 = Region::rect(1, 1, d, l + 1);
        if nine_sub(&g1, s, t, [v(1, l + 1), v(2, l + 1), v(3, l + 1)]) {
            return true;
        }
    }
    if n - l != 4 {
        return false;
    }
    let b1 = s.y > l + 1
        && t.y > l + 1
        && ((d == 3 && s.x <= d && t.x <= d && s == v(1, n - 1) && t.x > s.x)
            || (c == 3 && s.x > d + k && t.x > d + k && s.x < t.x && t == v(m, n - 1)));
    let b2 = black(s) && ((s.x <= d && t.x > d) || ((d + 1..=d + k).contains(&s.x) && t.x > d + k));
    let mid = |p: Vertex| (d + 1..=d + k).contains(&p.x);
    let b3 = mid(s)
        && mid(t)
        && ((t.x > s.x && black(s))
            || (s.x == t.x && ((s.y == l + 2 && t.y == l + 3) || (t.y == l + 2 && s.y == l + 3))));
    b1 || b2 || b3
}

fn c_literal(id: ConditionId, g: CParams, s: Vertex, t: Vertex) -> bool {
    match id {
        ConditionId::F10 => f10(g, s, t),
        ConditionId::F11 => f11(g, s, t),
        ConditionId::F12 => c_f12(g),
        ConditionId::F13 => f13(g, s, t),
        ConditionId::F14 => f14(g, s, t),
        ConditionId::F15 => f15(g, s, t),
        ConditionId::F16 => f16(g, s, t),
        ConditionId::F17 => f17(g, s, t),
        ConditionId::F18 => f18(g, s, t),
        _ => false,
    }
}

/// Condition `id` on `C(m,n,k,l)` under horizontal mirror and reversal.
pub(crate) fn c_holds(id: ConditionId, g: CParams, s: Vertex, t: Vertex) -> bool {
    let r = g.mirror();
    let (ms, mt) = (g.mirror_vertex(s), g.mirror_vertex(t));
    c_literal(id, g, s, t) || c_literal(id, g, t, s) || c_literal(id, r, ms, mt) || c_literal(id, r, mt, ms)
}

pub(crate) fn c_first(g: CParams, s: Vertex, t: Vertex) -> Option<ConditionId> {
    use ConditionId::*;
    [F10, F11, F12, F13, F14, F15, F16, F17, F18].into_iter().find(|&id| c_holds(id, g, s, t))
}
