//! Exhaustive backtracking search for Hamiltonian paths and cycles on small
//! grid graphs. Exact: every pruning rule only discards states from which no
//! completion exists.

mod sweep;

pub use sweep::{
    differential_sweep, differential_sweep_with, enumerate_in, enumerate_instances, shapes, ConstructionFailure,
    Disagreement, SweepBounds, SweepOptions, SweepReport,
};

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::grid::{Color, Cycle, Path, Shape, Vertex};

/// Default vertex bound for the exhaustive search.
pub const DEFAULT_MAX_VERTICES: usize = 48;
/// Environment variable overriding [`DEFAULT_MAX_VERTICES`].
pub const MAX_VERTICES_ENV: &str = "HAM_ORACLE_MAX_VERTICES";
/// Vertex sets are bitmasks, so nothing larger can ever be searched.
pub const HARD_LIMIT: usize = 64;

const MEMO_FROM: usize = 20;
const MEMO_CAP: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{vertices} vertices exceed the oracle bound of {bound}")]
    TooLarge { vertices: usize, bound: usize },
    #[error("endpoint {0} is not a vertex of the shape")]
    NotInShape(Vertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
    /// Prune by color counts of the unvisited set. Disabling it makes the
    /// search independent of the bipartite counting argument.
    pub parity_prune: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vertices: DEFAULT_MAX_VERTICES, parity_prune: true }
    }
}

impl OracleConfig {
    /// Default configuration with the bound taken from the environment when set.
    pub fn from_env() -> Self {
        let max_vertices = std::env::var(MAX_VERTICES_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_VERTICES);
        OracleConfig { max_vertices, ..Default::default() }
    }

    fn bound(&self) -> usize {
        self.max_vertices.min(HARD_LIMIT)
    }
}

/// Some Hamiltonian `(s,t)`-path of `shape`, if one exists.
pub fn brute_force_path(shape: &Shape, s: Vertex, t: Vertex) -> Result<Option<Path>, OracleError> {
    brute_force_path_with(&OracleConfig::default(), shape, s, t)
}

pub fn brute_force_path_with(
    cfg: &OracleConfig,
    shape: &Shape,
    s: Vertex,
    t: Vertex,
) -> Result<Option<Path>, OracleError> {
    let n = shape.size() as usize;
    if n > cfg.bound() {
        return Err(OracleError::TooLarge { vertices: n, bound: cfg.bound() });
    }
    for v in [s, t] {
        if !shape.contains(v) {
            return Err(OracleError::NotInShape(v));
        }
    }
    let g = Graph::new(shape.vertices().collect());
    Ok(g.path(s, t, cfg.parity_prune).map(Path))
}

/// Some Hamiltonian cycle of `shape`, if one exists.
pub fn brute_force_cycle(shape: &Shape) -> Result<Option<Cycle>, OracleError> {
    brute_force_cycle_with(&OracleConfig::default(), shape)
}

pub fn brute_force_cycle_with(cfg: &OracleConfig, shape: &Shape) -> Result<Option<Cycle>, OracleError> {
    let n = shape.size() as usize;
    if n > cfg.bound() {
        return Err(OracleError::TooLarge { vertices: n, bound: cfg.bound() });
    }
    Ok(Graph::new(shape.vertices().collect()).cycle(cfg.parity_prune))
}

/// Indexed grid graph on at most 64 vertices.
pub(crate) struct Graph {
    verts: Vec<Vertex>,
    adj: Vec<u64>,
    white: u64,
}

impl Graph {
    /// `verts` must be sorted row-major.
    pub(crate) fn new(verts: Vec<Vertex>) -> Graph {
        assert!(verts.len() <= HARD_LIMIT);
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let find = |v: Vertex| verts.binary_search(&v).ok();
        let mut adj = vec![0u64; verts.len()];
        let mut white = 0u64;
        for (i, &v) in verts.iter().enumerate() {
            if v.color() == Color::White {
                white |= 1 << i;
            }
            for (dx, dy) in crate::region::DIRS {
                if let Some(j) = find(v.offset(dx, dy)) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { verts, adj, white }
    }

    fn full(&self) -> u64 {
        if self.verts.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.verts.len()) - 1
        }
    }

    pub(crate) fn path(&self, s: Vertex, t: Vertex, parity_prune: bool) -> Option<Vec<Vertex>> {
        let si = self.verts.binary_search(&s).ok()?;
        let ti = self.verts.binary_search(&t).ok()?;
        if si == ti {
            return None;
        }
        let mut dfs = Dfs::new(self, ti, parity_prune);
        dfs.path.push(si as u8);
        if dfs.go(1 << si, si) {
            Some(dfs.path.iter().map(|&i| self.verts[i as usize]).collect())
        } else {
            None
        }
    }

    pub(crate) fn cycle(&self, parity_prune: bool) -> Option<Cycle> {
        if self.verts.len() < 4 {
            return None;
        }
        // The row-major first vertex has only right and down neighbours, so
        // any cycle uses both; search for a path between them through it.
        let v0 = self.verts[0];
        let down = v0.offset(0, 1);
        if self.adj[0].count_ones() != 2 || self.verts.binary_search(&down).is_err() {
            return None;
        }
        self.path(v0, down, parity_prune).map(|p| Cycle(p).canonical())
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    full: u64,
    t: usize,
    parity: bool,
    memo: Option<FxHashSet<(u64, u8)>>,
    path: Vec<u8>,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a Graph, t: usize, parity: bool) -> Self {
        let memo = (g.verts.len() >= MEMO_FROM).then(FxHashSet::default);
        Dfs { g, full: g.full(), t, parity, memo, path: Vec::with_capacity(g.verts.len()) }
    }

    fn go(&mut self, visited: u64, head: usize) -> bool {
        if visited == self.full {
            return head == self.t;
        }
        if head == self.t {
            return false;
        }
        let key = (visited, head as u8);
        if let Some(m) = &self.memo {
            if m.contains(&key) {
                return false;
            }
        }
        let found = self.expand(visited, head);
        if !found {
            if let Some(m) = &mut self.memo {
                if m.len() < MEMO_CAP {
                    m.insert(key);
                }
            }
        }
        found
    }

    fn expand(&mut self, visited: u64, head: usize) -> bool {
        let g = self.g;
        let un = self.full & !visited;
        let head_bit = 1u64 << head;
        let t_bit = 1u64 << self.t;

        if self.parity {
            // The unvisited vertices are traversed in alternating colors,
            // starting opposite the head and finishing on t.
            let r = un.count_ones();
            let w = (un & g.white).count_ones();
            let head_white = g.white & head_bit != 0;
            let (next, other) = if head_white { (r - w, w) } else { (w, r - w) };
            if next != other + r % 2 {
                return false;
            }
            let t_white = g.white & t_bit != 0;
            if (r % 2 == 1) == (t_white == head_white) {
                return false;
            }
        }

        // Every unvisited vertex other than t needs two usable neighbours;
        // one whose only options are the head and one other must come next.
        let avail = un | head_bit;
        let mut forced = None;
        let mut bits = un & !t_bit;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let free = (g.adj[u] & avail).count_ones();
            if free < 2 {
                return false;
            }
            if free == 2 && g.adj[u] & head_bit != 0 {
                if forced.is_some() {
                    return false;
                }
                forced = Some(u);
            }
        }
        if un != t_bit && g.adj[self.t] & un == 0 {
            return false;
        }

        // Unvisited vertices must stay connected.
        let mut comp = t_bit;
        let mut frontier = t_bit;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.adj[u];
            }
            next &= un & !comp;
            comp |= next;
            frontier = next;
        }
        if comp != un {
            return false;
        }

        if let Some(u) = forced {
            return self.step(visited, u);
        }
        let mut cands = [(0u32, 0usize); 4];
        let mut len = 0;
        let mut c = g.adj[head] & un;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            let rank = if u == self.t { 8 } else { (g.adj[u] & un).count_ones() };
            cands[len] = (rank, u);
            len += 1;
        }
        cands[..len].sort_unstable();
        for &(_, u) in &cands[..len] {
            if self.step(visited, u) {
                return true;
            }
        }
        false
    }

    fn step(&mut self, visited: u64, u: usize) -> bool {
        self.path.push(u as u8);
        if self.go(visited | (1 << u), u) {
            return true;
        }
        self.path.pop();
        false
    }
}

/// Hamiltonian `(s,t)`-path of an arbitrary small vertex set, used for the
/// bounded cores of the constructor.
pub(crate) fn path_on(verts: Vec<Vertex>, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    if verts.len() > HARD_LIMIT {
        return None;
    }
    Graph::new(verts).path(s, t, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{validate_path, ProblemInstance};

    fn v(x: i32, y: i32) -> Vertex {
        Vertex::new(x, y)
    }

    #[test]
    fn small_examples() {
        let r33 = Shape::rect(3, 3).unwrap();
        assert_eq!(brute_force_path(&r33, v(1, 1), v(2, 1)).unwrap(), None);

        let c = Shape::cshape(3, 2, 1, 1, 1).unwrap();
        let p = brute_force_path(&c, v(1, 1), v(3, 1)).unwrap().unwrap();
        assert_eq!(p.len(), 5);
        let inst = ProblemInstance::new(c, v(1, 1), v(3, 1)).unwrap();
        assert!(validate_path(&inst, &p).is_ok());

        let r63 = Shape::rect(6, 3).unwrap();
        assert_eq!(brute_force_path(&r63, v(3, 2), v(4, 2)).unwrap(), None);
    }

    #[test]
    fn cycles() {
        let c = brute_force_cycle(&Shape::rect(2, 3).unwrap()).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.is_hamiltonian_in(&Shape::rect(2, 3).unwrap()));
        assert!(brute_force_cycle(&Shape::rect(3, 3).unwrap()).unwrap().is_none());
        assert!(brute_force_cycle(&Shape::lshape(4, 4, 3, 2).unwrap()).unwrap().is_none());
        assert!(brute_force_cycle(&Shape::lshape(3, 3, 1, 1).unwrap()).unwrap().is_some());
    }

    #[test]
    fn bound_is_enforced() {
        let big = Shape::rect(7, 7).unwrap();
        assert!(matches!(
            brute_force_path(&big, v(1, 1), v(7, 7)),
            Err(OracleError::TooLarge { vertices: 49, bound: 48 })
        ));
        let cfg = OracleConfig { max_vertices: 49, ..Default::default() };
        assert!(brute_force_path_with(&cfg, &big, v(1, 1), v(7, 7)).unwrap().is_some());
    }

    #[test]
    fn parity_pruning_does_not_change_answers() {
        let no_parity = OracleConfig { parity_prune: false, ..Default::default() };
        let shape = Shape::lshape(4, 3, 2, 1).unwrap();
        let vs: Vec<Vertex> = shape.vertices().collect();
        for &s in &vs {
            for &t in &vs {
                if s == t {
                    continue;
                }
                let a = brute_force_path(&shape, s, t).unwrap().is_some();
                let b = brute_force_path_with(&no_parity, &shape, s, t).unwrap().is_some();
                assert_eq!(a, b, "{s} {t}");
            }
        }
    }
}
