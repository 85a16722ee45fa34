//! Explicit Hamiltonian paths and cycles.
//!
//! A path is built by repeatedly separating the region. A *peel* cuts off
//! an even rectangle free of endpoints whose serpentine cycle is later
//! spliced into the remainder's path along the cut; it is only used when
//! the cut side of the remainder forces a path edge there. A *bridge*
//! splits `s` from `t` across one edge `(p,q)`. Both keep every part
//! acceptable, and regions of at most `core_size` vertices are finished by
//! exhaustive search. The path lives in a successor array over the
//! bounding box, so splicing costs only the size of the spliced block.

mod blocks;
mod cycles;
mod moves;
mod profile;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acceptability::{check, Verdict};
use crate::grid::{Path, ProblemInstance, Shape, Vertex};
use crate::oracle;
use crate::region::Region;
use crate::stitch::StitchError;

pub use cycles::{lshape_cycle, rect_cycle, Side};
pub use moves::SeparationKind;

use blocks::BlockCycle;
use moves::{Move, Peel};

/// Regions up to this size are solved by exhaustive search.
pub const DEFAULT_CORE_SIZE: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("instance is not acceptable ({0})")]
    NotAcceptable(Verdict),
    #[error("no construction case applies: {0}")]
    InternalCaseMiss(String),
    #[error("{0} has no Hamiltonian cycle")]
    NoCycle(Shape),
    #[error("open side {side:?} has {len} vertices, need an even count")]
    BadOpenSide { side: Side, len: i32 },
    #[error("expected a {expected} shape, got {found}")]
    WrongClass { expected: &'static str, found: Shape },
    #[error(transparent)]
    Stitch(#[from] StitchError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructConfig {
    pub core_size: usize,
}

impl Default for ConstructConfig {
    fn default() -> Self {
        ConstructConfig { core_size: DEFAULT_CORE_SIZE }
    }
}

pub fn rect_path(instance: &ProblemInstance) -> Result<Path, ConstructError> {
    expect_class(instance, "rect")?;
    construct_path(instance)
}

pub fn lshape_path(instance: &ProblemInstance) -> Result<Path, ConstructError> {
    expect_class(instance, "l")?;
    construct_path(instance)
}

pub fn cshape_path(instance: &ProblemInstance) -> Result<Path, ConstructError> {
    expect_class(instance, "c")?;
    construct_path(instance)
}

/// Hamiltonian `(s,t)`-path for an acceptable instance of any class.
pub fn construct_path(instance: &ProblemInstance) -> Result<Path, ConstructError> {
    construct_path_with(&ConstructConfig::default(), instance)
}

pub fn construct_path_with(cfg: &ConstructConfig, instance: &ProblemInstance) -> Result<Path, ConstructError> {
    let verdict = check(instance);
    if !verdict.is_acceptable() {
        return Err(ConstructError::NotAcceptable(verdict));
    }
    let shape = instance.shape;
    Engine::new(&shape, cfg.core_size).run(Region::from_shape(&shape), instance.s, instance.t)
}

/// Member of the scaling family `C(S,S,k,k;d=k)` with `k = S/3`, endpoints
/// taken from a few cells near the lower-left corner. `None` when the shape
/// is invalid or no candidate pair is acceptable (odd `S` with odd `k`).
pub fn c_family_instance(side: i32) -> Option<ProblemInstance> {
    let k = side / 3;
    let shape = Shape::cshape(side, side, k, k, k).ok()?;
    let near: Vec<Vertex> = [(1, 0), (2, 0), (1, 1), (3, 0), (2, 1), (1, 2), (4, 0), (3, 1)]
        .into_iter()
        .map(|(x, dy)| Vertex::new(x, side - dy))
        .filter(|&v| shape.contains(v))
        .collect();
    near.iter()
        .flat_map(|&s| near.iter().map(move |&t| (s, t)))
        .filter_map(|(s, t)| ProblemInstance::new(shape, s, t).ok())
        .find(|i| check(i).is_acceptable())
}

fn expect_class(instance: &ProblemInstance, expected: &'static str) -> Result<(), ConstructError> {
    let ok = matches!(
        (expected, instance.shape),
        ("rect", Shape::Rect { .. }) | ("l", Shape::LShape { .. }) | ("c", Shape::CShape { .. })
    );
    if ok {
        Ok(())
    } else {
        Err(ConstructError::WrongClass { expected, found: instance.shape })
    }
}

/// One part of a separation, in absolute coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanPart {
    pub region: Region,
    /// The part as a shape in its own canonical frame.
    pub shape: Shape,
    /// Endpoints of the part's sub-problem; `None` for a part covered by a
    /// cycle.
    pub endpoints: Option<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StitchStep {
    /// Link the end of one sub-path to the start of the next.
    JoinAtBridge { p: Vertex, q: Vertex },
    /// Splice the cycle of part `part` into the path of part `into` across
    /// the side `facing` of `part`.
    AbsorbCycle { part: usize, into: usize, facing: Side },
    /// Solve part `part` by exhaustive search.
    Exhaustive { part: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationPlan {
    pub kind: SeparationKind,
    pub parts: Vec<PlanPart>,
    /// Pairs of adjacent vertices joining two parts.
    pub connectors: Vec<(Vertex, Vertex)>,
    pub steps: Vec<StitchStep>,
}

fn part(region: Region, endpoints: Option<(Vertex, Vertex)>) -> PlanPart {
    PlanPart { region, shape: region.canonical().0, endpoints }
}

/// The first separation the constructor applies to `instance`.
pub fn select_separation(instance: &ProblemInstance) -> Result<SeparationPlan, ConstructError> {
    let verdict = check(instance);
    if !verdict.is_acceptable() {
        return Err(ConstructError::NotAcceptable(verdict));
    }
    let (s, t) = (instance.s, instance.t);
    let whole = Region::from_shape(&instance.shape);
    let plan = match moves::choose(&whole, s, t) {
        Some(Move::Peel(p)) => SeparationPlan {
            kind: p.kind,
            parts: vec![part(p.rest, Some((s, t))), part(p.block, None)],
            connectors: Vec::new(),
            steps: vec![StitchStep::AbsorbCycle { part: 1, into: 0, facing: p.seam.side }],
        },
        Some(Move::Bridge(b)) => SeparationPlan {
            kind: b.kind,
            parts: vec![part(b.a, Some((s, b.p))), part(b.b, Some((b.q, t)))],
            connectors: vec![(b.p, b.q)],
            steps: vec![StitchStep::JoinAtBridge { p: b.p, q: b.q }],
        },
        Some(Move::Chain(c)) => {
            let mut parts: Vec<PlanPart> = c.parts.iter().map(|&(r, a, b)| part(r, Some((a, b)))).collect();
            let connectors: Vec<(Vertex, Vertex)> = c.parts.windows(2).map(|w| (w[0].2, w[1].1)).collect();
            let mut steps: Vec<StitchStep> = connectors.iter().map(|&(p, q)| StitchStep::JoinAtBridge { p, q }).collect();
            for b in &c.blocks {
                let into = c.parts.iter().position(|&(r, _, _)| r == b.rest).expect("block faces a part");
                steps.push(StitchStep::AbsorbCycle { part: parts.len(), into, facing: b.seam.side });
                parts.push(part(b.block, None));
            }
            SeparationPlan { kind: c.kind, parts, connectors, steps }
        }
        None if whole.w.min(whole.h) <= profile::MAX_WIDTH => SeparationPlan {
            kind: SeparationKind::Core,
            parts: vec![part(whole, Some((s, t)))],
            connectors: Vec::new(),
            steps: vec![StitchStep::Exhaustive { part: 0 }],
        },
        None => return Err(ConstructError::InternalCaseMiss(format!("no separation for {instance}"))),
    };
    Ok(plan)
}

const NONE: u32 = u32::MAX;

enum Task {
    Solve(Region, Vertex, Vertex),
    Absorb(Peel),
}

/// Successor array over the bounding box plus an explicit work stack.
struct Engine {
    width: i32,
    size: usize,
    core: usize,
    succ: Vec<u32>,
    tasks: Vec<Task>,
}

impl Engine {
    fn new(shape: &Shape, core: usize) -> Engine {
        let cells = shape.width() as usize * shape.height() as usize;
        Engine { width: shape.width(), size: shape.size() as usize, core, succ: vec![NONE; cells], tasks: Vec::new() }
    }

    fn id(&self, v: Vertex) -> usize {
        ((v.y - 1) * self.width + (v.x - 1)) as usize
    }

    fn vertex(&self, i: u32) -> Vertex {
        let i = i as i32;
        Vertex::new(i % self.width + 1, i / self.width + 1)
    }

    /// The vertex with id `next`, found from the neighbour `cur` without a
    /// division when the two are adjacent.
    fn step(&self, cur: Vertex, next: u32) -> Vertex {
        match next as i64 - self.id(cur) as i64 {
            d if d == self.width as i64 => Vertex::new(cur.x, cur.y + 1),
            d if d == -(self.width as i64) => Vertex::new(cur.x, cur.y - 1),
            1 => Vertex::new(cur.x + 1, cur.y),
            -1 => Vertex::new(cur.x - 1, cur.y),
            _ => self.vertex(next),
        }
    }

    fn link(&mut self, a: Vertex, b: Vertex) {
        let (ia, ib) = (self.id(a), self.id(b) as u32);
        self.succ[ia] = ib;
    }

    fn run(mut self, region: Region, s: Vertex, t: Vertex) -> Result<Path, ConstructError> {
        self.tasks.push(Task::Solve(region, s, t));
        while let Some(task) = self.tasks.pop() {
            match task {
                Task::Solve(r, a, b) => self.solve(r, a, b)?,
                Task::Absorb(p) => self.absorb(&p)?,
            }
        }
        let mut out = Vec::with_capacity(self.size);
        let mut cur = s;
        out.push(cur);
        while cur != t {
            let next = self.succ[self.id(cur)];
            if next == NONE || out.len() >= self.size {
                return Err(ConstructError::InternalCaseMiss(format!("successor chain broken at {cur}")));
            }
            cur = self.step(cur, next);
            out.push(cur);
        }
        Ok(Path(out))
    }

    fn solve(&mut self, r: Region, s: Vertex, t: Vertex) -> Result<(), ConstructError> {
        let size = r.size() as usize;
        if size <= self.core {
            return self.exhaustive(&r, s, t);
        }
        match moves::choose(&r, s, t) {
            Some(Move::Peel(p)) => {
                self.push_absorb(p);
                self.tasks.push(Task::Solve(p.rest, s, t));
            }
            Some(Move::Bridge(b)) => {
                self.link(b.p, b.q);
                self.tasks.push(Task::Solve(b.b, b.q, t));
                self.tasks.push(Task::Solve(b.a, s, b.p));
            }
            Some(Move::Chain(c)) => {
                for w in c.parts.windows(2) {
                    self.link(w[0].2, w[1].1);
                }
                for p in c.blocks {
                    self.push_absorb(p);
                }
                self.tasks.extend(c.parts.into_iter().map(|(r, a, b)| Task::Solve(r, a, b)));
            }
            None if r.w.min(r.h) <= profile::MAX_WIDTH => return self.scan(&r, s, t),
            None => {
                return Err(ConstructError::InternalCaseMiss(format!("no separation for {r:?} s={s} t={t}")));
            }
        }
        Ok(())
    }

    /// Queues the splice of `p`, after the closing path of a sided block.
    fn push_absorb(&mut self, p: Peel) {
        let sided = match p.cycle {
            BlockCycle::Sided { side } => blocks::sided_parts(&p.block, side),
            _ => None,
        };
        self.tasks.push(Task::Absorb(p));
        if let Some((rest, a, b, _)) = sided {
            self.tasks.push(Task::Solve(rest, a, b));
        }
    }

    /// The path already linked from `a` to `b`.
    fn walk(&self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>, ConstructError> {
        let mut out = vec![a];
        let mut cur = a;
        while cur != b {
            let next = self.succ[self.id(cur)];
            if next == NONE || out.len() > self.size {
                return Err(ConstructError::InternalCaseMiss(format!("closing path broken at {cur}")));
            }
            cur = self.step(cur, next);
            out.push(cur);
        }
        Ok(out)
    }

    fn scan(&mut self, r: &Region, s: Vertex, t: Vertex) -> Result<(), ConstructError> {
        let path = profile::path(r, s, t)
            .ok_or_else(|| ConstructError::InternalCaseMiss(format!("frontier search failed on {r:?} s={s} t={t}")))?;
        for w in path.windows(2) {
            self.link(w[0], w[1]);
        }
        Ok(())
    }

    fn exhaustive(&mut self, r: &Region, s: Vertex, t: Vertex) -> Result<(), ConstructError> {
        if s == t {
            return Ok(());
        }
        let path = oracle::path_on(r.vertices().collect(), s, t)
            .ok_or_else(|| ConstructError::InternalCaseMiss(format!("exhaustive search failed on {r:?} s={s} t={t}")))?;
        for w in path.windows(2) {
            self.link(w[0], w[1]);
        }
        Ok(())
    }

    /// Splices the block's cycle into the path at the first frontier edge
    /// the path uses, scanning row-major.
    fn absorb(&mut self, p: &Peel) -> Result<(), ConstructError> {
        let (dx, dy) = p.seam.side.outward();
        let cells: Vec<Vertex> = moves::frontier(&p.block, &p.rest, &p.seam).collect();
        let pair = cells.windows(2).filter(|w| w[0].is_adjacent(w[1])).find_map(|w| {
            let (i0, i1) = (self.id(w[0]), self.id(w[1]));
            if self.succ[i0] == i1 as u32 {
                Some((w[0], w[1]))
            } else if self.succ[i1] == i0 as u32 {
                Some((w[1], w[0]))
            } else {
                None
            }
        });
        let (u, w) = pair.ok_or(ConstructError::Stitch(StitchError::NoParallelEdge))?;
        let (u2, w2) = (u.offset(-dx, -dy), w.offset(-dx, -dy));
        let cyc = blocks::build(&p.block, &p.cycle, |_, a, b| self.walk(a, b))?;
        let n = cyc.len();
        let iu = cyc.iter().position(|&v| v == u2).expect("frontier partner lies in the block");
        let iw = cyc.iter().position(|&v| v == w2).expect("frontier partner lies in the block");
        let forward = (iw + 1) % n == iu;
        debug_assert!(forward || (iu + 1) % n == iw, "partners must be a cycle edge");
        let order: Box<dyn Iterator<Item = &Vertex>> = if forward {
            Box::new(cyc[iu..].iter().chain(&cyc[..iu]))
        } else {
            Box::new(cyc[..=iu].iter().rev().chain(cyc[iu + 1..].iter().rev()))
        };
        let mut prev = u;
        for &v in order {
            self.link(prev, v);
            prev = v;
        }
        self.link(prev, w);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::validate_path;

    fn inst(shape: Shape, s: (i32, i32), t: (i32, i32)) -> ProblemInstance {
        ProblemInstance::new(shape, s.into(), t.into()).unwrap()
    }

    #[test]
    fn small_paths() {
        let i = inst(Shape::rect(2, 2).unwrap(), (1, 1), (2, 1));
        assert_eq!(rect_path(&i).unwrap().vertices(), &[(1, 1).into(), (1, 2).into(), (2, 2).into(), (2, 1).into()]);
        let i = inst(Shape::cshape(3, 2, 1, 1, 1).unwrap(), (1, 1), (3, 1));
        assert_eq!(cshape_path(&i).unwrap().len(), 5);
        let i = inst(Shape::cshape(5, 5, 1, 1, 1).unwrap(), (1, 1), (3, 1));
        assert!(matches!(cshape_path(&i), Err(ConstructError::NotAcceptable(_))));
    }

    #[test]
    fn wrong_class_is_rejected() {
        let i = inst(Shape::rect(2, 2).unwrap(), (1, 1), (2, 1));
        assert!(matches!(cshape_path(&i), Err(ConstructError::WrongClass { .. })));
    }

    #[test]
    fn vertical_plan_for_c_example() {
        let i = inst(Shape::cshape(6, 4, 2, 2, 2).unwrap(), (1, 1), (2, 1));
        let plan = select_separation(&i).unwrap();
        assert_eq!(plan.kind, SeparationKind::Vertical);
        let mut shapes: Vec<Shape> = plan.parts.iter().map(|p| p.shape).collect();
        shapes.sort_by_key(|s| s.size());
        assert_eq!(shapes, vec![Shape::rect(2, 4).unwrap(), Shape::lshape(4, 4, 2, 2).unwrap()]);
        assert!(matches!(plan.steps[0], StitchStep::AbsorbCycle { .. }));
    }

    #[test]
    fn larger_instances_with_small_cores() {
        let cfg = ConstructConfig { core_size: 6 };
        let i = inst(Shape::lshape(9, 7, 5, 2).unwrap(), (1, 1), (1, 7));
        let p = construct_path_with(&cfg, &i).unwrap();
        assert_eq!(p.len(), 53);
        assert!(validate_path(&i, &p).is_ok());
        let i = inst(Shape::rect(5, 5).unwrap(), (1, 1), (3, 3));
        let p = construct_path_with(&cfg, &i).unwrap();
        assert!(validate_path(&i, &p).is_ok());
    }
}
