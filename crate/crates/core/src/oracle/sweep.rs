//! Instance enumeration and the checker/oracle/constructor differential sweep.

use serde::{Deserialize, Serialize};

use super::{brute_force_path_with, OracleConfig, OracleError};
use crate::acceptability::{check, color_compatible, Verdict};
use crate::construct::construct_path;
use crate::grid::{validate_path, ProblemInstance, Shape, ShapeClass, Vertex};

/// Inclusive ranges for the width `m` and height `n` of enumerated shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    pub min_m: i32,
    pub max_m: i32,
    pub min_n: i32,
    pub max_n: i32,
}

impl SweepBounds {
    /// Shapes with `2 <= m <= max_m` and `2 <= n <= max_n`.
    pub fn up_to(max_m: i32, max_n: i32) -> Self {
        SweepBounds { min_m: 2, max_m, min_n: 2, max_n }
    }

    pub fn with_min(self, min_m: i32, min_n: i32) -> Self {
        SweepBounds { min_m, min_n, ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub oracle: OracleConfig,
    /// Worker threads; `None` uses every core and `Some(1)` runs on the
    /// calling thread. Without the `parallel` feature the sweep is always
    /// sequential.
    pub jobs: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { oracle: OracleConfig::from_env(), jobs: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub instance: ProblemInstance,
    pub verdict: Verdict,
    pub oracle_has_path: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionFailure {
    pub instance: ProblemInstance,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub instances_checked: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    pub construction_failures: Vec<ConstructionFailure>,
    /// Acceptable instances handed to the constructor.
    pub constructions: usize,
    /// Instances whose shape exceeds the oracle bound; not counted as checked.
    pub skipped: usize,
    /// Color-incompatible instances for which the oracle still found a path.
    pub color_exceptions: Vec<ProblemInstance>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.construction_failures.is_empty()
    }
}

/// Every valid shape of `class` with `2 <= m <= max_m`, `2 <= n <= max_n`,
/// paired with every ordered `(s,t)`.
pub fn enumerate_instances(class: ShapeClass, max_m: i32, max_n: i32) -> impl Iterator<Item = ProblemInstance> {
    enumerate_in(class, SweepBounds::up_to(max_m, max_n))
}

pub fn enumerate_in(class: ShapeClass, bounds: SweepBounds) -> impl Iterator<Item = ProblemInstance> {
    shapes(class, bounds).into_iter().flat_map(|shape| {
        let vs: Vec<Vertex> = shape.vertices().collect();
        let pairs: Vec<(Vertex, Vertex)> =
            vs.iter().flat_map(|&s| vs.iter().filter(move |&&t| t != s).map(move |&t| (s, t))).collect();
        pairs.into_iter().map(move |(s, t)| ProblemInstance { shape, s, t })
    })
}

/// Valid shapes in `(m, n, k, l, d)` lexicographic order.
pub fn shapes(class: ShapeClass, b: SweepBounds) -> Vec<Shape> {
    let mut out = Vec::new();
    for m in b.min_m.max(1)..=b.max_m {
        for n in b.min_n.max(1)..=b.max_n {
            match class {
                ShapeClass::Rect => out.extend(Shape::rect(m, n)),
                ShapeClass::LShape => {
                    for k in 1..m {
                        for l in 1..n {
                            out.extend(Shape::lshape(m, n, k, l));
                        }
                    }
                }
                ShapeClass::CShape => {
                    for k in 1..m {
                        for l in 1..n {
                            for d in 1..m - k {
                                out.extend(Shape::cshape(m, n, k, l, d));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn differential_sweep(class: ShapeClass, bounds: SweepBounds) -> SweepReport {
    differential_sweep_with(class, bounds, &SweepOptions::default())
}

pub fn differential_sweep_with(class: ShapeClass, bounds: SweepBounds, opts: &SweepOptions) -> SweepReport {
    let instances: Vec<ProblemInstance> = enumerate_in(class, bounds).collect();
    let outcomes = run_all(&instances, opts);
    let mut report = SweepReport::default();
    for o in outcomes {
        match o {
            Outcome::Skipped => {
                report.skipped += 1;
                continue;
            }
            Outcome::Checked { disagreement, constructed, failure, color_exception } => {
                report.instances_checked += 1;
                report.constructions += constructed as usize;
                match disagreement {
                    Some(d) => report.disagreements.push(d),
                    None => report.agreements += 1,
                }
                report.construction_failures.extend(failure);
                report.color_exceptions.extend(color_exception);
            }
        }
    }
    report
}

enum Outcome {
    Skipped,
    Checked {
        disagreement: Option<Disagreement>,
        constructed: bool,
        failure: Option<ConstructionFailure>,
        color_exception: Option<ProblemInstance>,
    },
}

#[cfg(feature = "parallel")]
fn run_all(instances: &[ProblemInstance], opts: &SweepOptions) -> Vec<Outcome> {
    use rayon::prelude::*;
    if opts.jobs == Some(1) {
        return instances.iter().map(|i| examine(i, &opts.oracle)).collect();
    }
    let work = || instances.par_iter().map(|i| examine(i, &opts.oracle)).collect();
    match opts.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_all(instances: &[ProblemInstance], opts: &SweepOptions) -> Vec<Outcome> {
    instances.iter().map(|i| examine(i, &opts.oracle)).collect()
}

fn examine(inst: &ProblemInstance, oracle: &OracleConfig) -> Outcome {
    let found = match brute_force_path_with(oracle, &inst.shape, inst.s, inst.t) {
        Ok(p) => p,
        Err(OracleError::TooLarge { .. }) | Err(OracleError::NotInShape(_)) => return Outcome::Skipped,
    };
    if let Some(p) = &found {
        debug_assert!(validate_path(inst, p).is_ok(), "oracle returned an invalid path for {inst}");
    }
    let verdict = check(inst);
    let disagreement = (verdict.is_acceptable() != found.is_some()).then(|| Disagreement {
        instance: *inst,
        verdict: verdict.clone(),
        oracle_has_path: found.is_some(),
    });
    let failure = if verdict.is_acceptable() {
        match construct_path(inst) {
            Ok(p) => validate_path(inst, &p)
                .err()
                .map(|d| ConstructionFailure { instance: *inst, reason: format!("invalid path: {d}") }),
            Err(e) => Some(ConstructionFailure { instance: *inst, reason: e.to_string() }),
        }
    } else {
        None
    };
    let color_exception = (found.is_some() && !color_compatible(inst)).then_some(*inst);
    Outcome::Checked { disagreement, constructed: verdict.is_acceptable(), failure, color_exception }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        let rect: Vec<_> = enumerate_instances(ShapeClass::Rect, 2, 2).collect();
        assert_eq!(rect.len(), 12);
        assert!(rect.iter().all(|i| i.shape == Shape::Rect { m: 2, n: 2 }));

        let c: Vec<_> = enumerate_instances(ShapeClass::CShape, 3, 2).collect();
        assert_eq!(c.len(), 20);
        assert!(c.iter().all(|i| i.shape == Shape::CShape { m: 3, n: 2, k: 1, l: 1, d: 1 }));
    }

    #[test]
    fn enumeration_is_duplicate_free_and_stable() {
        let a: Vec<_> = enumerate_instances(ShapeClass::LShape, 4, 4).collect();
        let b: Vec<_> = enumerate_instances(ShapeClass::LShape, 4, 4).collect();
        assert_eq!(a, b);
        let set: std::collections::HashSet<_> = a.iter().collect();
        assert_eq!(set.len(), a.len());
    }

    #[test]
    fn small_sweep_is_clean() {
        let r = differential_sweep(ShapeClass::CShape, SweepBounds::up_to(4, 3));
        assert!(r.is_clean(), "{r:?}");
        assert_eq!(r.instances_checked, r.agreements);
        assert!(r.instances_checked > 0);
    }
}
