//! Commands behind the `cgrid-ham` binary, usable as a library.

pub mod doc;
pub mod render;

use std::time::{Duration, Instant};

use thiserror::Error;

use cgrid_ham::acceptability::check;
use cgrid_ham::construct::{c_family_instance, construct_path, ConstructError};
use cgrid_ham::grid::{validate_path, GridError, ShapeClass};
use cgrid_ham::oracle::{differential_sweep_with, SweepBounds, SweepOptions, SweepReport};

pub use doc::{CheckDocument, CheckStatus, InstanceDocument, InstanceOverrides, ResultDocument, Stats, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("render needs a result with status \"path\", got {0:?}")]
    RenderOnNonPath(Status),
    #[error("construction failed: {0}")]
    Construct(#[from] ConstructError),
    #[error("side {0} gives no solvable member of the benchmark family")]
    BadBenchSize(i32),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

/// Check and construct. Errors in the input come back as an `invalid`
/// document together with the reason.
pub fn cmd_solve(doc: &InstanceDocument) -> (ResultDocument, Option<CliError>) {
    let inst = match doc.to_instance() {
        Ok(i) => i,
        Err(e) => return (ResultDocument::invalid(), Some(e)),
    };
    let start = Instant::now();
    let verdict = check(&inst);
    let vertices = inst.shape.size() as u64;
    if let Some(c) = verdict.condition() {
        let stats = Stats { vertices, elapsed_ms: ms(start.elapsed()) };
        let out = ResultDocument { status: Status::NotAcceptable, condition: Some(c.to_string()), path: None, stats };
        return (out, None);
    }
    let path = match construct_path(&inst) {
        Ok(p) => p,
        Err(e) => return (ResultDocument::invalid(), Some(e.into())),
    };
    let elapsed_ms = ms(start.elapsed());
    if let Err(defect) = validate_path(&inst, &path) {
        return (ResultDocument::invalid(), Some(CliError::Invalid(format!("constructed path rejected: {defect}"))));
    }
    let path = path.vertices().iter().map(|v| [v.x, v.y]).collect();
    let out = ResultDocument { status: Status::Path, condition: None, path: Some(path), stats: Stats { vertices, elapsed_ms } };
    (out, None)
}

pub fn cmd_check(doc: &InstanceDocument) -> (CheckDocument, Option<CliError>) {
    match doc.to_instance() {
        Ok(inst) => {
            let out = match check(&inst).condition() {
                None => CheckDocument { status: CheckStatus::Acceptable, condition: None },
                Some(c) => CheckDocument { status: CheckStatus::NotAcceptable, condition: Some(c.to_string()) },
            };
            (out, None)
        }
        Err(e) => (CheckDocument { status: CheckStatus::Invalid, condition: None }, Some(e)),
    }
}

pub fn cmd_verify(class: ShapeClass, bounds: SweepBounds, opts: &SweepOptions) -> SweepReport {
    differential_sweep_with(class, bounds, opts)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchRow {
    pub side: i32,
    pub vertices: u64,
    pub elapsed_ms: f64,
}

/// Times the constructor on `c_family_instance(side)` for every side. Each
/// side gets one untimed warm-up run. The timed runs go round-robin over the
/// sides, so drifting machine load hits all of them alike, and each row
/// reports the median of its `reps` runs.
pub fn cmd_bench(sides: &[i32], reps: usize) -> Result<Vec<BenchRow>, CliError> {
    let mut cases = Vec::with_capacity(sides.len());
    for &side in sides {
        let inst = c_family_instance(side).ok_or(CliError::BadBenchSize(side))?;
        let path = construct_path(&inst)?;
        if path.len() as i64 != inst.shape.size() {
            return Err(CliError::Invalid(format!("path for side {side} misses vertices")));
        }
        cases.push((side, inst));
    }
    let mut times = vec![Vec::with_capacity(reps.max(1)); cases.len()];
    for _ in 0..reps.max(1) {
        for ((_, inst), t) in cases.iter().zip(&mut times) {
            let start = Instant::now();
            let path = construct_path(inst)?;
            t.push(start.elapsed());
            drop(path);
        }
    }
    Ok(cases
        .iter()
        .zip(&mut times)
        .map(|((side, inst), t)| {
            t.sort();
            BenchRow { side: *side, vertices: inst.shape.size() as u64, elapsed_ms: ms(t[t.len() / 2]) }
        })
        .collect())
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("side,vertices,elapsed_ms\n");
    for r in rows {
        out.push_str(&format!("{},{},{:.3}\n", r.side, r.vertices, r.elapsed_ms));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn cmd_render(result: &ResultDocument, format: RenderFormat) -> Result<String, CliError> {
    let path = match (result.status, result.path_vertices()) {
        (Status::Path, Some(p)) if !p.is_empty() => p,
        (status, _) => return Err(CliError::RenderOnNonPath(status)),
    };
    Ok(match format {
        RenderFormat::Ascii => render::ascii(&path),
        RenderFormat::Svg => render::svg(&path),
    })
}
