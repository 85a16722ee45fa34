use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cgrid_ham::grid::ShapeClass;
use cgrid_ham::oracle::{OracleConfig, SweepBounds, SweepOptions};
use cgrid_ham_cli::doc::parse_point;
use cgrid_ham_cli::{
    bench_csv, cmd_bench, cmd_check, cmd_render, cmd_solve, cmd_verify, CliError, InstanceDocument, InstanceOverrides,
    RenderFormat, ResultDocument,
};

#[derive(Parser)]
#[command(name = "cgrid-ham", version, about = "Hamiltonian (s,t)-paths in rectangular, L- and C-shaped grid graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide the instance and print a path when one exists.
    Solve(InstanceArgs),
    /// Decide the instance without constructing a path.
    Check(InstanceArgs),
    /// Compare checker, exhaustive search and constructor over every
    /// instance of a class within bounds.
    Verify(VerifyArgs),
    /// Draw a path from a `solve` result.
    Render(RenderArgs),
    /// Time the constructor on C(S,S,S/3,S/3;d=S/3) for each side S.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance document (JSON); `-` reads stdin. Flags override its fields.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, value_parser = parse_class)]
    class: Option<ShapeClass>,
    #[arg(long)]
    m: Option<i32>,
    #[arg(long)]
    n: Option<i32>,
    #[arg(long)]
    k: Option<i32>,
    #[arg(long)]
    l: Option<i32>,
    #[arg(long)]
    d: Option<i32>,
    /// Start vertex `x,y` (1-based).
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    s: Option<[i32; 2]>,
    /// End vertex `x,y` (1-based).
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    t: Option<[i32; 2]>,
    /// Pretty-print the JSON output.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_class)]
    class: ShapeClass,
    #[arg(long)]
    max_m: i32,
    #[arg(long)]
    max_n: i32,
    #[arg(long, default_value_t = 2)]
    min_m: i32,
    #[arg(long, default_value_t = 2)]
    min_n: i32,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Turn off color-count pruning in the exhaustive search.
    #[arg(long)]
    no_parity_prune: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Result document from `solve`; `-` or nothing reads stdin.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Output file (default: stdout).
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated sides, e.g. `530,1060,2120`.
    #[arg(long, default_value = "")]
    sizes: String,
    /// Timed runs per size; the median is reported.
    #[arg(long, default_value_t = 5)]
    reps: usize,
}

fn parse_class(s: &str) -> Result<ShapeClass, String> {
    s.parse()
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn instance(args: &InstanceArgs) -> Result<InstanceDocument, CliError> {
    let base = match &args.input {
        Some(p) => Some(serde_json::from_str::<InstanceDocument>(&read_input(Some(p))?)?),
        None => None,
    };
    let flags = InstanceOverrides {
        class: args.class,
        m: args.m,
        n: args.n,
        k: args.k,
        l: args.l,
        d: args.d,
        s: args.s,
        t: args.t,
    };
    flags.apply(base)
}

fn emit<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    println!("{}", text.expect("documents serialize"));
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Solve(args) => {
            let (out, err) = match instance(&args) {
                Ok(doc) => cmd_solve(&doc),
                Err(e) => (ResultDocument::invalid(), Some(e)),
            };
            if let Some(e) = err {
                eprintln!("error: {e}");
            }
            emit(&out, args.pretty);
            Ok(code(out.exit_code()))
        }
        Cmd::Check(args) => {
            let (out, err) = match instance(&args) {
                Ok(doc) => cmd_check(&doc),
                Err(e) => {
                    let out = cgrid_ham_cli::CheckDocument { status: cgrid_ham_cli::CheckStatus::Invalid, condition: None };
                    (out, Some(e))
                }
            };
            if let Some(e) = err {
                eprintln!("error: {e}");
            }
            emit(&out, args.pretty);
            Ok(code(out.exit_code()))
        }
        Cmd::Verify(a) => {
            let bounds = SweepBounds { min_m: a.min_m, max_m: a.max_m, min_n: a.min_n, max_n: a.max_n };
            let oracle = OracleConfig { parity_prune: !a.no_parity_prune, ..OracleConfig::from_env() };
            let opts = SweepOptions { oracle, jobs: a.jobs };
            eprintln!(
                "verify: class {} m {}..={} n {}..={}, oracle bound {}",
                a.class, a.min_m, a.max_m, a.min_n, a.max_n, oracle.max_vertices
            );
            let report = cmd_verify(a.class, bounds, &opts);
            eprintln!(
                "verify: {} checked, {} agree, {} disagree, {} construction failures, {} skipped",
                report.instances_checked,
                report.agreements,
                report.disagreements.len(),
                report.construction_failures.len(),
                report.skipped
            );
            emit(&report, true);
            Ok(code(if report.is_clean() { 0 } else { 1 }))
        }
        Cmd::Render(a) => {
            let result: ResultDocument = serde_json::from_str(&read_input(a.input.as_ref())?)?;
            let format = match a.format {
                Format::Ascii => RenderFormat::Ascii,
                Format::Svg => RenderFormat::Svg,
            };
            let text = cmd_render(&result, format)?;
            match a.out {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bench(a) => {
            let sides = a
                .sizes
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<i32>().map_err(|e| CliError::Invalid(format!("bad size `{s}`: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = cmd_bench(&sides, a.reps)?;
            print!("{}", bench_csv(&rows));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
