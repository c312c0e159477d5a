use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use limitchain::acceptance;
use limitchain::graph::{build_graph_capped, build_limit_graph_capped, GraphSource, DEFAULT_MAX_DEPTH};
use limitchain::kernel::{
    convergence_sweep, limit_kernel, sample_trajectory, sweep_csv, trajectory_line, transition_kernel, ThetaSpec,
    DEFAULT_LIMIT_TOL,
};
use limitchain::{Error, Family, FamilyRank, Partition};

#[derive(Parser)]
#[command(name = "limitchain", version, about = "Multiplicative graphs, their Markov chains and rank limits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a multiplicative graph at finite rank or in the limit.
    Graph(GraphArgs),
    /// Transition kernel on a finite-rank graph.
    Kernel(KernelArgs),
    /// Limit transition kernel on a limit graph.
    LimitKernel(LimitKernelArgs),
    /// Π_r(λ → μ) over a range of ranks next to its limit, as CSV.
    Sweep(SweepArgs),
    /// Sample trajectories of the chain, one per line.
    Sample(SampleArgs),
    /// Run the acceptance criteria; exits 0 only if all pass.
    Check(CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Args)]
struct Common {
    /// δ as comma-separated parts, e.g. 2,1
    #[arg(long)]
    delta: Partition,
    /// A, C, B or D
    #[arg(long)]
    family: Family,
    /// Write here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Depth {
    /// Number of levels.
    #[arg(long)]
    depth: usize,
    /// Refuse depths above this.
    #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
    max_depth: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    rank: Option<usize>,
    /// Use the infinite-rank limit.
    #[arg(long)]
    limit: bool,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    depth: Depth,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct KernelArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    rank: usize,
    #[command(flatten)]
    depth: Depth,
    /// const:b, geom:c,q or list:a,b;tail=t
    #[arg(long)]
    theta: ThetaSpec,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct LimitKernelArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    depth: Depth,
    #[arg(long)]
    theta: ThetaSpec,
    /// Truncation tolerance for the limit characters.
    #[arg(long, default_value_t = DEFAULT_LIMIT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// λ, the source vertex
    #[arg(long)]
    from: Partition,
    /// μ, the target vertex
    #[arg(long)]
    to: Partition,
    #[arg(long)]
    theta: ThetaSpec,
    /// Ranks as lo..hi (inclusive); defaults to the smallest valid rank up to 30.
    #[arg(long)]
    ranks: Option<String>,
    #[arg(long, default_value_t = DEFAULT_LIMIT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    theta: ThetaSpec,
    /// Vertices per trajectory, the start (δ, 1) included.
    #[arg(long)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trajectories to draw; the k-th uses seed + k.
    #[arg(long, default_value_t = 1)]
    count: u64,
}

#[derive(Args)]
struct CheckArgs {
    /// Run only these criteria.
    #[arg(long = "criterion")]
    criteria: Vec<u8>,
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn require_format(format: Format, allowed: &[Format], what: &str) {
    if !allowed.contains(&format) {
        let names: Vec<String> = allowed
            .iter()
            .map(|f| f.to_possible_value().expect("named").get_name().to_string())
            .collect();
        usage_error(ErrorKind::InvalidValue, format!("{what} output supports --format {}", names.join(" or ")));
    }
}

fn require_subunit(theta: &ThetaSpec) {
    if theta.sup() >= 1.0 {
        usage_error(ErrorKind::ValueValidation, format!("limit operations need sup θ < 1; {theta} has sup {}", theta.sup()));
    }
}

fn parse_ranks(text: Option<&str>, floor: usize) -> std::ops::RangeInclusive<usize> {
    let Some(text) = text else {
        return floor..=floor.max(30);
    };
    let parsed = text
        .split_once("..")
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
    match parsed {
        Some((lo, hi)) if lo <= hi => lo..=hi,
        _ => usage_error(ErrorKind::InvalidValue, format!("--ranks expects lo..hi, got `{text}`")),
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    let written = match output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| Error::Domain(format!("cannot write output: {e}")))
}

fn source_of(family: Family, source: &Source) -> Result<GraphSource, Error> {
    match source.rank {
        Some(r) => Ok(GraphSource::Finite(FamilyRank::new(family, r)?)),
        None => Ok(GraphSource::Limit(family)),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Graph(a) => {
            require_format(a.format, &[Format::Json, Format::Dot], "graph");
            let c = &a.common;
            let g = match source_of(c.family, &a.source)? {
                GraphSource::Finite(fr) => build_graph_capped(&c.delta, fr, a.depth.depth, a.depth.max_depth)?,
                GraphSource::Limit(f) => build_limit_graph_capped(&c.delta, f, a.depth.depth, a.depth.max_depth)?,
            };
            let text = if a.format == Format::Dot { g.to_dot() } else { g.to_json() };
            emit(c.output.as_ref(), &text)?;
        }
        Command::Kernel(a) => {
            require_format(a.format, &[Format::Json, Format::Dot], "kernel");
            let c = &a.common;
            let fr = FamilyRank::new(c.family, a.rank)?;
            let g = build_graph_capped(&c.delta, fr, a.depth.depth, a.depth.max_depth)?;
            let k = transition_kernel(&g, &a.theta)?;
            let text = if a.format == Format::Dot { k.to_dot() } else { k.to_json() };
            emit(c.output.as_ref(), &text)?;
        }
        Command::LimitKernel(a) => {
            require_format(a.format, &[Format::Json, Format::Dot], "kernel");
            require_subunit(&a.theta);
            let c = &a.common;
            let g = build_limit_graph_capped(&c.delta, c.family, a.depth.depth, a.depth.max_depth)?;
            let k = limit_kernel(&g, &a.theta, a.tol)?;
            let text = if a.format == Format::Dot { k.to_dot() } else { k.to_json() };
            emit(c.output.as_ref(), &text)?;
        }
        Command::Sweep(a) => {
            require_format(a.format, &[Format::Csv], "sweep");
            require_subunit(&a.theta);
            let c = &a.common;
            let floor = a.from.len().max(a.to.len()).max(c.delta.len()).max(c.family.min_rank());
            let ranks = parse_ranks(a.ranks.as_deref(), floor);
            let rows = convergence_sweep(&c.delta, &a.from, &a.to, c.family, &a.theta, ranks, a.tol)?;
            emit(c.output.as_ref(), &sweep_csv(&rows))?;
        }
        Command::Sample(a) => {
            if a.source.limit {
                require_subunit(&a.theta);
            }
            let c = &a.common;
            let source = source_of(c.family, &a.source)?;
            let mut text = String::new();
            for k in 0..a.count {
                let path = sample_trajectory(&c.delta, source, &a.theta, a.steps, a.seed.wrapping_add(k))?;
                text.push_str(&trajectory_line(&path));
                text.push('\n');
            }
            emit(c.output.as_ref(), &text)?;
        }
        Command::Check(a) => {
            let ids: Vec<u8> = if a.criteria.is_empty() { acceptance::ids().collect() } else { a.criteria };
            let mut all = true;
            for id in ids {
                let Some(report) = acceptance::run(id) else {
                    usage_error(ErrorKind::InvalidValue, format!("no acceptance criterion {id}"));
                };
                println!("{}", report.line());
                all &= report.passed;
            }
            return Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .expect("thread pool configured once");
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
