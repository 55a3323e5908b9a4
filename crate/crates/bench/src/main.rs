use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mo_bench::report::{dump_trace, summary_csv, summary_markdown, write_runs_csv, write_text};
use mo_bench::{initial_point, run_benchmark, BenchConfig, BenchError, BenchmarkSummary, Format, Overrides};
use mo_descent::{make_problem, LineSearchKind, Method, StopTest};

#[derive(Parser)]
#[command(
    name = "bench",
    about = "Seeded benchmarks for multiobjective descent solvers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the configured (problem, solver) cells and write a summary.
    Run(RunArgs),
    /// Solve once from the run-0 start and write the trajectory.
    Trace(TraceArgs),
    /// All problems and all solvers for one line search, as a markdown table.
    Table(TableArgs),
}

#[derive(Args)]
struct Common {
    /// key=value manifest; flags given on the command line take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    linesearch: Option<LineSearchKind>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    max_iter: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    sigma: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    /// Max-type lookback M.
    #[arg(long = "M", alias = "window")]
    window: Option<usize>,
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long)]
    alpha_min: Option<f64>,
    #[arg(long)]
    alpha_max: Option<f64>,
    /// Stopping test for BBDMO: search, steepest or both.
    #[arg(long)]
    stop: Option<StopTest>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fill the wall-time columns (makes the output run-dependent).
    #[arg(long)]
    record_time: bool,
}

#[derive(Args)]
struct RunArgs {
    /// Problem name, comma-separated list, or `all`.
    #[arg(long)]
    problem: Option<String>,
    /// sdmo, bbmo, bbdmo, a comma-separated list, or `all`.
    #[arg(long)]
    solver: Option<String>,
    #[arg(long)]
    format: Option<Format>,
    /// Also write one line per run to this CSV.
    #[arg(long)]
    runs_out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    problem: String,
    #[arg(long)]
    solver: Method,
    #[arg(long, default_value = "armijo")]
    linesearch: LineSearchKind,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TableArgs {
    /// Also write the full-precision summary CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

impl Common {
    fn overrides(&self) -> Overrides {
        Overrides {
            linesearch: self.linesearch,
            runs: self.runs,
            seed: self.seed,
            max_iter: self.max_iter,
            tol: self.tol,
            sigma: self.sigma,
            gamma: self.gamma,
            window: self.window,
            eta: self.eta,
            alpha_min: self.alpha_min,
            alpha_max: self.alpha_max,
            stop: self.stop,
            out: self.out.clone(),
            record_time: self.record_time.then_some(true),
            ..Overrides::default()
        }
    }

    fn resolve(&self, cli: Overrides) -> Result<BenchConfig, BenchError> {
        let mut config = BenchConfig::default();
        if let Some(path) = &self.config {
            config.apply(&Overrides::load(path)?)?;
        }
        let mut o = self.overrides();
        o.problem = cli.problem;
        o.solver = cli.solver;
        o.format = cli.format;
        config.apply(&o)?;
        config.validate()?;
        Ok(config)
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), BenchError> {
    match path {
        Some(p) => write_text(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(summary: &BenchmarkSummary) -> ExitCode {
    let failures = summary.failures();
    if failures > 0 {
        eprintln!("{failures} run(s) ended with a line-search failure");
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn execute(cli: Cli) -> Result<ExitCode, BenchError> {
    match cli.command {
        Command::Run(args) => {
            let config = args.common.resolve(Overrides {
                problem: args.problem.clone(),
                solver: args.solver.clone(),
                format: args.format,
                ..Overrides::default()
            })?;
            let summary = run_benchmark(&config)?;
            let text = match config.format {
                Format::Csv => summary_csv(&summary.rows),
                Format::Markdown => summary_markdown(&summary),
            };
            emit(config.out.as_deref(), &text)?;
            if let Some(path) = &args.runs_out {
                write_runs_csv(path, &summary.records, config.record_time)?;
            }
            Ok(finish(&summary))
        }
        Command::Trace(args) => {
            let problem =
                make_problem::<f64>(&args.problem, Default::default()).map_err(|e| BenchError::Args(e.to_string()))?;
            let config = BenchConfig {
                linesearch: args.linesearch,
                ..BenchConfig::default()
            };
            let (_, x0) = initial_point(&problem, args.seed, 0);
            let trace = dump_trace(&problem, &config.solver_config(args.solver), &x0, &args.out)?;
            eprintln!(
                "{} {} {}: {} after {} iterations",
                problem.name(),
                args.solver,
                args.linesearch,
                trace.status,
                trace.iterations
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(args) => {
            let mut config = args.common.resolve(Overrides::default())?;
            config.problems = mo_descent::PROBLEM_NAMES.iter().map(|s| s.to_string()).collect();
            config.solvers = Method::ALL.to_vec();
            let summary = run_benchmark(&config)?;
            emit(config.out.as_deref(), &summary_markdown(&summary))?;
            if let Some(path) = &args.csv {
                write_text(path, &summary_csv(&summary.rows))?;
            }
            Ok(finish(&summary))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
