//! Seeded runs over (problem, solver) cells and their aggregation.

use std::time::Instant;

use mo_descent::{
    criticality_report, make_problem, sample_initial_point, solve, LineSearchKind, Method, Overrides, Problem, Status,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::BenchConfig;
use crate::error::BenchError;
use crate::seed::derive_run_seed;

/// Outcome of one seeded solve.
#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord {
    pub problem: String,
    pub solver: Method,
    pub linesearch: LineSearchKind,
    pub run: usize,
    pub seed: u64,
    pub iterations: usize,
    pub fevals: usize,
    pub time_ms: f64,
    /// Mean accepted stepsize; `None` when no step was taken.
    pub mean_stepsize: Option<f64>,
    /// Sum of the accepted stepsizes.
    pub stepsize_sum: f64,
    pub status: Status,
    pub x0: Vec<f64>,
    pub final_x: Vec<f64>,
    pub final_f: Vec<f64>,
    /// Steepest-descent direction norm at `final_x` on the unscaled gradients.
    pub final_d_norm: f64,
}

/// Aggregate of one (problem, solver, line search) cell.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub problem: String,
    pub solver: Method,
    pub linesearch: LineSearchKind,
    pub runs: usize,
    pub avg_iter: f64,
    pub avg_feval: f64,
    pub avg_time_ms: Option<f64>,
    /// Accepted stepsizes pooled over all steps of all runs: `sum beta / sum iterations`.
    pub avg_stepsize: Option<f64>,
    pub converged_fraction: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchmarkSummary {
    pub rows: Vec<SummaryRow>,
    /// All runs, ordered by problem, solver and run index.
    pub records: Vec<RunRecord>,
}

impl BenchmarkSummary {
    pub fn row(&self, problem: &str, solver: Method) -> Option<&SummaryRow> {
        self.rows.iter().find(|r| r.problem == problem && r.solver == solver)
    }

    /// Runs of a cell that ended with a line-search failure.
    pub fn failures_for(&self, problem: &str, solver: Method) -> usize {
        self.records
            .iter()
            .filter(|r| r.problem == problem && r.solver == solver && r.status == Status::LineSearchFailure)
            .count()
    }

    pub fn failures(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.status == Status::LineSearchFailure)
            .count()
    }
}

/// Starting point of run `run`; independent of solver and line search.
pub fn initial_point(problem: &Problem<f64>, master_seed: u64, run: usize) -> (u64, Vec<f64>) {
    let seed = derive_run_seed(master_seed, problem.name(), run);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (seed, sample_initial_point(problem, &mut rng))
}

pub fn run_one(
    problem: &Problem<f64>,
    method: Method,
    config: &BenchConfig,
    run: usize,
) -> Result<RunRecord, BenchError> {
    let (seed, x0) = initial_point(problem, config.seed, run);
    let fail = |e: &dyn std::fmt::Display| BenchError::Solve {
        problem: problem.name().to_string(),
        run,
        message: e.to_string(),
    };
    let started = Instant::now();
    let trace = solve(problem, &x0, &config.solver_config(method)).map_err(|e| fail(&e))?;
    let time_ms = started.elapsed().as_secs_f64() * 1e3;
    let report = criticality_report(problem, trace.final_point(), config.tol).map_err(|e| fail(&e))?;
    Ok(RunRecord {
        problem: problem.name().to_string(),
        solver: method,
        linesearch: config.linesearch,
        run,
        seed,
        iterations: trace.iterations,
        fevals: trace.fevals,
        time_ms,
        mean_stepsize: trace.mean_stepsize(),
        stepsize_sum: trace.stepsizes().sum(),
        status: trace.status,
        final_x: trace.final_point().to_vec(),
        final_f: trace.final_values().to_vec(),
        x0,
        final_d_norm: report.d_norm,
    })
}

pub fn summarize(records: &[RunRecord], record_time: bool) -> SummaryRow {
    let first = records.first().expect("a cell has at least one run");
    let n = records.len() as f64;
    let mean = |f: &dyn Fn(&RunRecord) -> f64| records.iter().map(f).sum::<f64>() / n;
    let steps: usize = records.iter().map(|r| r.iterations).sum();
    SummaryRow {
        problem: first.problem.clone(),
        solver: first.solver,
        linesearch: first.linesearch,
        runs: records.len(),
        avg_iter: mean(&|r| r.iterations as f64),
        avg_feval: mean(&|r| r.fevals as f64),
        avg_time_ms: record_time.then(|| mean(&|r| r.time_ms)),
        avg_stepsize: (steps > 0).then(|| records.iter().map(|r| r.stepsize_sum).sum::<f64>() / steps as f64),
        converged_fraction: records.iter().filter(|r| r.status == Status::Critical).count() as f64 / n,
    }
}

/// Runs every configured cell. Runs execute in parallel; records are ordered
/// before aggregation so the result does not depend on scheduling.
pub fn run_benchmark(config: &BenchConfig) -> Result<BenchmarkSummary, BenchError> {
    config.validate()?;
    let mut summary = BenchmarkSummary::default();
    for name in &config.problems {
        let problem = make_problem::<f64>(name, Overrides::default()).map_err(|e| BenchError::Args(e.to_string()))?;
        for &method in &config.solvers {
            let mut records = (0..config.runs)
                .into_par_iter()
                .map(|run| run_one(&problem, method, config, run))
                .collect::<Result<Vec<_>, _>>()?;
            records.sort_by_key(|r| r.run);
            summary.rows.push(summarize(&records, config.record_time));
            summary.records.extend(records);
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(problem: &str, solvers: Vec<Method>, runs: usize) -> BenchConfig {
        BenchConfig {
            problems: vec![problem.into()],
            solvers,
            runs,
            ..BenchConfig::default()
        }
    }

    #[test]
    fn starts_are_shared_across_solvers() {
        let s = run_benchmark(&small("PNR", Method::ALL.to_vec(), 5)).unwrap();
        for run in 0..5 {
            let starts: Vec<_> = s.records.iter().filter(|r| r.run == run).map(|r| &r.x0).collect();
            assert_eq!(starts.len(), 3);
            assert!(starts.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn averages_are_means_of_records() {
        let s = run_benchmark(&small("WIT2", vec![Method::Sdmo], 7)).unwrap();
        let row = &s.rows[0];
        let iters: f64 = s.records.iter().map(|r| r.iterations as f64).sum::<f64>() / 7.0;
        assert_eq!(row.avg_iter, iters);
        assert_eq!(row.runs, 7);
        assert_eq!(row.avg_time_ms, None);
        for r in &s.records {
            assert!(r.iterations <= 500);
            assert!(r.fevals >= r.iterations);
        }
    }

    #[test]
    fn wit6_single_step() {
        let s = run_benchmark(&small("WIT6", vec![Method::Sdmo], 3)).unwrap();
        let row = &s.rows[0];
        assert_eq!((row.avg_iter, row.avg_feval, row.avg_stepsize), (1.0, 2.0, Some(0.5)));
    }

    #[test]
    fn recorded_time_is_filled() {
        let mut c = small("JOS1a", vec![Method::Bbdmo], 2);
        c.record_time = true;
        let s = run_benchmark(&c).unwrap();
        assert!(s.rows[0].avg_time_ms.unwrap() >= 0.0);
    }
}
