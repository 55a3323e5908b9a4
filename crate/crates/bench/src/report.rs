//! CSV and markdown output for summaries, run records and trajectories.

use std::fmt::Write as _;
use std::fs::File;
use std::path::Path;

use mo_descent::{solve, Problem, SolveTrace, SolverConfig};
use serde::{Deserialize, Serialize};

use crate::error::BenchError;
use crate::runner::{BenchmarkSummary, RunRecord, SummaryRow};

pub const SUMMARY_HEADER: [&str; 9] = [
    "problem",
    "solver",
    "linesearch",
    "runs",
    "avg_iter",
    "avg_feval",
    "avg_time_ms",
    "avg_stepsize",
    "converged_fraction",
];

#[derive(Serialize, Deserialize)]
struct CsvRow {
    problem: String,
    solver: String,
    linesearch: String,
    runs: usize,
    avg_iter: f64,
    avg_feval: f64,
    avg_time_ms: Option<f64>,
    avg_stepsize: Option<f64>,
    converged_fraction: f64,
}

fn create(path: &Path) -> Result<File, BenchError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| BenchError::io(dir, e))?;
    }
    File::create(path).map_err(|e| BenchError::io(path, e))
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> BenchError + '_ {
    move |source| BenchError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// Full-precision summary CSV.
pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(CsvRow {
            problem: r.problem.clone(),
            solver: r.solver.as_str().to_string(),
            linesearch: r.linesearch.as_str().to_string(),
            runs: r.runs,
            avg_iter: r.avg_iter,
            avg_feval: r.avg_feval,
            avg_time_ms: r.avg_time_ms,
            avg_stepsize: r.avg_stepsize,
            converged_fraction: r.converged_fraction,
        })
        .expect("writing to memory");
    }
    if rows.is_empty() {
        w.write_record(SUMMARY_HEADER).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

pub fn parse_summary_csv(text: &str) -> Result<Vec<SummaryRow>, BenchError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| BenchError::Parse(e.to_string()))?;
    if header.iter().ne(SUMMARY_HEADER) {
        return Err(BenchError::Parse(format!("unexpected header {header:?}")));
    }
    r.deserialize::<CsvRow>()
        .map(|row| {
            let row = row.map_err(|e| BenchError::Parse(e.to_string()))?;
            Ok(SummaryRow {
                solver: row.solver.parse().map_err(BenchError::Parse)?,
                linesearch: row.linesearch.parse().map_err(BenchError::Parse)?,
                problem: row.problem,
                runs: row.runs,
                avg_iter: row.avg_iter,
                avg_feval: row.avg_feval,
                avg_time_ms: row.avg_time_ms,
                avg_stepsize: row.avg_stepsize,
                converged_fraction: row.converged_fraction,
            })
        })
        .collect()
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| format!("{v:.2}"))
}

/// One row per problem, one column group per solver, values to 2 decimals.
pub fn summary_markdown(summary: &BenchmarkSummary) -> String {
    let mut problems: Vec<&str> = Vec::new();
    let mut solvers = Vec::new();
    for r in &summary.rows {
        if !problems.contains(&r.problem.as_str()) {
            problems.push(&r.problem);
        }
        if !solvers.contains(&r.solver) {
            solvers.push(r.solver);
        }
    }
    let mut out = String::new();
    if let Some(first) = summary.rows.first() {
        let _ = writeln!(out, "Line search: {}, {} runs per cell\n", first.linesearch, first.runs);
    }
    out.push_str("| Problem |");
    for s in &solvers {
        let l = s.label();
        let _ = write!(out, " {l} iter | {l} feval | {l} time (ms) | {l} stepsize |");
    }
    out.push_str("\n|---|");
    out.push_str(&"---:|".repeat(4 * solvers.len()));
    out.push('\n');
    let mut failed = Vec::new();
    for p in &problems {
        let _ = write!(out, "| {p} |");
        for &s in &solvers {
            match summary.row(p, s) {
                Some(r) => {
                    let f = summary.failures_for(p, s);
                    let mark = if f > 0 { "*" } else { "" };
                    if f > 0 {
                        failed.push(format!("{p}/{} ({f} of {})", s.label(), r.runs));
                    }
                    let _ = write!(
                        out,
                        " {:.2}{mark} | {:.2} | {} | {} |",
                        r.avg_iter,
                        r.avg_feval,
                        cell(r.avg_time_ms),
                        cell(r.avg_stepsize)
                    );
                }
                None => out.push_str(" - | - | - | - |"),
            }
        }
        out.push('\n');
    }
    if !failed.is_empty() {
        let _ = writeln!(out, "\n\\* Runs ended by a line-search failure: {}.", failed.join(", "));
    }
    out
}

pub fn write_text(path: &Path, text: &str) -> Result<(), BenchError> {
    std::fs::create_dir_all(
        path.parent()
            .filter(|d| !d.as_os_str().is_empty())
            .unwrap_or(Path::new(".")),
    )
    .map_err(|e| BenchError::io(path, e))?;
    std::fs::write(path, text).map_err(|e| BenchError::io(path, e))
}

fn join(v: &[f64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// One line per run. Wall time is written only when `with_time` is set.
pub fn write_runs_csv(path: &Path, records: &[RunRecord], with_time: bool) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(create(path)?);
    let err = csv_err(path);
    w.write_record([
        "problem",
        "solver",
        "linesearch",
        "run",
        "seed",
        "iterations",
        "fevals",
        "time_ms",
        "mean_stepsize",
        "status",
        "final_d_norm",
        "x0",
        "final_x",
        "final_f",
    ])
    .map_err(&err)?;
    for r in records {
        w.write_record([
            r.problem.clone(),
            r.solver.as_str().to_string(),
            r.linesearch.as_str().to_string(),
            r.run.to_string(),
            r.seed.to_string(),
            r.iterations.to_string(),
            r.fevals.to_string(),
            if with_time {
                r.time_ms.to_string()
            } else {
                String::new()
            },
            r.mean_stepsize.map(|b| b.to_string()).unwrap_or_default(),
            r.status.as_str().to_string(),
            r.final_d_norm.to_string(),
            join(&r.x0),
            join(&r.final_x),
            join(&r.final_f),
        ])
        .map_err(&err)?;
    }
    w.flush().map_err(|e| BenchError::io(path, e))
}

/// Trajectory CSV: `iter, x1.., f1.., d_norm, beta, theta, status`, with the
/// status filled on the final row only.
pub fn trace_csv(trace: &SolveTrace<f64>) -> String {
    let first = &trace.records[0];
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["iter".to_string()];
    header.extend((1..=first.x.len()).map(|i| format!("x{i}")));
    header.extend((1..=first.values.len()).map(|i| format!("f{i}")));
    header.extend(["d_norm", "beta", "theta", "status"].map(String::from));
    w.write_record(&header).expect("writing to memory");
    let last = trace.records.len() - 1;
    for (k, r) in trace.records.iter().enumerate() {
        let mut row = vec![k.to_string()];
        row.extend(r.x.iter().map(|v| v.to_string()));
        row.extend(r.values.iter().map(|v| v.to_string()));
        row.push(r.d_norm.to_string());
        row.push(r.beta.map(|b| b.to_string()).unwrap_or_default());
        row.push(r.theta.to_string());
        row.push(if k == last {
            trace.status.as_str().to_string()
        } else {
            String::new()
        });
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

/// Solves from `x0` and writes the trajectory to `path`.
pub fn dump_trace(
    problem: &Problem<f64>,
    config: &SolverConfig<f64>,
    x0: &[f64],
    path: &Path,
) -> Result<SolveTrace<f64>, BenchError> {
    let trace = solve(problem, x0, config).map_err(|e| BenchError::Solve {
        problem: problem.name().to_string(),
        run: 0,
        message: e.to_string(),
    })?;
    write_text(path, &trace_csv(&trace))?;
    Ok(trace)
}
