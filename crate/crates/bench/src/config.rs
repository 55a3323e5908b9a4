//! Benchmark settings: defaults, `key=value` manifests and their merge with CLI flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use mo_descent::{AlphaBounds, LineSearchKind, LineSearchParams, Method, SolverConfig, StopTest, PROBLEM_NAMES};

use crate::error::BenchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "md" | "markdown" => Ok(Self::Markdown),
            other => Err(format!("unknown format `{other}` (expected csv or md)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Markdown => "md",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub problems: Vec<String>,
    pub solvers: Vec<Method>,
    pub linesearch: LineSearchKind,
    pub runs: usize,
    pub seed: u64,
    pub max_iter: usize,
    pub tol: f64,
    pub sigma: f64,
    pub gamma: f64,
    pub window: usize,
    pub eta: f64,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub stop: StopTest,
    pub out: Option<PathBuf>,
    pub format: Format,
    /// Fill the wall-time column. Off by default so outputs are reproducible.
    pub record_time: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            problems: PROBLEM_NAMES.iter().map(|s| s.to_string()).collect(),
            solvers: Method::ALL.to_vec(),
            linesearch: LineSearchKind::Armijo,
            runs: 200,
            seed: 42,
            max_iter: 500,
            tol: 1e-4,
            sigma: 0.1,
            gamma: 0.5,
            window: 10,
            eta: 0.8,
            alpha_min: 1e-3,
            alpha_max: 1e3,
            stop: StopTest::Both,
            out: None,
            format: Format::Csv,
            record_time: false,
        }
    }
}

impl BenchConfig {
    pub fn solver_config(&self, method: Method) -> SolverConfig<f64> {
        SolverConfig {
            method,
            linesearch: self.linesearch,
            tol: self.tol,
            max_iters: self.max_iter,
            params: LineSearchParams {
                sigma: self.sigma,
                gamma: self.gamma,
                window: self.window,
                eta: self.eta,
                ..LineSearchParams::default()
            },
            alpha: AlphaBounds {
                min: self.alpha_min,
                max: self.alpha_max,
            },
            stop: self.stop,
            ..SolverConfig::default()
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.runs == 0 {
            return Err(BenchError::Args("runs must be at least 1".into()));
        }
        if self.problems.is_empty() || self.solvers.is_empty() {
            return Err(BenchError::Args("nothing to run".into()));
        }
        for p in &self.problems {
            mo_descent::problem_spec(p).map_err(|e| BenchError::Args(e.to_string()))?;
        }
        self.solver_config(Method::Sdmo)
            .validate()
            .map_err(|e| BenchError::Args(e.to_string()))
    }

    /// Applies every field set in `o`.
    pub fn apply(&mut self, o: &Overrides) -> Result<(), BenchError> {
        if let Some(p) = &o.problem {
            self.problems = parse_problems(p)?;
        }
        if let Some(s) = &o.solver {
            self.solvers = parse_solvers(s)?;
        }
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = o.$field.clone() { self.$field = v; })*
            };
        }
        set!(
            linesearch,
            runs,
            seed,
            max_iter,
            tol,
            sigma,
            gamma,
            window,
            eta,
            alpha_min,
            alpha_max,
            stop,
            format,
            record_time
        );
        if let Some(out) = &o.out {
            self.out = Some(out.clone());
        }
        Ok(())
    }
}

/// Partially specified settings, from a manifest or the command line.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub problem: Option<String>,
    pub solver: Option<String>,
    pub linesearch: Option<LineSearchKind>,
    pub runs: Option<usize>,
    pub seed: Option<u64>,
    pub max_iter: Option<usize>,
    pub tol: Option<f64>,
    pub sigma: Option<f64>,
    pub gamma: Option<f64>,
    pub window: Option<usize>,
    pub eta: Option<f64>,
    pub alpha_min: Option<f64>,
    pub alpha_max: Option<f64>,
    pub stop: Option<StopTest>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub record_time: Option<bool>,
}

fn parse_value<V: FromStr>(key: &str, value: &str, line: usize) -> Result<V, BenchError>
where
    V::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| BenchError::Args(format!("line {line}: bad value for `{key}`: {e}")))
}

impl Overrides {
    /// Parses `key=value` lines; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, BenchError> {
        let mut o = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| BenchError::Args(format!("line {line}: expected key=value")))?;
            let (key, value) = (key.trim(), value.trim());
            match key.replace('-', "_").as_str() {
                "problem" => o.problem = Some(value.to_string()),
                "solver" => o.solver = Some(value.to_string()),
                "linesearch" => o.linesearch = Some(parse_value(key, value, line)?),
                "runs" => o.runs = Some(parse_value(key, value, line)?),
                "seed" => o.seed = Some(parse_value(key, value, line)?),
                "max_iter" => o.max_iter = Some(parse_value(key, value, line)?),
                "tol" => o.tol = Some(parse_value(key, value, line)?),
                "sigma" => o.sigma = Some(parse_value(key, value, line)?),
                "gamma" => o.gamma = Some(parse_value(key, value, line)?),
                "M" | "m" | "window" => o.window = Some(parse_value(key, value, line)?),
                "eta" => o.eta = Some(parse_value(key, value, line)?),
                "alpha_min" => o.alpha_min = Some(parse_value(key, value, line)?),
                "alpha_max" => o.alpha_max = Some(parse_value(key, value, line)?),
                "stop" => o.stop = Some(parse_value(key, value, line)?),
                "out" => o.out = Some(PathBuf::from(value)),
                "format" => o.format = Some(parse_value(key, value, line)?),
                "record_time" => o.record_time = Some(parse_value(key, value, line)?),
                _ => return Err(BenchError::Args(format!("line {line}: unknown key `{key}`"))),
            }
        }
        Ok(o)
    }

    pub fn load(path: &Path) -> Result<Self, BenchError> {
        let text = std::fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
        Self::parse(&text)
    }
}

/// `all`, or a comma-separated list of registry names (case-insensitive).
pub fn parse_problems(s: &str) -> Result<Vec<String>, BenchError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(PROBLEM_NAMES.iter().map(|s| s.to_string()).collect());
    }
    s.split(',')
        .map(|p| {
            mo_descent::problem_spec(p.trim())
                .map(|spec| spec.name.to_string())
                .map_err(|e| BenchError::Args(e.to_string()))
        })
        .collect()
}

/// `all`, or a comma-separated list of solver names.
pub fn parse_solvers(s: &str) -> Result<Vec<Method>, BenchError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(Method::ALL.to_vec());
    }
    s.split(',')
        .map(|m| m.trim().parse().map_err(BenchError::Args))
        .collect()
}
