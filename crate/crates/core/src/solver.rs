//! Outer iterations: multiobjective steepest descent (SDMO), steepest descent
//! with a Barzilai-Borwein initial stepsize (BBMO), and Barzilai-Borwein descent
//! (BBDMO), which rescales each gradient by its own BB coefficient before the
//! direction subproblem.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::dual::{solve_dual, DualOptions, DualSolution};
use crate::error::{DualError, LineSearchError, SolveError};
use crate::line_search::{backtrack, LineSearchKind, LineSearchParams, ReferenceState};
use crate::problem::{Jacobian, Problem};
use crate::scalar::{norm, sub, Scalar};
use crate::scaling::{bb_coefficient, scale_gradients, AlphaBounds, ScalingState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Sdmo,
    Bbmo,
    Bbdmo,
}

impl Method {
    pub const ALL: [Method; 3] = [Self::Sdmo, Self::Bbmo, Self::Bbdmo];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Sdmo => "sdmo",
            Self::Bbmo => "bbmo",
            Self::Bbdmo => "bbdmo",
        }
    }

    /// Upper-case label used in rendered tables.
    pub fn label(&self) -> &'static str {
        match self {
            Self::Sdmo => "SDMO",
            Self::Bbmo => "BBMO",
            Self::Bbdmo => "BBDMO",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sdmo" => Ok(Self::Sdmo),
            "bbmo" => Ok(Self::Bbmo),
            // Some published tables label the descent method OBBMO.
            "bbdmo" | "obbmo" => Ok(Self::Bbdmo),
            other => Err(format!("unknown solver `{other}` (expected sdmo, bbmo or bbdmo)")),
        }
    }
}

/// Which direction norm the stopping test compares against `tol`.
///
/// The two differ only for BBDMO: a small scaled direction bounds the
/// steepest-descent direction only up to the largest coefficient `alpha_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StopTest {
    /// The search direction actually used (`d_BB` for BBDMO).
    SearchDirection,
    /// The steepest-descent direction on the unscaled gradients.
    Steepest,
    /// Both norms must be below `tol`.
    ///
    /// With this test and with `Steepest`, an iteration whose scaled direction
    /// is below `tol` while the steepest-descent one is not steps along the
    /// steepest-descent direction instead.
    Both,
}

impl StopTest {
    pub const ALL: [StopTest; 3] = [Self::SearchDirection, Self::Steepest, Self::Both];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::SearchDirection => "search",
            Self::Steepest => "steepest",
            Self::Both => "both",
        }
    }
}

impl fmt::Display for StopTest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StopTest {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "search" => Ok(Self::SearchDirection),
            "steepest" => Ok(Self::Steepest),
            "both" => Ok(Self::Both),
            other => Err(format!(
                "unknown stop test `{other}` (expected search, steepest or both)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig<T> {
    pub method: Method,
    pub linesearch: LineSearchKind,
    /// Stop once the direction norm drops below this.
    pub tol: T,
    pub max_iters: usize,
    pub params: LineSearchParams<T>,
    pub alpha: AlphaBounds<T>,
    pub dual: DualOptions<T>,
    pub stop: StopTest,
}

impl<T: Scalar> Default for SolverConfig<T> {
    fn default() -> Self {
        Self {
            method: Method::Bbdmo,
            linesearch: LineSearchKind::Armijo,
            tol: T::lit(1e-4),
            max_iters: 500,
            params: LineSearchParams::default(),
            alpha: AlphaBounds::default(),
            dual: DualOptions::default(),
            stop: StopTest::Both,
        }
    }
}

impl<T: Scalar> SolverConfig<T> {
    pub fn new(method: Method, linesearch: LineSearchKind) -> Self {
        Self {
            method,
            linesearch,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), SolveError<T>> {
        if !(self.tol > T::zero()) {
            return Err(SolveError::InvalidConfig("tol must be positive"));
        }
        if self.max_iters == 0 {
            return Err(SolveError::InvalidConfig("max_iters must be at least 1"));
        }
        self.params
            .validate()
            .map_err(|_| SolveError::InvalidConfig("invalid line-search parameters"))?;
        self.alpha.validate()?;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Critical,
    MaxIters,
    LineSearchFailure,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Critical => "critical",
            Self::MaxIters => "max_iters",
            Self::LineSearchFailure => "linesearch_failure",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "critical" => Ok(Self::Critical),
            "max_iters" => Ok(Self::MaxIters),
            "linesearch_failure" => Ok(Self::LineSearchFailure),
            other => Err(format!("unknown status `{other}`")),
        }
    }
}

/// One visited iterate and the step taken from it.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationRecord<T> {
    pub x: Vec<T>,
    pub values: Vec<T>,
    /// Norm of the search direction computed at `x` (the scaled one for BBDMO).
    pub d_norm: T,
    /// Optimal value of the direction subproblem at `x`.
    pub theta: T,
    /// Accepted stepsize; `None` at the final iterate or when the search failed.
    pub beta: Option<T>,
    /// Function evaluations spent by the line search from `x`.
    pub trials: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveTrace<T> {
    pub method: Method,
    pub linesearch: LineSearchKind,
    pub records: Vec<IterationRecord<T>>,
    pub status: Status,
    /// Accepted steps.
    pub iterations: usize,
    pub fevals: usize,
    pub wall_time: Duration,
}

impl<T: Scalar> SolveTrace<T> {
    pub fn final_record(&self) -> &IterationRecord<T> {
        self.records.last().expect("a trace holds at least the starting point")
    }

    pub fn final_point(&self) -> &[T] {
        &self.final_record().x
    }

    pub fn final_values(&self) -> &[T] {
        &self.final_record().values
    }

    pub fn stepsizes(&self) -> impl Iterator<Item = T> + '_ {
        self.records.iter().filter_map(|r| r.beta)
    }

    /// Arithmetic mean of the accepted stepsizes; `None` for a run without steps.
    pub fn mean_stepsize(&self) -> Option<T> {
        if self.iterations == 0 {
            return None;
        }
        let sum: T = self.stepsizes().sum();
        Some(sum / T::from_count(self.iterations))
    }
}

/// Solves with the method named in `config`.
pub fn solve<T: Scalar>(
    problem: &Problem<T>,
    x0: &[T],
    config: &SolverConfig<T>,
) -> Result<SolveTrace<T>, SolveError<T>> {
    run(problem, x0, config, config.method)
}

pub fn run_sdmo<T: Scalar>(
    problem: &Problem<T>,
    x0: &[T],
    config: &SolverConfig<T>,
) -> Result<SolveTrace<T>, SolveError<T>> {
    run(problem, x0, config, Method::Sdmo)
}

pub fn run_bbmo<T: Scalar>(
    problem: &Problem<T>,
    x0: &[T],
    config: &SolverConfig<T>,
) -> Result<SolveTrace<T>, SolveError<T>> {
    run(problem, x0, config, Method::Bbmo)
}

pub fn run_bbdmo<T: Scalar>(
    problem: &Problem<T>,
    x0: &[T],
    config: &SolverConfig<T>,
) -> Result<SolveTrace<T>, SolveError<T>> {
    run(problem, x0, config, Method::Bbdmo)
}

/// Previous iterate data the BB rules difference against.
struct Previous<T> {
    x: Vec<T>,
    jacobian: Jacobian<T>,
    direction: Vec<T>,
}

fn direction<T: Scalar>(
    gradients: &Jacobian<T>,
    warm: Option<&[T]>,
    opts: &DualOptions<T>,
) -> Result<DualSolution<T>, SolveError<T>> {
    match solve_dual(gradients, warm, opts) {
        Ok(sol) => Ok(sol),
        // An unconverged Frank-Wolfe iterate is still a valid simplex point;
        // the line search checks true slopes, so carry on with it.
        Err(DualError::NotConverged { best }) => Ok(*best),
        Err(e) => Err(e.into()),
    }
}

fn is_zero_step<T: Scalar>(s: &[T], x: &[T]) -> bool {
    norm(s) <= T::lit(1e-16) * norm(x).max(T::one())
}

fn run<T: Scalar>(
    problem: &Problem<T>,
    x0: &[T],
    config: &SolverConfig<T>,
    method: Method,
) -> Result<SolveTrace<T>, SolveError<T>> {
    config.validate()?;
    let started = Instant::now();
    let params = config.params;
    let mut current = problem.evaluate_uncounted(x0)?;
    if !current.is_finite() {
        return Err(SolveError::InvalidConfig(
            "objective values at the starting point are not finite",
        ));
    }
    let mut reference = ReferenceState::new(config.linesearch, &current.values, &params);
    let mut scaling = ScalingState::new(problem.num_objectives(), problem.dim(), config.alpha);
    let mut previous: Option<Previous<T>> = None;
    let mut bbmo_alpha: Option<T> = None;
    let mut warm: Option<Vec<T>> = None;
    let mut warm_steepest: Option<Vec<T>> = None;
    let mut records = Vec::new();
    let mut fevals = 0usize;
    let mut iterations = 0usize;

    let status = loop {
        let jac = current.jacobian.take().expect("every iterate carries its Jacobian");
        let x = std::mem::take(&mut current.x);
        let values = std::mem::take(&mut current.values);

        let mut initial_beta = params.initial_beta;
        let sol = match (method, &previous) {
            (Method::Sdmo, _) | (_, None) => direction(&jac, warm.as_deref(), &config.dual)?,
            (Method::Bbmo, Some(prev)) => {
                let sol = direction(&jac, warm.as_deref(), &config.dual)?;
                let s = sub(&x, &prev.x);
                if !is_zero_step(&s, &x) {
                    let y = sub(&sol.direction, &prev.direction);
                    bbmo_alpha = Some(bb_coefficient(&s, &y, config.alpha)?);
                }
                initial_beta = T::one() / bbmo_alpha.unwrap_or(T::one());
                sol
            }
            (Method::Bbdmo, Some(prev)) => {
                scaling.observe(&prev.x, &x, &prev.jacobian, &jac)?;
                let scaled = scale_gradients(&jac, &scaling.alphas);
                direction(&scaled, warm.as_deref(), &config.dual)?
            }
        };
        let mut sol = sol;
        let mut d_norm = sol.direction_norm();
        let scaled = method == Method::Bbdmo && previous.is_some();
        let critical = if !scaled || config.stop == StopTest::SearchDirection {
            d_norm < config.tol
        } else if config.stop == StopTest::Both && d_norm >= config.tol {
            false
        } else {
            let steepest = direction(&jac, warm_steepest.as_deref(), &config.dual)?;
            warm_steepest = Some(steepest.lambda.clone());
            let small = steepest.direction_norm() < config.tol;
            if !small && d_norm < config.tol {
                // The scaled direction has collapsed short of criticality
                // (large alpha_i shrink it); take a steepest-descent step.
                sol = steepest;
                d_norm = sol.direction_norm();
            }
            small
        };
        let mut record = IterationRecord {
            x,
            values,
            d_norm,
            theta: sol.theta,
            beta: None,
            trials: 0,
        };

        if critical {
            records.push(record);
            break Status::Critical;
        }
        if iterations >= config.max_iters {
            records.push(record);
            break Status::MaxIters;
        }

        // Acceptance uses the true Jacobian even when the direction came from
        // rescaled gradients.
        let slopes = jac.apply(&sol.direction);
        let c = reference.reference(&record.values, &params);
        match backtrack(
            problem,
            &record.x,
            &c,
            &sol.direction,
            &slopes,
            initial_beta,
            &params,
            &mut fevals,
        ) {
            Ok(out) => {
                record.beta = Some(out.beta);
                record.trials = out.trials;
                reference.accept(&out.accepted_values);
                iterations += 1;
                let next_jac = problem.jacobian(&out.accepted_point)?;
                previous = Some(Previous {
                    x: record.x.clone(),
                    jacobian: jac,
                    direction: sol.direction,
                });
                warm = Some(sol.lambda);
                current.x = out.accepted_point;
                current.values = out.accepted_values;
                current.jacobian = Some(next_jac);
                records.push(record);
            }
            Err(LineSearchError::StepTooSmall { trials, .. }) => {
                record.trials = trials;
                records.push(record);
                break Status::LineSearchFailure;
            }
            Err(LineSearchError::Problem(e)) => return Err(e.into()),
            Err(LineSearchError::InvalidParams(msg)) => return Err(SolveError::InvalidConfig(msg)),
        }
    };

    Ok(SolveTrace {
        method,
        linesearch: config.linesearch,
        records,
        status,
        iterations,
        fevals,
        wall_time: started.elapsed(),
    })
}

/// Steepest-descent quantities at `x` on the unscaled gradients.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalityReport<T> {
    pub d_norm: T,
    pub theta: T,
    pub lambda: Vec<T>,
    /// `d_norm < tol`.
    pub critical: bool,
}

pub fn criticality_report<T: Scalar>(
    problem: &Problem<T>,
    x: &[T],
    tol: T,
) -> Result<CriticalityReport<T>, SolveError<T>> {
    let jac = problem.jacobian(x)?;
    let sol = direction(&jac, None, &DualOptions::default())?;
    let d_norm = sol.direction_norm();
    Ok(CriticalityReport {
        d_norm,
        theta: sol.theta,
        lambda: sol.lambda,
        critical: d_norm < tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(mu: f64) -> Problem<f64> {
        Problem::from_fns(
            "sphere",
            1,
            vec![-1.0; 3],
            vec![1.0; 3],
            move |x: &[f64], out: &mut [f64]| out[0] = 0.5 * mu * x.iter().map(|v| v * v).sum::<f64>(),
            move |x: &[f64], j: &mut Jacobian<f64>| {
                for (k, v) in x.iter().enumerate() {
                    j.set(0, k, mu * v);
                }
            },
        )
        .unwrap()
    }

    #[test]
    fn method_names() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert_eq!("OBBMO".parse::<Method>().unwrap(), Method::Bbdmo);
        assert!("newton".parse::<Method>().is_err());
        for s in [Status::Critical, Status::MaxIters, Status::LineSearchFailure] {
            assert_eq!(s.as_str().parse::<Status>().unwrap(), s);
        }
    }

    #[test]
    fn critical_start_takes_no_steps() {
        let p = sphere(1.0);
        for method in Method::ALL {
            let cfg = SolverConfig::new(method, LineSearchKind::Armijo);
            let t = solve(&p, &[0.0, 0.0, 0.0], &cfg).unwrap();
            assert_eq!(t.status, Status::Critical);
            assert_eq!(t.iterations, 0);
            assert_eq!(t.fevals, 0);
            assert_eq!(t.records.len(), 1);
            assert_eq!(t.mean_stepsize(), None);
        }
    }

    #[test]
    fn bbmo_is_exact_on_scalar_curvature() {
        // f = mu/2 ||x||^2: the BB step 1/mu lands on the minimizer at iteration 1.
        let mu = 3.0;
        let p = sphere(mu);
        let cfg = SolverConfig::new(Method::Bbmo, LineSearchKind::Armijo);
        let t = run_bbmo(&p, &[0.5, -0.25, 0.75], &cfg).unwrap();
        assert_eq!(t.status, Status::Critical);
        assert_eq!(t.iterations, 2);
        let betas: Vec<f64> = t.stepsizes().collect();
        assert!((betas[1] - 1.0 / mu).abs() < 1e-14, "{betas:?}");
        assert!(norm(t.final_point()) < 1e-12);
    }

    #[test]
    fn bbdmo_single_objective_reduces_to_bb() {
        let p = sphere(0.2);
        let cfg = SolverConfig::new(Method::Bbdmo, LineSearchKind::Armijo);
        let t = run_bbdmo(&p, &[0.5, -0.25, 0.75], &cfg).unwrap();
        assert_eq!(t.status, Status::Critical);
        assert_eq!(t.iterations, 2);
        assert!(norm(t.final_point()) < 1e-12);
    }

    #[test]
    fn iteration_cap() {
        let p = sphere(1e-3);
        let cfg = SolverConfig {
            max_iters: 3,
            ..SolverConfig::new(Method::Sdmo, LineSearchKind::Armijo)
        };
        let t = run_sdmo(&p, &[0.5, 0.5, 0.5], &cfg).unwrap();
        assert_eq!(t.status, Status::MaxIters);
        assert_eq!(t.iterations, 3);
        assert_eq!(t.records.len(), 4);
        assert_eq!(t.fevals, t.records.iter().map(|r| r.trials).sum::<usize>());
    }

    #[test]
    fn invalid_configs() {
        let p = sphere(1.0);
        let bad_tol = SolverConfig::<f64> {
            tol: 0.0,
            ..Default::default()
        };
        assert!(matches!(
            solve(&p, &[1.0, 0.0, 0.0], &bad_tol),
            Err(SolveError::InvalidConfig(_))
        ));
        let bad_iters = SolverConfig::<f64> {
            max_iters: 0,
            ..Default::default()
        };
        assert!(solve(&p, &[1.0, 0.0, 0.0], &bad_iters).is_err());
        assert!(matches!(
            solve(&p, &[1.0, 0.0], &SolverConfig::default()),
            Err(SolveError::Problem(_))
        ));
    }

    #[test]
    fn line_search_failure_is_a_status() {
        // A Jacobian with the wrong sign makes every direction ascent.
        let p = Problem::from_fns(
            "liar",
            1,
            vec![-1.0],
            vec![1.0],
            |x: &[f64], out: &mut [f64]| out[0] = x[0] * x[0],
            |x: &[f64], j: &mut Jacobian<f64>| j.set(0, 0, -2.0 * x[0]),
        )
        .unwrap();
        let t = run_sdmo(&p, &[0.5], &SolverConfig::new(Method::Sdmo, LineSearchKind::Armijo)).unwrap();
        assert_eq!(t.status, Status::LineSearchFailure);
        assert_eq!(t.iterations, 0);
        assert!(t.fevals > 30);
        assert_eq!(t.fevals, t.records[0].trials);
    }

    #[test]
    fn criticality_report_single_objective() {
        let p = sphere(1.0);
        let r = criticality_report(&p, &[0.0, 0.0, 0.0], 1e-4).unwrap();
        assert_eq!(r.d_norm, 0.0);
        assert_eq!(r.theta, 0.0);
        assert!(r.critical);
        let r = criticality_report(&p, &[1.0, 0.0, 0.0], 1e-4).unwrap();
        assert!(!r.critical);
        assert_eq!(r.theta, -0.5);
    }
}
