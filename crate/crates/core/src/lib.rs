//! First-order descent methods for smooth multiobjective optimization.
//!
//! Three solvers share one driver: steepest descent (`Sdmo`), steepest descent
//! with a Barzilai-Borwein initial stepsize (`Bbmo`), and descent along the
//! direction built from Barzilai-Borwein scaled gradients (`Bbdmo`). Each can
//! be paired with a monotone Armijo search or one of two nonmonotone variants.
//!
//! ```
//! use mo_descent::{make_problem, solve, Method, LineSearchKind, Overrides, SolverConfig, Status};
//!
//! let p = make_problem::<f64>("JOS1a", Overrides { n: Some(4) }).unwrap();
//! let cfg = SolverConfig::new(Method::Bbdmo, LineSearchKind::Armijo);
//! let trace = solve(&p, &[1.5, -0.5, 0.25, 1.0], &cfg).unwrap();
//! assert_eq!(trace.status, Status::Critical);
//! ```

// Comparisons are written as `!(a > b)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dual;
pub mod error;
pub mod line_search;
pub mod problem;
pub mod scalar;
pub mod scaling;
pub mod solver;
pub mod suite;

pub use dual::{solve_dual, DualOptions, DualSolution};
pub use error::{DualError, LineSearchError, ProblemError, ScalingError, SolveError};
pub use line_search::{LineSearchKind, LineSearchOutcome, LineSearchParams, MaxWindow, ReferenceState};
pub use problem::{Evaluation, FnObjectives, Jacobian, Objectives, Problem};
pub use scalar::Scalar;
pub use scaling::{bb_coefficient, AlphaBounds, ScalingState};
pub use solver::{
    criticality_report, run_bbdmo, run_bbmo, run_sdmo, solve, IterationRecord, Method, SolveTrace, SolverConfig,
    Status, StopTest,
};
pub use suite::{
    all_problems, make_problem, pareto_reference, problem_spec, problem_specs, sample_initial_point, Overrides,
    ParetoReference, ProblemSpec, PROBLEM_NAMES,
};

pub type Problem64 = Problem<f64>;
pub type Problem32 = Problem<f32>;
pub type Jacobian64 = Jacobian<f64>;
pub type SolverConfig64 = SolverConfig<f64>;
pub type SolveTrace64 = SolveTrace<f64>;
