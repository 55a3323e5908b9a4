//! Backtracking line searches for a vector sufficient-decrease condition.
//!
//! A trial stepsize `beta` is accepted when, for every objective `i`,
//!
//! ```text
//! F_i(x + beta d) - C_i <= sigma * beta * <grad F_i(x), d>
//! ```
//!
//! where the reference `C` is `F(x)` (Armijo), the componentwise maximum over a
//! window of recent values (max-type), or an exponentially weighted average of
//! past values (average-type). Rejected trials shrink `beta` by `gamma`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::LineSearchError;
use crate::problem::Problem;
use crate::scalar::{step, Scalar};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineSearchParams<T> {
    /// Sufficient-decrease fraction, in (0, 1).
    pub sigma: T,
    /// Backtracking factor, in (0, 1).
    pub gamma: T,
    /// First trial stepsize.
    pub initial_beta: T,
    /// Backtracking below this stepsize is reported as a failure.
    pub beta_floor: T,
    /// Max-type lookback `M`: the window holds `M + 1` objective vectors.
    pub window: usize,
    /// Average-type weight `eta`, in (0, 1).
    pub eta: T,
}

impl<T: Scalar> Default for LineSearchParams<T> {
    fn default() -> Self {
        Self {
            sigma: T::lit(0.1),
            gamma: T::lit(0.5),
            initial_beta: T::one(),
            beta_floor: T::lit(1e-12),
            window: 10,
            eta: T::lit(0.8),
        }
    }
}

impl<T: Scalar> LineSearchParams<T> {
    pub fn validate(&self) -> Result<(), LineSearchError> {
        let (zero, one) = (T::zero(), T::one());
        if !(self.sigma > zero && self.sigma < one) {
            return Err(LineSearchError::InvalidParams("sigma must lie in (0, 1)"));
        }
        if !(self.gamma > zero && self.gamma < one) {
            return Err(LineSearchError::InvalidParams("gamma must lie in (0, 1)"));
        }
        if !(self.initial_beta > zero && self.initial_beta.is_finite()) {
            return Err(LineSearchError::InvalidParams("initial stepsize must be positive"));
        }
        if !(self.beta_floor > zero) {
            return Err(LineSearchError::InvalidParams("stepsize floor must be positive"));
        }
        if !(self.eta > zero && self.eta < one) {
            return Err(LineSearchError::InvalidParams("eta must lie in (0, 1)"));
        }
        Ok(())
    }
}

/// Which reference value the sufficient-decrease test compares against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineSearchKind {
    Armijo,
    MaxType,
    AverageType,
}

impl LineSearchKind {
    pub const ALL: [LineSearchKind; 3] = [Self::Armijo, Self::MaxType, Self::AverageType];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Armijo => "armijo",
            Self::MaxType => "max",
            Self::AverageType => "avg",
        }
    }
}

impl fmt::Display for LineSearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LineSearchKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "armijo" | "monotone" => Ok(Self::Armijo),
            "max" | "max-type" => Ok(Self::MaxType),
            "avg" | "average" | "average-type" => Ok(Self::AverageType),
            other => Err(format!("unknown line search `{other}` (expected armijo, max or avg)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineSearchOutcome<T> {
    /// Accepted stepsize, `initial_beta * gamma^(trials - 1)`.
    pub beta: T,
    /// Objective-vector evaluations spent, at least one.
    pub trials: usize,
    pub accepted_values: Vec<T>,
    pub accepted_point: Vec<T>,
}

/// Backtracks from `initial_beta` against an arbitrary reference vector.
///
/// `slopes[i]` is `<grad F_i(x), d>`. Every trial is charged to `fevals`.
#[allow(clippy::too_many_arguments)]
pub fn backtrack<T: Scalar>(
    problem: &Problem<T>,
    x: &[T],
    reference: &[T],
    d: &[T],
    slopes: &[T],
    initial_beta: T,
    params: &LineSearchParams<T>,
    fevals: &mut usize,
) -> Result<LineSearchOutcome<T>, LineSearchError> {
    params.validate()?;
    if !(initial_beta > T::zero() && initial_beta.is_finite()) {
        return Err(LineSearchError::InvalidParams("initial stepsize must be positive"));
    }
    let mut trials = 0usize;
    loop {
        let beta = initial_beta * params.gamma.powi(trials as i32);
        trials += 1;
        let point = step(x, beta, d);
        let eval = problem.evaluate(&point, fevals)?;
        let accepted = eval.is_finite()
            && eval
                .values
                .iter()
                .zip(reference)
                .zip(slopes)
                .all(|((&f, &c), &g)| f - c <= params.sigma * beta * g);
        if accepted {
            return Ok(LineSearchOutcome {
                beta,
                trials,
                accepted_values: eval.values,
                accepted_point: point,
            });
        }
        if beta * params.gamma < params.beta_floor {
            return Err(LineSearchError::StepTooSmall {
                trials,
                floor: params.beta_floor.to_f64_lossy(),
            });
        }
    }
}

/// Monotone Armijo search: the reference is `F(x)` itself.
#[allow(clippy::too_many_arguments)]
pub fn armijo<T: Scalar>(
    problem: &Problem<T>,
    x: &[T],
    fx: &[T],
    d: &[T],
    slopes: &[T],
    params: &LineSearchParams<T>,
    fevals: &mut usize,
) -> Result<LineSearchOutcome<T>, LineSearchError> {
    backtrack(problem, x, fx, d, slopes, params.initial_beta, params, fevals)
}

/// The last `M + 1` objective vectors, most recent at the back.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxWindow<T> {
    history: VecDeque<Vec<T>>,
    capacity: usize,
}

impl<T: Scalar> MaxWindow<T> {
    /// Window for lookback `m_lookback`, seeded with `F(x^0)`.
    pub fn new(f0: Vec<T>, m_lookback: usize) -> Self {
        let mut history = VecDeque::with_capacity(m_lookback + 1);
        history.push_back(f0);
        Self {
            history,
            capacity: m_lookback + 1,
        }
    }

    /// Appends `F(x^{k+1})`, dropping the oldest entry beyond `M + 1`.
    pub fn push(&mut self, f: Vec<T>) {
        self.history.push_back(f);
        while self.history.len() > self.capacity {
            self.history.pop_front();
        }
    }

    pub fn len(&self) -> usize {
        self.history.len()
    }

    pub fn is_empty(&self) -> bool {
        self.history.is_empty()
    }

    pub fn latest(&self) -> &[T] {
        self.history.back().expect("window is never empty")
    }

    /// `C_i = max_j F_i(x^{k-j})` over the stored window.
    pub fn reference(&self) -> Vec<T> {
        let mut c = self.latest().to_vec();
        for f in &self.history {
            for (ci, &fi) in c.iter_mut().zip(f) {
                *ci = ci.max(fi);
            }
        }
        c
    }
}

/// Max-type nonmonotone search. The window's latest entry must be `F(x)`;
/// the caller pushes the accepted value afterwards.
pub fn max_nonmonotone<T: Scalar>(
    problem: &Problem<T>,
    x: &[T],
    window: &MaxWindow<T>,
    d: &[T],
    slopes: &[T],
    params: &LineSearchParams<T>,
    fevals: &mut usize,
) -> Result<LineSearchOutcome<T>, LineSearchError> {
    let reference = window.reference();
    backtrack(problem, x, &reference, d, slopes, params.initial_beta, params, fevals)
}

/// `q^k = eta q^{k-1} + 1`, `C^k = (eta q^{k-1} C^{k-1} + F(x^k)) / q^k`.
pub fn update_avg_reference<T: Scalar>(q_prev: T, c_prev: &[T], fx: &[T], eta: T) -> (T, Vec<T>) {
    let w = eta * q_prev;
    let q = w + T::one();
    let c = c_prev.iter().zip(fx).map(|(&c, &f)| (w * c + f) / q).collect();
    (q, c)
}

/// Average-type nonmonotone search: updates `(q, C)` with `F(x)` first, then
/// backtracks against the new `C`. Returns the outcome and the updated pair.
#[allow(clippy::too_many_arguments)]
pub fn avg_nonmonotone<T: Scalar>(
    problem: &Problem<T>,
    x: &[T],
    fx: &[T],
    q: T,
    c: &[T],
    d: &[T],
    slopes: &[T],
    params: &LineSearchParams<T>,
    fevals: &mut usize,
) -> Result<(LineSearchOutcome<T>, T, Vec<T>), LineSearchError> {
    let (q_new, c_new) = update_avg_reference(q, c, fx, params.eta);
    let out = backtrack(problem, x, &c_new, d, slopes, params.initial_beta, params, fevals)?;
    Ok((out, q_new, c_new))
}

/// Per-run reference bookkeeping for the three strategies.
#[derive(Clone, Debug, PartialEq)]
pub enum ReferenceState<T> {
    Monotone,
    Max(MaxWindow<T>),
    /// `q^0 = 1`, `C^0 = F(x^0)`; updated from iteration 1 on.
    Average {
        q: T,
        c: Vec<T>,
        primed: bool,
    },
}

impl<T: Scalar> ReferenceState<T> {
    pub fn new(kind: LineSearchKind, f0: &[T], params: &LineSearchParams<T>) -> Self {
        match kind {
            LineSearchKind::Armijo => Self::Monotone,
            LineSearchKind::MaxType => Self::Max(MaxWindow::new(f0.to_vec(), params.window)),
            LineSearchKind::AverageType => Self::Average {
                q: T::one(),
                c: f0.to_vec(),
                primed: false,
            },
        }
    }

    /// Reference `C^k` for the search at the current iterate with values `fx`.
    pub fn reference(&mut self, fx: &[T], params: &LineSearchParams<T>) -> Vec<T> {
        match self {
            Self::Monotone => fx.to_vec(),
            Self::Max(w) => w.reference(),
            Self::Average { q, c, primed } => {
                if *primed {
                    let (nq, nc) = update_avg_reference(*q, c, fx, params.eta);
                    *q = nq;
                    *c = nc;
                }
                *primed = true;
                c.clone()
            }
        }
    }

    /// Records the accepted objective vector of the next iterate.
    pub fn accept(&mut self, f_next: &[T]) {
        if let Self::Max(w) = self {
            w.push(f_next.to_vec());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Jacobian;

    fn parabola() -> Problem<f64> {
        Problem::from_fns(
            "x^2",
            1,
            vec![-2.0],
            vec![2.0],
            |x: &[f64], out: &mut [f64]| out[0] = x[0] * x[0],
            |x: &[f64], j: &mut Jacobian<f64>| j.set(0, 0, 2.0 * x[0]),
        )
        .unwrap()
    }

    fn affine() -> Problem<f64> {
        Problem::from_fns(
            "affine",
            2,
            vec![-1.0, -1.0],
            vec![1.0, 1.0],
            |x: &[f64], out: &mut [f64]| {
                out[0] = 3.0 * x[0] - x[1];
                out[1] = x[0] + 2.0 * x[1] + 7.0;
            },
            |_: &[f64], j: &mut Jacobian<f64>| {
                j.set(0, 0, 3.0);
                j.set(0, 1, -1.0);
                j.set(1, 0, 1.0);
                j.set(1, 1, 2.0);
            },
        )
        .unwrap()
    }

    #[test]
    fn armijo_parabola_halves_once() {
        // beta = 1 gives f = 1, no decrease; beta = 0.5 reaches the minimizer.
        let p = parabola();
        let mut fevals = 0;
        let out = armijo(
            &p,
            &[1.0],
            &[1.0],
            &[-2.0],
            &[-4.0],
            &LineSearchParams::default(),
            &mut fevals,
        )
        .unwrap();
        assert_eq!(out.beta, 0.5);
        assert_eq!(out.trials, 2);
        assert_eq!(fevals, 2);
        assert_eq!(out.accepted_point, vec![0.0]);
        assert_eq!(out.accepted_values, vec![0.0]);
    }

    #[test]
    fn armijo_affine_accepts_unit_step() {
        let p = affine();
        let d = [-1.0, -0.5];
        let slopes = p.jacobian(&[0.0, 0.0]).unwrap().apply(&d);
        assert!(slopes.iter().all(|&s| s < 0.0));
        let fx = p.values(&[0.0, 0.0]).unwrap();
        let mut fevals = 0;
        let out = armijo(
            &p,
            &[0.0, 0.0],
            &fx,
            &d,
            &slopes,
            &LineSearchParams::default(),
            &mut fevals,
        )
        .unwrap();
        assert_eq!(out.beta, 1.0);
        assert_eq!(out.trials, 1);
    }

    #[test]
    fn ascent_direction_fails_at_floor() {
        let p = parabola();
        let mut fevals = 0;
        let params = LineSearchParams {
            beta_floor: 1e-3,
            ..LineSearchParams::default()
        };
        let err = armijo(&p, &[1.0], &[1.0], &[1.0], &[2.0], &params, &mut fevals).unwrap_err();
        // 1, 1/2, ..., 1/512 tried; 1/1024 is below the floor.
        assert_eq!(
            err,
            LineSearchError::StepTooSmall {
                trials: 10,
                floor: 1e-3
            }
        );
        assert_eq!(fevals, 10);
    }

    #[test]
    fn non_finite_trials_are_rejected() {
        // f(x) = x on x > 0 and NaN elsewhere; beta = 1 and 1/2 leave the domain.
        let p = Problem::from_fns(
            "half-line",
            1,
            vec![0.1],
            vec![1.0],
            |x: &[f64], out: &mut [f64]| out[0] = if x[0] > 0.0 { x[0] } else { f64::NAN },
            |_: &[f64], j: &mut Jacobian<f64>| j.set(0, 0, 1.0),
        )
        .unwrap();
        let mut fevals = 0;
        let out = armijo(
            &p,
            &[0.5],
            &[0.5],
            &[-1.0],
            &[-1.0],
            &LineSearchParams::default(),
            &mut fevals,
        )
        .unwrap();
        assert_eq!(out.beta, 0.25);
        assert_eq!(out.trials, 3);
        assert_eq!(out.accepted_values, vec![0.25]);
    }

    #[test]
    fn invalid_params() {
        let p = parabola();
        let mut fevals = 0;
        for params in [
            LineSearchParams {
                sigma: 1.0,
                ..Default::default()
            },
            LineSearchParams {
                gamma: 0.0,
                ..Default::default()
            },
            LineSearchParams {
                initial_beta: -1.0,
                ..Default::default()
            },
            LineSearchParams {
                eta: 1.0,
                ..Default::default()
            },
        ] {
            assert!(matches!(
                armijo(&p, &[1.0], &[1.0], &[-2.0], &[-4.0], &params, &mut fevals),
                Err(LineSearchError::InvalidParams(_))
            ));
        }
        assert_eq!(fevals, 0);
    }

    #[test]
    fn window_keeps_m_plus_one() {
        let mut w = MaxWindow::new(vec![5.0, 0.0], 2);
        w.push(vec![1.0, 3.0]);
        w.push(vec![2.0, 1.0]);
        assert_eq!(w.len(), 3);
        assert_eq!(w.reference(), vec![5.0, 3.0]);
        w.push(vec![0.5, 0.5]);
        assert_eq!(w.len(), 3);
        assert_eq!(w.reference(), vec![2.0, 3.0]);
        assert_eq!(w.latest(), &[0.5, 0.5]);

        let mut w0 = MaxWindow::new(vec![5.0], 0);
        w0.push(vec![1.0]);
        assert_eq!(w0.reference(), vec![1.0]);
    }

    #[test]
    fn max_type_at_start_equals_armijo() {
        let p = parabola();
        let params = LineSearchParams::default();
        let (mut fa, mut fm) = (0, 0);
        let a = armijo(&p, &[1.0], &[1.0], &[-2.0], &[-4.0], &params, &mut fa).unwrap();
        let w = MaxWindow::new(vec![1.0], 10);
        let m = max_nonmonotone(&p, &[1.0], &w, &[-2.0], &[-4.0], &params, &mut fm).unwrap();
        assert_eq!(a, m);
        assert_eq!(fa, fm);
    }

    #[test]
    fn larger_past_value_allows_longer_step() {
        // At x = 1 with d = -2, beta = 1 returns to f = 1: rejected by Armijo,
        // accepted against a window holding f = 4.
        let p = parabola();
        let params = LineSearchParams::default();
        let mut fe = 0;
        let a = armijo(&p, &[1.0], &[1.0], &[-2.0], &[-4.0], &params, &mut fe).unwrap();
        let mut w = MaxWindow::new(vec![4.0], 10);
        w.push(vec![1.0]);
        let m = max_nonmonotone(&p, &[1.0], &w, &[-2.0], &[-4.0], &params, &mut fe).unwrap();
        assert_eq!(a.beta, 0.5);
        assert_eq!(m.beta, 1.0);
    }

    #[test]
    fn average_reference_formulas() {
        let (q, c) = update_avg_reference(1.0_f64, &[10.0], &[1.0], 0.8);
        assert_eq!(q, 1.8);
        assert!((c[0] - 5.0).abs() < 1e-15);

        let (q, c) = update_avg_reference(1.0, &[10.0, -3.0], &[1.0, 2.5], 1e-300);
        assert_eq!(q, 1.0);
        assert_eq!(c, vec![1.0, 2.5]);

        let mut q = 1.0_f64;
        let mut c = vec![3.0, 4.0];
        for _ in 0..20 {
            let (nq, nc) = update_avg_reference(q, &c, &[3.0, 4.0], 0.8);
            q = nq;
            c = nc;
            assert!((c[0] - 3.0).abs() < 1e-14 && (c[1] - 4.0).abs() < 1e-14);
        }
    }

    #[test]
    fn average_state_q_sequence() {
        // f(x) = x^2 from x0 = 2: q^0 = 1, q^1 = 1.8, q^2 = 2.44.
        let params = LineSearchParams::<f64>::default();
        let mut st = ReferenceState::new(LineSearchKind::AverageType, &[4.0], &params);
        let mut qs = vec![];
        for fx in [4.0, 1.0, 0.25] {
            st.reference(&[fx], &params);
            if let ReferenceState::Average { q, .. } = &st {
                qs.push(*q);
            }
        }
        assert_eq!(qs.len(), 3);
        assert_eq!(qs[0], 1.0);
        assert!((qs[1] - 1.8).abs() < 1e-15);
        assert!((qs[2] - 2.44).abs() < 1e-15);
    }

    #[test]
    fn avg_first_call_equals_armijo() {
        let p = parabola();
        let params = LineSearchParams::default();
        let (mut fa, mut fv) = (0, 0);
        let a = armijo(&p, &[1.0], &[1.0], &[-2.0], &[-4.0], &params, &mut fa).unwrap();
        let (v, q, c) = avg_nonmonotone(&p, &[1.0], &[1.0], 1.0, &[1.0], &[-2.0], &[-4.0], &params, &mut fv).unwrap();
        assert_eq!(a, v);
        assert!((q - 1.8).abs() < 1e-15);
        assert_eq!(c, vec![1.0]);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in LineSearchKind::ALL {
            assert_eq!(k.as_str().parse::<LineSearchKind>().unwrap(), k);
        }
        assert!("wolfe".parse::<LineSearchKind>().is_err());
    }
}
