//! Direction-finding subproblem.
//!
//! The steepest common descent direction at `x` is `d = -sum_i lambda_i g_i`,
//! where `lambda` minimizes `1/2 ||sum_i lambda_i g_i||^2` over the unit simplex
//! and `g_i` are the (possibly rescaled) objective gradients. Its optimal value
//! is `theta = -1/2 ||d||^2` and every gradient satisfies `<g_i, d> <= t = -||d||^2`,
//! with equality on the active set.
//!
//! One and two gradients are solved in closed form. Larger sets use Frank-Wolfe
//! with away steps and exact line search. After every step the weights are
//! re-optimized over the affine hull of the current support (the fully
//! corrective variant), which keeps badly scaled gradient sets from stalling.

use crate::error::DualError;
use crate::problem::Jacobian;
use crate::scalar::{dot, norm_sq, Scalar};

/// Tolerances of the simplex solver.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DualOptions<T> {
    /// Frank-Wolfe stops once the pairwise gap is at most
    /// `gap_tol * ||w|| * max_i ||g_i||`, with `w = sum_i lambda_i g_i`, or at the
    /// roundoff level `m * eps * max_i ||g_i|| * (||w|| + sum_j lambda_j ||g_j||)`
    /// of the inner products, if larger.
    pub gap_tol: T,
    /// Iteration cap; `None` means `1000 * m`.
    pub max_fw_iters: Option<usize>,
    /// Index `i` is active when `<g_i, d> >= t - active_tol * max(1, ||d||^2)`.
    pub active_tol: T,
    /// Weights above this are expected to sit on the active set.
    pub weight_tol: T,
}

impl<T: Scalar> Default for DualOptions<T> {
    fn default() -> Self {
        let eps = T::epsilon();
        Self {
            gap_tol: T::lit(1e-12).max(eps * T::lit(64.0)),
            max_fw_iters: None,
            active_tol: T::lit(1e-8).max(eps * T::lit(1024.0)),
            weight_tol: T::lit(1e-10).max(eps * T::lit(64.0)),
        }
    }
}

/// Solution of the direction-finding dual.
#[derive(Clone, Debug, PartialEq)]
pub struct DualSolution<T> {
    /// Simplex weights.
    pub lambda: Vec<T>,
    /// `d = -sum_i lambda_i g_i`.
    pub direction: Vec<T>,
    /// Optimal value of the primal min-max subproblem, `-1/2 ||d||^2`.
    pub theta: T,
    /// Common linear term, `-||d||^2`.
    pub t: T,
    /// Indices whose linearized decrease attains `t`.
    pub active: Vec<usize>,
    pub fw_iterations: usize,
    pub duality_gap: T,
}

impl<T: Scalar> DualSolution<T> {
    pub fn direction_norm(&self) -> T {
        norm_sq(&self.direction).sqrt()
    }
}

/// `-sum_i lambda_i g_i`.
pub fn direction_from_weights<T: Scalar>(gradients: &Jacobian<T>, lambda: &[T]) -> Vec<T> {
    debug_assert_eq!(gradients.nrows(), lambda.len());
    let mut d = vec![T::zero(); gradients.ncols()];
    for (g, &l) in gradients.rows().zip(lambda) {
        if l == T::zero() {
            continue;
        }
        for (dj, &gj) in d.iter_mut().zip(g) {
            *dj -= l * gj;
        }
    }
    d
}

fn validate<T: Scalar>(gradients: &Jacobian<T>) -> Result<(), DualError<T>> {
    if gradients.nrows() == 0 || gradients.ncols() == 0 {
        return Err(DualError::Empty);
    }
    if let Some(i) = gradients.rows().position(|g| g.iter().any(|v| !v.is_finite())) {
        return Err(DualError::NonFinite(i));
    }
    Ok(())
}

/// Solves the simplex dual for the given gradient rows.
///
/// `warm_start` seeds Frank-Wolfe (it is projected back onto the simplex if it
/// drifted); the closed-form paths for one and two gradients ignore it.
pub fn solve_dual<T: Scalar>(
    gradients: &Jacobian<T>,
    warm_start: Option<&[T]>,
    opts: &DualOptions<T>,
) -> Result<DualSolution<T>, DualError<T>> {
    validate(gradients)?;
    match gradients.nrows() {
        1 => Ok(finish(gradients, vec![T::one()], 0, T::zero(), opts)),
        2 => Ok(solve_pair(gradients, opts)),
        _ => solve_dual_frank_wolfe(gradients, warm_start, opts),
    }
}

fn solve_pair<T: Scalar>(gradients: &Jacobian<T>, opts: &DualOptions<T>) -> DualSolution<T> {
    let (g1, g2) = (gradients.row(0), gradients.row(1));
    // lambda_1 = <g2 - g1, g2> / ||g1 - g2||^2, clamped to [0, 1].
    let mut num = T::zero();
    let mut den = T::zero();
    for (&a, &b) in g1.iter().zip(g2) {
        let diff = b - a;
        num += diff * b;
        den += diff * diff;
    }
    let half = T::lit(0.5);
    let l1 = if den > T::zero() {
        let r = num / den;
        if r.is_finite() {
            r.max(T::zero()).min(T::one())
        } else {
            half
        }
    } else {
        half
    };
    let lambda = vec![l1, T::one() - l1];
    let gap = pairwise_gap(gradients, &lambda);
    finish(gradients, lambda, 0, gap, opts)
}

/// `sum_i lambda_i g_i`.
fn combination<T: Scalar>(gradients: &Jacobian<T>, lambda: &[T]) -> Vec<T> {
    let mut w = direction_from_weights(gradients, lambda);
    w.iter_mut().for_each(|v| *v = -*v);
    w
}

/// Largest minus smallest of `<g_i, w>` over support / all vertices, measured
/// against `||w||^2`. Returns `max(fw_gap, away_gap)`.
fn pairwise_gap<T: Scalar>(gradients: &Jacobian<T>, lambda: &[T]) -> T {
    let w = combination(gradients, lambda);
    let ww = norm_sq(&w);
    let mut fw = T::zero();
    let mut away = T::zero();
    for (g, &l) in gradients.rows().zip(lambda) {
        let gw = dot(g, &w);
        fw = fw.max(ww - gw);
        if l > T::zero() {
            away = away.max(gw - ww);
        }
    }
    fw.max(away)
}

fn sanitize_start<T: Scalar>(m: usize, warm: Option<&[T]>) -> Vec<T> {
    if let Some(w) = warm {
        if w.len() == m && w.iter().all(|v| v.is_finite()) {
            let clipped: Vec<T> = w.iter().map(|&v| v.max(T::zero())).collect();
            let s: T = clipped.iter().copied().sum();
            if s > T::zero() {
                return clipped.into_iter().map(|v| v / s).collect();
            }
        }
    }
    vec![T::one() / T::from_count(m); m]
}

/// Away-step Frank-Wolfe on the simplex dual, for any number of gradients.
///
/// Exposed separately so the closed forms can be cross-checked against it.
pub fn solve_dual_frank_wolfe<T: Scalar>(
    gradients: &Jacobian<T>,
    warm_start: Option<&[T]>,
    opts: &DualOptions<T>,
) -> Result<DualSolution<T>, DualError<T>> {
    validate(gradients)?;
    let m = gradients.nrows();
    let max_iters = opts.max_fw_iters.unwrap_or(1000 * m);
    let scale = gradients.rows().map(|g| norm_sq(g)).fold(T::zero(), T::max).sqrt();
    let mut lambda = sanitize_start(m, warm_start);
    let mut gw = vec![T::zero(); m];
    let mut iters = 0;
    let mut gap;
    loop {
        let w = combination(gradients, &lambda);
        let ww = norm_sq(&w);
        for (gi, g) in gw.iter_mut().zip(gradients.rows()) {
            *gi = dot(g, &w);
        }
        // FW vertex: smallest <g_i, w>, ties to the lowest index.
        let mut fw_idx = 0;
        for i in 1..m {
            if gw[i] < gw[fw_idx] {
                fw_idx = i;
            }
        }
        // Away vertex: largest <g_i, w> over the support.
        let mut away_idx = None::<usize>;
        for i in 0..m {
            if lambda[i] > T::zero() && away_idx.is_none_or(|a| gw[i] > gw[a]) {
                away_idx = Some(i);
            }
        }
        let fw_gap = ww - gw[fw_idx];
        let away_gap = away_idx.map_or(T::zero(), |a| gw[a] - ww);
        gap = fw_gap.max(away_gap).max(T::zero());
        let tol = gap_tolerance(opts, gradients, &lambda, ww, scale);
        if gap <= tol || iters >= max_iters {
            break;
        }
        iters += 1;

        if fw_gap >= away_gap {
            let u: Vec<T> = gradients.row(fw_idx).iter().zip(&w).map(|(&g, &wj)| g - wj).collect();
            let uu = norm_sq(&u);
            if !(uu > T::zero()) {
                break;
            }
            let gamma = (fw_gap / uu).min(T::one()).max(T::zero());
            for (i, l) in lambda.iter_mut().enumerate() {
                *l = (T::one() - gamma) * *l + if i == fw_idx { gamma } else { T::zero() };
            }
        } else {
            let a = away_idx.expect("away gap is positive only with a support vertex");
            let la = lambda[a];
            let u: Vec<T> = w.iter().zip(gradients.row(a)).map(|(&wj, &g)| wj - g).collect();
            let uu = norm_sq(&u);
            if !(uu > T::zero()) {
                break;
            }
            let gamma_max = if la < T::one() {
                la / (T::one() - la)
            } else {
                T::infinity()
            };
            let gamma = (away_gap / uu).max(T::zero());
            if gamma >= gamma_max {
                // Drop step: vertex `a` leaves the support exactly.
                for (i, l) in lambda.iter_mut().enumerate() {
                    *l = if i == a { T::zero() } else { (T::one() + gamma_max) * *l };
                }
            } else {
                for (i, l) in lambda.iter_mut().enumerate() {
                    *l = (T::one() + gamma) * *l - if i == a { gamma } else { T::zero() };
                }
            }
        }
        renormalize(&mut lambda);
        correct(gradients, &mut lambda);
    }

    let converged_tol = gap_tolerance(
        opts,
        gradients,
        &lambda,
        norm_sq(&combination(gradients, &lambda)),
        scale,
    );
    let sol = finish(gradients, lambda, iters, gap, opts);
    if iters >= max_iters && gap > T::lit(1e3) * converged_tol {
        return Err(DualError::NotConverged { best: Box::new(sol) });
    }
    Ok(sol)
}

/// Outcome of the affine min-norm solve on a support.
enum Affine<T> {
    /// Weights summing to one (signs unconstrained).
    Weights(Vec<T>),
    /// Coefficients `c` on the support with `sum c = 0` and `sum c_i g_i = 0`.
    Dependent(Vec<T>),
    Failed,
}

/// Weights on `support` minimizing `||sum_i mu_i g_i||` subject to `sum mu_i = 1`
/// (no sign constraint), via QR of the differences `g_i - g_{s_0}`.
fn affine_min_norm<T: Scalar>(gradients: &Jacobian<T>, support: &[usize]) -> Affine<T> {
    let base = gradients.row(support[0]);
    let k = support.len() - 1;
    if k == 0 {
        return Affine::Weights(vec![T::one()]);
    }
    // Modified Gram-Schmidt on the columns g_{s_j} - g_{s_0}.
    let mut q: Vec<Vec<T>> = support[1..]
        .iter()
        .map(|&i| gradients.row(i).iter().zip(base).map(|(&a, &b)| a - b).collect())
        .collect();
    let mut r = vec![vec![T::zero(); k]; k];
    let scale = q.iter().map(|c| norm_sq(c)).fold(T::zero(), T::max).sqrt();
    for j in 0..k {
        for p in 0..j {
            let proj = dot(&q[p], &q[j]);
            r[p][j] = proj;
            let qp = q[p].clone();
            q[j].iter_mut().zip(&qp).for_each(|(v, &u)| *v -= proj * u);
        }
        let nrm = norm_sq(&q[j]).sqrt();
        if !(nrm > T::lit(1e3) * T::epsilon() * scale) {
            // Column j is (numerically) a combination of the earlier ones:
            // solve R[..j, ..j] a = R[..j, j].
            let mut a: Vec<T> = (0..j).map(|p| r[p][j]).collect();
            for p in (0..j).rev() {
                let mut v = a[p];
                for q2 in p + 1..j {
                    v -= r[p][q2] * a[q2];
                }
                a[p] = v / r[p][p];
            }
            let mut c = vec![T::zero(); k + 1];
            c[j + 1] = T::one();
            for (p, &ap) in a.iter().enumerate() {
                c[p + 1] = -ap;
            }
            c[0] = a.iter().copied().sum::<T>() - T::one();
            return if c.iter().all(|v| v.is_finite()) {
                Affine::Dependent(c)
            } else {
                Affine::Failed
            };
        }
        r[j][j] = nrm;
        q[j].iter_mut().for_each(|v| *v /= nrm);
    }
    // min ||base + D c||: R c = -Q^T base.
    let mut c: Vec<T> = q.iter().map(|qj| -dot(qj, base)).collect();
    for j in (0..k).rev() {
        let mut v = c[j];
        for p in j + 1..k {
            v -= r[j][p] * c[p];
        }
        c[j] = v / r[j][j];
    }
    let mut mu = Vec::with_capacity(k + 1);
    mu.push(T::one() - c.iter().copied().sum::<T>());
    mu.extend(c);
    if mu.iter().all(|v| v.is_finite()) {
        Affine::Weights(mu)
    } else {
        Affine::Failed
    }
}

/// Shifts weight along an affine dependency `c` (which leaves the combination
/// unchanged) until one support vertex reaches zero, and drops it.
fn reduce_support<T: Scalar>(lambda: &mut [T], support: &[usize], c: &[T]) {
    let sign = if c.iter().any(|&v| v < T::zero()) {
        T::one()
    } else {
        -T::one()
    };
    let mut step = T::infinity();
    let mut leaving = support[0];
    for (&i, &v) in support.iter().zip(c) {
        let v = sign * v;
        if v < T::zero() {
            let s = lambda[i] / -v;
            if s < step {
                step = s;
                leaving = i;
            }
        }
    }
    if !step.is_finite() {
        return;
    }
    for (&i, &v) in support.iter().zip(c) {
        lambda[i] += step * sign * v;
    }
    lambda[leaving] = T::zero();
    renormalize(lambda);
}

/// Fully corrective pass: moves toward the affine minimizer on the support,
/// dropping vertices whose weight would turn negative, until the affine
/// minimizer is feasible. Reverts if roundoff made the objective worse.
fn correct<T: Scalar>(gradients: &Jacobian<T>, lambda: &mut [T]) {
    let before = norm_sq(&combination(gradients, lambda));
    let saved = lambda.to_vec();
    for _ in 0..2 * lambda.len() {
        let support: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] > T::zero()).collect();
        if support.len() < 2 {
            break;
        }
        let mu = match affine_min_norm(gradients, &support) {
            Affine::Weights(mu) => mu,
            Affine::Dependent(c) => {
                reduce_support(lambda, &support, &c);
                continue;
            }
            Affine::Failed => break,
        };
        if mu.iter().all(|&v| v > T::zero()) {
            for (&i, &v) in support.iter().zip(&mu) {
                lambda[i] = v;
            }
            break;
        }
        // Largest step toward mu that keeps the weights nonnegative; some
        // weight of mu is nonpositive here, so the step is at most one.
        let mut step = T::infinity();
        let mut leaving = support[0];
        for (&i, &v) in support.iter().zip(&mu) {
            if v <= T::zero() {
                let s = lambda[i] / (lambda[i] - v);
                if s < step {
                    step = s;
                    leaving = i;
                }
            }
        }
        for (&i, &v) in support.iter().zip(&mu) {
            lambda[i] += step * (v - lambda[i]);
        }
        lambda[leaving] = T::zero();
        renormalize(lambda);
    }
    if !(norm_sq(&combination(gradients, lambda)) <= before) {
        lambda.copy_from_slice(&saved);
    }
}

fn gap_tolerance<T: Scalar>(opts: &DualOptions<T>, gradients: &Jacobian<T>, lambda: &[T], ww: T, scale: T) -> T {
    let relative = opts.gap_tol * ww.sqrt() * scale;
    let spread: T = gradients.rows().zip(lambda).map(|(g, &l)| l * norm_sq(g).sqrt()).sum();
    let m = T::from_count(lambda.len());
    let roundoff = m * T::epsilon() * scale * (ww.sqrt() + spread);
    relative.max(roundoff).max(T::min_positive_value())
}

fn renormalize<T: Scalar>(lambda: &mut [T]) {
    for l in lambda.iter_mut() {
        if *l < T::zero() {
            *l = T::zero();
        }
    }
    let s: T = lambda.iter().copied().sum();
    if s > T::zero() {
        lambda.iter_mut().for_each(|l| *l /= s);
    }
}

fn finish<T: Scalar>(
    gradients: &Jacobian<T>,
    lambda: Vec<T>,
    fw_iterations: usize,
    duality_gap: T,
    opts: &DualOptions<T>,
) -> DualSolution<T> {
    let direction = direction_from_weights(gradients, &lambda);
    let dd = norm_sq(&direction);
    let t = -dd;
    let band = opts.active_tol * dd.max(T::one());
    let active = gradients
        .rows()
        .enumerate()
        .filter(|(_, g)| dot(g, &direction) >= t - band)
        .map(|(i, _)| i)
        .collect();
    DualSolution {
        lambda,
        direction,
        theta: T::lit(-0.5) * dd,
        t,
        active,
        fw_iterations,
        duality_gap,
    }
}

/// Largest violation of the KKT system of the direction subproblem: simplex
/// feasibility, `<g_i, d> <= t`, and complementary slackness.
pub fn kkt_residual<T: Scalar>(gradients: &Jacobian<T>, solution: &DualSolution<T>) -> T {
    let sum: T = solution.lambda.iter().copied().sum();
    let mut r = (sum - T::one()).abs();
    for &l in &solution.lambda {
        r = r.max(-l);
    }
    for (g, &l) in gradients.rows().zip(&solution.lambda) {
        let slack = dot(g, &solution.direction) - solution.t;
        r = r.max(slack);
        r = r.max((l * slack).abs());
    }
    r
}

/// `||d|| < tol`: the point is Pareto critical up to `tol`.
pub fn is_critical<T: Scalar>(solution: &DualSolution<T>, tol: T) -> bool {
    solution.direction_norm() < tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn jac(rows: &[&[f64]]) -> Jacobian<f64> {
        Jacobian::from_rows(rows).unwrap()
    }

    fn solve(rows: &[&[f64]]) -> DualSolution<f64> {
        solve_dual(&jac(rows), None, &DualOptions::default()).unwrap()
    }

    #[test]
    fn single_gradient() {
        let s = solve(&[&[3.0, 4.0]]);
        assert_eq!(s.lambda, vec![1.0]);
        assert_eq!(s.direction, vec![-3.0, -4.0]);
        assert_eq!(s.theta, -12.5);
        assert_eq!(s.t, -25.0);
        assert_eq!(s.active, vec![0]);
    }

    #[test]
    fn opposed_pair_is_critical() {
        let s = solve(&[&[1.0, 0.0], &[-1.0, 0.0]]);
        assert_eq!(s.lambda, vec![0.5, 0.5]);
        assert_eq!(s.direction_norm(), 0.0);
        assert_eq!(s.theta, 0.0);
        assert!(is_critical(&s, 1e-4));
    }

    #[test]
    fn orthogonal_pair() {
        let s = solve(&[&[2.0, 0.0], &[0.0, 2.0]]);
        assert_eq!(s.lambda, vec![0.5, 0.5]);
        assert_eq!(s.direction, vec![-1.0, -1.0]);
        assert_eq!(s.theta, -1.0);
        assert_eq!(s.active, vec![0, 1]);
        assert!(!is_critical(&s, 1e-4));
    }

    #[test]
    fn identical_pair_takes_midpoint() {
        let s = solve(&[&[1.0, 2.0], &[1.0, 2.0]]);
        assert_eq!(s.lambda, vec![0.5, 0.5]);
        assert_eq!(s.direction, vec![-1.0, -2.0]);
    }

    #[test]
    fn dominated_gradient_gets_no_weight() {
        // g2 = 3 g1: the minimum-norm point is g1 itself.
        let s = solve(&[&[1.0, 1.0], &[3.0, 3.0]]);
        assert_eq!(s.lambda, vec![1.0, 0.0]);
        assert_eq!(s.active, vec![0]);
    }

    #[test]
    fn direction_from_weights_examples() {
        assert_eq!(direction_from_weights(&jac(&[&[5.0, -1.0]]), &[1.0]), vec![-5.0, 1.0]);
        assert_eq!(
            direction_from_weights(&jac(&[&[2.0, 0.0], &[0.0, 2.0]]), &[0.5, 0.5]),
            vec![-1.0, -1.0]
        );
        let third = 1.0 / 3.0;
        let d = direction_from_weights(&jac(&[&[1.0, 2.0], &[-3.0, 1.0], &[2.0, -3.0]]), &[third, third, third]);
        assert_abs_diff_eq!(d[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d[1], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn three_gradients_match_hand_solution() {
        // Vertices of an equilateral-ish triangle around the origin: d = 0.
        let s = solve(&[&[1.0, 0.0], &[-0.5, 0.8660254037844386], &[-0.5, -0.8660254037844386]]);
        assert!(s.direction_norm() < 1e-9);
        // Three gradients whose hull's nearest point is the edge midpoint (0, 1).
        let s = solve(&[&[-1.0, 1.0], &[1.0, 1.0], &[0.0, 5.0]]);
        assert_abs_diff_eq!(s.lambda[0], 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(s.lambda[1], 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(s.lambda[2], 0.0, epsilon = 1e-9);
        assert_eq!(s.active, vec![0, 1]);
    }

    #[test]
    fn kkt_residual_examples() {
        let g = jac(&[&[2.0, 0.0], &[0.0, 2.0]]);
        let s = solve_dual(&g, None, &DualOptions::default()).unwrap();
        assert!(kkt_residual(&g, &s) <= 1e-10);

        let mut off = s.clone();
        off.lambda[0] += 0.1;
        assert!(kkt_residual(&g, &off) >= 0.1);

        let g1 = jac(&[&[3.0, 4.0]]);
        let s1 = solve_dual(&g1, None, &DualOptions::default()).unwrap();
        assert_eq!(kkt_residual(&g1, &s1), 0.0);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = jac(&[&[1.0, f64::NAN], &[0.0, 1.0]]);
        assert!(matches!(
            solve_dual(&bad, None, &DualOptions::default()),
            Err(DualError::NonFinite(0))
        ));
        let empty = Jacobian::<f64>::zeros(0, 3);
        assert!(matches!(
            solve_dual(&empty, None, &DualOptions::default()),
            Err(DualError::Empty)
        ));
    }

    #[test]
    fn iteration_cap_reports_best_iterate() {
        let g = jac(&[&[1.0, 0.2], &[-0.3, 1.0], &[-0.9, -0.7], &[0.4, -1.1]]);
        let opts = DualOptions {
            max_fw_iters: Some(0),
            ..DualOptions::default()
        };
        match solve_dual(&g, None, &opts) {
            Err(DualError::NotConverged { best }) => {
                assert_eq!(best.fw_iterations, 0);
                let s: f64 = best.lambda.iter().sum();
                assert_abs_diff_eq!(s, 1.0, epsilon = 1e-12);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn garbage_warm_start_falls_back_to_uniform() {
        let g = jac(&[&[1.0, 0.0], &[0.0, 1.0], &[-1.0, -1.0]]);
        let a = solve_dual(&g, Some(&[f64::NAN, 1.0, 0.0]), &DualOptions::default()).unwrap();
        let b = solve_dual(&g, None, &DualOptions::default()).unwrap();
        assert_eq!(a, b);
        let c = solve_dual(&g, Some(&[0.0, 0.0]), &DualOptions::default()).unwrap();
        assert_eq!(c, b);
    }

    #[test]
    fn single_precision_path() {
        let g = Jacobian::from_rows(&[[2.0_f32, 0.0], [0.0, 2.0], [1.0, 3.0]]).unwrap();
        let s = solve_dual(&g, None, &DualOptions::default()).unwrap();
        assert!((s.direction[0] + 1.0).abs() < 1e-5);
        assert!((s.direction[1] + 1.0).abs() < 1e-5);
    }
}
