//! Per-objective Barzilai-Borwein coefficients and gradient rescaling.

use crate::error::ScalingError;
use crate::problem::Jacobian;
use crate::scalar::{dot, norm, norm_sq, Scalar};

/// Safeguard interval `[alpha_min, alpha_max]` for the coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaBounds<T> {
    pub min: T,
    pub max: T,
}

impl<T: Scalar> Default for AlphaBounds<T> {
    fn default() -> Self {
        Self {
            min: T::lit(1e-3),
            max: T::lit(1e3),
        }
    }
}

impl<T: Scalar> AlphaBounds<T> {
    pub fn validate(&self) -> Result<(), ScalingError> {
        if self.min > T::zero() && self.min <= self.max && self.max.is_finite() {
            Ok(())
        } else {
            Err(ScalingError::InvalidBounds)
        }
    }

    fn clamp(&self, v: T) -> T {
        self.min.max(v.min(self.max))
    }
}

/// Relative threshold under which `<s, y>` counts as zero.
const ZERO_CURVATURE: f64 = 1e-12;

/// Safeguarded coefficient for one objective.
///
/// * `<s, y> > 0`: `clamp(<s, y> / <s, s>)`
/// * `<s, y> < 0`: `clamp(||y|| / ||s||)`
/// * `<s, y> = 0` (up to `1e-12 ||s|| ||y||`): `alpha_min`
pub fn bb_coefficient<T: Scalar>(s: &[T], y: &[T], bounds: AlphaBounds<T>) -> Result<T, ScalingError> {
    let ss = norm_sq(s);
    if !(ss > T::zero()) {
        return Err(ScalingError::ZeroStep);
    }
    let sy = dot(s, y);
    let yy = norm_sq(y);
    if sy.abs() <= T::lit(ZERO_CURVATURE) * (ss * yy).sqrt() || !sy.is_finite() {
        return Ok(bounds.min);
    }
    let raw = if sy > T::zero() { sy / ss } else { (yy / ss).sqrt() };
    Ok(bounds.clamp(raw))
}

/// Coefficients for all objectives; row `i` of `ys` is `grad F_i(x^k) - grad F_i(x^{k-1})`.
pub fn update_alphas<T: Scalar>(s: &[T], ys: &Jacobian<T>, bounds: AlphaBounds<T>) -> Result<Vec<T>, ScalingError> {
    bounds.validate()?;
    if ys.ncols() != s.len() {
        return Err(ScalingError::CountMismatch {
            expected: s.len(),
            found: ys.ncols(),
        });
    }
    ys.rows().map(|y| bb_coefficient(s, y, bounds)).collect()
}

/// Divides row `i` of the Jacobian by `alphas[i]`.
pub fn scale_gradients<T: Scalar>(jacobian: &Jacobian<T>, alphas: &[T]) -> Jacobian<T> {
    debug_assert_eq!(jacobian.nrows(), alphas.len());
    let mut out = jacobian.clone();
    for (i, &a) in alphas.iter().enumerate() {
        debug_assert!(a > T::zero());
        out.row_mut(i).iter_mut().for_each(|v| *v /= a);
    }
    out
}

/// Barzilai-Borwein memory of one run.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalingState<T> {
    /// Last step `x^k - x^{k-1}`.
    pub s: Vec<T>,
    /// Gradient differences, one row per objective.
    pub ys: Option<Jacobian<T>>,
    pub alphas: Vec<T>,
    pub bounds: AlphaBounds<T>,
    /// True once `alphas` came from a nonzero step.
    pub fresh: bool,
}

impl<T: Scalar> ScalingState<T> {
    /// Starts with unit coefficients, which leave gradients unscaled.
    pub fn new(m: usize, n: usize, bounds: AlphaBounds<T>) -> Self {
        Self {
            s: vec![T::zero(); n],
            ys: None,
            alphas: vec![T::one(); m],
            bounds,
            fresh: false,
        }
    }

    /// Records the step between two iterates and refreshes the coefficients.
    ///
    /// A step with `||s|| <= 1e-16 max(1, ||x||)` keeps the previous coefficients
    /// and returns `false`.
    pub fn observe(
        &mut self,
        x_prev: &[T],
        x: &[T],
        jac_prev: &Jacobian<T>,
        jac: &Jacobian<T>,
    ) -> Result<bool, ScalingError> {
        let s: Vec<T> = x.iter().zip(x_prev).map(|(&a, &b)| a - b).collect();
        if norm(&s) <= T::lit(1e-16) * norm(x).max(T::one()) {
            return Ok(false);
        }
        let mut ys = jac.clone();
        for i in 0..ys.nrows() {
            for (v, &p) in ys.row_mut(i).iter_mut().zip(jac_prev.row(i)) {
                *v -= p;
            }
        }
        self.alphas = update_alphas(&s, &ys, self.bounds)?;
        self.s = s;
        self.ys = Some(ys);
        self.fresh = true;
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(s: &[f64], y: &[f64]) -> f64 {
        bb_coefficient(s, y, AlphaBounds::default()).unwrap()
    }

    #[test]
    fn three_branches() {
        assert_eq!(alpha(&[1.0, 0.0], &[2.0, 0.0]), 2.0);
        assert_eq!(alpha(&[1.0, 0.0], &[-3.0, 4.0]), 5.0);
        assert_eq!(alpha(&[1.0, 0.0], &[0.0, 7.0]), 1e-3);
        assert_eq!(alpha(&[1e-6, 0.0], &[1e6, 0.0]), 1e3);
        assert_eq!(alpha(&[1.0, 0.0], &[1e-9, 0.0]), 1e-3);
    }

    #[test]
    fn roundoff_zero_curvature_counts_as_zero() {
        // Linear objective: y is exactly zero in theory, roundoff-sized in practice.
        assert_eq!(alpha(&[0.3, 0.7], &[1e-17, -2e-17]), 1e-3);
        assert_eq!(alpha(&[1.0, 1.0], &[0.0, 0.0]), 1e-3);
    }

    #[test]
    fn zero_step_is_rejected() {
        assert_eq!(
            bb_coefficient(&[0.0, 0.0], &[1.0, 0.0], AlphaBounds::default()),
            Err(ScalingError::ZeroStep)
        );
    }

    #[test]
    fn update_all_objectives() {
        let ys = Jacobian::from_rows(&[vec![2.0, 0.0], vec![-3.0, 4.0], vec![0.0, 7.0]]).unwrap();
        let a = update_alphas(&[1.0, 0.0], &ys, AlphaBounds::default()).unwrap();
        assert_eq!(a, vec![2.0, 5.0, 1e-3]);
        let bad = AlphaBounds { min: 0.0, max: 1.0 };
        assert_eq!(update_alphas(&[1.0, 0.0], &ys, bad), Err(ScalingError::InvalidBounds));
    }

    #[test]
    fn scaling_rows() {
        let j = Jacobian::from_rows(&[vec![2.0, 0.0], vec![4.0, 0.0]]).unwrap();
        assert_eq!(scale_gradients(&j, &[1.0, 1.0]), j);
        let s = scale_gradients(&j, &[2.0, 4.0]);
        assert_eq!(s.row(0), &[1.0, 0.0]);
        assert_eq!(s.row(1), &[1.0, 0.0]);
    }

    #[test]
    fn state_skips_zero_steps() {
        let mut st = ScalingState::<f64>::new(1, 2, AlphaBounds::default());
        let j0 = Jacobian::from_rows(&[vec![1.0, 0.0]]).unwrap();
        let j1 = Jacobian::from_rows(&[vec![3.0, 0.0]]).unwrap();
        assert!(!st.observe(&[1.0, 1.0], &[1.0, 1.0], &j0, &j1).unwrap());
        assert_eq!(st.alphas, vec![1.0]);
        assert!(!st.fresh);
        assert!(st.observe(&[0.0, 0.0], &[1.0, 0.0], &j0, &j1).unwrap());
        assert_eq!(st.alphas, vec![2.0]);
        assert!(st.fresh);
    }
}
