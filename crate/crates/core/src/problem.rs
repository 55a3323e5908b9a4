//! The multiobjective problem abstraction: a box-bounded map `F: R^n -> R^m`
//! with value and Jacobian oracles.

use std::fmt;
use std::sync::Arc;

use crate::error::ProblemError;
use crate::scalar::{all_finite, Scalar};

/// Dense row-major `m x n` matrix whose rows are objective gradients.
#[derive(Clone, Debug, PartialEq)]
pub struct Jacobian<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Jacobian<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds a matrix from gradient rows. All rows must share one positive length.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self, ProblemError> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if rows.is_empty() || cols == 0 {
            return Err(ProblemError::InvalidDefinition(
                "jacobian needs at least one non-empty row".into(),
            ));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(ProblemError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        self.data.chunks_exact(self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn fill(&mut self, v: T) {
        self.data.iter_mut().for_each(|e| *e = v);
    }

    /// `JF * d`, i.e. the directional derivatives `<grad F_i, d>`.
    pub fn apply(&self, d: &[T]) -> Vec<T> {
        self.rows().map(|r| crate::scalar::dot(r, d)).collect()
    }

    pub fn is_finite(&self) -> bool {
        all_finite(&self.data)
    }
}

/// Value and Jacobian oracles of a smooth map `R^n -> R^m`.
///
/// Implementations must be pure: the same input yields bitwise-identical output.
/// Callers guarantee `x.len() == n`, `out.len() == m` and an `m x n` Jacobian buffer.
pub trait Objectives<T: Scalar>: Send + Sync {
    fn values(&self, x: &[T], out: &mut [T]);
    fn jacobian(&self, x: &[T], out: &mut Jacobian<T>);
}

/// Closure-backed oracles, handy for ad-hoc problems and test fixtures.
pub struct FnObjectives<V, J> {
    values: V,
    jacobian: J,
}

impl<T, V, J> Objectives<T> for FnObjectives<V, J>
where
    T: Scalar,
    V: Fn(&[T], &mut [T]) + Send + Sync,
    J: Fn(&[T], &mut Jacobian<T>) + Send + Sync,
{
    fn values(&self, x: &[T], out: &mut [T]) {
        (self.values)(x, out)
    }

    fn jacobian(&self, x: &[T], out: &mut Jacobian<T>) {
        (self.jacobian)(x, out)
    }
}

/// A named multiobjective problem with box bounds.
///
/// The bounds describe where initial points are sampled; the solvers themselves
/// are unconstrained and may leave the box.
#[derive(Clone)]
pub struct Problem<T: Scalar> {
    name: String,
    n: usize,
    m: usize,
    lower: Vec<T>,
    upper: Vec<T>,
    oracle: Arc<dyn Objectives<T>>,
}

impl<T: Scalar> fmt::Debug for Problem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("m", &self.m)
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .finish_non_exhaustive()
    }
}

/// Objective values at a point, plus the Jacobian once it has been requested.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation<T: Scalar> {
    pub x: Vec<T>,
    pub values: Vec<T>,
    pub jacobian: Option<Jacobian<T>>,
    finite: bool,
}

impl<T: Scalar> Evaluation<T> {
    /// False when any objective value is NaN or infinite. Line searches treat such
    /// trials as rejected.
    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// Fills the Jacobian if it is missing and returns it.
    pub fn jacobian_with(&mut self, problem: &Problem<T>) -> Result<&Jacobian<T>, ProblemError> {
        if self.jacobian.is_none() {
            self.jacobian = Some(problem.jacobian(&self.x)?);
        }
        Ok(self.jacobian.as_ref().expect("filled above"))
    }
}

/// Result of comparing the analytic Jacobian against central differences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdCheck<T> {
    /// `max |fd - analytic| / max(1, |analytic|)` over all entries.
    pub max_discrepancy: T,
    /// False if any evaluation involved in the check was non-finite.
    pub finite: bool,
}

impl<T: Scalar> Problem<T> {
    pub fn new(
        name: impl Into<String>,
        m: usize,
        lower: Vec<T>,
        upper: Vec<T>,
        oracle: impl Objectives<T> + 'static,
    ) -> Result<Self, ProblemError> {
        let name = name.into();
        let n = lower.len();
        if n == 0 || m == 0 {
            return Err(ProblemError::InvalidDefinition(format!(
                "{name}: need n >= 1 and m >= 1 (n = {n}, m = {m})"
            )));
        }
        if upper.len() != n {
            return Err(ProblemError::DimensionMismatch {
                expected: n,
                found: upper.len(),
            });
        }
        if lower.iter().zip(&upper).any(|(l, u)| !(l <= u)) {
            return Err(ProblemError::InvalidDefinition(format!(
                "{name}: lower bounds must not exceed upper bounds"
            )));
        }
        Ok(Self {
            name,
            n,
            m,
            lower,
            upper,
            oracle: Arc::new(oracle),
        })
    }

    /// Builds a problem from a pair of closures writing values and the Jacobian.
    pub fn from_fns<V, J>(
        name: impl Into<String>,
        m: usize,
        lower: Vec<T>,
        upper: Vec<T>,
        values: V,
        jacobian: J,
    ) -> Result<Self, ProblemError>
    where
        V: Fn(&[T], &mut [T]) + Send + Sync + 'static,
        J: Fn(&[T], &mut Jacobian<T>) + Send + Sync + 'static,
    {
        Self::new(name, m, lower, upper, FnObjectives { values, jacobian })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn num_objectives(&self) -> usize {
        self.m
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    fn check_dim(&self, x: &[T]) -> Result<(), ProblemError> {
        if x.len() == self.n {
            Ok(())
        } else {
            Err(ProblemError::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            })
        }
    }

    /// Raw value oracle; does not count evaluations.
    pub fn values(&self, x: &[T]) -> Result<Vec<T>, ProblemError> {
        self.check_dim(x)?;
        let mut out = vec![T::zero(); self.m];
        self.oracle.values(x, &mut out);
        Ok(out)
    }

    /// Evaluates `F(x)` and bumps `fevals` by one.
    pub fn evaluate(&self, x: &[T], fevals: &mut usize) -> Result<Evaluation<T>, ProblemError> {
        let values = self.values(x)?;
        *fevals += 1;
        let finite = all_finite(&values);
        Ok(Evaluation {
            x: x.to_vec(),
            values,
            jacobian: None,
            finite,
        })
    }

    /// Evaluates `F(x)` and `JF(x)` without touching any counter. Used for the
    /// starting point of a run, which is not charged as a function evaluation.
    pub fn evaluate_uncounted(&self, x: &[T]) -> Result<Evaluation<T>, ProblemError> {
        let values = self.values(x)?;
        let finite = all_finite(&values);
        Ok(Evaluation {
            x: x.to_vec(),
            values,
            jacobian: Some(self.jacobian(x)?),
            finite,
        })
    }

    /// `JF(x)`; row `i` is the gradient of objective `i`.
    pub fn jacobian(&self, x: &[T]) -> Result<Jacobian<T>, ProblemError> {
        self.check_dim(x)?;
        let mut out = Jacobian::zeros(self.m, self.n);
        self.oracle.jacobian(x, &mut out);
        Ok(out)
    }

    /// Compares the analytic Jacobian with central differences of step `h`.
    pub fn check_jacobian_fd(&self, x: &[T], h: T) -> Result<FdCheck<T>, ProblemError> {
        self.check_dim(x)?;
        let analytic = self.jacobian(x)?;
        let mut finite = analytic.is_finite();
        let mut worst = T::zero();
        let mut probe = x.to_vec();
        let two_h = h + h;
        for j in 0..self.n {
            probe[j] = x[j] + h;
            let plus = self.values(&probe)?;
            probe[j] = x[j] - h;
            let minus = self.values(&probe)?;
            probe[j] = x[j];
            for i in 0..self.m {
                let fd = (plus[i] - minus[i]) / two_h;
                let an = analytic.get(i, j);
                let err = (fd - an).abs() / an.abs().max(T::one());
                if !err.is_finite() {
                    finite = false;
                } else if err > worst {
                    worst = err;
                }
            }
        }
        Ok(FdCheck {
            max_discrepancy: if finite { worst } else { T::infinity() },
            finite,
        })
    }
}
