//! Benchmark problems with analytic Jacobians, their box bounds, and known
//! Pareto-critical sets where one is available in closed form.

use rand::Rng;

use crate::error::ProblemError;
use crate::problem::{Jacobian, Objectives, Problem};
use crate::scalar::Scalar;

/// Registry names, in table order.
pub const PROBLEM_NAMES: [&str; 18] = [
    "Imbalance1",
    "Imbalance2",
    "JOS1a",
    "JOS1b",
    "JOS1c",
    "JOS1d",
    "WIT1",
    "WIT2",
    "WIT3",
    "WIT4",
    "WIT5",
    "WIT6",
    "Deb",
    "PNR",
    "DD1",
    "FDS",
    "TRIDIA1",
    "TRIDIA2",
];

/// Weight of the quadratic term in WIT1..WIT6.
pub const WIT_LAMBDAS: [f64; 6] = [0.0, 0.5, 0.9, 0.99, 0.999, 1.0];

/// Name of the two-objective imbalance illustration (not part of the registry).
pub const IMBALANCE_DEMO: &str = "ImbalanceDemo";
/// Name of the three-objective illustration with a linear third objective.
pub const LINEAR_OBJECTIVE_DEMO: &str = "LinearObjectiveDemo";

/// Family-specific parameters of a registry entry.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// `(a x1^2 + b x2^2, c (x1 - 50)^2 + d (x2 + 50)^2)`.
    Imbalance {
        a: f64,
        b: f64,
        c: f64,
        d: f64,
    },
    Jos1,
    Wit {
        lambda: f64,
    },
    Deb,
    Pnr,
    Dd1,
    Fds,
    Tridia1,
    Tridia2,
}

/// Static description of a registry problem.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub name: &'static str,
    pub n: usize,
    pub m: usize,
    pub lower: f64,
    pub upper: f64,
    pub family: Family,
}

impl ProblemSpec {
    pub fn lower_bounds(&self) -> Vec<f64> {
        vec![self.lower; self.n]
    }

    pub fn upper_bounds(&self) -> Vec<f64> {
        vec![self.upper; self.n]
    }

    /// Whether `n` may be overridden (the formula is dimension-generic).
    pub fn scalable(&self) -> bool {
        matches!(self.family, Family::Jos1 | Family::Fds)
    }
}

pub fn problem_specs() -> Vec<ProblemSpec> {
    let box2 = |name, family| ProblemSpec {
        name,
        n: 2,
        m: 2,
        lower: -2.0,
        upper: 2.0,
        family,
    };
    let mut specs = vec![
        box2(
            "Imbalance1",
            Family::Imbalance {
                a: 0.1,
                b: 10.0,
                c: 1.0,
                d: 100.0,
            },
        ),
        box2(
            "Imbalance2",
            Family::Imbalance {
                a: 1.0,
                b: 1.0,
                c: 100.0,
                d: 100.0,
            },
        ),
    ];
    for (name, n, bound) in [
        ("JOS1a", 50, 2.0),
        ("JOS1b", 100, 2.0),
        ("JOS1c", 100, 50.0),
        ("JOS1d", 100, 100.0),
    ] {
        specs.push(ProblemSpec {
            name,
            n,
            m: 2,
            lower: -bound,
            upper: bound,
            family: Family::Jos1,
        });
    }
    for (i, &lambda) in WIT_LAMBDAS.iter().enumerate() {
        specs.push(box2(PROBLEM_NAMES[6 + i], Family::Wit { lambda }));
    }
    specs.push(ProblemSpec {
        name: "Deb",
        n: 2,
        m: 2,
        lower: 0.1,
        upper: 1.0,
        family: Family::Deb,
    });
    specs.push(box2("PNR", Family::Pnr));
    specs.push(ProblemSpec {
        name: "DD1",
        n: 5,
        m: 2,
        lower: -20.0,
        upper: 20.0,
        family: Family::Dd1,
    });
    specs.push(ProblemSpec {
        name: "FDS",
        n: 10,
        m: 3,
        lower: -2.0,
        upper: 2.0,
        family: Family::Fds,
    });
    specs.push(ProblemSpec {
        name: "TRIDIA1",
        n: 3,
        m: 3,
        lower: -1.0,
        upper: 1.0,
        family: Family::Tridia1,
    });
    specs.push(ProblemSpec {
        name: "TRIDIA2",
        n: 4,
        m: 4,
        lower: -1.0,
        upper: 1.0,
        family: Family::Tridia2,
    });
    specs
}

/// Looks a registry entry up by name (case-insensitive).
pub fn problem_spec(name: &str) -> Result<ProblemSpec, ProblemError> {
    problem_specs()
        .into_iter()
        .find(|s| s.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| ProblemError::UnknownProblem(name.to_string()))
}

/// Optional changes to a registry entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub n: Option<usize>,
}

/// Builds a registry problem.
pub fn make_problem<T: Scalar>(name: &str, overrides: Overrides) -> Result<Problem<T>, ProblemError> {
    let mut spec = problem_spec(name)?;
    if let Some(n) = overrides.n {
        if !spec.scalable() {
            return Err(ProblemError::UnsupportedOverride {
                problem: spec.name.to_string(),
                reason: "dimension is fixed for this problem".into(),
            });
        }
        if n == 0 {
            return Err(ProblemError::UnsupportedOverride {
                problem: spec.name.to_string(),
                reason: "dimension must be positive".into(),
            });
        }
        spec.n = n;
    }
    build(&spec)
}

fn build<T: Scalar>(spec: &ProblemSpec) -> Result<Problem<T>, ProblemError> {
    let lower: Vec<T> = spec.lower_bounds().into_iter().map(T::lit).collect();
    let upper: Vec<T> = spec.upper_bounds().into_iter().map(T::lit).collect();
    let name = spec.name;
    let m = spec.m;
    match spec.family {
        Family::Imbalance { a, b, c, d } => Problem::new(
            name,
            m,
            lower,
            upper,
            TwoCenterQuadratic {
                weights: [[T::lit(a), T::lit(b)], [T::lit(c), T::lit(d)]],
                centers: [[T::zero(), T::zero()], [T::lit(50.0), T::lit(-50.0)]],
            },
        ),
        Family::Jos1 => Problem::new(name, m, lower, upper, Jos1),
        Family::Wit { lambda } => Problem::new(name, m, lower, upper, Wit { lambda: T::lit(lambda) }),
        Family::Deb => Problem::new(name, m, lower, upper, Deb),
        Family::Pnr => Problem::new(name, m, lower, upper, Pnr),
        Family::Dd1 => Problem::new(name, m, lower, upper, Dd1),
        Family::Fds => Problem::new(name, m, lower, upper, Fds),
        Family::Tridia1 => Problem::new(name, m, lower, upper, Tridia1),
        Family::Tridia2 => Problem::new(name, m, lower, upper, Tridia2),
    }
}

/// All registry problems in table order.
pub fn all_problems<T: Scalar>() -> Vec<Problem<T>> {
    problem_specs()
        .iter()
        .map(|s| build(s).expect("registry entries are valid"))
        .collect()
}

/// `f1 = 100 (x1 - 50)^2 + 100 (x2 + 50)^2`, `f2 = 1/2 ||x||^2` on `[-2, 2]^2`.
///
/// Both objectives are perfectly conditioned, yet at `(1, 0)` the monotone
/// stepsize along the steepest direction is squeezed below `(1 - sigma) / 100`.
pub fn imbalance_demo<T: Scalar>() -> Problem<T> {
    let half = T::lit(0.5);
    let hundred = T::lit(100.0);
    Problem::new(
        IMBALANCE_DEMO,
        2,
        vec![T::lit(-2.0); 2],
        vec![T::lit(2.0); 2],
        TwoCenterQuadratic {
            weights: [[hundred, hundred], [half, half]],
            centers: [[T::lit(50.0), T::lit(-50.0)], [T::zero(), T::zero()]],
        },
    )
    .expect("valid demo problem")
}

/// `f1 = 5 x1^2 + 10 x2^2`, `f2 = 2 (x1 - 2)^2 + 5 x2^2`, `f3 = -x1`.
pub fn linear_objective_demo<T: Scalar>() -> Problem<T> {
    Problem::from_fns(
        LINEAR_OBJECTIVE_DEMO,
        3,
        vec![T::lit(-2.0); 2],
        vec![T::lit(2.0); 2],
        |x: &[T], out: &mut [T]| {
            let (a, b) = (x[0], x[1]);
            let two = T::lit(2.0);
            out[0] = T::lit(5.0) * a * a + T::lit(10.0) * b * b;
            out[1] = two * (a - two) * (a - two) + T::lit(5.0) * b * b;
            out[2] = -a;
        },
        |x: &[T], j: &mut Jacobian<T>| {
            let (a, b) = (x[0], x[1]);
            j.set(0, 0, T::lit(10.0) * a);
            j.set(0, 1, T::lit(20.0) * b);
            j.set(1, 0, T::lit(4.0) * (a - T::lit(2.0)));
            j.set(1, 1, T::lit(10.0) * b);
            j.set(2, 0, -T::one());
            j.set(2, 1, T::zero());
        },
    )
    .expect("valid demo problem")
}

/// Two weighted squared distances in the plane:
/// `f_k = w_k1 (x1 - c_k1)^2 + w_k2 (x2 - c_k2)^2`.
struct TwoCenterQuadratic<T> {
    weights: [[T; 2]; 2],
    centers: [[T; 2]; 2],
}

impl<T: Scalar> Objectives<T> for TwoCenterQuadratic<T> {
    fn values(&self, x: &[T], out: &mut [T]) {
        for (k, o) in out.iter_mut().enumerate() {
            let [w1, w2] = self.weights[k];
            let [c1, c2] = self.centers[k];
            *o = w1 * (x[0] - c1) * (x[0] - c1) + w2 * (x[1] - c2) * (x[1] - c2);
        }
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let two = T::lit(2.0);
        for k in 0..2 {
            let [w1, w2] = self.weights[k];
            let [c1, c2] = self.centers[k];
            j.set(k, 0, two * w1 * (x[0] - c1));
            j.set(k, 1, two * w2 * (x[1] - c2));
        }
    }
}

/// `((1/n) sum x_i^2, (1/n) sum (x_i - 2)^2)`.
struct Jos1;

impl<T: Scalar> Objectives<T> for Jos1 {
    fn values(&self, x: &[T], out: &mut [T]) {
        let n = T::from_count(x.len());
        let two = T::lit(2.0);
        out[0] = x.iter().map(|&v| v * v).sum::<T>() / n;
        out[1] = x.iter().map(|&v| (v - two) * (v - two)).sum::<T>() / n;
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let n = T::from_count(x.len());
        let two = T::lit(2.0);
        for (k, &v) in x.iter().enumerate() {
            j.set(0, k, two * v / n);
            j.set(1, k, two * (v - two) / n);
        }
    }
}

/// `f1 = l ((x1-2)^2 + (x2-2)^2) + (1-l) ((x1-2)^4 + (x2-2)^8)`,
/// `f2 = (x1 + 2l)^2 + (x2 + 2l)^2`.
struct Wit<T> {
    lambda: T,
}

impl<T: Scalar> Objectives<T> for Wit<T> {
    fn values(&self, x: &[T], out: &mut [T]) {
        let l = self.lambda;
        let two = T::lit(2.0);
        let (u, v) = (x[0] - two, x[1] - two);
        out[0] = l * (u * u + v * v) + (T::one() - l) * (u.powi(4) + v.powi(8));
        let (p, q) = (x[0] + two * l, x[1] + two * l);
        out[1] = p * p + q * q;
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let l = self.lambda;
        let two = T::lit(2.0);
        let (u, v) = (x[0] - two, x[1] - two);
        let rest = T::one() - l;
        j.set(0, 0, two * l * u + T::lit(4.0) * rest * u.powi(3));
        j.set(0, 1, two * l * v + T::lit(8.0) * rest * v.powi(7));
        j.set(1, 0, two * (x[0] + two * l));
        j.set(1, 1, two * (x[1] + two * l));
    }
}

/// `(x1, g(x2) / x1)` with a narrow global and a wide local valley in `g`.
///
/// Defined for `x1 > 0` only: beyond the pole at `x1 = 0` both objectives
/// decrease without bound, so evaluations there return NaN and line-search
/// trials landing there are rejected.
struct Deb;

fn deb_g<T: Scalar>(x2: T) -> (T, T) {
    let (w1, w2) = (T::lit(0.004), T::lit(0.4));
    let u = (x2 - T::lit(0.2)) / w1;
    let v = (x2 - T::lit(0.6)) / w2;
    let e1 = (-u * u).exp();
    let e2 = (-v * v).exp();
    let two = T::lit(2.0);
    let g = two - e1 - T::lit(0.8) * e2;
    let dg = e1 * two * u / w1 + T::lit(0.8) * e2 * two * v / w2;
    (g, dg)
}

impl<T: Scalar> Objectives<T> for Deb {
    fn values(&self, x: &[T], out: &mut [T]) {
        if !(x[0] > T::zero()) {
            out.fill(T::nan());
            return;
        }
        out[0] = x[0];
        out[1] = deb_g(x[1]).0 / x[0];
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        if !(x[0] > T::zero()) {
            j.fill(T::nan());
            return;
        }
        let (g, dg) = deb_g(x[1]);
        j.set(0, 0, T::one());
        j.set(0, 1, T::zero());
        j.set(1, 0, -g / (x[0] * x[0]));
        j.set(1, 1, dg / x[0]);
    }
}

/// `f1 = x1^4 + x2^4 - x1^2 + x2^2 - 10 x1 x2 + 0.25 x1 + 20`, `f2 = (x1 - 1)^2 + x2^2`.
struct Pnr;

impl<T: Scalar> Objectives<T> for Pnr {
    fn values(&self, x: &[T], out: &mut [T]) {
        let (a, b) = (x[0], x[1]);
        out[0] = a.powi(4) + b.powi(4) - a * a + b * b - T::lit(10.0) * a * b + T::lit(0.25) * a + T::lit(20.0);
        out[1] = (a - T::one()) * (a - T::one()) + b * b;
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let (a, b) = (x[0], x[1]);
        let two = T::lit(2.0);
        let four = T::lit(4.0);
        let ten = T::lit(10.0);
        j.set(0, 0, four * a.powi(3) - two * a - ten * b + T::lit(0.25));
        j.set(0, 1, four * b.powi(3) + two * b - ten * a);
        j.set(1, 0, two * (a - T::one()));
        j.set(1, 1, two * b);
    }
}

/// `f1 = ||x||^2`, `f2 = 3 x1 + 2 x2 - x3 / 3 + 0.01 (x4 - x5)^3`.
struct Dd1;

impl<T: Scalar> Objectives<T> for Dd1 {
    fn values(&self, x: &[T], out: &mut [T]) {
        out[0] = x.iter().map(|&v| v * v).sum();
        let r = x[3] - x[4];
        out[1] = T::lit(3.0) * x[0] + T::lit(2.0) * x[1] - x[2] / T::lit(3.0) + T::lit(0.01) * r * r * r;
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let two = T::lit(2.0);
        for (k, &v) in x.iter().enumerate() {
            j.set(0, k, two * v);
        }
        let r = x[3] - x[4];
        let c = T::lit(0.03) * r * r;
        j.set(1, 0, T::lit(3.0));
        j.set(1, 1, two);
        j.set(1, 2, -T::one() / T::lit(3.0));
        j.set(1, 3, c);
        j.set(1, 4, -c);
    }
}

/// `f1 = (1/n) sum i (x_i - i)^2`, `f2 = exp(sum x_i / n) + ||x||^2`,
/// `f3 = 1/(n(n+1)) sum i (n - i + 1) exp(-x_i)`.
struct Fds;

impl<T: Scalar> Objectives<T> for Fds {
    fn values(&self, x: &[T], out: &mut [T]) {
        let len = x.len();
        let n = T::from_count(len);
        let mut f1 = T::zero();
        let mut f3 = T::zero();
        for (k, &v) in x.iter().enumerate() {
            let i = T::from_count(k + 1);
            f1 += i * (v - i) * (v - i);
            f3 += i * T::from_count(len - k) * (-v).exp();
        }
        out[0] = f1 / n;
        out[1] = (x.iter().copied().sum::<T>() / n).exp() + x.iter().map(|&v| v * v).sum::<T>();
        out[2] = f3 / (n * (n + T::one()));
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let len = x.len();
        let n = T::from_count(len);
        let two = T::lit(2.0);
        let e = (x.iter().copied().sum::<T>() / n).exp() / n;
        let c3 = n * (n + T::one());
        for (k, &v) in x.iter().enumerate() {
            let i = T::from_count(k + 1);
            j.set(0, k, two * i * (v - i) / n);
            j.set(1, k, e + two * v);
            j.set(2, k, -(i * T::from_count(len - k) * (-v).exp()) / c3);
        }
    }
}

/// `((2x1 - 1)^2, 2 (2x1 - x2)^2, 3 (x2 - x3)^2)`.
struct Tridia1;

impl<T: Scalar> Objectives<T> for Tridia1 {
    fn values(&self, x: &[T], out: &mut [T]) {
        let two = T::lit(2.0);
        let a = two * x[0] - T::one();
        let b = two * x[0] - x[1];
        let c = x[1] - x[2];
        out[0] = a * a;
        out[1] = two * b * b;
        out[2] = T::lit(3.0) * c * c;
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let two = T::lit(2.0);
        let a = two * x[0] - T::one();
        let b = two * x[0] - x[1];
        let c = x[1] - x[2];
        j.fill(T::zero());
        j.set(0, 0, T::lit(4.0) * a);
        j.set(1, 0, T::lit(8.0) * b);
        j.set(1, 1, T::lit(-4.0) * b);
        j.set(2, 1, T::lit(6.0) * c);
        j.set(2, 2, T::lit(-6.0) * c);
    }
}

/// `f1 = (2x1 - 1)^2 + x2^2`,
/// `f_i = i (2x_{i-1} - x_i)^2 - (i-1) x_{i-1}^2 + i x_i^2` for `i = 2, 3`,
/// `f4 = 4 (2x3 - x4)^2 - 3 x3^2`.
struct Tridia2;

impl<T: Scalar> Objectives<T> for Tridia2 {
    fn values(&self, x: &[T], out: &mut [T]) {
        let two = T::lit(2.0);
        let a = two * x[0] - T::one();
        out[0] = a * a + x[1] * x[1];
        for i in 2..=3 {
            let fi = T::from_count(i);
            let (p, c) = (x[i - 2], x[i - 1]);
            let r = two * p - c;
            out[i - 1] = fi * r * r - (fi - T::one()) * p * p + fi * c * c;
        }
        let r = two * x[2] - x[3];
        out[3] = T::lit(4.0) * r * r - T::lit(3.0) * x[2] * x[2];
    }

    fn jacobian(&self, x: &[T], j: &mut Jacobian<T>) {
        let two = T::lit(2.0);
        j.fill(T::zero());
        j.set(0, 0, T::lit(4.0) * (two * x[0] - T::one()));
        j.set(0, 1, two * x[1]);
        for i in 2..=3 {
            let fi = T::from_count(i);
            let (p, c) = (x[i - 2], x[i - 1]);
            let r = two * p - c;
            j.set(i - 1, i - 2, T::lit(4.0) * fi * r - two * (fi - T::one()) * p);
            j.set(i - 1, i - 1, -two * fi * r + two * fi * c);
        }
        let r = two * x[2] - x[3];
        j.set(3, 2, T::lit(16.0) * r - T::lit(6.0) * x[2]);
        j.set(3, 3, T::lit(-8.0) * r);
    }
}

/// Draws each coordinate uniformly from the open interval `(lower_k, upper_k)`.
pub fn sample_initial_point<T: Scalar, R: Rng + ?Sized>(problem: &Problem<T>, rng: &mut R) -> Vec<T> {
    problem
        .lower()
        .iter()
        .zip(problem.upper())
        .map(|(&l, &u)| {
            if !(l < u) {
                return l;
            }
            let (lf, uf) = (l.to_f64_lossy(), u.to_f64_lossy());
            loop {
                let v = T::lit(rng.gen_range(lf..uf));
                if v > l && v < u {
                    break v;
                }
            }
        })
        .collect()
}

/// Closed-form description of a Pareto-critical set.
#[derive(Clone, Debug, PartialEq)]
pub enum ParetoReference<T> {
    /// Points `(1 - s) start + s end`, `s` in `[0, 1]`.
    Segment {
        start: Vec<T>,
        end: Vec<T>,
    },
    /// Points with `x[axis] = value` and the other coordinates in `[lower, upper]`.
    AxisRange {
        axis: usize,
        value: T,
        lower: Vec<T>,
        upper: Vec<T>,
    },
    None,
}

impl<T: Scalar> ParetoReference<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Segment { .. } => "segment",
            Self::AxisRange { .. } => "axis-range",
            Self::None => "none",
        }
    }

    /// `count` evenly spaced points of the set (empty for `None`).
    pub fn points(&self, count: usize) -> Vec<Vec<T>> {
        let frac = |k: usize| {
            if count <= 1 {
                T::zero()
            } else {
                T::from_count(k) / T::from_count(count - 1)
            }
        };
        match self {
            Self::Segment { start, end } => (0..count)
                .map(|k| {
                    let s = frac(k);
                    start.iter().zip(end).map(|(&a, &b)| a + s * (b - a)).collect()
                })
                .collect(),
            Self::AxisRange {
                axis,
                value,
                lower,
                upper,
            } => (0..count)
                .map(|k| {
                    let s = frac(k);
                    (0..lower.len())
                        .map(|i| {
                            if i == *axis {
                                *value
                            } else {
                                lower[i] + s * (upper[i] - lower[i])
                            }
                        })
                        .collect()
                })
                .collect(),
            Self::None => Vec::new(),
        }
    }

    /// Whether `x` lies within Euclidean distance `tol` of the set.
    pub fn contains(&self, x: &[T], tol: T) -> bool {
        match self {
            Self::Segment { start, end } => {
                if x.len() != start.len() {
                    return false;
                }
                let dir: Vec<T> = end.iter().zip(start).map(|(&b, &a)| b - a).collect();
                let rel: Vec<T> = x.iter().zip(start).map(|(&v, &a)| v - a).collect();
                let dd = crate::scalar::norm_sq(&dir);
                let s = if dd > T::zero() {
                    (crate::scalar::dot(&rel, &dir) / dd).max(T::zero()).min(T::one())
                } else {
                    T::zero()
                };
                let dist: T = rel
                    .iter()
                    .zip(&dir)
                    .map(|(&r, &d)| (r - s * d) * (r - s * d))
                    .sum::<T>()
                    .sqrt();
                dist <= tol
            }
            Self::AxisRange {
                axis,
                value,
                lower,
                upper,
            } => {
                if x.len() != lower.len() {
                    return false;
                }
                let mut dist = (x[*axis] - *value) * (x[*axis] - *value);
                for i in (0..x.len()).filter(|i| i != axis) {
                    let over = (lower[i] - x[i]).max(x[i] - upper[i]).max(T::zero());
                    dist += over * over;
                }
                dist.sqrt() <= tol
            }
            Self::None => false,
        }
    }
}

/// Minimizer of Deb's `g` near 0.2, by bisection on `g'`.
fn deb_valley() -> f64 {
    let (mut lo, mut hi) = (0.19_f64, 0.201_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if deb_g(mid).1 < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Known Pareto-critical set of a registry or demo problem, if any.
pub fn pareto_reference<T: Scalar>(name: &str) -> ParetoReference<T> {
    let pt = |v: &[f64]| v.iter().map(|&a| T::lit(a)).collect::<Vec<T>>();
    if name.eq_ignore_ascii_case(IMBALANCE_DEMO) {
        return ParetoReference::Segment {
            start: pt(&[0.0, 0.0]),
            end: pt(&[50.0, -50.0]),
        };
    }
    let Ok(spec) = problem_spec(name) else {
        return ParetoReference::None;
    };
    match spec.family {
        Family::Imbalance { .. } => ParetoReference::Segment {
            start: pt(&[0.0, 0.0]),
            end: pt(&[50.0, -50.0]),
        },
        Family::Jos1 => ParetoReference::Segment {
            start: vec![T::zero(); spec.n],
            end: vec![T::lit(2.0); spec.n],
        },
        Family::Wit { lambda: 1.0 } => ParetoReference::Segment {
            start: pt(&[-2.0, -2.0]),
            end: pt(&[2.0, 2.0]),
        },
        Family::Deb => ParetoReference::AxisRange {
            axis: 1,
            value: T::lit(deb_valley()),
            lower: pt(&[spec.lower, spec.lower]),
            upper: pt(&[spec.upper, spec.upper]),
        },
        _ => ParetoReference::None,
    }
}
