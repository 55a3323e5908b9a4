//! Random strongly convex quadratic fixtures shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use mo_descent::{Jacobian, Problem};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `f_i(x) = 1/2 (x - c_i)^T A_i (x - c_i)` with known spectra.
#[derive(Clone, Debug)]
pub struct Quadratic {
    pub hessians: Vec<Vec<Vec<f64>>>,
    pub centers: Vec<Vec<f64>>,
    /// Smallest and largest eigenvalue of each `A_i`.
    pub mu: Vec<f64>,
    pub lip: Vec<f64>,
}

fn orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(n);
    while q.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        for u in &q {
            let p: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
            v.iter_mut().zip(u).for_each(|(a, b)| *a -= p * b);
        }
        let nrm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if nrm > 1e-3 {
            q.push(v.into_iter().map(|a| a / nrm).collect());
        }
    }
    q
}

impl Quadratic {
    /// `m` objectives in `n` variables; eigenvalues log-uniform in `[lo, hi]`.
    pub fn random(rng: &mut ChaCha8Rng, m: usize, n: usize, lo: f64, hi: f64) -> Self {
        let mut hessians = Vec::new();
        let mut centers = Vec::new();
        let (mut mu, mut lip) = (Vec::new(), Vec::new());
        for _ in 0..m {
            let eig: Vec<f64> = (0..n).map(|_| (rng.gen_range(lo.ln()..hi.ln())).exp()).collect();
            let q = orthogonal(rng, n);
            let mut a = vec![vec![0.0; n]; n];
            for (k, &e) in eig.iter().enumerate() {
                for r in 0..n {
                    for c in 0..n {
                        a[r][c] += e * q[k][r] * q[k][c];
                    }
                }
            }
            mu.push(eig.iter().copied().fold(f64::INFINITY, f64::min));
            lip.push(eig.iter().copied().fold(0.0, f64::max));
            hessians.push(a);
            centers.push((0..n).map(|_| rng.gen_range(-2.0..2.0)).collect());
        }
        Self {
            hessians,
            centers,
            mu,
            lip,
        }
    }

    pub fn dim(&self) -> usize {
        self.centers[0].len()
    }

    pub fn curvature(&self, i: usize, d: &[f64]) -> f64 {
        let a = &self.hessians[i];
        (0..d.len())
            .map(|r| d[r] * (0..d.len()).map(|c| a[r][c] * d[c]).sum::<f64>())
            .sum()
    }

    pub fn problem(&self) -> Problem<f64> {
        let n = self.dim();
        let m = self.centers.len();
        let (hv, cv) = (self.hessians.clone(), self.centers.clone());
        let (hj, cj) = (self.hessians.clone(), self.centers.clone());
        Problem::from_fns(
            "quadratic",
            m,
            vec![-5.0; n],
            vec![5.0; n],
            move |x: &[f64], out: &mut [f64]| {
                for i in 0..hv.len() {
                    let z: Vec<f64> = x.iter().zip(&cv[i]).map(|(a, b)| a - b).collect();
                    let mut s = 0.0;
                    for r in 0..z.len() {
                        for c in 0..z.len() {
                            s += z[r] * hv[i][r][c] * z[c];
                        }
                    }
                    out[i] = 0.5 * s;
                }
            },
            move |x: &[f64], jac: &mut Jacobian<f64>| {
                for i in 0..hj.len() {
                    let z: Vec<f64> = x.iter().zip(&cj[i]).map(|(a, b)| a - b).collect();
                    for r in 0..z.len() {
                        jac.set(i, r, (0..z.len()).map(|c| hj[i][r][c] * z[c]).sum());
                    }
                }
            },
        )
        .unwrap()
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
