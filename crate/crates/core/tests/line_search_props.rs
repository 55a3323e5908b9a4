//! Nonmonotone searches reduce to Armijo at their degenerate settings and
//! never accept a shorter step than Armijo from the same state.

mod common;

use common::Quadratic;
use mo_descent::line_search::{armijo, backtrack};
use mo_descent::{
    make_problem, sample_initial_point, solve_dual, DualOptions, LineSearchKind, LineSearchParams, Overrides, Problem,
    ReferenceState,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct State {
    x: Vec<f64>,
    fx: Vec<f64>,
    d: Vec<f64>,
    slopes: Vec<f64>,
}

fn state_at(p: &Problem<f64>, x: Vec<f64>) -> State {
    let jac = p.jacobian(&x).unwrap();
    let d = solve_dual(&jac, None, &DualOptions::default()).unwrap().direction;
    let slopes = jac.apply(&d);
    let fx = p.values(&x).unwrap();
    State { x, fx, d, slopes }
}

fn test_problems() -> Vec<Problem<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut out: Vec<Problem<f64>> = ["Imbalance1", "WIT1", "WIT3", "Deb", "DD1", "FDS"]
        .iter()
        .map(|n| make_problem(n, Overrides::default()).unwrap())
        .collect();
    for _ in 0..4 {
        out.push(Quadratic::random(&mut rng, 3, 4, 0.1, 50.0).problem());
    }
    out
}

/// Runs `steps` iterations with the given reference strategy and calls
/// `visit` on every state before its step is taken.
fn replay(
    p: &Problem<f64>,
    x0: Vec<f64>,
    kind: LineSearchKind,
    params: &LineSearchParams<f64>,
    steps: usize,
    mut visit: impl FnMut(&State, &[f64]),
) {
    let mut st = state_at(p, x0);
    let mut reference = ReferenceState::new(kind, &st.fx, params);
    for _ in 0..steps {
        if st.slopes.iter().all(|s| s.abs() < 1e-14) {
            break;
        }
        let c = reference.reference(&st.fx, params);
        visit(&st, &c);
        let mut fe = 0;
        let Ok(out) = backtrack(p, &st.x, &c, &st.d, &st.slopes, params.initial_beta, params, &mut fe) else {
            break;
        };
        reference.accept(&out.accepted_values);
        st = state_at(p, out.accepted_point);
    }
}

#[test]
fn degenerate_nonmonotone_settings_equal_armijo() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let problems = test_problems();
    let mut states = 0usize;
    for k in 0..100 {
        let p = &problems[k % problems.len()];
        let x0 = sample_initial_point(p, &mut rng);
        let params = LineSearchParams {
            window: 0,
            eta: f64::MIN_POSITIVE,
            ..LineSearchParams::default()
        };
        for kind in [LineSearchKind::MaxType, LineSearchKind::AverageType] {
            replay(p, x0.clone(), kind, &params, 5, |st, c| {
                let (mut fa, mut fb) = (0, 0);
                let a = armijo(p, &st.x, &st.fx, &st.d, &st.slopes, &params, &mut fa);
                let b = backtrack(p, &st.x, c, &st.d, &st.slopes, params.initial_beta, &params, &mut fb);
                match (a, b) {
                    (Ok(a), Ok(b)) => {
                        assert_eq!(a.beta.to_bits(), b.beta.to_bits(), "{kind:?} on {}", p.name());
                        assert_eq!(a.trials, b.trials);
                        assert_eq!(a.accepted_point, b.accepted_point);
                        assert_eq!(a.accepted_values, b.accepted_values);
                    }
                    (Err(_), Err(_)) => {}
                    (a, b) => panic!("{kind:?} on {}: {a:?} vs {b:?}", p.name()),
                }
                assert_eq!(fa, fb);
                states += 1;
            });
        }
    }
    assert!(states >= 200);
}

#[test]
fn nonmonotone_steps_dominate_armijo() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let problems = test_problems();
    let params = LineSearchParams::<f64>::default();
    assert_eq!((params.window, params.eta), (10, 0.8));
    let (mut states, mut longer) = (0usize, 0usize);
    for k in 0..100 {
        let p = &problems[k % problems.len()];
        let x0 = sample_initial_point(p, &mut rng);
        for kind in [LineSearchKind::MaxType, LineSearchKind::AverageType] {
            replay(p, x0.clone(), kind, &params, 30, |st, c| {
                assert!(
                    c.iter().zip(&st.fx).all(|(c, f)| c >= f),
                    "reference below F on {}",
                    p.name()
                );
                let mut fe = 0;
                let Ok(a) = armijo(p, &st.x, &st.fx, &st.d, &st.slopes, &params, &mut fe) else {
                    return;
                };
                let b = backtrack(p, &st.x, c, &st.d, &st.slopes, params.initial_beta, &params, &mut fe)
                    .expect("a looser reference accepts whatever Armijo accepts");
                assert!(b.beta >= a.beta, "{kind:?} on {}: {} < {}", p.name(), b.beta, a.beta);
                longer += usize::from(b.beta > a.beta);
                states += 1;
            });
        }
    }
    assert!(states >= 1000, "{states}");
    assert!(longer > 0);
}
