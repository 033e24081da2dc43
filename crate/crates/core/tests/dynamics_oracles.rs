//! Integrator checks against closed-form solutions and against the
//! superoperator-exponential reference.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use ddqpc_core::dynamics::{
    evolve, evolve_exact_oracle, evolve_pair_one_sided, evolve_single, evolve_to, exact_evolution,
    initial_state, GeneratorParams, InitialStateParams, TimeGrid,
};
use ddqpc_core::entanglement::{concurrence, entropy_of_formation, von_neumann_entropy};
use ddqpc_core::{ComplexMatrix, DensityMatrix, C64};

fn start(theta: f64, phi: f64) -> DensityMatrix {
    initial_state(&InitialStateParams::new(theta, phi).unwrap())
}

#[test]
fn rabi_oscillation_without_detector() {
    let g = GeneratorParams::normalized(0.0, 0.0).unwrap();
    for tau in [FRAC_PI_4, FRAC_PI_2, 1.0] {
        let s = evolve_to(&start(0.0, 0.0), &g, tau, 1e-3).unwrap();
        assert!((s.matrix()[(0, 0)].re - tau.cos().powi(2)).abs() < 1e-8, "tau = {tau}");
    }
}

#[test]
fn no_detector_keeps_state_pure() {
    let g = GeneratorParams::normalized(0.0, 0.0).unwrap();
    let grid = TimeGrid::new(10.0, 1e-3, 50).unwrap();
    for theta in [0.0, FRAC_PI_2, 2.0] {
        let traj = evolve_single(&start(theta, 0.7), &g, &grid).unwrap();
        for s in &traj.states {
            assert!(von_neumann_entropy(s).unwrap() < 1e-9);
        }
    }
}

#[test]
fn strong_coupling_freezes_left_dot() {
    let at = |alpha: f64| {
        let g = GeneratorParams::normalized(alpha, 0.0).unwrap();
        evolve_to(&start(0.0, 0.0), &g, 1.0, 1e-3).unwrap().matrix()[(0, 0)].re
    };
    assert!(at(40.0) > at(5.0));
}

#[test]
fn local_unitary_keeps_singlet_maximally_entangled() {
    let g = GeneratorParams::normalized(0.0, 0.0).unwrap();
    let grid = TimeGrid::new(5.0, 1e-3, 100).unwrap();
    let traj = evolve_pair_one_sided(&DensityMatrix::singlet(), &g, &grid).unwrap();
    for s in &traj.states {
        assert!((concurrence(s).unwrap() - 1.0).abs() < 1e-6);
    }
}

#[test]
fn maximally_mixed_pair_is_stationary() {
    let g = GeneratorParams::normalized(20.0, 0.0).unwrap();
    let rho0 = DensityMatrix::maximally_mixed(4).unwrap();
    let out = evolve_to(&rho0, &g, 5.0, 1e-3).unwrap();
    assert!(out.matrix().max_abs_diff(rho0.matrix()) < 1e-10);
}

#[test]
fn monitored_singlet_loses_entanglement_immediately() {
    let g = GeneratorParams::normalized(20.0, 0.0).unwrap();
    let grid = TimeGrid::new(2.0, 1e-3, 10).unwrap();
    let traj = evolve_pair_one_sided(&DensityMatrix::singlet(), &g, &grid).unwrap();
    for (tau, s) in traj.iter().skip(1) {
        assert!(entropy_of_formation(s).unwrap() < 1.0, "tau = {tau}");
    }
}

#[test]
fn oracle_pure_dephasing_closed_form() {
    let gamma_d = 1.7;
    let g = GeneratorParams::diagnostic(0.0, gamma_d).unwrap();
    let s0 = start(FRAC_PI_2, 0.0);
    for t in [0.0, 0.3, 1.0, 4.0] {
        let s = exact_evolution(&s0, &g, t).unwrap();
        let want = 0.5 * (-gamma_d * t / 2.0).exp();
        assert!((s.matrix()[(0, 1)] - C64::new(want, 0.0)).norm() < 1e-10);
        // Diagnostic mode reads τ as absolute time.
        let s = evolve_exact_oracle(&s0, &g, t).unwrap();
        assert!((s.matrix()[(0, 1)] - C64::new(want, 0.0)).norm() < 1e-10);
    }
}

#[test]
fn rk4_pure_dephasing_in_diagnostic_mode() {
    let g = GeneratorParams::diagnostic(0.4, 2.0).unwrap();
    let s = evolve_to(&start(FRAC_PI_2, 0.0), &g, 1.5, 1e-3).unwrap();
    let want = C64::from_polar(0.5 * (-1.5_f64).exp(), 0.4 * 1.5);
    assert!((s.matrix()[(0, 1)] - want).norm() < 1e-10);
}

#[test]
fn oracle_matches_rk4_without_detector() {
    let g = GeneratorParams::normalized(0.0, 0.0).unwrap();
    let s0 = start(1.1, 0.3);
    let a = evolve_to(&s0, &g, 1.0, 1e-3).unwrap();
    let b = evolve_exact_oracle(&s0, &g, 1.0).unwrap();
    assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-8);
}

#[test]
fn rk4_agrees_with_oracle_on_parameter_grid() {
    let pair0 = {
        let mut m = DensityMatrix::singlet().into_matrix().scale_real(0.8);
        m = m.add_scaled(&ComplexMatrix::diag(&[0.05, 0.05, 0.05, 0.05]), 1.0);
        DensityMatrix::new(m).unwrap()
    };
    for alpha in [0.0, 1.0, 5.0, 20.0] {
        let g = GeneratorParams::normalized(alpha, 0.3).unwrap();
        for s0 in [start(0.9, 2.0), pair0.clone()] {
            for tau in [0.5, 1.0, 5.0] {
                let a = evolve_to(&s0, &g, tau, 1e-3).unwrap();
                let b = evolve_exact_oracle(&s0, &g, tau).unwrap();
                let dev = a.matrix().max_abs_diff(b.matrix());
                assert!(dev <= 1e-8, "alpha {alpha} dim {} tau {tau}: {dev:e}", s0.dim());
            }
        }
    }
}

#[test]
fn physical_invariants_hold_at_every_sample() {
    for alpha in [0.0, 5.0, 20.0, 50.0] {
        let g = GeneratorParams::normalized(alpha, 0.0).unwrap();
        let grid = TimeGrid::new(10.0, 1e-3, 25).unwrap();
        for s0 in [start(0.0, 0.0), start(FRAC_PI_2, 1.0), DensityMatrix::singlet()] {
            let traj = evolve(&s0, &g, &grid).unwrap();
            for s in &traj.states {
                let m = s.matrix();
                assert!((m.trace() - 1.0).norm() <= 1e-10);
                assert!(m.hermiticity_deviation() <= 1e-10);
                assert!(s.min_eigenvalue().unwrap() >= -1e-9);
            }
        }
    }
}

#[test]
fn halving_the_step_changes_little() {
    let g = GeneratorParams::normalized(5.0, 0.2).unwrap();
    for s0 in [start(0.4, 0.0), DensityMatrix::singlet()] {
        let coarse = evolve(&s0, &g, &TimeGrid::new(3.0, 1e-3, 100).unwrap()).unwrap();
        let fine = evolve(&s0, &g, &TimeGrid::new(3.0, 5e-4, 200).unwrap()).unwrap();
        assert_eq!(coarse.len(), fine.len());
        for (a, b) in coarse.states.iter().zip(&fine.states) {
            assert!(a.matrix().max_abs_diff(b.matrix()) <= 1e-9);
        }
    }
}

#[test]
fn purity_never_increases_at_zero_detuning() {
    let g = GeneratorParams::normalized(3.0, 0.0).unwrap();
    let grid = TimeGrid::new(5.0, 1e-3, 20).unwrap();
    for k in 0..=16 {
        let theta = k as f64 * PI / 8.0;
        let traj = evolve_single(&start(theta, 0.5), &g, &grid).unwrap();
        let purity: Vec<f64> = traj.states.iter().map(DensityMatrix::purity).collect();
        for w in purity.windows(2) {
            assert!(w[1] <= w[0] + 1e-13, "theta = {theta}");
        }
    }
}
