use ddqpc_core::entanglement::entropy_of_formation;
use ddqpc_core::experiments::{
    collapse_average, run, run_measure_compare, run_single_dd, run_singlet_pair,
    run_tomography_dump, Scenario, ScenarioConfig,
};
use ddqpc_core::DensityMatrix;

fn single(theta_deg: f64, alpha: f64, tau_max: f64) -> ScenarioConfig {
    let mut c = ScenarioConfig::defaults(Scenario::SingleDd);
    c.theta_deg = theta_deg;
    c.alpha = alpha;
    c.grid.tau_max = tau_max;
    c
}

fn entropy_at_end(cfg: &ScenarioConfig) -> f64 {
    *run_single_dd(cfg).unwrap().column("S").unwrap().last().unwrap()
}

#[test]
fn localized_start_has_flat_entropy_at_origin() {
    let r = run_single_dd(&single(0.0, 5.0, 10.0)).unwrap();
    assert_eq!(r.column("S").unwrap()[0], 0.0);
    assert!(r.summary_value("R_first").unwrap().abs() < 5e-2);
    assert_eq!(r.column_names(), ["S", "R"]);
    assert_eq!(r.grid.len(), 101);
    for name in ["tau_E_0.90", "tau_E_0.95", "tau_E_0.99", "tau_E"] {
        assert!(r.summary_value(name).is_some(), "{name}");
    }
}

#[test]
fn superposition_entangles_faster_with_stronger_coupling() {
    assert!(entropy_at_end(&single(90.0, 20.0, 0.5)) > entropy_at_end(&single(90.0, 5.0, 0.5)));
}

#[test]
fn localized_start_entangles_slower_in_zeno_regime() {
    assert!(entropy_at_end(&single(0.0, 40.0, 2.0)) < entropy_at_end(&single(0.0, 10.0, 2.0)));
}

#[test]
fn optimal_coupling_is_interior() {
    let r = run(&ScenarioConfig::defaults(Scenario::OptimalCoupling)).unwrap();
    let taus = r.column("tau_E").unwrap();
    let alpha_opt = r.summary_value("alpha_opt").unwrap();
    let tau_opt = r.summary_value("tau_E_opt").unwrap();
    assert!((2.0..=15.0).contains(&alpha_opt), "{alpha_opt}");
    assert!((0.5..=2.0).contains(&tau_opt), "{tau_opt}");
    assert!(taus[0] > tau_opt && taus[taus.len() - 1] > tau_opt);

    let tau_e = |alpha: f64| {
        let mut c = single(0.0, alpha, 40.0);
        c.threshold_level = 0.95;
        run_single_dd(&c).unwrap().summary_value("tau_E").unwrap()
    };
    assert!(tau_e(40.0) > tau_e(20.0));
}

#[test]
fn singlet_pair_disentangles_before_saturating() {
    let r = run_singlet_pair(&ScenarioConfig::defaults(Scenario::SingletPair)).unwrap();
    let eof = r.column("EoF").unwrap();
    assert!((eof[0] - 1.0).abs() < 1e-9);
    assert!(r.column("S_pair").unwrap()[0] < 1e-9);
    assert!(eof.iter().all(|&e| e <= eof[0] + 1e-12));
    let (d, e2) = (r.summary_value("tau_D").unwrap(), r.summary_value("tau_E2").unwrap());
    assert!(d < e2);
    assert!(r.summary_value("cross_path_max_dev").unwrap() < 1e-6);
}

#[test]
fn thorough_mode_checks_every_sample() {
    let mut c = ScenarioConfig::defaults(Scenario::SingletPair);
    c.grid.tau_max = 2.0;
    c.thorough = true;
    let r = run_singlet_pair(&c).unwrap();
    assert!(r.summary_value("cross_path_max_dev").unwrap() < 1e-6);
}

#[test]
fn measurement_postulate_comparison_short_horizon() {
    let mut c = ScenarioConfig::defaults(Scenario::MeasureCompare);
    c.grid.tau_max = 20.0;
    let r = run_measure_compare(&c).unwrap();
    let d = r.column("D").unwrap();
    assert!((d[0] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
    assert!(d.iter().all(|&x| x <= d[0]));
    assert_eq!(r.column_names(), ["D", "EoF_schrodinger", "EoF_measured"]);
}

#[test]
fn postulate_destroys_pair_entanglement_at_once() {
    let m = collapse_average(&DensityMatrix::singlet()).unwrap();
    assert_eq!(entropy_of_formation(&m).unwrap(), 0.0);
}

#[test]
fn tomography_dump_rows_are_cptp() {
    let mut c = ScenarioConfig::defaults(Scenario::TomographyDump);
    c.alpha = 20.0;
    c.grid.tau_max = 5.0;
    let r = run_tomography_dump(&c).unwrap();
    assert_eq!(r.columns.len(), 32 + 5);
    assert!((r.column("J00_re").unwrap()[0] - 1.0).abs() < 1e-12);
    assert!((r.column("J03_re").unwrap()[0] - 1.0).abs() < 1e-12);
    assert!(r.column("min_eigenvalue").unwrap().iter().all(|&x| x >= -1e-8));
    assert!(r.column("tp_deviation").unwrap().iter().all(|&x| x <= 1e-6));
    assert!(r.column("hermiticity_deviation").unwrap()[0] < 1e-12);
}

#[test]
fn runs_are_bit_identical() {
    for scenario in [Scenario::SingleDd, Scenario::SingletPair, Scenario::TomographyDump] {
        let mut c = ScenarioConfig::defaults(scenario);
        c.grid.tau_max = 3.0;
        assert_eq!(run(&c).unwrap(), run(&c).unwrap());
    }
}

#[test]
fn invalid_config_is_rejected() {
    let mut c = single(0.0, 5.0, 10.0);
    c.grid.dt = 0.5;
    assert!(run(&c).is_err());
    c = single(0.0, -1.0, 10.0);
    assert!(run(&c).is_err());
}
