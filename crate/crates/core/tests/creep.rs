use flexrcc::analysis::{creep_force, fit_creep, CreepModel};
use flexrcc::fixtures;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn truth() -> CreepModel {
    CreepModel::new(22.0, 19.0, 200.0).unwrap()
}

/// 2 Hz over 20 minutes.
fn logger_times() -> Vec<f64> {
    (0..=2400).map(|i| i as f64 * 0.5).collect()
}

#[test]
fn bundled_dataset_is_recovered() {
    let fit = fit_creep(&fixtures::creep_synthetic().unwrap()).unwrap();
    let m = truth();
    assert!((fit.model.f0 / m.f0 - 1.0).abs() < 1e-6);
    assert!((fit.model.f_ss / m.f_ss - 1.0).abs() < 1e-6);
    assert!((fit.model.tau / m.tau - 1.0).abs() < 1e-6);
    assert!(fit.tau_identifiable && fit.spans_time_constant);
    assert!(fit.residual_norm < 1e-9);
}

#[test]
fn one_percent_noise_keeps_tau_within_five_percent() {
    let m = truth();
    let noise = Normal::new(0.0, 0.01).unwrap();
    let mut worst = 0.0_f64;
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<(f64, f64)> = logger_times()
            .into_iter()
            .map(|t| (t, creep_force(&m, t) * (1.0 + noise.sample(&mut rng))))
            .collect();
        let fit = fit_creep(&samples).unwrap();
        worst = worst.max((fit.model.tau / m.tau - 1.0).abs());
    }
    assert!(worst < 0.05, "worst τ error {worst}");
}

#[test]
fn constant_force_is_unidentifiable() {
    let samples: Vec<(f64, f64)> = (0..20).map(|i| (i as f64 * 10.0, 19.0)).collect();
    let fit = fit_creep(&samples).unwrap();
    assert!(!fit.tau_identifiable);
    assert!(fit.model.tau.is_infinite());
    assert!((fit.model.f_ss - 19.0).abs() < 1e-12);
}

#[test]
fn short_record_is_flagged() {
    let m = truth();
    let samples: Vec<(f64, f64)> = (0..10).map(|i| (i as f64 * 5.0, creep_force(&m, i as f64 * 5.0))).collect();
    let fit = fit_creep(&samples).unwrap();
    assert!(!fit.spans_time_constant);
}

#[test]
fn too_few_samples_rejected() {
    let samples = [(0.0, 22.0), (1.0, 21.9), (2.0, 21.8)];
    assert!(fit_creep(&samples).is_err());
}
