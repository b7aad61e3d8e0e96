//! Single-exponential force relaxation under held displacement.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

/// `F(t) = F_ss + (F0 − F_ss) e^{−t/τ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CreepModel {
    /// Initial force, N.
    pub f0: f64,
    /// Steady-state force, N.
    pub f_ss: f64,
    /// Time constant, s. Infinite when the data carry no decay.
    pub tau: f64,
}

impl CreepModel {
    pub fn new(f0: f64, f_ss: f64, tau: f64) -> Result<Self> {
        if !(f0.is_finite() && f_ss.is_finite() && f0 >= 0.0 && f_ss >= 0.0) {
            return Err(Error::InvalidSamples(format!(
                "creep forces must be finite and non-negative, got F0 = {f0}, F_ss = {f_ss}"
            )));
        }
        if tau.is_nan() || tau <= 0.0 {
            return Err(Error::InvalidSamples(format!("time constant must be positive, got {tau}")));
        }
        Ok(Self { f0, f_ss, tau })
    }
}

/// Force at time `t ≥ 0` s.
pub fn creep_force(model: &CreepModel, t: f64) -> f64 {
    model.f_ss + (model.f0 - model.f_ss) * (-t / model.tau).exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CreepFit {
    pub model: CreepModel,
    pub tau_identifiable: bool,
    /// Whether the samples cover at least one fitted time constant.
    pub spans_time_constant: bool,
    /// Euclidean norm of the force residuals, N.
    pub residual_norm: f64,
    pub iterations: usize,
}

const PARAM_TOL: f64 = 1e-9;
const MAX_ITERATIONS: usize = 500;

/// Least-squares fit of a [`CreepModel`] to `(time s, force N)` samples.
pub fn fit_creep(samples: &[(f64, f64)]) -> Result<CreepFit> {
    validate(samples)?;
    let mut data = samples.to_vec();
    data.sort_by(|a, b| a.0.total_cmp(&b.0));
    let span = data[data.len() - 1].0 - data[0].0;

    let (fmin, fmax) = data
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s.1), hi.max(s.1)));
    let mean = data.iter().map(|s| s.1).sum::<f64>() / data.len() as f64;
    if fmax - fmin <= 1e-12 * mean.abs().max(1.0) {
        return Ok(CreepFit {
            model: CreepModel::new(mean, mean, f64::INFINITY)?,
            tau_identifiable: false,
            spans_time_constant: false,
            residual_norm: residual_norm(&data, mean, mean, f64::INFINITY),
            iterations: 0,
        });
    }

    // parameters: (F0, F_ss, ln τ)
    let mut p = log_linear_start(&data, span);
    let mut cost = cost_of(&data, &p);
    let mut lambda = 1e-3;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let (jtj, jtr) = normal_equations(&data, &p);
        let mut damped = jtj;
        for i in 0..3 {
            damped[(i, i)] += lambda * jtj[(i, i)].max(1e-300);
        }
        let Some(step) = damped.lu().solve(&(-jtr)) else {
            lambda *= 10.0;
            if lambda > 1e12 {
                break;
            }
            continue;
        };
        let trial = p + step;
        let trial_cost = cost_of(&data, &trial);
        if trial_cost.is_finite() && trial_cost <= cost {
            p = trial;
            cost = trial_cost;
            lambda = (lambda / 3.0).max(1e-12);
            let small = step
                .iter()
                .zip(p.iter())
                .all(|(d, v)| d.abs() <= PARAM_TOL * v.abs().max(1.0));
            if small {
                converged = true;
                break;
            }
        } else {
            lambda *= 4.0;
            if lambda > 1e12 {
                converged = true;
                break;
            }
        }
    }

    let tau = p[2].exp();
    let amplitude = (p[0] - p[1]).abs();
    let identifiable = converged
        && tau.is_finite()
        && tau < 1e6 * span.max(f64::MIN_POSITIVE)
        && amplitude > 1e-9 * fmax.abs();
    let model = if identifiable {
        CreepModel::new(p[0].max(0.0), p[1].max(0.0), tau)?
    } else {
        CreepModel::new(mean, mean, f64::INFINITY)?
    };
    Ok(CreepFit {
        model,
        tau_identifiable: identifiable,
        spans_time_constant: identifiable && span >= tau,
        residual_norm: residual_norm(&data, model.f0, model.f_ss, model.tau),
        iterations,
    })
}

fn validate(samples: &[(f64, f64)]) -> Result<()> {
    if samples.len() < 4 {
        return Err(Error::InvalidSamples(format!(
            "need at least 4 samples, got {}",
            samples.len()
        )));
    }
    for (i, &(t, f)) in samples.iter().enumerate() {
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::InvalidSamples(format!("sample {}: time must be finite and ≥ 0, got {t}", i + 1)));
        }
        if !(f.is_finite() && f > 0.0) {
            return Err(Error::InvalidSamples(format!("sample {}: force must be positive, got {f}", i + 1)));
        }
    }
    let t0 = samples[0].0;
    if samples.iter().all(|s| s.0 == t0) {
        return Err(Error::InvalidSamples("all samples share one time stamp".into()));
    }
    Ok(())
}

/// Guesses the asymptote just beyond the last sample and regresses
/// `ln |F − F_ss|` on `t`.
fn log_linear_start(data: &[(f64, f64)], span: f64) -> Vector3<f64> {
    let (first, last) = (data[0].1, data[data.len() - 1].1);
    let f_ss = last - 0.05 * (first - last);
    let sign = (first - last).signum();
    let pts: Vec<(f64, f64)> = data
        .iter()
        .filter(|s| sign * (s.1 - f_ss) > 0.0)
        .map(|s| (s.0, (sign * (s.1 - f_ss)).ln()))
        .collect();
    let n = pts.len() as f64;
    let fallback_tau = (span / 3.0).max(f64::MIN_POSITIVE);
    if pts.len() < 2 {
        return Vector3::new(first, f_ss, fallback_tau.ln());
    }
    let (st, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
    let (mt, my) = (st / n, sy / n);
    let (sxy, sxx) = pts
        .iter()
        .fold((0.0, 0.0), |(a, b), p| (a + (p.0 - mt) * (p.1 - my), b + (p.0 - mt).powi(2)));
    let slope = sxy / sxx;
    let tau = if slope < 0.0 { -1.0 / slope } else { fallback_tau };
    let intercept = my - slope.min(0.0) * mt;
    let f0 = f_ss + sign * intercept.exp();
    Vector3::new(f0, f_ss, tau.ln())
}

fn cost_of(data: &[(f64, f64)], p: &Vector3<f64>) -> f64 {
    let tau = p[2].exp();
    data.iter()
        .map(|&(t, f)| (p[1] + (p[0] - p[1]) * (-t / tau).exp() - f).powi(2))
        .sum()
}

fn normal_equations(data: &[(f64, f64)], p: &Vector3<f64>) -> (Matrix3<f64>, Vector3<f64>) {
    let tau = p[2].exp();
    let mut jtj = Matrix3::zeros();
    let mut jtr = Vector3::zeros();
    for &(t, f) in data {
        let e = (-t / tau).exp();
        let r = p[1] + (p[0] - p[1]) * e - f;
        let j = Vector3::new(e, 1.0 - e, (p[0] - p[1]) * e * t / tau);
        jtj += j * j.transpose();
        jtr += j * r;
    }
    (jtj, jtr)
}

fn residual_norm(data: &[(f64, f64)], f0: f64, f_ss: f64, tau: f64) -> f64 {
    let m = CreepModel { f0, f_ss, tau };
    data.iter()
        .map(|&(t, f)| (creep_force(&m, t) - f).powi(2))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn reference_model() -> CreepModel {
        CreepModel::new(22.0, 19.0, 200.0).unwrap()
    }

    #[test]
    fn force_values() {
        let m = reference_model();
        assert_eq!(creep_force(&m, 0.0), 22.0);
        assert_relative_eq!(creep_force(&m, 1e6), 19.0, epsilon = 1e-12);
        assert_relative_eq!(creep_force(&m, 200.0), 19.0 + 3.0 * (-1f64).exp(), epsilon = 1e-12);
        assert_eq!(format!("{:.2}", creep_force(&m, 200.0)), "20.10");
    }

    #[test]
    fn noiseless_round_trip() {
        let m = reference_model();
        let samples: Vec<_> = (0..=120).map(|i| {
            let t = 10.0 * i as f64;
            (t, creep_force(&m, t))
        }).collect();
        let fit = fit_creep(&samples).unwrap();
        assert!(fit.tau_identifiable && fit.spans_time_constant);
        assert_relative_eq!(fit.model.f0, 22.0, max_relative = 1e-6);
        assert_relative_eq!(fit.model.f_ss, 19.0, max_relative = 1e-6);
        assert_relative_eq!(fit.model.tau, 200.0, max_relative = 1e-6);
        assert!(fit.residual_norm < 1e-8);
    }

    #[test]
    fn rising_response_is_fitted() {
        let m = CreepModel::new(5.0, 9.0, 35.0).unwrap();
        let samples: Vec<_> = (0..40).map(|i| {
            let t = 3.7 * i as f64;
            (t, creep_force(&m, t))
        }).collect();
        let fit = fit_creep(&samples).unwrap();
        assert_relative_eq!(fit.model.tau, 35.0, max_relative = 1e-6);
    }

    #[test]
    fn constant_data_is_unidentifiable() {
        let samples: Vec<_> = (0..10).map(|i| (i as f64, 19.0)).collect();
        let fit = fit_creep(&samples).unwrap();
        assert!(!fit.tau_identifiable);
        assert_eq!(fit.model.f0, fit.model.f_ss);
        assert_eq!(fit.model.f0, 19.0);
        assert!(fit.model.tau.is_infinite());
    }

    #[test]
    fn rejects_bad_samples() {
        assert!(fit_creep(&[(0.0, 1.0), (1.0, 1.0), (2.0, 1.0)]).is_err());
        assert!(fit_creep(&[(0.0, 1.0), (1.0, -1.0), (2.0, 1.0), (3.0, 1.0)]).is_err());
        assert!(fit_creep(&[(1.0, 2.0), (1.0, 1.5), (1.0, 1.2), (1.0, 1.0)]).is_err());
        assert!(CreepModel::new(1.0, 1.0, 0.0).is_err());
    }
}
