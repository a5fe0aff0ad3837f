//! Benchmark systems under test.
//!
//! An [`Environment`] is a deterministic closed-loop simulator: all randomness
//! enters through the per-timestep disturbance vector, sampled from the
//! nominal disturbance distribution `d(x | s)` (or a proposal standing in for
//! it). Trajectory safety is scored by a per-state robustness metric; the
//! trajectory evaluation `f` is the running maximum of that metric over the
//! states reached after each step, and `f >= gamma` declares a failure.
//!
//! Four systems are provided:
//! - [`ToyGaussian`]: one step, one standard-normal disturbance, failure when
//!   the draw exceeds a threshold. Everything about it is known in closed
//!   form, which makes it the reference point for estimator tests.
//! - [`Pendulum`]: an inverted pendulum held upright by a saturated PD
//!   controller, disturbed by additive torque noise. Two failure modes
//!   (falling left or right).
//! - [`Crosswalk`]: an autonomous vehicle with IDM longitudinal control
//!   approaching a pedestrian crossing; disturbances drive the pedestrian's
//!   acceleration and the vehicle's perception of it.
//! - [`CollisionAvoidance`]: a vertical-plane aircraft encounter where a
//!   threshold-based advisory logic climbs or descends to avoid an intruder
//!   whose vertical rate is disturbed.

mod collision;
mod crosswalk;
mod pendulum;
mod toy;

pub use collision::{CollisionAvoidance, CollisionParams};
pub use crosswalk::{Crosswalk, CrosswalkParams};
pub use pendulum::{Pendulum, PendulumParams};
pub use toy::{ToyGaussian, ToyParams};

use serde::{Deserialize, Serialize};

use crate::rng::Rng;

pub(crate) const LN_2PI: f64 = 1.8378770664093453;

/// A simulation system under test.
///
/// Implementations must be immutable after construction; `step`, `robustness`
/// and the nominal-distribution methods are pure, so rollouts can run
/// concurrently against a shared reference.
pub trait Environment: Send + Sync {
    fn name(&self) -> &'static str;

    /// State dimension `D_s`.
    fn state_dim(&self) -> usize;

    /// Disturbance dimension `D_x`.
    fn disturbance_dim(&self) -> usize;

    /// Horizon `T` (number of disturbance injections per trajectory).
    fn horizon(&self) -> usize;

    /// Failure threshold `gamma`, in units of the evaluation `f`.
    fn failure_threshold(&self) -> f64;

    /// Initial state. Deterministic in all provided environments; the seed is
    /// part of the signature so stochastic initial conditions stay possible.
    fn initial_state(&self, seed: u64) -> Vec<f64>;

    /// Advance one timestep under the given disturbance, writing into `next`.
    fn step(&self, state: &[f64], disturbance: &[f64], t: usize, next: &mut Vec<f64>);

    /// Mean and standard deviation of the diagonal-Gaussian nominal
    /// disturbance distribution `d(x | s)` at this state.
    fn nominal_params(&self, state: &[f64], mean: &mut [f64], std: &mut [f64]);

    /// Per-state robustness metric; larger means closer to failure.
    fn robustness(&self, state: &[f64]) -> f64;

    /// Full parameter block, for config echo and ground-truth cache keys.
    fn params_json(&self) -> serde_json::Value;

    /// Log-density of the nominal disturbance distribution at `x`.
    fn nominal_log_prob(&self, state: &[f64], disturbance: &[f64]) -> f64 {
        let d = self.disturbance_dim();
        debug_assert_eq!(disturbance.len(), d);
        let mut mean = vec![0.0; d];
        let mut std = vec![0.0; d];
        self.nominal_params(state, &mut mean, &mut std);
        diag_gaussian_log_pdf(disturbance, &mean, &std)
    }

    /// Draw a nominal disturbance into `out`, returning its log-density.
    fn nominal_sample(&self, state: &[f64], rng: &mut Rng, out: &mut [f64]) -> f64 {
        let d = self.disturbance_dim();
        debug_assert_eq!(out.len(), d);
        let mut mean = vec![0.0; d];
        let mut std = vec![0.0; d];
        self.nominal_params(state, &mut mean, &mut std);
        let mut logp = 0.0;
        for c in 0..d {
            let eps: f64 = rand_distr::StandardNormal.sample_from(rng);
            out[c] = mean[c] + std[c] * eps;
            logp += -0.5 * eps * eps - std[c].ln() - 0.5 * LN_2PI;
        }
        logp
    }

    /// Evaluation `f` over the sequence of states reached after each step:
    /// the maximum of the per-state robustness metric.
    fn evaluate(&self, states_after_steps: &[Vec<f64>]) -> f64 {
        states_after_steps
            .iter()
            .map(|s| self.robustness(s))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Log-density of a diagonal Gaussian.
pub fn diag_gaussian_log_pdf(x: &[f64], mean: &[f64], std: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), mean.len());
    debug_assert_eq!(x.len(), std.len());
    let mut logp = 0.0;
    for c in 0..x.len() {
        let z = (x[c] - mean[c]) / std[c];
        logp += -0.5 * z * z - std[c].ln() - 0.5 * LN_2PI;
    }
    logp
}

trait SampleFrom {
    fn sample_from(self, rng: &mut Rng) -> f64;
}

impl SampleFrom for rand_distr::StandardNormal {
    fn sample_from(self, rng: &mut Rng) -> f64 {
        rand_distr::Distribution::sample(&self, rng)
    }
}

/// Environment selection plus its full parameter block, as stored in config
/// files. Unknown environment names and unknown parameters are rejected.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum EnvConfig {
    Toy(ToyParams),
    Pendulum(PendulumParams),
    Crosswalk(CrosswalkParams),
    Collision(CollisionParams),
}

impl EnvConfig {
    /// Default parameter block for an environment name, or `None` if unknown.
    pub fn by_name(name: &str) -> Option<EnvConfig> {
        match name {
            "toy" => Some(EnvConfig::Toy(ToyParams::default())),
            "pendulum" => Some(EnvConfig::Pendulum(PendulumParams::default())),
            "crosswalk" => Some(EnvConfig::Crosswalk(CrosswalkParams::default())),
            "collision" => Some(EnvConfig::Collision(CollisionParams::default())),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EnvConfig::Toy(_) => "toy",
            EnvConfig::Pendulum(_) => "pendulum",
            EnvConfig::Crosswalk(_) => "crosswalk",
            EnvConfig::Collision(_) => "collision",
        }
    }

    /// Instantiate the simulator.
    pub fn build(&self) -> Box<dyn Environment> {
        match self {
            EnvConfig::Toy(p) => Box::new(ToyGaussian::new(p.clone())),
            EnvConfig::Pendulum(p) => Box::new(Pendulum::new(p.clone())),
            EnvConfig::Crosswalk(p) => Box::new(Crosswalk::new(p.clone())),
            EnvConfig::Collision(p) => Box::new(CollisionAvoidance::new(p.clone())),
        }
    }

    /// Multiply every nominal disturbance standard deviation by `factor`.
    /// This is the single knob the calibration search turns.
    pub fn scale_noise(&mut self, factor: f64) {
        match self {
            EnvConfig::Toy(p) => p.noise_std *= factor,
            EnvConfig::Pendulum(p) => p.torque_noise_std *= factor,
            EnvConfig::Crosswalk(p) => {
                p.accel_noise_std[0] *= factor;
                p.accel_noise_std[1] *= factor;
                p.perception_pos_noise_std[0] *= factor;
                p.perception_pos_noise_std[1] *= factor;
                p.perception_speed_noise_std *= factor;
            }
            EnvConfig::Collision(p) => p.vertical_rate_noise_std *= factor,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_gaussian_matches_standard_normal() {
        // standard normal at 0: -0.5 ln(2 pi)
        let lp = diag_gaussian_log_pdf(&[0.0], &[0.0], &[1.0]);
        assert!((lp - (-0.9189385332046727)).abs() < 1e-15);
        // at 2: -0.5 (ln 2 pi + 4) ~ -2.9189
        let lp2 = diag_gaussian_log_pdf(&[2.0], &[0.0], &[1.0]);
        assert!((lp2 - (-2.9189385332046727)).abs() < 1e-15);
    }

    #[test]
    fn env_config_by_name_covers_all() {
        for name in ["toy", "pendulum", "crosswalk", "collision"] {
            let cfg = EnvConfig::by_name(name).unwrap();
            assert_eq!(cfg.name(), name);
            let env = cfg.build();
            assert!(env.horizon() >= 1);
            assert!(env.disturbance_dim() >= 1);
            assert_eq!(env.initial_state(0).len(), env.state_dim());
        }
        assert!(EnvConfig::by_name("nosuch").is_none());
    }

    #[test]
    fn nominal_sample_log_prob_round_trip() {
        // log-density returned by the sampler must match direct evaluation
        for cfg in [
            EnvConfig::by_name("toy").unwrap(),
            EnvConfig::by_name("pendulum").unwrap(),
            EnvConfig::by_name("crosswalk").unwrap(),
            EnvConfig::by_name("collision").unwrap(),
        ] {
            let env = cfg.build();
            let state = env.initial_state(1);
            let mut rng = crate::rng::rng_from_seed(99);
            let mut x = vec![0.0; env.disturbance_dim()];
            for _ in 0..32 {
                let lp = env.nominal_sample(&state, &mut rng, &mut x);
                let direct = env.nominal_log_prob(&state, &x);
                assert!(lp.is_finite());
                assert!(
                    (lp - direct).abs() < 1e-10,
                    "{}: {} vs {}",
                    env.name(),
                    lp,
                    direct
                );
            }
        }
    }
}
