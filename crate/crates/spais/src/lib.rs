//! Rare-event failure probability estimation for sequential stochastic systems.
//!
//! The central question this crate answers is: given a closed-loop system whose
//! only randomness enters through per-timestep disturbance vectors, how likely
//! is it that a trajectory fails? Failures are defined by a scalar evaluation
//! `f(trajectory)` crossing a threshold `gamma`, and are typically rare
//! (probabilities of 1e-5 and below), which makes plain Monte Carlo slow and
//! noisy.
//!
//! The main estimator here adapts a state-conditioned Gaussian proposal
//! (two small MLPs for the mean and log-std of the disturbance) toward the
//! distribution of failing trajectories. It alternates three phases:
//!
//! 1. sample trajectories from the current proposal and append their hard
//!    importance weights to an estimation buffer,
//! 2. move a particle set toward a logistic-smoothed failure distribution with
//!    one independent Metropolis-Hastings accept/reject step per particle,
//! 3. take one gradient step fitting the proposal to the particle set by
//!    maximum likelihood.
//!
//! The final estimate averages hard-indicator importance weights over every
//! sample ever drawn, each weighted under the proposal that generated it, so
//! the pooled estimator stays unbiased while the proposal moves.
//!
//! Baselines (plain Monte Carlo and a cross-entropy method with a
//! state-independent proposal), four benchmark environments, and a trial
//! harness with ground-truth caching round out the crate. Everything is
//! deterministic given a master seed.
//!
//! ```
//! use spais::env::ToyGaussian;
//! use spais::baselines::mc_estimate;
//!
//! let env = ToyGaussian::default();
//! let est = mc_estimate(&env, 200_000, 7).unwrap();
//! // True failure probability is 1 - Phi(2) ~ 0.02275.
//! assert!((est.mu_hat - 0.02275).abs() < 0.002);
//! ```

pub mod baselines;
pub mod engine;
pub mod env;
pub mod error;
pub mod harness;
pub mod imh;
pub mod proposal;
pub mod rng;
pub mod traj;

pub use engine::{run_spais, EstimateResult, ISBuffer, SpaisConfig};
pub use env::Environment;
pub use error::{Error, Result};
pub use traj::{rollout, Trajectory};
