//! Scheduling policies for multiclass multiserver queues whose service rates
//! degrade with congestion.
//!
//! The crate provides:
//!
//! * [`model`] — problem instances: slowdown functions, uniformization,
//!   stage costs, feasibility sets, and the wait-time-to-state-rate mapping.
//! * [`policy`] — priority-order policies: tabular maps, classifier-backed
//!   index policies, and the usual benchmark rules.
//! * [`exact`] — ground-truth average-cost MDP solver for small state spaces
//!   (preemptive and non-preemptive).
//! * [`sim`] — uniformized discrete-event simulation: coupled value-difference
//!   estimation, a regenerative baseline, long-run cost estimation, and the
//!   non-Markovian wait-dependent simulator.
//! * [`fluid`] — deterministic fluid model: ODE integration with boundary
//!   handling, equilibrium classification, and fluid-based policy iteration.
//! * [`learn`] — the policy-learning engine: state sampling, adaptive
//!   sampling with a t-statistic stopping rule, polynomial-feature logistic
//!   classifiers, and the approximate policy iteration loops.
//! * [`cli`] — the `slowq` command-line front end.

pub mod cli;
pub mod error;
pub mod exact;
pub mod fluid;
pub mod learn;
pub mod model;
pub mod policy;
pub mod report;
pub mod seeds;
pub mod sim;

pub use error::{Error, Result};
pub use model::SystemConfig;
