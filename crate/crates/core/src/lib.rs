//! Planning toolkit for STRIPS-style domains with probabilistic exogenous
//! events: plan synthesis, belief-net compilation of plans, exact and
//! Monte Carlo estimation of success probability, failure-mode analysis,
//! and plan repair via conditional branches, event protection, and
//! rescheduling.

pub mod model;

pub use model::*;
