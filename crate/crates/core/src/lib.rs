//! Outage analysis of downlink NOMA in a large-scale underlay cognitive
//! radio network, with a Monte Carlo simulator to check the closed forms
//! and a harness that sweeps, validates and plots them.

pub mod analytic;
pub mod error;
pub mod harness;
pub mod numerics;
pub mod sim;

pub use error::{Error, Result};
