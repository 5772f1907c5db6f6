//! Monte Carlo ground truth: samples the network geometry and fading,
//! applies the interference cap and the SIC chain, and estimates outage.

mod estimate;
mod parallel;
mod rng;
mod sampling;
pub mod stats;
mod trial;

pub use estimate::{estimate_outage, estimate_outage_with, MonteCarloEstimate, SimOptions};
pub use parallel::reduce_trials;
pub use rng::{Purpose, TrialStreams};
pub use sampling::{
    sample_annulus_ppp, sample_gamma_t, sample_interference, sample_su_gains, truncation_radius,
    InterferenceField, NetworkSampler, DEFAULT_TRUNCATION_TOL,
};
pub use trial::{run_trial, sinr_chain_outage, TrialRealization};
