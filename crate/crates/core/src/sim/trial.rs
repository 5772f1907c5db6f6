use super::rng::{Purpose, TrialStreams};
use super::sampling::{InterferenceField, NetworkSampler, DEFAULT_TRUNCATION_TOL};
use crate::analytic::{RateAllocation, SystemParams};
use crate::error::Result;

/// One sampled network realization and its per-user decoding outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRealization {
    /// `|h_1|² <= … <= |h_M|²`.
    pub ordered_gains: Vec<f64>,
    pub gamma_t: f64,
    /// `I_B` seen by each ordered user.
    pub interference: Vec<f64>,
    pub outage_flags: Vec<bool>,
    pub oma_flags: Vec<bool>,
}

impl TrialRealization {
    /// `X_m = |h_m|² γ_t / (ρ_b I_B + 1)` for the 1-based user `m`.
    pub fn effective_snr(&self, m: usize, rho_b: f64) -> f64 {
        self.ordered_gains[m - 1] * self.gamma_t / (rho_b * self.interference[m - 1] + 1.0)
    }
}

/// Direct SIC test: user `m` fails if any `γ_{m,j} < τ_j` for `j <= m`.
pub fn sinr_chain_outage(
    gain: f64,
    gamma_t: f64,
    interference: f64,
    rho_b: f64,
    alloc: &RateAllocation,
    m: usize,
) -> bool {
    let a = alloc.power();
    let tau = alloc.tau();
    let signal = gain * gamma_t;
    let noise = rho_b * interference + 1.0;
    (0..m).any(|j| {
        let rest: f64 = a[j + 1..].iter().sum();
        signal * a[j] / (signal * rest + noise) < tau[j]
    })
}

impl NetworkSampler {
    pub fn trial(&self, alloc: &RateAllocation, streams: TrialStreams) -> TrialRealization {
        let params = self.params();
        let users = params.users();
        let gamma_t = self.gamma_t(&mut streams.rng(Purpose::PrimaryReceivers));
        let (ordered_gains, interference) = match self.field() {
            InterferenceField::PerUser => {
                let gains = self.gains(&mut streams.rng(Purpose::Gains));
                let interference = (0..users)
                    .map(|u| self.interference(&mut streams.rng(Purpose::Interference(u as u32))))
                    .collect();
                (gains, interference)
            }
            InterferenceField::Common => self.common_field(
                &mut streams.rng(Purpose::Gains),
                &mut streams.rng(Purpose::CommonField),
            ),
        };
        let rho_b = params.rho_b();
        let x: Vec<f64> = ordered_gains
            .iter()
            .zip(&interference)
            .map(|(g, i)| g * gamma_t / (rho_b * i + 1.0))
            .collect();
        let outage_flags = if alloc.feasible() {
            x.iter().zip(alloc.eps_max()).map(|(x, e)| x < e).collect()
        } else {
            vec![true; users]
        };
        let oma_flags = x
            .iter()
            .enumerate()
            .map(|(i, x)| *x < alloc.oma_threshold(i + 1))
            .collect();
        TrialRealization {
            ordered_gains,
            gamma_t,
            interference,
            outage_flags,
            oma_flags,
        }
    }
}

/// Runs a single trial with the default truncation and per-user fields.
pub fn run_trial(
    params: &SystemParams,
    alloc: &RateAllocation,
    streams: TrialStreams,
) -> Result<TrialRealization> {
    let sampler = NetworkSampler::new(params, DEFAULT_TRUNCATION_TOL, InterferenceField::PerUser)?;
    Ok(sampler.trial(alloc, streams))
}
