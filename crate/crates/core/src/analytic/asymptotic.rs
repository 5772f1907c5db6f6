//! High-SNR behaviour of the fixed-ρ_b regime: `P_m ≈ C / ρ_s^m`.

use super::allocation::RateAllocation;
use super::channel::{psi, UnorderedExpansion};
use super::params::{Regime, SystemParams};
use super::quadrature::QuadratureSpec;
use crate::error::{Error, Result};
use crate::sim::{reduce_trials, InterferenceField, NetworkSampler, Purpose, TrialStreams, DEFAULT_TRUNCATION_TOL};

/// Default number of samples for the Monte Carlo constant.
pub const DEFAULT_ASYMPTOTE_TRIALS: u64 = 1_000_000;

/// `C = E[ξ ((ρ_b I_B + 1) ε_max / γ_{t*})^m]` with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConstant {
    pub user: usize,
    pub value: f64,
    pub std_err: f64,
    pub trials: u64,
}

impl AsymptoticConstant {
    /// `C / ρ_s^m` at linear SNR `rho_s`.
    pub fn outage_at(&self, rho_s: f64) -> f64 {
        (self.value / rho_s.powi(self.user as i32)).min(1.0)
    }

    pub fn std_err_at(&self, rho_s: f64) -> f64 {
        self.std_err / rho_s.powi(self.user as i32)
    }
}

/// `ξ = ψ_m (Σ χ_n)^m / m`, the leading coefficient of `F_(m)(y) ≈ ξ y^m`.
pub fn xi(m: usize, params: &SystemParams, quad: &QuadratureSpec) -> f64 {
    let slope = UnorderedExpansion::new(params, quad.n_rule()).small_argument_slope();
    psi(m, params.users()) * slope.powi(m as i32) / m as f64
}

pub fn fixed_regime_constant(
    m: usize,
    params: &SystemParams,
    alloc: &RateAllocation,
    quad: &QuadratureSpec,
    trials: u64,
    seed: u64,
) -> Result<AsymptoticConstant> {
    let kappa = match (params.regime(), params.kappa()) {
        (Some(Regime::FixedPtPower), Some(kappa)) => kappa,
        _ => {
            return Err(Error::InvalidConfiguration(
                "the fixed-regime asymptote needs kappa set and a fixed rho_b".into(),
            ))
        }
    };
    let users = params.users();
    if m == 0 || m > users {
        return Err(Error::invalid(format!("user index {m} outside 1..={users}")));
    }
    if alloc.users() != users {
        return Err(Error::invalid("allocation and system disagree on the user count"));
    }
    if trials == 0 {
        return Err(Error::invalid("at least one trial is required"));
    }
    if !alloc.feasible() {
        return Ok(AsymptoticConstant {
            user: m,
            value: f64::INFINITY,
            std_err: 0.0,
            trials,
        });
    }
    let eps = alloc.eps_max()[m - 1];
    let xi = xi(m, params, quad);
    let rho_b = params.rho_b();
    let sampler = NetworkSampler::new(params, DEFAULT_TRUNCATION_TOL, InterferenceField::PerUser)?;
    let (sum, sum_sq) = reduce_trials(
        trials,
        None,
        (0.0f64, 0.0f64),
        |acc, t| {
            let streams = TrialStreams::new(seed, t);
            let g = sampler.max_pr_gain(&mut streams.rng(Purpose::PrimaryReceivers));
            let gamma_star = if g > 0.0 { (kappa / g).min(1.0) } else { 1.0 };
            let i_b = sampler.interference(&mut streams.rng(Purpose::Interference(0)));
            let v = xi * ((rho_b * i_b + 1.0) * eps / gamma_star).powi(m as i32);
            acc.0 += v;
            acc.1 += v * v;
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    let n = trials as f64;
    let mean = sum / n;
    let var = if trials > 1 {
        ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(AsymptoticConstant {
        user: m,
        value: mean,
        std_err: (var / n).sqrt(),
        trials,
    })
}

/// `C / ρ_s^m` with `C` estimated from `trials` samples.
pub fn outage_asymptotic_fixed(
    m: usize,
    params: &SystemParams,
    alloc: &RateAllocation,
    quad: &QuadratureSpec,
    trials: u64,
    seed: u64,
) -> Result<f64> {
    let c = fixed_regime_constant(m, params, alloc, quad, trials, seed)?;
    Ok(c.outage_at(params.rho_s().linear()))
}
