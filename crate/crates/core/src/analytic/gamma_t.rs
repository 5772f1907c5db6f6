//! Law of the effective secondary transmit SNR
//! `γ_t = min(ρ_p / max_ℓ |g_ℓ|², ρ_s)` under the PR interference cap.

use std::f64::consts::PI;

use super::params::SystemParams;
use crate::numerics::gamma_fn;

/// Mixed law of `γ_t`: an atom at `ρ_s` plus a density on `(0, ρ_s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaTDistribution {
    atom_weight: f64,
    a_l: f64,
    rho_s: f64,
    rho_p: f64,
    delta: f64,
}

impl GammaTDistribution {
    pub fn new(params: &SystemParams) -> Self {
        let delta = params.delta();
        let rho_p = params.rho_p();
        let rho_s = params.rho_s().linear();
        let gamma = gamma_fn(delta).expect("δ > 0");
        let a_l = delta * PI * params.pr_density() * gamma / rho_p.powf(delta);
        let atom_weight = (-a_l * rho_s.powf(delta) * (-rho_p / rho_s).exp()).exp();
        GammaTDistribution {
            atom_weight,
            a_l,
            rho_s,
            rho_p,
            delta,
        }
    }

    /// `Pr{γ_t = ρ_s}`.
    pub fn atom_weight(&self) -> f64 {
        self.atom_weight
    }

    /// `a_ℓ = δ π λ_ℓ Γ(δ) / ρ_p^δ`.
    pub fn a_l(&self) -> f64 {
        self.a_l
    }

    pub fn rho_s(&self) -> f64 {
        self.rho_s
    }

    /// `Pr{max_ℓ |g_ℓ|² ≥ ρ_p / x} = 1 - exp(-a_ℓ x^δ e^{-ρ_p/x})`.
    fn below_cap(&self, x: f64) -> f64 {
        -(-self.a_l * x.powf(self.delta) * (-self.rho_p / x).exp()).exp_m1()
    }

    /// Right-continuous CDF.
    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else if x >= self.rho_s {
            1.0
        } else {
            self.below_cap(x)
        }
    }

    /// `Pr{γ_t < x}`.
    pub fn cdf_left(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else if x > self.rho_s {
            1.0
        } else {
            self.below_cap(x)
        }
    }

    /// Continuous part of the law on `(0, ρ_s)`.
    pub fn density(&self, x: f64) -> f64 {
        if x <= 0.0 || x >= self.rho_s {
            return 0.0;
        }
        let ratio = self.rho_p / x;
        (ratio + self.delta)
            * self.a_l
            * x.powf(self.delta - 1.0)
            * (-self.a_l * x.powf(self.delta) * (-ratio).exp() - ratio).exp()
    }
}

pub fn gamma_t_cdf(x: f64, params: &SystemParams) -> f64 {
    GammaTDistribution::new(params).cdf(x)
}

pub fn gamma_t_pdf_parts(params: &SystemParams) -> GammaTDistribution {
    GammaTDistribution::new(params)
}
