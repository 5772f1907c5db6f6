//! Laplace transform of the aggregate primary-transmitter interference
//! `I_B` seen by an SU with a guard zone of radius `d_0`.

use std::f64::consts::PI;

use super::params::{PathLoss, SystemParams};
use crate::numerics::{integrate, lower_incomplete_gamma, ChebyshevRule};

/// `exp(-λ_b π [(e^{-s d_0^{-α}} - 1) d_0² + s^δ γ(1-δ, s d_0^{-α})])`.
///
/// This is the transform of `Σ d^{-α}` over a PPP outside the guard zone.
pub fn laplace_ib_exact(s: f64, params: &SystemParams) -> f64 {
    let lambda = params.pt_density();
    if s <= 0.0 || lambda == 0.0 {
        return 1.0;
    }
    let d0 = params.guard_zone_radius();
    let delta = params.delta();
    let t = s * d0.powf(-params.alpha());
    let inc = lower_incomplete_gamma(1.0 - delta, t).expect("alpha > 2 gives 0 < 1-δ < 1");
    (-lambda * PI * ((-t).exp_m1() * d0 * d0 + s.powf(delta) * inc)).exp()
}

/// Quadrature form of [`laplace_ib_exact`] with the incomplete gamma
/// replaced by `s^{1-δ} Σ_l β_l e^{-t_l s d_0^{-α}}`.
#[derive(Debug, Clone)]
pub struct LaplaceGc {
    lambda: f64,
    d0: f64,
    d0_pow: f64,
    beta: Vec<f64>,
    t: Vec<f64>,
}

impl LaplaceGc {
    pub fn new(params: &SystemParams, rule: &ChebyshevRule) -> Self {
        let alpha = params.alpha();
        let delta = params.delta();
        let d0 = params.guard_zone_radius();
        let w = rule.weight();
        let scale = 0.5 * d0.powf(2.0 - alpha) * w;
        let (beta, t) = rule
            .nodes()
            .iter()
            .zip(rule.root_factors())
            .map(|(&theta, root)| {
                let t = 0.5 * (theta + 1.0);
                (scale * root * t.powf(-delta), t)
            })
            .unzip();
        LaplaceGc {
            lambda: params.pt_density(),
            d0,
            d0_pow: d0.powf(-alpha),
            beta,
            t,
        }
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn nodes(&self) -> &[f64] {
        &self.t
    }

    #[inline]
    pub fn eval(&self, s: f64) -> f64 {
        if self.lambda == 0.0 || s == 0.0 {
            return 1.0;
        }
        let u = s * self.d0_pow;
        let sum: f64 = self
            .beta
            .iter()
            .zip(&self.t)
            .map(|(b, t)| b * (-t * u).exp())
            .sum();
        (-self.lambda * PI * ((-u).exp_m1() * self.d0 * self.d0 + s * sum)).exp()
    }
}

pub fn laplace_ib_gc(s: f64, params: &SystemParams, rule: &ChebyshevRule) -> f64 {
    LaplaceGc::new(params, rule).eval(s)
}

/// `exp(-2πλ_b ∫_{d_0}^∞ (1 - e^{-s L(r)}) r dr)` integrated numerically for
/// the configured PT path-loss law.
pub fn laplace_ib_numeric(s: f64, params: &SystemParams) -> f64 {
    let lambda = params.pt_density();
    if s <= 0.0 || lambda == 0.0 {
        return 1.0;
    }
    let alpha = params.alpha();
    let d0 = params.guard_zone_radius();
    let model: PathLoss = params.pt_path_loss();
    // r = d_0 / u maps [d_0, ∞) onto (0, 1].
    let integrand = |u: f64| {
        if u <= 0.0 {
            return 0.0;
        }
        let r = d0 / u;
        -(-s * model.gain(r, alpha)).exp_m1() * r * d0 / (u * u)
    };
    let r = integrate(integrand, 0.0, 1.0, 1e-15, 1e-12);
    (-2.0 * PI * lambda * r.value).exp()
}
