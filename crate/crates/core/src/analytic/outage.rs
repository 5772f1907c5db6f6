//! Closed-form outage probability of the `m`-th NOMA user, its OMA
//! counterpart, and the high-SNR floor of the proportional regime.

use std::f64::consts::PI;
use std::sync::Arc;

use super::allocation::RateAllocation;
use super::channel::{OrderedExpansion, UnorderedExpansion};
use super::laplace::LaplaceGc;
use super::params::{Regime, SystemParams, Snr};
use super::quadrature::QuadratureSpec;
use crate::error::{Error, Result};
use crate::numerics::gamma_fn;

/// Excursions outside `[0, 1]` larger than this are reported.
pub const CLAMP_TOLERANCE: f64 = 1e-9;

/// `E[exp(-y (ρ_b I_B + 1) / γ_t)]` with `γ_t = ρ_s s`, evaluated with the
/// atom at `s = 1` plus a K-point rule over the density on `(0, 1)`.
#[derive(Debug, Clone)]
pub struct AveragingKernel {
    atom: f64,
    kappa: f64,
    noise: f64,
    interference: f64,
    s: Vec<f64>,
    eta: Vec<f64>,
    laplace: LaplaceGc,
}

impl AveragingKernel {
    fn build(params: &SystemParams, quad: &QuadratureSpec, kappa: f64, noise: f64, interference: f64) -> Self {
        let delta = params.delta();
        let a = delta * PI * params.pr_density() * gamma_fn(delta).expect("δ > 0") / kappa.powf(delta);
        let rule = quad.k_rule();
        let half_w = 0.5 * rule.weight();
        let (s, eta) = rule
            .nodes()
            .iter()
            .zip(rule.root_factors())
            .map(|(&phi, root)| {
                let s = 0.5 * (phi + 1.0);
                let eta = half_w
                    * root
                    * (kappa / s + delta)
                    * a
                    * s.powf(delta - 1.0)
                    * (-a * s.powf(delta) * (-kappa / s).exp()).exp();
                (s, eta)
            })
            .unzip();
        AveragingKernel {
            atom: (-a * (-kappa).exp()).exp(),
            kappa,
            noise,
            interference,
            s,
            eta,
            laplace: LaplaceGc::new(params, quad.l_rule()),
        }
    }

    /// Kernel at the configured `ρ_s`.
    pub fn finite(params: &SystemParams, quad: &QuadratureSpec) -> Self {
        let rho_s = params.rho_s().linear();
        AveragingKernel::build(
            params,
            quad,
            params.rho_p() / rho_s,
            1.0 / rho_s,
            params.rho_b() / rho_s,
        )
    }

    /// Limit `ρ_s → ∞` with `ρ_p = κ ρ_s` and `ρ_b = ν ρ_s`.
    pub fn floor(params: &SystemParams, quad: &QuadratureSpec) -> Result<Self> {
        match (params.regime(), params.kappa(), params.nu()) {
            (Some(Regime::Proportional), Some(kappa), Some(nu)) => {
                Ok(AveragingKernel::build(params, quad, kappa, 0.0, nu))
            }
            _ => Err(Error::InvalidConfiguration(
                "the error floor needs the proportional regime (kappa and nu set)".into(),
            )),
        }
    }

    pub fn atom_weight(&self) -> f64 {
        self.atom
    }

    pub fn eval(&self, y: f64) -> f64 {
        let atom = self.atom * (-self.noise * y).exp() * self.laplace.eval(self.interference * y);
        let density: f64 = self
            .s
            .iter()
            .zip(&self.eta)
            .map(|(&s, &eta)| {
                eta * (-(self.kappa + self.noise * y) / s).exp()
                    * self.laplace.eval(self.interference * y / s)
            })
            .sum();
        atom + density
    }
}

/// A probability clamped to `[0, 1]` together with the raw sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutageEvaluation {
    pub probability: f64,
    pub raw: f64,
}

impl OutageEvaluation {
    fn exact(p: f64) -> Self {
        OutageEvaluation {
            probability: p,
            raw: p,
        }
    }

    fn clamped(raw: f64) -> Self {
        OutageEvaluation {
            probability: raw.clamp(0.0, 1.0),
            raw,
        }
    }

    /// True when the raw value left `[0, 1]` by more than [`CLAMP_TOLERANCE`].
    pub fn out_of_range(&self) -> bool {
        self.raw < -CLAMP_TOLERANCE || self.raw > 1.0 + CLAMP_TOLERANCE
    }
}

#[derive(Debug)]
struct Tables {
    unordered: UnorderedExpansion,
    ordered: Vec<OrderedExpansion>,
}

/// Outage evaluator with the ρ_s-independent coefficient tables computed
/// once and shared between clones and sweep points.
#[derive(Debug, Clone)]
pub struct OutageModel {
    params: SystemParams,
    quad: QuadratureSpec,
    tables: Arc<Tables>,
}

impl OutageModel {
    pub fn new(params: &SystemParams, quad: &QuadratureSpec) -> Result<Self> {
        let users = params.users();
        let unordered = UnorderedExpansion::new(params, quad.n_rule());
        let ordered = (1..=users)
            .map(|m| OrderedExpansion::new(m, users, &unordered))
            .collect::<Result<_>>()?;
        Ok(OutageModel {
            params: params.clone(),
            quad: quad.clone(),
            tables: Arc::new(Tables { unordered, ordered }),
        })
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quad
    }

    pub fn unordered(&self) -> &UnorderedExpansion {
        &self.tables.unordered
    }

    pub fn ordered(&self, m: usize) -> Result<&OrderedExpansion> {
        self.check_user(m)?;
        Ok(&self.tables.ordered[m - 1])
    }

    /// The same model at another `ρ_s`, reusing the coefficient tables.
    pub fn at_rho_s(&self, rho_s: Snr) -> Result<Self> {
        Ok(OutageModel {
            params: self.params.at_rho_s(rho_s)?,
            quad: self.quad.clone(),
            tables: Arc::clone(&self.tables),
        })
    }

    fn check_user(&self, m: usize) -> Result<()> {
        let users = self.params.users();
        if m == 0 || m > users {
            return Err(Error::invalid(format!("user index {m} outside 1..={users}")));
        }
        Ok(())
    }

    fn check_alloc(&self, alloc: &RateAllocation) -> Result<()> {
        if alloc.users() != self.params.users() {
            return Err(Error::invalid(format!(
                "allocation has {} users, system has {}",
                alloc.users(),
                self.params.users()
            )));
        }
        Ok(())
    }

    fn averaged(&self, m: usize, threshold: f64, kernel: &AveragingKernel) -> OutageEvaluation {
        if threshold <= 0.0 {
            return OutageEvaluation::exact(0.0);
        }
        if !threshold.is_finite() {
            return OutageEvaluation::exact(1.0);
        }
        let mut sum = 0.0;
        let mut comp = 0.0;
        for t in self.tables.ordered[m - 1].terms() {
            let v = t.coefficient * kernel.eval(threshold * t.exponent);
            // Neumaier summation: the terms alternate in sign.
            let next = sum + v;
            comp += if sum.abs() >= v.abs() {
                (sum - next) + v
            } else {
                (v - next) + sum
            };
            sum = next;
        }
        OutageEvaluation::clamped(sum + comp)
    }

    /// `Pr{X_m < x}` at the configured `ρ_s`.
    pub fn cdf_x(&self, m: usize, x: f64) -> Result<OutageEvaluation> {
        self.check_user(m)?;
        Ok(self.averaged(m, x, &AveragingKernel::finite(&self.params, &self.quad)))
    }

    /// NOMA outage of user `m`: `Pr{X_m < ε_max^m}`, or 1 when the
    /// allocation cannot support the target rates.
    pub fn outage(&self, m: usize, alloc: &RateAllocation) -> Result<OutageEvaluation> {
        self.check_user(m)?;
        self.check_alloc(alloc)?;
        if !alloc.feasible() {
            return Ok(OutageEvaluation::exact(1.0));
        }
        self.cdf_x(m, alloc.eps_max()[m - 1])
    }

    /// Time-division baseline: `Pr{X_m < 2^{M R_m} - 1}`.
    pub fn oma_outage(&self, m: usize, alloc: &RateAllocation) -> Result<OutageEvaluation> {
        self.check_user(m)?;
        self.check_alloc(alloc)?;
        self.cdf_x(m, alloc.oma_threshold(m))
    }

    /// `ρ_s`-independent limit of the NOMA outage in the proportional regime.
    pub fn floor(&self, m: usize, alloc: &RateAllocation) -> Result<OutageEvaluation> {
        self.check_user(m)?;
        self.check_alloc(alloc)?;
        let kernel = AveragingKernel::floor(&self.params, &self.quad)?;
        if !alloc.feasible() {
            return Ok(OutageEvaluation::exact(1.0));
        }
        Ok(self.averaged(m, alloc.eps_max()[m - 1], &kernel))
    }
}

pub fn outage_exact(
    m: usize,
    params: &SystemParams,
    alloc: &RateAllocation,
    quad: &QuadratureSpec,
) -> Result<f64> {
    Ok(OutageModel::new(params, quad)?.outage(m, alloc)?.probability)
}

pub fn oma_outage_exact(
    m: usize,
    params: &SystemParams,
    alloc: &RateAllocation,
    quad: &QuadratureSpec,
) -> Result<f64> {
    Ok(OutageModel::new(params, quad)?.oma_outage(m, alloc)?.probability)
}

pub fn outage_floor_proportional(
    m: usize,
    params: &SystemParams,
    alloc: &RateAllocation,
    quad: &QuadratureSpec,
) -> Result<f64> {
    Ok(OutageModel::new(params, quad)?.floor(m, alloc)?.probability)
}
