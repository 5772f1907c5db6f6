//! Closed-form distributions and outage probabilities of the downlink
//! NOMA cognitive network.

mod allocation;
mod asymptotic;
mod channel;
mod gamma_t;
mod laplace;
mod outage;
mod params;
mod quadrature;

pub use allocation::RateAllocation;
pub use asymptotic::{
    fixed_regime_constant, outage_asymptotic_fixed, xi, AsymptoticConstant, DEFAULT_ASYMPTOTE_TRIALS,
};
pub use channel::{
    for_each_composition, order_statistic_cdf, ordered_cdf, psi, unordered_cdf_exact, unordered_cdf_gc,
    ExpTerm, OrderedExpansion, UnorderedCdfGc, UnorderedExpansion,
};
pub use gamma_t::{gamma_t_cdf, gamma_t_pdf_parts, GammaTDistribution};
pub use laplace::{laplace_ib_exact, laplace_ib_gc, laplace_ib_numeric, LaplaceGc};
pub use outage::{
    oma_outage_exact, outage_exact, outage_floor_proportional, AveragingKernel, OutageEvaluation,
    OutageModel, CLAMP_TOLERANCE,
};
pub use params::{PathLoss, PowerLink, Regime, Snr, SystemParams, SystemParamsBuilder};
pub use quadrature::QuadratureSpec;
