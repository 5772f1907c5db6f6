//! Sweeps of `ρ_s` producing analytic, simulated, asymptotic and OMA
//! outage per user.

use rayon::prelude::*;

use super::config::Config;
use crate::analytic::{fixed_regime_constant, OutageModel, Regime, Snr};
use crate::error::Result;
use crate::sim::estimate_outage_with;

/// One `(ρ_s, user)` entry of a curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow {
    pub rho_s_db: f64,
    /// 1-based user index.
    pub user: usize,
    pub analytic: f64,
    pub sim_mean: Option<f64>,
    pub sim_stderr: Option<f64>,
    pub asymptote: f64,
    pub oma_analytic: f64,
}

/// Rows ordered by sweep point, then user.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutageCurve {
    pub users: usize,
    pub rows: Vec<CurveRow>,
    /// Free-form lines carried into emitted artifacts as comments.
    pub metadata: Vec<String>,
}

impl OutageCurve {
    /// Distinct sweep points in order.
    pub fn points(&self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for r in &self.rows {
            if out.last() != Some(&r.rho_s_db) {
                out.push(r.rho_s_db);
            }
        }
        out
    }

    pub fn user_rows(&self, m: usize) -> impl Iterator<Item = &CurveRow> {
        self.rows.iter().filter(move |r| r.user == m)
    }

    pub fn has_simulation(&self) -> bool {
        self.rows.iter().any(|r| r.sim_mean.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Metadata lines reproducing a run: the resolved configuration, seed
/// included.
pub fn run_metadata(config: &Config) -> Vec<String> {
    config.to_toml().lines().map(str::to_string).collect()
}

fn sweep(config: &Config, simulate: bool) -> Result<OutageCurve> {
    let users = config.system.users();
    let alloc = &config.allocation;
    let spec = &config.sweep;
    let model = OutageModel::new(&config.system, &config.quadrature)?;

    let asymptote: Box<dyn Fn(&OutageModel, usize) -> Result<f64> + Sync> = match spec.regime {
        Regime::FixedPtPower => {
            let constants = (1..=users)
                .map(|m| {
                    fixed_regime_constant(
                        m,
                        &config.system,
                        alloc,
                        &config.quadrature,
                        spec.asymptote_trials,
                        spec.seed,
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            Box::new(move |model: &OutageModel, m: usize| {
                Ok(constants[m - 1].outage_at(model.params().rho_s().linear()))
            })
        }
        Regime::Proportional => {
            let floors = (1..=users)
                .map(|m| Ok(model.floor(m, alloc)?.probability))
                .collect::<Result<Vec<f64>>>()?;
            Box::new(move |_: &OutageModel, m: usize| Ok(floors[m - 1]))
        }
    };

    let analytic: Vec<Vec<(f64, f64, f64)>> = spec
        .rho_s_db
        .par_iter()
        .map(|&db| {
            let at = model.at_rho_s(Snr::from_db(db))?;
            (1..=users)
                .map(|m| {
                    Ok((
                        at.outage(m, alloc)?.probability,
                        asymptote(&at, m)?,
                        at.oma_outage(m, alloc)?.probability,
                    ))
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let mut rows = Vec::with_capacity(spec.rho_s_db.len() * users);
    for (&db, values) in spec.rho_s_db.iter().zip(analytic) {
        let sim = if simulate {
            Some(estimate_outage_with(&config.system_at(db)?, alloc, &spec.sim_options())?)
        } else {
            None
        };
        for (i, (analytic, asymptote, oma)) in values.into_iter().enumerate() {
            rows.push(CurveRow {
                rho_s_db: db,
                user: i + 1,
                analytic,
                sim_mean: sim.as_ref().map(|s| s.per_user_outage[i]),
                sim_stderr: sim.as_ref().map(|s| s.std_err[i]),
                asymptote,
                oma_analytic: oma,
            });
        }
    }
    Ok(OutageCurve {
        users,
        rows,
        metadata: run_metadata(config),
    })
}

/// Analytic, simulated, asymptotic and OMA outage at every sweep point.
/// The proportional regime rescales `ρ_p` and `ρ_b` with each point.
pub fn run_sweep(config: &Config) -> Result<OutageCurve> {
    sweep(config, true)
}

/// As [`run_sweep`] without the Monte Carlo columns.
pub fn run_analytic_sweep(config: &Config) -> Result<OutageCurve> {
    sweep(config, false)
}
