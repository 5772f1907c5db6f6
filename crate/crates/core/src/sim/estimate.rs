use super::parallel::reduce_trials;
use super::rng::TrialStreams;
use super::sampling::{InterferenceField, NetworkSampler, DEFAULT_TRUNCATION_TOL};
use super::stats::binomial_stderr;
use crate::analytic::{RateAllocation, SystemParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SimOptions {
    pub trials: u64,
    pub seed: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub truncation_tol: f64,
    pub field: InterferenceField,
}

impl SimOptions {
    pub fn new(trials: u64, seed: u64) -> Self {
        SimOptions {
            trials,
            seed,
            workers: None,
            truncation_tol: DEFAULT_TRUNCATION_TOL,
            field: InterferenceField::PerUser,
        }
    }

    pub fn workers(mut self, n: usize) -> Self {
        self.workers = Some(n);
        self
    }
}

/// Per-user outage frequencies with binomial standard errors.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloEstimate {
    pub per_user_outage: Vec<f64>,
    pub std_err: Vec<f64>,
    pub oma_outage: Vec<f64>,
    pub oma_std_err: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    /// Largest PPP truncation radius used, metres.
    pub truncation_radius: f64,
}

pub fn estimate_outage(
    params: &SystemParams,
    alloc: &RateAllocation,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    estimate_outage_with(params, alloc, &SimOptions::new(trials, seed))
}

pub fn estimate_outage_with(
    params: &SystemParams,
    alloc: &RateAllocation,
    opts: &SimOptions,
) -> Result<MonteCarloEstimate> {
    if opts.trials == 0 {
        return Err(Error::invalid("at least one trial is required"));
    }
    let users = params.users();
    if alloc.users() != users {
        return Err(Error::invalid(format!(
            "allocation has {} users, system has {users}",
            alloc.users()
        )));
    }
    let sampler = NetworkSampler::new(params, opts.truncation_tol, opts.field)?;
    let counts = reduce_trials(
        opts.trials,
        opts.workers,
        vec![0u64; 2 * users],
        |acc, t| {
            let r = sampler.trial(alloc, TrialStreams::new(opts.seed, t));
            for m in 0..users {
                acc[m] += r.outage_flags[m] as u64;
                acc[users + m] += r.oma_flags[m] as u64;
            }
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    let n = opts.trials;
    let freq = |c: &u64| *c as f64 / n as f64;
    let per_user_outage: Vec<f64> = counts[..users].iter().map(freq).collect();
    let oma_outage: Vec<f64> = counts[users..].iter().map(freq).collect();
    Ok(MonteCarloEstimate {
        std_err: per_user_outage.iter().map(|&p| binomial_stderr(p, n)).collect(),
        oma_std_err: oma_outage.iter().map(|&p| binomial_stderr(p, n)).collect(),
        per_user_outage,
        oma_outage,
        trials: n,
        seed: opts.seed,
        truncation_radius: sampler.pt_radius().max(sampler.pr_radius()),
    })
}
