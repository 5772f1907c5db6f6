//! Cross-validation report: quadrature rules against adaptive integrals,
//! sampled laws against their closed forms, and analytic outage against
//! simulation. Tolerances come from the `[validation]` section.

use std::fmt;

use rayon::prelude::*;

use super::config::Config;
use crate::analytic::{
    gamma_t_pdf_parts, laplace_ib_exact, laplace_ib_numeric, order_statistic_cdf, unordered_cdf_exact,
    LaplaceGc, OutageModel, PathLoss, Snr, SystemParams, UnorderedExpansion,
};
use crate::error::Result;
use crate::sim::stats::{binomial_stderr, ks_distance, mean_and_stderr};
use crate::sim::{estimate_outage_with, InterferenceField, NetworkSampler, Purpose, TrialStreams};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// Lines identifying the configuration, printed as comments.
    pub metadata: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check<'a>(&'a self, name_prefix: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.name.starts_with(name_prefix))
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.metadata {
            writeln!(f, "# {line}")?;
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {}: {}", c.name, c.detail)?;
        }
        let failed = self.failures().count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn log_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..n).map(move |i| 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64))
}

fn samples<F>(n: u64, seed: u64, draw: F) -> Vec<f64>
where
    F: Fn(TrialStreams) -> f64 + Sync,
{
    (0..n).into_par_iter().map(|i| draw(TrialStreams::new(seed, i))).collect()
}

fn quadrature_checks(config: &Config, report: &mut ValidationReport) {
    let p = &config.system;
    let tol = config.validation.quadrature_tol;
    let (n, _, l) = config.quadrature.counts();

    let expansion = UnorderedExpansion::new(p, config.quadrature.n_rule());
    let worst = log_grid(1e-3, 1e2, 60)
        .map(|y| (expansion.cdf(y) - unordered_cdf_exact(y, p)).abs())
        .fold(0.0, f64::max);
    report.push(
        format!("quadrature: unordered gain CDF, N={n}"),
        worst <= tol,
        format!("max |GC - integral| = {worst:.3e} on y in [1e-3, 1e2], tol {tol:.1e}"),
    );

    let gc = LaplaceGc::new(p, config.quadrature.l_rule());
    let worst = log_grid(1e-2, 1e3, 60)
        .chain(config.validation.laplace_s.iter().copied())
        .map(|s| (gc.eval(s) - laplace_ib_exact(s, p)).abs())
        .fold(0.0, f64::max);
    report.push(
        format!("quadrature: interference transform, L={l}"),
        worst <= tol,
        format!("max |GC - closed form| = {worst:.3e} on s in [1e-2, 1e3], tol {tol:.1e}"),
    );
}

fn gamma_t_check(config: &Config, sampler: &NetworkSampler, report: &mut ValidationReport) {
    let v = &config.validation;
    let law = gamma_t_pdf_parts(sampler.params());
    let draws = samples(v.ks_samples, config.sweep.seed, |s| {
        sampler.gamma_t(&mut s.rng(Purpose::PrimaryReceivers))
    });
    let ks = ks_distance(&draws, |x| law.cdf(x), |x| law.cdf_left(x));
    let at_cap = draws.iter().filter(|&&x| x >= law.rho_s()).count() as f64 / draws.len() as f64;
    let se = binomial_stderr(law.atom_weight(), v.ks_samples);
    let atom_ok = (at_cap - law.atom_weight()).abs() <= v.mc_sigma * se;
    report.push(
        "gamma_t: KS distance and atom",
        ks <= v.ks_tol && atom_ok,
        format!(
            "KS {ks:.4} (tol {}), atom {at_cap:.5} vs {:.5} ± {:.1}σ (σ={se:.2e}), {} samples",
            v.ks_tol,
            law.atom_weight(),
            v.mc_sigma,
            v.ks_samples
        ),
    );
}

fn laplace_check(config: &Config, sampler: &NetworkSampler, report: &mut ValidationReport) {
    let v = &config.validation;
    let p = sampler.params();
    let draws = samples(v.laplace_samples, config.sweep.seed, |s| {
        sampler.interference(&mut s.rng(Purpose::Interference(0)))
    });
    for &s in &v.laplace_s {
        let values: Vec<f64> = draws.iter().map(|i| (-s * i).exp()).collect();
        let (mean, se) = mean_and_stderr(&values);
        let reference = match p.pt_path_loss() {
            PathLoss::Unbounded => laplace_ib_exact(s, p),
            PathLoss::Bounded => laplace_ib_numeric(s, p),
        };
        let diff = (mean - reference).abs();
        report.push(
            format!("interference: Laplace transform at s={s}"),
            diff <= v.laplace_sigma * se,
            format!(
                "empirical {mean:.6} vs {reference:.6}, |diff| {diff:.2e} <= {}σ (σ={se:.2e})",
                v.laplace_sigma
            ),
        );
    }
}

fn ordered_gain_check(config: &Config, sampler: &NetworkSampler, report: &mut ValidationReport) {
    let v = &config.validation;
    let p = sampler.params();
    let users = p.users();
    let draws: Vec<Vec<f64>> = (0..v.ks_samples)
        .into_par_iter()
        .map(|i| sampler.gains(&mut TrialStreams::new(config.sweep.seed, i).rng(Purpose::Gains)))
        .collect();
    for m in 1..=users {
        let column: Vec<f64> = draws.iter().map(|g| g[m - 1]).collect();
        let cdf = |y: f64| order_statistic_cdf(unordered_cdf_exact(y, p), m, users).expect("valid index");
        let ks = ks_distance(&column, cdf, cdf);
        report.push(
            format!("ordered gains: KS distance, m={m}"),
            ks <= v.ks_tol,
            format!("KS {ks:.4} (tol {}), {} samples", v.ks_tol, v.ks_samples),
        );
    }
}

fn outage_checks(config: &Config, report: &mut ValidationReport) -> Result<()> {
    let v = &config.validation;
    let alloc = &config.allocation;
    let model = OutageModel::new(&config.system, &v.outage_quadrature)?;
    let mut opts = config.sweep.sim_options();
    opts.trials = v.trials;
    let (qn, qk, ql) = v.outage_quadrature.counts();
    let grid = v.rho_s_db.as_ref().unwrap_or(&config.sweep.rho_s_db);
    for &db in grid {
        let at = model.at_rho_s(Snr::from_db(db))?;
        let sim = estimate_outage_with(at.params(), alloc, &opts)?;
        for m in 1..=config.system.users() {
            let analytic = at.outage(m, alloc)?.probability;
            let (mean, se) = (sim.per_user_outage[m - 1], sim.std_err[m - 1]);
            let name = format!("outage: analytic vs simulation, {db} dB, m={m}");
            if analytic < v.min_outage {
                report.push(
                    name,
                    true,
                    format!("analytic {analytic:.3e} below {:.0e}, not compared", v.min_outage),
                );
                continue;
            }
            let band = (v.mc_rel_tol * mean).max(v.mc_sigma * se);
            let diff = (analytic - mean).abs();
            report.push(
                name,
                diff <= band,
                format!(
                    "analytic {analytic:.4e} (N={qn},K={qk},L={ql}) vs simulated {mean:.4e} ± {se:.1e}, |diff| {diff:.2e} <= {band:.2e}"
                ),
            );
        }
    }
    Ok(())
}

/// Runs every check and collects the results; a failing check does not
/// stop the others.
pub fn validate(config: &Config) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        checks: Vec::new(),
        metadata: super::sweep::run_metadata(config),
    };
    quadrature_checks(config, &mut report);
    let sampler = sampler_for(&config.system, config)?;
    gamma_t_check(config, &sampler, &mut report);
    laplace_check(config, &sampler, &mut report);
    ordered_gain_check(config, &sampler, &mut report);
    outage_checks(config, &mut report)?;
    Ok(report)
}

fn sampler_for(params: &SystemParams, config: &Config) -> Result<NetworkSampler> {
    NetworkSampler::new(params, config.sweep.truncation_tol, InterferenceField::PerUser)
}
