//! Run configuration: a TOML file with `[system]`, `[allocation]`,
//! `[quadrature]`, `[sweep]` and an optional `[validation]` section.
//!
//! ```toml
//! [system]
//! users = 3
//! alpha = 4.0
//! user_zone_radius = 5.0
//! pt_density = 1e-3
//! pr_density = 1e-3
//! kappa = 1.0
//! rho_b_db = 20.0
//!
//! [allocation]
//! power = [0.5, 0.4, 0.1]
//! rates = [0.1, 0.1, 0.1]
//!
//! [sweep]
//! rho_s_db = [10.0, 20.0, 30.0, 40.0]
//! ```
//!
//! SNRs are given in dB and converted once here. Unknown keys, missing
//! keys and invalid values are reported with the offending key and line.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analytic::{
    PathLoss, PowerLink, QuadratureSpec, RateAllocation, Regime, Snr, SystemParams, SystemParamsBuilder,
    DEFAULT_ASYMPTOTE_TRIALS,
};
use crate::error::{Error, Result};
use crate::sim::{InterferenceField, SimOptions, DEFAULT_TRUNCATION_TOL};

pub const DEFAULT_SWEEP_TRIALS: u64 = 100_000;
pub const DEFAULT_VALIDATION_TRIALS: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 1;

/// Which artifacts a sweep writes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmitFlags {
    pub csv: bool,
    pub svg: bool,
    pub report: bool,
}

impl Default for EmitFlags {
    fn default() -> Self {
        EmitFlags {
            csv: true,
            svg: true,
            report: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Strictly increasing sweep points, dB.
    pub rho_s_db: Vec<f64>,
    pub regime: Regime,
    pub trials: u64,
    pub seed: u64,
    pub emit: EmitFlags,
    /// Samples for the Monte Carlo constant of the fixed-regime asymptote.
    pub asymptote_trials: u64,
    pub truncation_tol: f64,
    pub field: InterferenceField,
    pub workers: Option<usize>,
}

impl SweepSpec {
    pub fn sim_options(&self) -> SimOptions {
        SimOptions {
            trials: self.trials,
            seed: self.seed,
            workers: self.workers,
            truncation_tol: self.truncation_tol,
            field: self.field,
        }
    }
}

/// Tolerances and sample sizes of the validation report.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationSpec {
    pub quadrature_tol: f64,
    pub ks_tol: f64,
    pub ks_samples: u64,
    pub laplace_s: Vec<f64>,
    pub laplace_samples: u64,
    pub laplace_sigma: f64,
    pub trials: u64,
    pub mc_rel_tol: f64,
    pub mc_sigma: f64,
    pub min_outage: f64,
    /// Operating points of the outage check; the sweep grid when unset.
    pub rho_s_db: Option<Vec<f64>>,
    /// Rule used for the analytic side of the outage check.
    pub outage_quadrature: QuadratureSpec,
}

impl Default for ValidationSpec {
    fn default() -> Self {
        ValidationSpec {
            quadrature_tol: 1e-3,
            ks_tol: 0.01,
            ks_samples: 100_000,
            laplace_s: vec![0.5, 2.0, 8.0],
            laplace_samples: 1_000_000,
            laplace_sigma: 3.0,
            trials: DEFAULT_VALIDATION_TRIALS,
            mc_rel_tol: 0.1,
            mc_sigma: 3.0,
            min_outage: 1e-3,
            rho_s_db: None,
            outage_quadrature: QuadratureSpec::new(40, 20, 20).expect("nonzero counts"),
        }
    }
}

/// A fully resolved configuration. `system` is set to the first sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub system: SystemParams,
    pub allocation: RateAllocation,
    pub quadrature: QuadratureSpec,
    pub sweep: SweepSpec,
    pub validation: ValidationSpec,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct Document {
    system: SystemSection,
    allocation: AllocationSection,
    #[serde(default)]
    quadrature: QuadratureSection,
    #[serde(default)]
    sweep: SweepSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    validation: Option<ValidationSection>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SystemSection {
    users: usize,
    alpha: f64,
    user_zone_radius: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    guard_zone_radius: Option<f64>,
    pt_density: f64,
    pr_density: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rho_b_db: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pt_path_loss: Option<String>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct AllocationSection {
    power: Vec<f64>,
    rates: Vec<f64>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct QuadratureSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SweepSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_s_db: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    emit: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    asymptote_trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interference_field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    workers: Option<usize>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ValidationSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ks_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ks_samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    laplace_s: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    laplace_samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    laplace_sigma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mc_rel_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mc_sigma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_outage: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_s_db: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    outage_quadrature: Option<Vec<usize>>,
}

/// Resolves `section.key` to a 1-based line of `text`: the key's own line,
/// else the section header, else 1.
fn locate(text: &str, section: &str, key: &str) -> usize {
    let mut current = "";
    let mut header = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            current = name.trim();
            if current == section {
                header = Some(i + 1);
            }
            continue;
        }
        if current == section {
            if let Some((k, _)) = line.split_once('=') {
                if k.trim() == key {
                    return i + 1;
                }
            }
        }
    }
    header.unwrap_or(1)
}

fn line_of_offset(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Section and key named by the text around a decode error at `line`.
fn key_at(text: &str, line: usize) -> String {
    let mut section = String::new();
    for (i, raw) in text.lines().enumerate() {
        let l = raw.trim();
        if let Some(name) = l.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = name.trim().to_string();
            if i + 1 == line {
                return section;
            }
        } else if i + 1 == line {
            return match l.split_once('=') {
                Some((k, _)) if section.is_empty() => k.trim().to_string(),
                Some((k, _)) => format!("{section}.{}", k.trim()),
                None => section,
            };
        }
    }
    section
}

fn backticked(message: &str) -> Option<&str> {
    let start = message.find('`')? + 1;
    let len = message[start..].find('`')?;
    Some(&message[start..start + len])
}

fn decode_error(text: &str, err: toml::de::Error) -> Error {
    let message = err.message().to_string();
    let line = err.span().map_or(1, |s| line_of_offset(text, s.start));
    let mut key = key_at(text, line);
    if message.starts_with("missing field") || message.starts_with("unknown field") {
        if let Some(field) = backticked(&message) {
            let section = key.split('.').next().unwrap_or("").to_string();
            key = if section.is_empty() {
                field.to_string()
            } else {
                format!("{section}.{field}")
            };
        }
    }
    Error::Parse { line, key, message }
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn err(&self, section: &str, key: &str, message: impl Into<String>) -> Error {
        Error::Parse {
            line: locate(self.text, section, key),
            key: format!("{section}.{key}"),
            message: message.into(),
        }
    }

    fn wrap(&self, section: &str, key: &str, e: Error) -> Error {
        self.err(section, key, e.to_string())
    }
}

fn parse_path_loss(s: &str) -> Option<PathLoss> {
    match s {
        "unbounded" => Some(PathLoss::Unbounded),
        "bounded" => Some(PathLoss::Bounded),
        _ => None,
    }
}

fn path_loss_name(p: PathLoss) -> &'static str {
    match p {
        PathLoss::Unbounded => "unbounded",
        PathLoss::Bounded => "bounded",
    }
}

fn parse_field(s: &str) -> Option<InterferenceField> {
    match s {
        "per_user" => Some(InterferenceField::PerUser),
        "common" => Some(InterferenceField::Common),
        _ => None,
    }
}

fn field_name(f: InterferenceField) -> &'static str {
    match f {
        InterferenceField::PerUser => "per_user",
        InterferenceField::Common => "common",
    }
}

fn parse_regime(s: &str) -> Option<Regime> {
    match s {
        "fixed_rho_b" => Some(Regime::FixedPtPower),
        "proportional" => Some(Regime::Proportional),
        _ => None,
    }
}

pub fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::FixedPtPower => "fixed_rho_b",
        Regime::Proportional => "proportional",
    }
}

fn default_grid() -> Vec<f64> {
    (0..=12).map(|i| 5.0 * i as f64).collect()
}

fn resolve_system(ctx: &Ctx, s: &SystemSection, first_db: f64) -> Result<SystemParams> {
    type Step = Box<dyn Fn(SystemParamsBuilder) -> SystemParamsBuilder>;
    let kappa = s.kappa.ok_or_else(|| ctx.err("system", "kappa", "missing field `kappa`"))?;
    let rho_b: (&str, PowerLink) = match (s.rho_b_db, s.nu) {
        (Some(db), None) => ("rho_b_db", PowerLink::Fixed(Snr::from_db(db))),
        (None, Some(nu)) => ("nu", PowerLink::Proportional(nu)),
        (Some(_), Some(_)) => return Err(ctx.err("system", "nu", "set either rho_b_db or nu, not both")),
        (None, None) => return Err(ctx.err("system", "rho_b_db", "missing field `rho_b_db` (or `nu`)")),
    };
    let path_loss = match &s.pt_path_loss {
        None => PathLoss::default(),
        Some(name) => parse_path_loss(name).ok_or_else(|| {
            ctx.err("system", "pt_path_loss", format!("expected \"unbounded\" or \"bounded\", got {name:?}"))
        })?,
    };
    let (users, alpha, rd, pt, pr) = (s.users, s.alpha, s.user_zone_radius, s.pt_density, s.pr_density);
    let d0 = s.guard_zone_radius;
    let b_link = rho_b.1;
    let steps: Vec<(&str, Step)> = vec![
        ("users", Box::new(move |b| b.users(users))),
        ("alpha", Box::new(move |b| b.alpha(alpha))),
        ("user_zone_radius", Box::new(move |b| b.user_zone_radius(rd))),
        ("guard_zone_radius", Box::new(move |b| d0.map_or(b.clone(), |d| b.guard_zone_radius(d)))),
        ("pt_density", Box::new(move |b| b.pt_density(pt))),
        ("pr_density", Box::new(move |b| b.pr_density(pr))),
        ("kappa", Box::new(move |b| b.kappa(kappa))),
        (rho_b.0, Box::new(move |b| b.rho_b(b_link))),
        ("pt_path_loss", Box::new(move |b| b.pt_path_loss(path_loss))),
    ];
    // Apply keys one at a time so a failure names the key that caused it.
    let mut builder = SystemParams::builder().rho_s_db(first_db);
    for (key, step) in steps {
        builder = step(builder);
        builder.clone().build().map_err(|e| ctx.wrap("system", key, e))?;
    }
    builder.build()
}

fn resolve_allocation(ctx: &Ctx, a: &AllocationSection, users: usize) -> Result<RateAllocation> {
    if a.power.len() != users {
        return Err(ctx.err(
            "allocation",
            "power",
            format!("{} power coefficients for {users} users", a.power.len()),
        ));
    }
    RateAllocation::new(a.power.clone(), vec![0.0; users]).map_err(|e| ctx.wrap("allocation", "power", e))?;
    RateAllocation::new(a.power.clone(), a.rates.clone()).map_err(|e| ctx.wrap("allocation", "rates", e))
}

fn resolve_quadrature(ctx: &Ctx, q: &QuadratureSection) -> Result<QuadratureSpec> {
    for (key, v) in [("n", q.n), ("k", q.k), ("l", q.l)] {
        if v == Some(0) {
            return Err(ctx.err("quadrature", key, "node count must be at least 1"));
        }
    }
    QuadratureSpec::new(
        q.n.unwrap_or(QuadratureSpec::DEFAULT_N),
        q.k.unwrap_or(QuadratureSpec::DEFAULT_K),
        q.l.unwrap_or(QuadratureSpec::DEFAULT_L),
    )
}

fn check_grid(ctx: &Ctx, section: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(ctx.err(section, "rho_s_db", "at least one sweep point is required"));
    }
    if grid.iter().any(|v| !v.is_finite()) {
        return Err(ctx.err(section, "rho_s_db", "sweep points must be finite"));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ctx.err(section, "rho_s_db", "sweep points must be strictly increasing"));
    }
    Ok(())
}

fn resolve_sweep(ctx: &Ctx, s: &SweepSection, system: &SystemSection) -> Result<SweepSpec> {
    let rho_s_db = s.rho_s_db.clone().unwrap_or_else(default_grid);
    check_grid(ctx, "sweep", &rho_s_db)?;
    let implied = match (system.rho_b_db.is_some(), system.nu.is_some()) {
        (_, true) => Regime::Proportional,
        _ => Regime::FixedPtPower,
    };
    let regime = match &s.regime {
        None => implied,
        Some(name) => parse_regime(name).ok_or_else(|| {
            ctx.err("sweep", "regime", format!("expected \"fixed_rho_b\" or \"proportional\", got {name:?}"))
        })?,
    };
    if regime != implied {
        let need = match regime {
            Regime::FixedPtPower => "rho_b_db",
            Regime::Proportional => "nu",
        };
        return Err(ctx.err(
            "sweep",
            "regime",
            format!("regime {} requires `{need}` in [system]", regime_name(regime)),
        ));
    }
    let trials = s.trials.unwrap_or(DEFAULT_SWEEP_TRIALS);
    if trials == 0 {
        return Err(ctx.err("sweep", "trials", "trials must be at least 1"));
    }
    let asymptote_trials = s.asymptote_trials.unwrap_or(DEFAULT_ASYMPTOTE_TRIALS);
    if asymptote_trials == 0 {
        return Err(ctx.err("sweep", "asymptote_trials", "asymptote_trials must be at least 1"));
    }
    let mut emit = EmitFlags::default();
    if let Some(list) = &s.emit {
        emit = EmitFlags {
            csv: false,
            svg: false,
            report: false,
        };
        for item in list {
            match item.as_str() {
                "csv" => emit.csv = true,
                "svg" => emit.svg = true,
                "report" => emit.report = true,
                other => {
                    return Err(ctx.err(
                        "sweep",
                        "emit",
                        format!("unknown artifact {other:?}; expected csv, svg or report"),
                    ))
                }
            }
        }
    }
    let truncation_tol = s.truncation_tol.unwrap_or(DEFAULT_TRUNCATION_TOL);
    if !(truncation_tol > 0.0 && truncation_tol.is_finite()) {
        return Err(ctx.err("sweep", "truncation_tol", "truncation_tol must be positive"));
    }
    let field = match &s.interference_field {
        None => InterferenceField::default(),
        Some(name) => parse_field(name).ok_or_else(|| {
            ctx.err(
                "sweep",
                "interference_field",
                format!("expected \"per_user\" or \"common\", got {name:?}"),
            )
        })?,
    };
    if s.workers == Some(0) {
        return Err(ctx.err("sweep", "workers", "workers must be at least 1"));
    }
    Ok(SweepSpec {
        rho_s_db,
        regime,
        trials,
        seed: s.seed.unwrap_or(DEFAULT_SEED),
        emit,
        asymptote_trials,
        truncation_tol,
        field,
        workers: s.workers,
    })
}

fn resolve_validation(ctx: &Ctx, v: Option<&ValidationSection>) -> Result<ValidationSpec> {
    let mut spec = ValidationSpec::default();
    let Some(v) = v else {
        return Ok(spec);
    };
    let positive = |key: &str, value: Option<f64>, slot: &mut f64| -> Result<()> {
        if let Some(x) = value {
            if !(x > 0.0 && x.is_finite()) {
                return Err(ctx.err("validation", key, format!("{key} must be positive")));
            }
            *slot = x;
        }
        Ok(())
    };
    positive("quadrature_tol", v.quadrature_tol, &mut spec.quadrature_tol)?;
    positive("ks_tol", v.ks_tol, &mut spec.ks_tol)?;
    positive("laplace_sigma", v.laplace_sigma, &mut spec.laplace_sigma)?;
    positive("mc_rel_tol", v.mc_rel_tol, &mut spec.mc_rel_tol)?;
    positive("mc_sigma", v.mc_sigma, &mut spec.mc_sigma)?;
    positive("min_outage", v.min_outage, &mut spec.min_outage)?;
    let count = |key: &str, value: Option<u64>, slot: &mut u64| -> Result<()> {
        if let Some(n) = value {
            if n < 2 {
                return Err(ctx.err("validation", key, format!("{key} must be at least 2")));
            }
            *slot = n;
        }
        Ok(())
    };
    count("ks_samples", v.ks_samples, &mut spec.ks_samples)?;
    count("laplace_samples", v.laplace_samples, &mut spec.laplace_samples)?;
    count("trials", v.trials, &mut spec.trials)?;
    if let Some(s) = &v.laplace_s {
        if s.is_empty() || s.iter().any(|x| !(*x > 0.0 && x.is_finite())) {
            return Err(ctx.err("validation", "laplace_s", "laplace_s must be a nonempty list of positive values"));
        }
        spec.laplace_s = s.clone();
    }
    if let Some(grid) = &v.rho_s_db {
        check_grid(ctx, "validation", grid)?;
        spec.rho_s_db = Some(grid.clone());
    }
    if let Some(q) = &v.outage_quadrature {
        let [n, k, l] = q[..] else {
            return Err(ctx.err("validation", "outage_quadrature", "expected [n, k, l]"));
        };
        spec.outage_quadrature =
            QuadratureSpec::new(n, k, l).map_err(|e| ctx.wrap("validation", "outage_quadrature", e))?;
    }
    Ok(spec)
}

pub fn parse_config(text: &str) -> Result<Config> {
    let doc: Document = toml::from_str(text).map_err(|e| decode_error(text, e))?;
    let ctx = Ctx { text };
    let sweep = resolve_sweep(&ctx, &doc.sweep, &doc.system)?;
    let system = resolve_system(&ctx, &doc.system, sweep.rho_s_db[0])?;
    let allocation = resolve_allocation(&ctx, &doc.allocation, system.users())?;
    let quadrature = resolve_quadrature(&ctx, &doc.quadrature)?;
    let validation = resolve_validation(&ctx, doc.validation.as_ref())?;
    Ok(Config {
        system,
        allocation,
        quadrature,
        sweep,
        validation,
    })
}

pub fn load_config(path: impl AsRef<Path>) -> Result<Config> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_config(&text)
}

impl Config {
    /// Canonical text of the configuration with every default written out.
    /// Parsing it yields an equal `Config`.
    pub fn to_toml(&self) -> String {
        let p = &self.system;
        let (nu, rho_b_db) = match p.rho_b_link() {
            PowerLink::Proportional(v) => (Some(v), None),
            PowerLink::Fixed(s) => (None, Some(s.db())),
        };
        let (n, k, l) = self.quadrature.counts();
        let s = &self.sweep;
        let v = &self.validation;
        let emit = [("csv", s.emit.csv), ("svg", s.emit.svg), ("report", s.emit.report)]
            .iter()
            .filter(|(_, on)| *on)
            .map(|(name, _)| name.to_string())
            .collect();
        let oq = v.outage_quadrature.counts();
        let doc = Document {
            system: SystemSection {
                users: p.users(),
                alpha: p.alpha(),
                user_zone_radius: p.user_zone_radius(),
                guard_zone_radius: Some(p.guard_zone_radius()),
                pt_density: p.pt_density(),
                pr_density: p.pr_density(),
                kappa: p.kappa(),
                rho_b_db,
                nu,
                pt_path_loss: Some(path_loss_name(p.pt_path_loss()).into()),
            },
            allocation: AllocationSection {
                power: self.allocation.power().to_vec(),
                rates: self.allocation.rates().to_vec(),
            },
            quadrature: QuadratureSection {
                n: Some(n),
                k: Some(k),
                l: Some(l),
            },
            sweep: SweepSection {
                rho_s_db: Some(s.rho_s_db.clone()),
                regime: Some(regime_name(s.regime).into()),
                trials: Some(s.trials),
                seed: Some(s.seed),
                emit: Some(emit),
                asymptote_trials: Some(s.asymptote_trials),
                truncation_tol: Some(s.truncation_tol),
                interference_field: Some(field_name(s.field).into()),
                workers: s.workers,
            },
            validation: Some(ValidationSection {
                quadrature_tol: Some(v.quadrature_tol),
                ks_tol: Some(v.ks_tol),
                ks_samples: Some(v.ks_samples),
                laplace_s: Some(v.laplace_s.clone()),
                laplace_samples: Some(v.laplace_samples),
                laplace_sigma: Some(v.laplace_sigma),
                trials: Some(v.trials),
                mc_rel_tol: Some(v.mc_rel_tol),
                mc_sigma: Some(v.mc_sigma),
                min_outage: Some(v.min_outage),
                rho_s_db: v.rho_s_db.clone(),
                outage_quadrature: Some(vec![oq.0, oq.1, oq.2]),
            }),
        };
        toml::to_string(&doc).expect("configuration serializes")
    }

    /// Replaces the sweep grid with one point.
    pub fn with_single_point(&self, rho_s_db: f64) -> Result<Config> {
        if !rho_s_db.is_finite() {
            return Err(Error::invalid("rho_s_db must be finite"));
        }
        let mut c = self.clone();
        c.sweep.rho_s_db = vec![rho_s_db];
        c.system = c.system.at_rho_s(Snr::from_db(rho_s_db))?;
        Ok(c)
    }

    /// System parameters at sweep point `rho_s_db`.
    pub fn system_at(&self, rho_s_db: f64) -> Result<SystemParams> {
        self.system.at_rho_s(Snr::from_db(rho_s_db))
    }
}
