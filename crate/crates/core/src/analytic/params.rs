use crate::error::{Error, Result};

/// A signal-to-noise ratio carried in both decibel and linear form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Snr {
    db: f64,
    linear: f64,
}

impl Snr {
    pub fn from_db(db: f64) -> Self {
        Snr {
            db,
            linear: 10f64.powf(db / 10.0),
        }
    }

    pub fn from_linear(linear: f64) -> Self {
        Snr {
            db: 10.0 * linear.log10(),
            linear,
        }
    }

    pub fn db(&self) -> f64 {
        self.db
    }

    pub fn linear(&self) -> f64 {
        self.linear
    }
}

/// How a primary-network SNR relates to the secondary transmit SNR `ρ_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PowerLink {
    /// Held fixed while `ρ_s` varies.
    Fixed(Snr),
    /// Tied to `ρ_s` through a constant ratio.
    Proportional(f64),
}

impl PowerLink {
    fn resolve(&self, rho_s: f64) -> f64 {
        match *self {
            PowerLink::Fixed(snr) => snr.linear(),
            PowerLink::Proportional(ratio) => ratio * rho_s,
        }
    }

    pub fn ratio(&self) -> Option<f64> {
        match *self {
            PowerLink::Proportional(r) => Some(r),
            PowerLink::Fixed(_) => None,
        }
    }
}

/// Large-scale attenuation applied on primary-transmitter to SU links.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathLoss {
    /// `d^{-α}`; the law under which the guard-zone Laplace transform is exact.
    #[default]
    Unbounded,
    /// `1 / (1 + d^α)`.
    Bounded,
}

impl PathLoss {
    #[inline]
    pub fn gain(&self, d: f64, alpha: f64) -> f64 {
        match self {
            PathLoss::Unbounded => d.powf(-alpha),
            PathLoss::Bounded => 1.0 / (1.0 + d.powf(alpha)),
        }
    }
}

/// The two power-scaling scenarios studied in the diversity analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `ρ_b` fixed, `ρ_p = κ ρ_s`.
    FixedPtPower,
    /// `ρ_p = κ ρ_s` and `ρ_b = ν ρ_s`.
    Proportional,
}

/// Physical and deployment parameters of the underlay network.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    users: usize,
    alpha: f64,
    user_zone_radius: f64,
    guard_zone_radius: f64,
    pt_density: f64,
    pr_density: f64,
    rho_s: Snr,
    rho_p: PowerLink,
    rho_b: PowerLink,
    pt_path_loss: PathLoss,
}

impl SystemParams {
    pub fn builder() -> SystemParamsBuilder {
        SystemParamsBuilder::default()
    }

    /// Number of secondary users `M`.
    pub fn users(&self) -> usize {
        self.users
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `δ = 2/α`.
    pub fn delta(&self) -> f64 {
        2.0 / self.alpha
    }

    /// `R_D`, metres.
    pub fn user_zone_radius(&self) -> f64 {
        self.user_zone_radius
    }

    /// `d_0`, metres.
    pub fn guard_zone_radius(&self) -> f64 {
        self.guard_zone_radius
    }

    /// `λ_b`, primary transmitters per m².
    pub fn pt_density(&self) -> f64 {
        self.pt_density
    }

    /// `λ_ℓ`, primary receivers per m².
    pub fn pr_density(&self) -> f64 {
        self.pr_density
    }

    pub fn rho_s(&self) -> Snr {
        self.rho_s
    }

    /// Interference-constraint SNR `ρ_p`, linear.
    pub fn rho_p(&self) -> f64 {
        self.rho_p.resolve(self.rho_s.linear())
    }

    /// Primary transmit SNR `ρ_b`, linear.
    pub fn rho_b(&self) -> f64 {
        self.rho_b.resolve(self.rho_s.linear())
    }

    pub fn rho_p_link(&self) -> PowerLink {
        self.rho_p
    }

    pub fn rho_b_link(&self) -> PowerLink {
        self.rho_b
    }

    pub fn kappa(&self) -> Option<f64> {
        self.rho_p.ratio()
    }

    pub fn nu(&self) -> Option<f64> {
        self.rho_b.ratio()
    }

    pub fn pt_path_loss(&self) -> PathLoss {
        self.pt_path_loss
    }

    pub fn regime(&self) -> Option<Regime> {
        match (self.rho_p, self.rho_b) {
            (PowerLink::Proportional(_), PowerLink::Fixed(_)) => Some(Regime::FixedPtPower),
            (PowerLink::Proportional(_), PowerLink::Proportional(_)) => Some(Regime::Proportional),
            _ => None,
        }
    }

    /// Same deployment at a different secondary transmit SNR; ratio-linked
    /// SNRs follow it.
    pub fn at_rho_s(&self, rho_s: Snr) -> Result<SystemParams> {
        if !(rho_s.linear() > 0.0 && rho_s.linear().is_finite()) {
            return Err(Error::invalid(format!("rho_s must be positive, got {}", rho_s.linear())));
        }
        Ok(SystemParams {
            rho_s,
            ..self.clone()
        })
    }

    pub fn with_pt_path_loss(&self, model: PathLoss) -> SystemParams {
        SystemParams {
            pt_path_loss: model,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone)]
pub struct SystemParamsBuilder {
    users: usize,
    alpha: f64,
    user_zone_radius: f64,
    guard_zone_radius: f64,
    pt_density: f64,
    pr_density: f64,
    rho_s: Snr,
    rho_p: PowerLink,
    rho_b: PowerLink,
    pt_path_loss: PathLoss,
}

impl Default for SystemParamsBuilder {
    fn default() -> Self {
        SystemParamsBuilder {
            users: 1,
            alpha: 4.0,
            user_zone_radius: 5.0,
            guard_zone_radius: 2.0,
            pt_density: 0.0,
            pr_density: 0.0,
            rho_s: Snr::from_db(0.0),
            rho_p: PowerLink::Proportional(1.0),
            rho_b: PowerLink::Fixed(Snr::from_db(0.0)),
            pt_path_loss: PathLoss::default(),
        }
    }
}

impl SystemParamsBuilder {
    pub fn users(mut self, m: usize) -> Self {
        self.users = m;
        self
    }
    pub fn alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }
    pub fn user_zone_radius(mut self, r: f64) -> Self {
        self.user_zone_radius = r;
        self
    }
    pub fn guard_zone_radius(mut self, r: f64) -> Self {
        self.guard_zone_radius = r;
        self
    }
    pub fn pt_density(mut self, lambda: f64) -> Self {
        self.pt_density = lambda;
        self
    }
    pub fn pr_density(mut self, lambda: f64) -> Self {
        self.pr_density = lambda;
        self
    }
    pub fn rho_s(mut self, snr: Snr) -> Self {
        self.rho_s = snr;
        self
    }
    pub fn rho_s_db(self, db: f64) -> Self {
        self.rho_s(Snr::from_db(db))
    }
    pub fn rho_p(mut self, link: PowerLink) -> Self {
        self.rho_p = link;
        self
    }
    pub fn kappa(self, kappa: f64) -> Self {
        self.rho_p(PowerLink::Proportional(kappa))
    }
    pub fn rho_b(mut self, link: PowerLink) -> Self {
        self.rho_b = link;
        self
    }
    pub fn rho_b_db(self, db: f64) -> Self {
        self.rho_b(PowerLink::Fixed(Snr::from_db(db)))
    }
    pub fn nu(self, nu: f64) -> Self {
        self.rho_b(PowerLink::Proportional(nu))
    }
    pub fn pt_path_loss(mut self, model: PathLoss) -> Self {
        self.pt_path_loss = model;
        self
    }

    pub fn build(self) -> Result<SystemParams> {
        if self.users == 0 {
            return Err(Error::invalid("at least one secondary user is required"));
        }
        if !(self.alpha > 2.0) || !self.alpha.is_finite() {
            return Err(Error::DivergentInterference { alpha: self.alpha });
        }
        if !(self.user_zone_radius > 0.0) || !self.user_zone_radius.is_finite() {
            return Err(Error::invalid(format!(
                "user zone radius must be positive, got {}",
                self.user_zone_radius
            )));
        }
        if !(self.guard_zone_radius >= 1.0) || !self.guard_zone_radius.is_finite() {
            return Err(Error::invalid(format!(
                "guard zone radius must be at least 1 m, got {}",
                self.guard_zone_radius
            )));
        }
        for (name, v) in [("PT density", self.pt_density), ("PR density", self.pr_density)] {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(Error::invalid(format!("{name} must be nonnegative, got {v}")));
            }
        }
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::invalid(format!("{name} must be positive, got {v}")))
            }
        };
        positive("rho_s", self.rho_s.linear())?;
        for (name, link) in [("rho_p", self.rho_p), ("rho_b", self.rho_b)] {
            match link {
                PowerLink::Fixed(s) => positive(name, s.linear())?,
                PowerLink::Proportional(r) => positive(&format!("{name} ratio"), r)?,
            }
        }
        Ok(SystemParams {
            users: self.users,
            alpha: self.alpha,
            user_zone_radius: self.user_zone_radius,
            guard_zone_radius: self.guard_zone_radius,
            pt_density: self.pt_density,
            pr_density: self.pr_density,
            rho_s: self.rho_s,
            rho_p: self.rho_p,
            rho_b: self.rho_b,
            pt_path_loss: self.pt_path_loss,
        })
    }
}
