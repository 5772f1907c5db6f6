use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::analytic::SystemParams;
use crate::error::{Error, Result};

/// Default bound on the expected path-loss mass discarded beyond the
/// simulation window.
pub const DEFAULT_TRUNCATION_TOL: f64 = 1e-6;

/// Smallest radius `R` with `2πλ R^{2-α} / (α - 2) <= tol`, floored at
/// `10 d_0`.
///
/// The left side bounds the expected sum of `L(d) <= d^{-α}` over PPP
/// points beyond `R`.
pub fn truncation_radius(lambda: f64, alpha: f64, tol: f64, guard_radius: f64) -> Result<f64> {
    if !(alpha > 2.0) {
        return Err(Error::DivergentInterference { alpha });
    }
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("truncation tolerance must be positive, got {tol}")));
    }
    let floor = 10.0 * guard_radius;
    if lambda <= 0.0 {
        return Ok(floor);
    }
    let r = (2.0 * PI * lambda / ((alpha - 2.0) * tol)).powf(1.0 / (alpha - 2.0));
    Ok(r.max(floor))
}

/// Visits the radii of a homogeneous PPP restricted to the annulus
/// `[r_min, r_max]`, in increasing order.
///
/// Squared radii of a planar PPP form a 1-D Poisson process of rate `λπ`,
/// so points are generated outward by exponential spacings. A larger
/// `r_max` with the same stream reproduces the inner points exactly.
fn for_each_annulus_point<R, F>(lambda: f64, r_min: f64, r_max: f64, rng: &mut R, mut visit: F)
where
    R: Rng + ?Sized,
    F: FnMut(f64, &mut R),
{
    if lambda <= 0.0 {
        return;
    }
    let rate = lambda * PI;
    let hi = r_max * r_max;
    let mut a = r_min * r_min;
    loop {
        let step: f64 = Exp1.sample(rng);
        a += step / rate;
        if a > hi {
            return;
        }
        visit(a.sqrt(), rng);
    }
}

/// Distances from the centre of the PPP points falling in `[r_min, r_max]`.
pub fn sample_annulus_ppp<R: Rng + ?Sized>(
    lambda: f64,
    r_min: f64,
    r_max: f64,
    rng: &mut R,
) -> Vec<f64> {
    let mut out = Vec::new();
    for_each_annulus_point(lambda, r_min, r_max, rng, |r, _| out.push(r));
    out
}

/// Ascending composite gains `e / (1 + d^α)` of `M` users uniform in the
/// disc of radius `R_D` with unit-mean exponential fading.
pub fn sample_su_gains<R: Rng + ?Sized>(users: usize, rd: f64, alpha: f64, rng: &mut R) -> Vec<f64> {
    let mut gains: Vec<f64> = (0..users)
        .map(|_| {
            let u: f64 = rng.random();
            let fade: f64 = Exp1.sample(rng);
            fade / (1.0 + (rd * u.sqrt()).powf(alpha))
        })
        .collect();
    gains.sort_by(f64::total_cmp);
    gains
}

/// Interference seen by each SU.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InterferenceField {
    /// Each SU sees its own independent PPP realization.
    #[default]
    PerUser,
    /// All SUs share one PT realization; each excludes PTs within `d_0` of itself.
    Common,
}

/// Geometry sampler for one parameter set, with truncation radii resolved.
#[derive(Debug, Clone)]
pub struct NetworkSampler {
    params: SystemParams,
    pr_radius: f64,
    pt_radius: f64,
    field: InterferenceField,
}

impl NetworkSampler {
    pub fn new(params: &SystemParams, tol: f64, field: InterferenceField) -> Result<Self> {
        let d0 = params.guard_zone_radius();
        Ok(NetworkSampler {
            params: params.clone(),
            pr_radius: truncation_radius(params.pr_density(), params.alpha(), tol, d0)?,
            pt_radius: truncation_radius(params.pt_density(), params.alpha(), tol, d0)?,
            field,
        })
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn field(&self) -> InterferenceField {
        self.field
    }

    /// Truncation radius of the PT field, metres.
    pub fn pt_radius(&self) -> f64 {
        self.pt_radius
    }

    pub fn pr_radius(&self) -> f64 {
        self.pr_radius
    }

    pub fn gains<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let p = &self.params;
        sample_su_gains(p.users(), p.user_zone_radius(), p.alpha(), rng)
    }

    /// `max_ℓ |ĝ_ℓ|² / (1 + d_ℓ^α)` over the PRs, 0 when there are none.
    pub fn max_pr_gain<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let alpha = self.params.alpha();
        let mut best = 0.0f64;
        for_each_annulus_point(self.params.pr_density(), 0.0, self.pr_radius, rng, |r, rng| {
            let fade: f64 = Exp1.sample(rng);
            best = best.max(fade / (1.0 + r.powf(alpha)));
        });
        best
    }

    /// `γ_t = min(ρ_p / max gain, ρ_s)`.
    pub fn gamma_t<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let rho_s = self.params.rho_s().linear();
        let g = self.max_pr_gain(rng);
        if g > 0.0 {
            (self.params.rho_p() / g).min(rho_s)
        } else {
            rho_s
        }
    }

    /// Fading-free path-loss sum from PTs outside the guard zone of one SU.
    pub fn interference<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let p = &self.params;
        let (alpha, model) = (p.alpha(), p.pt_path_loss());
        let mut sum = 0.0;
        for_each_annulus_point(p.pt_density(), p.guard_zone_radius(), self.pt_radius, rng, |r, _| {
            sum += model.gain(r, alpha)
        });
        sum
    }

    /// Gains and interference of all users from one shared PT realization,
    /// ordered by ascending gain.
    pub(crate) fn common_field<R: Rng + ?Sized>(&self, gains_rng: &mut R, field_rng: &mut R) -> (Vec<f64>, Vec<f64>) {
        let p = &self.params;
        let (alpha, rd, d0) = (p.alpha(), p.user_zone_radius(), p.guard_zone_radius());
        let users: Vec<(f64, f64, f64)> = (0..p.users())
            .map(|_| {
                let u: f64 = gains_rng.random();
                let theta = 2.0 * PI * gains_rng.random::<f64>();
                let fade: f64 = Exp1.sample(gains_rng);
                let d = rd * u.sqrt();
                (fade / (1.0 + d.powf(alpha)), d * theta.cos(), d * theta.sin())
            })
            .collect();
        let mut pts = Vec::new();
        for_each_annulus_point(p.pt_density(), 0.0, rd + self.pt_radius, field_rng, |r, rng| {
            let theta = 2.0 * PI * rng.random::<f64>();
            pts.push((r * theta.cos(), r * theta.sin()));
        });
        let model = p.pt_path_loss();
        let mut rows: Vec<(f64, f64)> = users
            .iter()
            .map(|&(g, x, y)| {
                let i = pts
                    .iter()
                    .map(|&(px, py)| ((px - x).powi(2) + (py - y).powi(2)).sqrt())
                    .filter(|&d| d >= d0 && d <= self.pt_radius)
                    .map(|d| model.gain(d, alpha))
                    .sum();
                (g, i)
            })
            .collect();
        rows.sort_by(|a, b| a.0.total_cmp(&b.0));
        rows.into_iter().unzip()
    }
}

pub fn sample_gamma_t<R: Rng + ?Sized>(params: &SystemParams, rng: &mut R) -> Result<f64> {
    Ok(NetworkSampler::new(params, DEFAULT_TRUNCATION_TOL, InterferenceField::PerUser)?.gamma_t(rng))
}

pub fn sample_interference<R: Rng + ?Sized>(params: &SystemParams, rng: &mut R) -> Result<f64> {
    Ok(NetworkSampler::new(params, DEFAULT_TRUNCATION_TOL, InterferenceField::PerUser)?.interference(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{gamma_t_pdf_parts, PathLoss};
    use crate::numerics::integrate;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn truncation_radius_cases() {
        assert_eq!(truncation_radius(0.0, 4.0, 1e-6, 2.0).unwrap(), 20.0);
        let r = truncation_radius(1e-3, 4.0, 1e-6, 2.0).unwrap();
        let formula = (2.0 * PI * 1e-3 / (2.0 * 1e-6)).sqrt();
        assert!((r - formula.max(20.0)).abs() < 1e-9);
        // Tail mass 2πλ ∫_R^∞ r^{1-α} dr integrated numerically, r = R/u.
        let tail = integrate(|u: f64| if u > 0.0 { 2.0 * PI * 1e-3 * (r / u).powf(-3.0) * r / (u * u) } else { 0.0 }, 0.0, 1.0, 1e-16, 1e-12);
        assert!((tail.value - 1e-6).abs() < 1e-12);
        assert!(matches!(truncation_radius(1e-3, 2.0, 1e-6, 2.0), Err(Error::DivergentInterference { .. })));
        let mut tol = 1e-9;
        let mut prev = f64::INFINITY;
        while tol < 1.0 {
            let r = truncation_radius(1e-3, 3.5, tol, 1.0).unwrap();
            assert!(r <= prev);
            prev = r;
            tol *= 2.0;
        }
    }

    #[test]
    fn annulus_counts_and_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        assert!(sample_annulus_ppp(0.0, 2.0, 100.0, &mut rng).is_empty());
        let n = 100_000;
        let mean_expected = 1e-3 * PI * (100.0f64.powi(2) - 4.0);
        let mut total = 0usize;
        for _ in 0..n {
            let pts = sample_annulus_ppp(1e-3, 2.0, 100.0, &mut rng);
            assert!(pts.iter().all(|&r| (2.0..=100.0).contains(&r)));
            total += pts.len();
        }
        let mean = total as f64 / n as f64;
        let sigma = (mean_expected / n as f64).sqrt();
        assert!((mean - mean_expected).abs() < 3.0 * sigma, "{mean} vs {mean_expected}");
    }

    #[test]
    fn larger_window_extends_the_same_points() {
        let mut a = ChaCha8Rng::seed_from_u64(4);
        let mut b = a.clone();
        let inner = sample_annulus_ppp(1e-2, 2.0, 50.0, &mut a);
        let outer = sample_annulus_ppp(1e-2, 2.0, 100.0, &mut b);
        assert!(!inner.is_empty());
        assert_eq!(inner[..], outer[..inner.len()]);
        assert!(outer[inner.len()..].iter().all(|&r| r > 50.0));
        assert!(outer.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn gains_sorted() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let g = sample_su_gains(5, 10.0, 4.0, &mut rng);
            assert!(g.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn single_user_mean_gain() {
        let (rd, alpha) = (5.0f64, 4.0);
        let mean_exact = 2.0 / (rd * rd)
            * integrate(|r| r / (1.0 + r.powf(alpha)), 0.0, rd, 1e-14, 1e-12).value;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 400_000;
        let xs: Vec<f64> = (0..n).map(|_| sample_su_gains(1, rd, alpha, &mut rng)[0]).collect();
        let (m, se) = crate::sim::stats::mean_and_stderr(&xs);
        assert!((m - mean_exact).abs() < 3.0 * se, "{m} vs {mean_exact} ± {se}");
    }

    #[test]
    fn empty_fields() {
        let p = SystemParams::builder().rho_s_db(20.0).build().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            assert_eq!(sample_gamma_t(&p, &mut rng).unwrap(), 100.0);
            assert_eq!(sample_interference(&p, &mut rng).unwrap(), 0.0);
        }
    }

    #[test]
    fn interference_bounds() {
        for model in [PathLoss::Unbounded, PathLoss::Bounded] {
            let p = SystemParams::builder().pt_density(5e-3).pt_path_loss(model).build().unwrap();
            let s = NetworkSampler::new(&p, 1e-6, InterferenceField::PerUser).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            let cap = model.gain(p.guard_zone_radius(), p.alpha());
            for _ in 0..2000 {
                let mut probe = rng.clone();
                let count = sample_annulus_ppp(p.pt_density(), 2.0, s.pt_radius(), &mut probe).len();
                let i = s.interference(&mut rng);
                assert!(i >= 0.0 && i <= count as f64 * cap + 1e-15);
            }
        }
    }

    #[test]
    fn gamma_t_atom_mass() {
        let p = SystemParams::builder().alpha(4.0).pr_density(0.05).rho_s_db(20.0).kappa(0.1).build().unwrap();
        let s = NetworkSampler::new(&p, 1e-3, InterferenceField::PerUser).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let n = 100_000;
        let mut hits = 0;
        for _ in 0..n {
            let g = s.gamma_t(&mut rng);
            assert!(g > 0.0 && g <= 100.0);
            if g == 100.0 {
                hits += 1;
            }
        }
        let w = gamma_t_pdf_parts(&p).atom_weight();
        let se = (w * (1.0 - w) / n as f64).sqrt();
        assert!(((hits as f64 / n as f64) - w).abs() < 3.0 * se);
    }
}
