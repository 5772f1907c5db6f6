//! Distribution of the SU channel gains: the unordered composite gain
//! `|ĥ|² / (1 + d^α)` with `d` uniform over the user disc, its
//! Gauss-Chebyshev expansion, and the order statistics of `M` such gains.

use super::params::SystemParams;
use crate::error::{Error, Result};
use crate::numerics::{integrate, ChebyshevRule};

/// `(2/R_D²) ∫_0^{R_D} (1 - e^{-(1+r^α) y}) r dr` by adaptive integration.
pub fn unordered_cdf_exact(y: f64, params: &SystemParams) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    let rd = params.user_zone_radius();
    let alpha = params.alpha();
    let r = integrate(
        |r| -(-(1.0 + r.powf(alpha)) * y).exp_m1() * r,
        0.0,
        rd,
        1e-12,
        1e-13,
    );
    2.0 / (rd * rd) * r.value
}

/// `F(y) ≈ Σ_{n=0}^{N} b_n e^{-c_n y}` with `c_0 = 0` and `b_0 = -Σ_{n≥1} b_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnorderedExpansion {
    coefficients: Vec<f64>,
    exponents: Vec<f64>,
    alpha_weights: Vec<f64>,
}

impl UnorderedExpansion {
    pub fn new(params: &SystemParams, rule: &ChebyshevRule) -> Self {
        let half_rd = params.user_zone_radius() / 2.0;
        let alpha = params.alpha();
        let w = rule.weight();
        let mut coefficients = vec![0.0];
        let mut exponents = vec![0.0];
        // Substituting r = (R_D/2)(φ + 1) in the polar integral leaves a
        // factor 1/2 in front of the Chebyshev sum.
        let mut alpha_weights = Vec::with_capacity(rule.count());
        for (&phi, root) in rule.nodes().iter().zip(rule.root_factors()) {
            let weight = 0.5 * w * root * (phi + 1.0);
            let c = 1.0 + (half_rd * (phi + 1.0)).powf(alpha);
            coefficients.push(-weight);
            exponents.push(c);
            alpha_weights.push(weight);
        }
        coefficients[0] = -coefficients[1..].iter().sum::<f64>();
        UnorderedExpansion {
            coefficients,
            exponents,
            alpha_weights,
        }
    }

    /// `b_0, …, b_N`.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// `c_0, …, c_N`.
    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    pub fn cdf(&self, y: f64) -> f64 {
        // b_0 + Σ b_n e^{-c_n y} = Σ_{n≥1} |b_n| (1 - e^{-c_n y})
        self.alpha_weights
            .iter()
            .zip(&self.exponents[1..])
            .map(|(w, c)| -w * (-c * y).exp_m1())
            .sum()
    }

    /// Small-argument slope `Σ_n χ_n` with `χ_n = (ω_N/2) √(1-φ_n²) (φ_n+1) c_n`,
    /// so that `F(y) ≈ y Σ χ_n` as `y → 0`.
    pub fn small_argument_slope(&self) -> f64 {
        self.alpha_weights
            .iter()
            .zip(&self.exponents[1..])
            .map(|(w, c)| w * c)
            .sum()
    }
}

/// Result of [`unordered_cdf_gc`]: the coefficient tables and the value.
#[derive(Debug, Clone, PartialEq)]
pub struct UnorderedCdfGc {
    pub coefficients: Vec<f64>,
    pub exponents: Vec<f64>,
    pub value: f64,
}

pub fn unordered_cdf_gc(y: f64, params: &SystemParams, rule: &ChebyshevRule) -> UnorderedCdfGc {
    let exp = UnorderedExpansion::new(params, rule);
    let value = exp.cdf(y);
    UnorderedCdfGc {
        coefficients: exp.coefficients,
        exponents: exp.exponents,
        value,
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `ψ_m = M! / ((M-m)! (m-1)!)`.
pub fn psi(m: usize, users: usize) -> f64 {
    // M!/((M-m)!(m-1)!) = m · C(M, m)
    m as f64 * binomial(users, m)
}

fn check_index(m: usize, users: usize) -> Result<()> {
    if m == 0 || m > users {
        return Err(Error::invalid(format!(
            "user index {m} outside 1..={users}"
        )));
    }
    Ok(())
}

/// CDF of the `m`-th smallest of `M` i.i.d. gains given the unordered
/// CDF value `f`: `ψ_m Σ_p C(M-m, p) (-1)^p / (m+p) f^{m+p}`.
pub fn order_statistic_cdf(f: f64, m: usize, users: usize) -> Result<f64> {
    check_index(m, users)?;
    let sum: f64 = (0..=users - m)
        .map(|p| {
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            binomial(users - m, p) * sign / (m + p) as f64 * f.powi((m + p) as i32)
        })
        .sum();
    Ok(psi(m, users) * sum)
}

/// CDF of the `m`-th ordered channel gain using the quadrature form of
/// the unordered CDF.
pub fn ordered_cdf(y: f64, m: usize, params: &SystemParams, rule: &ChebyshevRule) -> Result<f64> {
    let f = UnorderedExpansion::new(params, rule).cdf(y);
    order_statistic_cdf(f, m, params.users())
}

/// One term `coefficient · e^{-exponent · y}` of the expanded ordered CDF.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpTerm {
    pub coefficient: f64,
    /// `Σ_n q_n c_n`.
    pub exponent: f64,
}

/// Calls `visit` with every weak composition `q_0 + … + q_{parts-1} = total`,
/// in decreasing lexicographic order.
pub fn for_each_composition<F: FnMut(&[u32])>(total: u32, parts: usize, mut visit: F) {
    if parts == 0 {
        return;
    }
    let last = parts - 1;
    let mut q = vec![0u32; parts];
    q[0] = total;
    loop {
        visit(&q);
        let Some(i) = (0..last).rev().find(|&i| q[i] > 0) else {
            return;
        };
        let tail = q[last];
        q[last] = 0;
        q[i] -= 1;
        q[i + 1] = tail + 1;
    }
}

/// Multinomial expansion of the ordered CDF into exponential terms:
/// `F_(m)(y) = Σ_terms coefficient · e^{-exponent · y}`.
#[derive(Debug, Clone)]
pub struct OrderedExpansion {
    m: usize,
    terms: Vec<ExpTerm>,
}

impl OrderedExpansion {
    pub fn new(m: usize, users: usize, unordered: &UnorderedExpansion) -> Result<Self> {
        check_index(m, users)?;
        let b = unordered.coefficients();
        let c = unordered.exponents();
        let parts = b.len();
        let ln_abs_b: Vec<f64> = b.iter().map(|v| v.abs().ln()).collect();
        let negative: Vec<bool> = b.iter().map(|v| *v < 0.0).collect();
        let ln_fact: Vec<f64> = (0..=users)
            .scan(0.0, |acc, k| {
                if k > 0 {
                    *acc += (k as f64).ln();
                }
                Some(*acc)
            })
            .collect();

        let psi_m = psi(m, users);
        let mut terms = Vec::new();
        for p in 0..=users - m {
            let total = m + p;
            let sign_p = if p % 2 == 0 { 1.0 } else { -1.0 };
            let outer = psi_m * binomial(users - m, p) * sign_p / total as f64;
            for_each_composition(total as u32, parts, |q| {
                let mut ln_mag = ln_fact[total];
                let mut flips = 0u32;
                let mut exponent = 0.0;
                for (n, &qn) in q.iter().enumerate() {
                    if qn == 0 {
                        continue;
                    }
                    ln_mag += qn as f64 * ln_abs_b[n] - ln_fact[qn as usize];
                    if negative[n] {
                        flips += qn;
                    }
                    exponent += qn as f64 * c[n];
                }
                let sign = if flips % 2 == 0 { 1.0 } else { -1.0 };
                terms.push(ExpTerm {
                    coefficient: outer * sign * ln_mag.exp(),
                    exponent,
                });
            });
        }
        Ok(OrderedExpansion { m, terms })
    }

    pub fn user(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn eval(&self, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coefficient * (-t.exponent * y).exp())
            .sum()
    }
}
