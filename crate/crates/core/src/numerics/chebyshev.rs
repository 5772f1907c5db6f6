use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Gauss-Chebyshev rule of the first kind on (-1, 1).
///
/// Nodes are `cos((2n - 1)π / (2·count))` for `n = 1..=count`, listed in
/// decreasing order, and every node shares the weight `π / count`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevRule {
    nodes: Vec<f64>,
    weight: f64,
}

impl ChebyshevRule {
    pub fn count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// `√(1 - φ²)` for each node, the factor that turns the Chebyshev
    /// weight back into a plain integral.
    pub fn root_factors(&self) -> impl Iterator<Item = f64> + '_ {
        self.nodes.iter().map(|&x| (1.0 - x * x).sqrt())
    }

    /// Approximates `∫_{-1}^{1} f(x) dx` as `ω Σ √(1 - φ_n²) f(φ_n)`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.weight
            * self
                .nodes
                .iter()
                .map(|&x| (1.0 - x * x).sqrt() * f(x))
                .sum::<f64>()
    }
}

pub fn chebyshev_rule(count: usize) -> Result<ChebyshevRule> {
    if count == 0 {
        return Err(Error::invalid("Chebyshev rule needs at least one node"));
    }
    let n = count as f64;
    let nodes = (1..=count)
        .map(|i| ((2 * i - 1) as f64 * PI / (2.0 * n)).cos())
        .collect();
    Ok(ChebyshevRule {
        nodes,
        weight: PI / n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_count_is_rejected() {
        assert!(matches!(chebyshev_rule(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn single_node() {
        let rule = chebyshev_rule(1).unwrap();
        assert_eq!(rule.count(), 1);
        assert!(rule.nodes()[0].abs() < 1e-16);
        assert_eq!(rule.weight(), PI);
    }

    #[test]
    fn two_nodes() {
        let rule = chebyshev_rule(2).unwrap();
        let h = 2f64.sqrt() / 2.0;
        assert!((rule.nodes()[0] - h).abs() < 1e-15);
        assert!((rule.nodes()[1] + h).abs() < 1e-15);
    }

    #[test]
    fn five_nodes_integrate_unity() {
        // ∫_{-1}^{1} dx = 2; the √(1-x²) factor makes the rule inexact
        // (π/5 Σ sin((2k-1)π/10) = 2.0333).
        let rule = chebyshev_rule(5).unwrap();
        assert!((rule.integrate(|_| 1.0) - 2.033_281_476_926_104).abs() < 1e-12);
    }

    #[test]
    fn structure_holds_for_many_counts() {
        for count in 1..=64 {
            let rule = chebyshev_rule(count).unwrap();
            let x = rule.nodes();
            assert!(x.windows(2).all(|w| w[0] > w[1]));
            assert!(x.iter().all(|&v| v > -1.0 && v < 1.0));
            for i in 0..count {
                assert!((x[i] + x[count - 1 - i]).abs() < 1e-14);
            }
            assert!((rule.weight() * count as f64 - PI).abs() < 1e-14);
        }
    }

    #[test]
    fn quadratic_error_decreases_with_count() {
        let errs: Vec<f64> = [5, 20, 80]
            .iter()
            .map(|&n| (chebyshev_rule(n).unwrap().integrate(|x| x * x) - 2.0 / 3.0).abs())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }
}
