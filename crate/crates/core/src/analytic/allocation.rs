use crate::error::{Error, Result};

/// Power coefficients and target rates of the `M` ordered users, with the
/// SIC decoding thresholds they imply.
#[derive(Debug, Clone, PartialEq)]
pub struct RateAllocation {
    power: Vec<f64>,
    rates: Vec<f64>,
    tau: Vec<f64>,
    eps: Vec<f64>,
    eps_max: Vec<f64>,
    feasible: bool,
}

impl RateAllocation {
    /// Validates `a` (sums to one, non-increasing) and derives
    /// `τ_j = 2^{R_j} - 1`, `ε_j`, and the prefix maxima `ε_max^m`.
    ///
    /// An allocation with `a_j - τ_j Σ_{i>j} a_i <= 0` for some `j < M` is
    /// returned with `feasible() == false`; every user is then always in
    /// outage.
    pub fn new(power: Vec<f64>, rates: Vec<f64>) -> Result<Self> {
        let m = power.len();
        if m == 0 {
            return Err(Error::invalid("allocation needs at least one user"));
        }
        if rates.len() != m {
            return Err(Error::invalid(format!(
                "{} power coefficients but {} rates",
                m,
                rates.len()
            )));
        }
        if let Some(a) = power.iter().find(|a| !(**a > 0.0) || !a.is_finite()) {
            return Err(Error::invalid(format!("power coefficient {a} must be positive")));
        }
        if let Some(r) = rates.iter().find(|r| !(**r >= 0.0) || !r.is_finite()) {
            return Err(Error::invalid(format!("target rate {r} must be nonnegative")));
        }
        let total: f64 = power.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::invalid(format!(
                "power coefficients must sum to 1, got {total}"
            )));
        }
        if power.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(
                "power coefficients must be non-increasing (a_1 >= a_2 >= ... >= a_M)",
            ));
        }

        let tau: Vec<f64> = rates.iter().map(|r| 2f64.powf(*r) - 1.0).collect();
        let mut feasible = true;
        let mut eps = Vec::with_capacity(m);
        for j in 0..m {
            let tail: f64 = power[j + 1..].iter().sum();
            let margin = power[j] - tau[j] * tail;
            if j + 1 < m && margin <= 0.0 {
                feasible = false;
                eps.push(f64::INFINITY);
            } else {
                eps.push(tau[j] / margin);
            }
        }
        let eps_max = eps
            .iter()
            .scan(f64::NEG_INFINITY, |acc, &e| {
                *acc = acc.max(e);
                Some(*acc)
            })
            .collect();

        Ok(RateAllocation {
            power,
            rates,
            tau,
            eps,
            eps_max,
            feasible,
        })
    }

    pub fn users(&self) -> usize {
        self.power.len()
    }

    pub fn power(&self) -> &[f64] {
        &self.power
    }

    pub fn rates(&self) -> &[f64] {
        &self.rates
    }

    pub fn tau(&self) -> &[f64] {
        &self.tau
    }

    pub fn eps(&self) -> &[f64] {
        &self.eps
    }

    pub fn eps_max(&self) -> &[f64] {
        &self.eps_max
    }

    pub fn feasible(&self) -> bool {
        self.feasible
    }

    /// Outage threshold on `X_m` (1-based `m`) for the time-division
    /// baseline: `M` equal slots at full power, so `2^{M R_m} - 1`.
    pub fn oma_threshold(&self, m: usize) -> f64 {
        2f64.powf(self.users() as f64 * self.rates[m - 1]) - 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_user_thresholds() {
        let a = RateAllocation::new(vec![0.5, 0.4, 0.1], vec![0.1; 3]).unwrap();
        let tau = 2f64.powf(0.1) - 1.0;
        assert!((a.tau()[0] - 0.071773).abs() < 1e-6);
        // ε_1 = τ / (0.5 - τ (0.4 + 0.1))
        assert!((a.eps()[0] - tau / (0.5 - 0.5 * tau)).abs() < 1e-15);
        assert!((a.eps()[0] - 0.154646).abs() < 1e-6);
        assert!((a.eps()[1] - tau / (0.4 - 0.1 * tau)).abs() < 1e-15);
        assert!((a.eps()[2] - 0.717735).abs() < 1e-6);
        assert!(a.feasible());
        assert!(a.eps_max().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn boundary_is_infeasible() {
        let a = RateAllocation::new(vec![0.5, 0.5], vec![1.0, 1.0]).unwrap();
        assert_eq!(a.tau()[0], 1.0);
        assert!(!a.feasible());
    }

    #[test]
    fn zero_rate_single_user() {
        let a = RateAllocation::new(vec![1.0], vec![0.0]).unwrap();
        assert_eq!(a.tau(), &[0.0]);
        assert_eq!(a.eps(), &[0.0]);
        assert!(a.feasible());
    }

    #[test]
    fn bad_inputs() {
        assert!(RateAllocation::new(vec![0.5, 0.49], vec![0.1, 0.1]).is_err());
        assert!(RateAllocation::new(vec![0.4, 0.6], vec![0.1, 0.1]).is_err());
        assert!(RateAllocation::new(vec![1.0], vec![0.1, 0.1]).is_err());
        assert!(RateAllocation::new(vec![], vec![]).is_err());
    }

    #[test]
    fn oma_threshold_uses_slot_share() {
        let a = RateAllocation::new(vec![0.8, 0.2], vec![0.1, 0.1]).unwrap();
        assert!((a.oma_threshold(1) - (2f64.powf(0.2) - 1.0)).abs() < 1e-15);
    }
}
