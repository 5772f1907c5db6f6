use crate::error::Result;
use crate::numerics::{chebyshev_rule, ChebyshevRule};

/// The three Gauss-Chebyshev rules used by the closed-form outage:
/// `N` for the user-zone integral, `K` for the effective-SNR integral and
/// `L` for the guard-zone incomplete gamma.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    n: ChebyshevRule,
    k: ChebyshevRule,
    l: ChebyshevRule,
}

impl QuadratureSpec {
    pub const DEFAULT_N: usize = 5;
    pub const DEFAULT_K: usize = 10;
    pub const DEFAULT_L: usize = 10;

    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        Ok(QuadratureSpec {
            n: chebyshev_rule(n)?,
            k: chebyshev_rule(k)?,
            l: chebyshev_rule(l)?,
        })
    }

    pub fn n_rule(&self) -> &ChebyshevRule {
        &self.n
    }

    pub fn k_rule(&self) -> &ChebyshevRule {
        &self.k
    }

    pub fn l_rule(&self) -> &ChebyshevRule {
        &self.l
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.n.count(), self.k.count(), self.l.count())
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec::new(Self::DEFAULT_N, Self::DEFAULT_K, Self::DEFAULT_L)
            .expect("default counts are positive")
    }
}
