//! Quadrature rules and special functions shared by the closed-form
//! outage expressions.

mod chebyshev;
mod gamma;
mod integrate;

pub use chebyshev::{chebyshev_rule, ChebyshevRule};
pub use gamma::{gamma_fn, lower_incomplete_gamma};
pub use integrate::{integrate, Integral};
