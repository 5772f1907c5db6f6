//! Diversity order: the high-SNR slope of `-log10 P_m` against `log10 ρ_s`.

use super::sweep::OutageCurve;
use crate::error::{Error, Result};

/// Least-squares slope of `y` against `x`.
pub fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
    }
    sxy / sxx
}

/// Per-user slope of `-log10(analytic)` against `log10(ρ_s)` over the
/// sweep points inside `[lo_db, hi_db]`.
pub fn fit_diversity(curve: &OutageCurve, window_db: (f64, f64)) -> Result<Vec<f64>> {
    let (lo_db, hi_db) = window_db;
    let invalid = |reason: String| Error::InvalidWindow { lo_db, hi_db, reason };
    if !(lo_db < hi_db) {
        return Err(invalid("window must satisfy lo < hi".into()));
    }
    let inside = |db: f64| db >= lo_db && db <= hi_db;
    let points = curve.points().into_iter().filter(|&db| inside(db)).count();
    if points < 2 {
        return Err(invalid(format!("{points} sweep point(s) inside the window, need 2")));
    }
    (1..=curve.users)
        .map(|m| {
            let (x, y): (Vec<f64>, Vec<f64>) = curve
                .user_rows(m)
                .filter(|r| inside(r.rho_s_db))
                .map(|r| {
                    if r.analytic > 0.0 {
                        Ok((r.rho_s_db / 10.0, -r.analytic.log10()))
                    } else {
                        Err(invalid(format!("user {m} has zero outage at {} dB", r.rho_s_db)))
                    }
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .unzip();
            Ok(least_squares_slope(&x, &y))
        })
        .collect()
}
