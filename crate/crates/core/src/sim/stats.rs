//! Small empirical-statistics helpers used by the cross-validation suites.

/// Sample mean and its standard error.
pub fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Binomial standard error `sqrt(p (1-p) / n)`.
pub fn binomial_stderr(p: f64, n: u64) -> f64 {
    (p * (1.0 - p) / n as f64).sqrt()
}

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and
/// a reference law given by its CDF and left limit `Pr{X < x}`.
///
/// The left limit matters for laws with atoms.
pub fn ks_distance<F, G>(samples: &[f64], cdf: F, cdf_left: G) -> f64
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut d = 0.0f64;
    let mut i = 0;
    while i < xs.len() {
        let x = xs[i];
        let mut j = i;
        while j < xs.len() && xs[j] == x {
            j += 1;
        }
        // Empirical CDF jumps from i/n to j/n at x.
        d = d.max((cdf_left(x) - i as f64 / n).abs());
        d = d.max((cdf(x) - j as f64 / n).abs());
        i = j;
    }
    d
}
