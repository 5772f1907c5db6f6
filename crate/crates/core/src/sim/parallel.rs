use rayon::prelude::*;

const CHUNK: u64 = 4096;

/// Maps every trial index in `0..trials` and folds the results.
///
/// Trials are grouped into fixed-size chunks folded left to right, and
/// chunk results are combined in chunk order, so the outcome does not
/// depend on the worker count. `workers = None` uses the global pool.
pub fn reduce_trials<T, M, C>(
    trials: u64,
    workers: Option<usize>,
    identity: T,
    map: M,
    combine: C,
) -> T
where
    T: Clone + Send + Sync,
    M: Fn(&mut T, u64) + Sync,
    C: Fn(T, T) -> T + Sync,
{
    let chunks = trials.div_ceil(CHUNK);
    let run = || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = identity.clone();
                for i in c * CHUNK..((c + 1) * CHUNK).min(trials) {
                    map(&mut acc, i);
                }
                acc
            })
            .collect::<Vec<T>>()
    };
    let parts = match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    parts.into_iter().fold(identity, combine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_sums_independent_of_workers() {
        let f = |acc: &mut f64, i: u64| *acc += 1.0 / (1.0 + i as f64).sqrt();
        let one = reduce_trials(50_000, Some(1), 0.0, f, |a, b| a + b);
        let eight = reduce_trials(50_000, Some(8), 0.0, f, |a, b| a + b);
        assert_eq!(one.to_bits(), eight.to_bits());
    }

    #[test]
    fn empty_run_is_identity() {
        let r = reduce_trials(0, None, 5u64, |a: &mut u64, _| *a += 1, |a, b| a + b - 5);
        assert_eq!(r, 5);
    }
}
