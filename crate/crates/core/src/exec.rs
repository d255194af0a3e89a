//! Sequential / data-parallel execution of independent folds.
//!
//! Every parallel fold in the crate combines with an order-independent
//! operation (integer sum, `f64` max) or collects in index order, so
//! [`Exec::Parallel`] and [`Exec::Sequential`] return bit-identical results.
//! Without the `parallel` feature both variants run sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this variant actually runs on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

pub fn sum_u64<T, F>(exec: Exec, items: &[T], f: F) -> u64
where
    T: Sync,
    F: Fn(&T) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).sum();
    }
    let _ = exec;
    items.iter().map(f).sum()
}

pub fn sum_range<F>(exec: Exec, len: usize, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(f).sum();
    }
    let _ = exec;
    (0..len).map(f).sum()
}

/// Maximum of `f` over `items`; 0 for an empty slice. NaN propagates.
pub fn max_f64<T, F>(exec: Exec, items: &[T], f: F) -> f64
where
    T: Sync,
    F: Fn(&T) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).reduce(|| 0.0, nan_max);
    }
    let _ = exec;
    items.iter().map(f).fold(0.0, nan_max)
}

/// Maps in index order; results are identical to a sequential map.
pub fn map_collect<T, U, F>(exec: Exec, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Fallible max: the error reported is the one at the lowest index.
pub fn try_max_f64<T, E, F>(exec: Exec, items: &[T], f: F) -> Result<f64, E>
where
    T: Sync,
    E: Send,
    F: Fn(&T) -> Result<f64, E> + Sync + Send,
{
    map_collect(exec, items, f)
        .into_iter()
        .try_fold(0.0, |acc, r| r.map(|v| nan_max(acc, v)))
}

fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_parallel_agree() {
        let xs: Vec<u64> = (0..10_000).collect();
        assert_eq!(
            sum_u64(Exec::Sequential, &xs, |x| x * x),
            sum_u64(Exec::Parallel, &xs, |x| x * x)
        );
        let ys: Vec<f64> = xs.iter().map(|&x| ((x as f64) * 0.37).sin()).collect();
        assert_eq!(
            max_f64(Exec::Sequential, &ys, |y| y.abs()).to_bits(),
            max_f64(Exec::Parallel, &ys, |y| y.abs()).to_bits()
        );
    }

    #[test]
    fn try_max_reports_first_error() {
        let xs = [1.0, -1.0, 2.0, -2.0];
        let r = try_max_f64(
            Exec::Parallel,
            &xs,
            |&x| if x < 0.0 { Err(x) } else { Ok(x) },
        );
        assert_eq!(r, Err(-1.0));
    }

    #[test]
    fn nan_is_not_swallowed() {
        assert!(max_f64(Exec::Sequential, &[1.0, f64::NAN, 0.5], |&x| x).is_nan());
    }
}
