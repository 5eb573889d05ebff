//! Thin facade over rayon so every data-parallel loop in the crate has a
//! sequential fallback when the `parallel` feature is disabled. All helpers
//! preserve input order, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Keeps every value in `0..count` satisfying `pred`, in ascending order.
#[cfg(feature = "parallel")]
pub(crate) fn filter_range<F>(count: u64, pred: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    (0..count).into_par_iter().filter(|v| pred(*v)).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_range<F>(count: u64, pred: F) -> Vec<u64>
where
    F: Fn(u64) -> bool,
{
    (0..count).filter(|v| pred(*v)).collect()
}

/// True when `pred` holds for every item.
#[cfg(feature = "parallel")]
pub(crate) fn all<T, F>(items: &[T], pred: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    items.par_iter().all(pred)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn all<T, F>(items: &[T], pred: F) -> bool
where
    F: Fn(&T) -> bool,
{
    items.iter().all(pred)
}
