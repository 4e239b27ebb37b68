//! Data-parallel loop helpers.
//!
//! With the `parallel` feature these fan out over rayon's global pool; without
//! it they run sequentially. Output order always matches index order, so
//! results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `(0..n).map(f).collect()`.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// `(0..n).filter_map(f).collect()`.
pub fn filter_map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter_map(f).collect()
    }
}

/// Least `i < n` with `pred(i)`.
pub fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_first(|&i| pred(i))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find(|&i| pred(i))
    }
}

/// `items.iter().map(f).collect()`.
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Whether this build runs loops in parallel.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_preserve_order() {
        assert_eq!(map_range(5, |i| i * i), vec![0, 1, 4, 9, 16]);
        assert_eq!(filter_map_range(10, |i| (i % 3 == 0).then_some(i)), vec![0, 3, 6, 9]);
        assert_eq!(find_first(100, |i| i > 10 && i % 7 == 0), Some(14));
        assert_eq!(find_first(3, |_| false), None);
        assert_eq!(map_slice(&[1, 2, 3], |x| x + 1), vec![2, 3, 4]);
    }
}
