//! Execution strategy for index-space scans.
//!
//! Every exhaustive or sampled search in this crate is phrased as a scan over
//! `0..len`. A [`Strategy`] picks whether that scan runs on the rayon pool or
//! on the calling thread. Results never depend on the strategy: searches
//! report the *lowest* matching index and collections keep index order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    /// Runs on the global rayon pool. Without the `parallel` feature this
    /// degrades to [`Strategy::Sequential`].
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Lowest index in `0..len` for which `f` yields a value.
    pub fn find_map_first<T, F>(self, len: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len)
                .into_par_iter()
                .find_map_first(|i| f(i).map(|v| (i, v))),
            _ => (0..len).find_map(|i| f(i).map(|v| (i, v))),
        }
    }

    pub fn all<F>(self, len: usize, f: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len).into_par_iter().all(f),
            _ => (0..len).all(f),
        }
    }

    pub fn count<F>(self, len: usize, f: F) -> usize
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len).into_par_iter().filter(|&i| f(i)).count(),
            _ => (0..len).filter(|&i| f(i)).count(),
        }
    }

    /// Collects the values `f` yields, in index order.
    pub fn filter_map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len).into_par_iter().filter_map(f).collect(),
            _ => (0..len).filter_map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for s in [Strategy::Sequential, Strategy::Parallel] {
            assert_eq!(
                s.find_map_first(10_000, |i| (i % 997 == 996).then_some(i * 2)),
                Some((996, 1992))
            );
            assert_eq!(s.count(1000, |i| i % 3 == 0), 334);
            assert!(s.all(100, |i| i < 100));
            assert_eq!(
                s.filter_map(20, |i| (i % 5 == 0).then_some(i)),
                vec![0, 5, 10, 15]
            );
            assert_eq!(s.find_map_first(0, |_| Some(())), None);
        }
    }
}
