//! Execution policy: rayon-backed when the `parallel` feature is on,
//! plain iterators otherwise. Every helper preserves input order so
//! results never depend on scheduling.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Per-graph work below this order stays on the calling thread.
pub const PARALLEL_MIN_ORDER: usize = 128;

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Default policy for per-graph work on `n` vertices.
    pub fn for_order(n: usize) -> Self {
        if n >= PARALLEL_MIN_ORDER {
            Execution::default()
        } else {
            Execution::Sequential
        }
    }
}

/// `(0..len).map(f).collect()`, in order.
pub fn map_range<T, F>(exec: Execution, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && len > 1 {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// Order-preserving map over a slice.
pub fn map_slice<S, T, F>(exec: Execution, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Map then reduce with an associative `reduce`; the reduction tree keeps
/// left-to-right order in both modes.
pub fn map_reduce<S, T, F, I, R>(exec: Execution, items: &[S], identity: I, map: F, reduce: R) -> T
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
    I: Fn() -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().map(map).reduce(identity, reduce);
    }
    let _ = exec;
    items.iter().map(map).fold(identity(), reduce)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (1..200).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let squares = map_slice(exec, &items, |x| x * x);
            assert_eq!(squares[10], 121);
            let concat = map_reduce(exec, &items, Vec::new, |&x| vec![x], |mut a, b| {
                a.extend(b);
                a
            });
            assert_eq!(concat, items);
            assert_eq!(map_range(exec, 5, |i| i * 2), vec![0, 2, 4, 6, 8]);
        }
    }
}
