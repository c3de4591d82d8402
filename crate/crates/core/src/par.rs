//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) the work is spread over the rayon
//! pool; without it, or when [`Execution::Sequential`] is requested, items are
//! processed in order on the calling thread. Results always come back in input
//! order, so output is identical either way.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when compiled with the `parallel` feature, otherwise
    /// behaves like `Sequential`.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub fn map<T, U, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec == Execution::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..100).collect();
        let a = map(Execution::Parallel, v.clone(), |x| x * x);
        let b = map(Execution::Sequential, v, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(a[7], 49);
    }
}
