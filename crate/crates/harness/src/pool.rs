//! Order-preserving map over a slice, on a rayon pool when the `parallel`
//! feature is on and sequentially otherwise.

use crate::runner::RunError;

pub struct Pool {
    #[cfg(feature = "parallel")]
    pool: rayon::ThreadPool,
}

impl Pool {
    /// `jobs = None` uses every available core.
    #[cfg(feature = "parallel")]
    pub fn new(jobs: Option<usize>) -> Result<Self, RunError> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = jobs {
            builder = builder.num_threads(j.max(1));
        }
        let pool = builder.build().map_err(|e| RunError::ThreadPool(e.to_string()))?;
        Ok(Pool { pool })
    }

    #[cfg(not(feature = "parallel"))]
    pub fn new(_jobs: Option<usize>) -> Result<Self, RunError> {
        Ok(Pool {})
    }

    #[cfg(feature = "parallel")]
    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    #[cfg(not(feature = "parallel"))]
    pub fn workers(&self) -> usize {
        1
    }

    #[cfg(feature = "parallel")]
    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        use rayon::prelude::*;
        self.pool.install(|| items.par_iter().map(f).collect())
    }

    #[cfg(not(feature = "parallel"))]
    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        items.iter().map(f).collect()
    }
}
