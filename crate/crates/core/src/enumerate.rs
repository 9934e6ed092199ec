//! Shared enumeration settings: the size limit and the worker count.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest `n + m` accepted by the enumerators unless raised explicitly.
pub const DEFAULT_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Upper bound on `n + m`.
    pub limit: usize,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            limit: DEFAULT_LIMIT,
            jobs: 1,
        }
    }
}

impl EnumOptions {
    pub fn with_limit(limit: usize) -> Self {
        EnumOptions {
            limit,
            ..Self::default()
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn check(&self, size: usize) -> Result<()> {
        if size > self.limit {
            return Err(Error::SizeLimit {
                size,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// Runs `work` on every shard and concatenates the outputs in shard order,
/// so the result does not depend on the number of workers.
pub(crate) fn run_shards<S, T, F>(shards: Vec<S>, jobs: usize, work: F) -> Vec<T>
where
    S: Send + Sync,
    T: Send,
    F: Fn(&S) -> Vec<T> + Send + Sync,
{
    if jobs <= 1 || shards.len() <= 1 {
        return shards.iter().flat_map(&work).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let parts: Vec<Vec<T>> = pool.install(|| shards.par_iter().map(&work).collect());
    parts.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shard_order_is_independent_of_jobs() {
        let shards: Vec<u32> = (0..50).collect();
        let work = |s: &u32| (0..*s % 7).map(|k| s * 10 + k).collect::<Vec<_>>();
        assert_eq!(run_shards(shards.clone(), 1, work), run_shards(shards, 4, work));
    }

    #[test]
    fn limit() {
        let opts = EnumOptions::default();
        assert!(opts.check(9).is_ok());
        assert_eq!(
            opts.check(10).unwrap_err(),
            Error::SizeLimit { size: 10, limit: 9 }
        );
    }
}
