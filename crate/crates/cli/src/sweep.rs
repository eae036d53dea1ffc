//! Parallel sweeps of `S_n`, split into lexicographic rank ranges.

use std::ops::Range;

use rayon::prelude::*;
use rs_cells_core::perm::factorial;
use rs_cells_core::{CellBuckets, Permutation};

use crate::error::{CliError, Result};

pub fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Config(e.to_string()))
}

/// Splits `0..n!` into roughly `parts` contiguous ranges.
pub fn rank_chunks(n: usize, parts: usize) -> Vec<Range<usize>> {
    let total = factorial(n);
    let size = total.div_ceil(parts.max(1)).max(1);
    (0..total)
        .step_by(size)
        .map(|start| start..(start + size).min(total))
        .collect()
}

/// Groups `S_n` by insertion shape. Must run inside a pool.
pub fn cell_buckets(n: usize) -> CellBuckets {
    let chunks = rank_chunks(n, rayon::current_num_threads() * 4);
    let mut buckets = chunks
        .into_par_iter()
        .map(|ranks| {
            let mut b = CellBuckets::new(n);
            b.extend_ranks(ranks);
            b
        })
        .reduce(
            || CellBuckets::new(n),
            |mut a, b| {
                a.merge(b);
                a
            },
        );
    buckets.finish();
    buckets
}

/// Whether `pred` holds on all of `S_n`; the first failures (in rank order)
/// are returned. Must run inside a pool.
pub fn all_perms<F>(n: usize, pred: F) -> Vec<Permutation>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    let chunks = rank_chunks(n, rayon::current_num_threads() * 4);
    let mut failures: Vec<Permutation> = chunks
        .into_par_iter()
        .flat_map_iter(|ranks| {
            let mut w = Permutation::unrank(n, ranks.start);
            let mut bad = Vec::new();
            for _ in ranks {
                if !pred(&w) && bad.len() < 8 {
                    bad.push(w.clone());
                }
                w.advance();
            }
            bad
        })
        .collect();
    failures.sort();
    failures.truncate(8);
    failures
}
