//! Isomorph-free generation of all tournaments on `n` vertices.
//!
//! Every class on `n` vertices has a representative whose last vertex can be
//! deleted to leave a class on `n - 1` vertices, so extending one
//! representative per smaller class by a new vertex in every possible way
//! reaches every class. Extensions are keyed by canonical code; the set of
//! codes is the census.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Largest `n` enumerated without `force`.
pub const DEFAULT_MAX_N: usize = 9;
/// Largest `n` enumerated at all.
pub const FORCE_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Lift the cap from `DEFAULT_MAX_N` to `FORCE_MAX_N`.
    pub force: bool,
}

pub(crate) fn check_budget(n: usize, opts: &EnumOptions) -> Result<()> {
    let cap = if opts.force { FORCE_MAX_N } else { DEFAULT_MAX_N };
    if n > cap {
        return Err(Error::BudgetExceeded { n, cap });
    }
    Ok(())
}

/// Runs `f` on a pool of `jobs` workers.
pub(crate) fn in_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(f)
}

/// Canonical codes of the classes on `child` vertices obtained from `parents`,
/// sorted.
pub(crate) fn extend_level(parents: &[CanonicalCode]) -> Vec<CanonicalCode> {
    let found = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, code| {
            let parent = code.to_tournament();
            let m = parent.n();
            let mut out: Vec<u64> = parent.out_masks().to_vec();
            out.push(0);
            for s in 0..1u64 << m {
                for (v, row) in out.iter_mut().enumerate().take(m) {
                    if s >> v & 1 == 1 {
                        *row &= !(1 << m);
                    } else {
                        *row |= 1 << m;
                    }
                }
                out[m] = s;
                let t = Tournament::from_out_masks_unchecked(out.clone());
                acc.insert(canonical_code(&t));
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut codes: Vec<CanonicalCode> = found.into_iter().collect();
    codes.sort_unstable();
    codes
}

/// One canonical code per class for every order `1..=n`; entry `k` holds the
/// classes on `k` vertices (entry 0 is empty).
pub fn enumerate_levels(n: usize, opts: &EnumOptions) -> Result<Vec<Vec<CanonicalCode>>> {
    check_budget(n, opts)?;
    let mut levels = vec![Vec::new()];
    if n == 0 {
        return Ok(levels);
    }
    levels.push(vec![canonical_code(&Tournament::single_vertex())]);
    in_pool(opts.jobs, || {
        for _ in 2..=n {
            let next = extend_level(levels.last().expect("level"));
            levels.push(next);
        }
    });
    Ok(levels)
}

/// One canonical code per class on `n` vertices, sorted.
pub fn enumerate_codes(n: usize, opts: &EnumOptions) -> Result<Vec<CanonicalCode>> {
    if n == 0 {
        return Err(Error::BadSize(0));
    }
    Ok(enumerate_levels(n, opts)?.swap_remove(n))
}

/// One canonical representative per class on `n` vertices satisfying
/// `filter`, in code order.
pub fn enumerate_tournaments(
    n: usize,
    opts: &EnumOptions,
    filter: impl Fn(&Tournament) -> bool + Sync,
) -> Result<Vec<Tournament>> {
    let codes = enumerate_codes(n, opts)?;
    Ok(in_pool(opts.jobs, || {
        codes
            .par_iter()
            .map(CanonicalCode::to_tournament)
            .filter(|t| filter(t))
            .collect()
    }))
}
