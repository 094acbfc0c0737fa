//! Work-unit parallelism over the enumeration tree.
//!
//! The tree is cut at a fixed depth into canonical prefixes; workers pull
//! units from a shared counter and results are merged in unit order and then
//! sorted, so output does not depend on the worker count or scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use trifree_core::enumerate::{for_each_in_unit, form_of_generated, split_work, GenFilter, WorkUnit};
use trifree_core::theorems::{scan_unit, ScanTally, TheoremId};
use trifree_core::{Error, Graph};

/// Split depth used for order `n`: the last three levels, where nearly all
/// the work is, stay inside the units.
pub fn split_depth(n: usize) -> usize {
    n.saturating_sub(3).max(1)
}

/// Runs `job` on every unit with up to `jobs` threads; results come back
/// in unit order. The first error (by unit order) wins.
fn run_units<T, F>(units: &[WorkUnit], jobs: usize, job: F) -> Result<Vec<T>, Error>
where
    T: Send,
    F: Fn(&WorkUnit) -> Result<T, Error> + Sync,
{
    let jobs = jobs.max(1).min(units.len().max(1));
    if jobs == 1 {
        return units.iter().map(&job).collect();
    }
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<T, Error>>> = (0..units.len()).map(|_| None).collect();
    let finished: Vec<Vec<(usize, Result<T, Error>)>> = thread::scope(|s| {
        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(unit) = units.get(i) else { break };
                        done.push((i, job(unit)));
                    }
                    done
                })
            })
            .collect();
        workers.into_iter().map(|w| w.join().expect("scan worker panicked")).collect()
    });
    for (i, r) in finished.into_iter().flatten() {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|r| r.expect("every unit ran")).collect()
}

/// Scan of one theorem at order `n` over all classes passing `filter`.
pub fn scan(theorem: TheoremId, n: usize, filter: GenFilter, jobs: usize) -> Result<ScanTally, Error> {
    let units = split_work(n, filter, split_depth(n))?;
    let parts = run_units(&units, jobs, |u| scan_unit(theorem, n, filter, u))?;
    let mut tally = ScanTally::new(theorem, n);
    for part in parts {
        tally.merge(part);
    }
    Ok(tally.finish())
}

/// All classes on `n` vertices passing `filter`, in canonical-form order.
pub fn enumerate(n: usize, filter: GenFilter, jobs: usize) -> Result<Vec<Graph>, Error> {
    let units = split_work(n, filter, split_depth(n))?;
    let parts = run_units(&units, jobs, |u| {
        let mut out = Vec::new();
        for_each_in_unit(n, filter, u, |g| out.push(*g))?;
        Ok(out)
    })?;
    let mut all: Vec<Graph> = parts.into_iter().flatten().collect();
    all.sort_unstable_by_key(form_of_generated);
    Ok(all)
}
