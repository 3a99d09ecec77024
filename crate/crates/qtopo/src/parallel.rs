//! Multi-threaded enumeration with output identical to the sequential stream.
//!
//! The search space is split by smallest non-trivial open set. Workers take
//! parts from a shared counter and the per-part results are reassembled in
//! part order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::thread;

use qtopo_core::{decode_family, family_codes, first_open_partitions, Error, GroundSet, Topology};

fn run_parts<T, F>(n: usize, workers: usize, work: F) -> Result<Vec<T>, Error>
where
    T: Send,
    F: Fn(qtopo_core::FamilyCodes) -> T + Sync,
{
    let parts = first_open_partitions(n)?;
    let next = AtomicUsize::new(0);
    let workers = workers.clamp(1, parts.len());
    let mut done: Vec<(usize, T)> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&constraints) = parts.get(i) else {
                            break;
                        };
                        let codes = family_codes(n, constraints).expect("size already checked");
                        mine.push((i, work(codes)));
                    }
                    mine
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    done.sort_unstable_by_key(|&(i, _)| i);
    Ok(done.into_iter().map(|(_, t)| t).collect())
}

/// All topologies on `ground`, in the same order as
/// [`qtopo_core::enumerate_topologies`], using up to `workers` threads.
pub fn enumerate_parallel(ground: &GroundSet, workers: usize) -> Result<Vec<Topology>, Error> {
    let codes = run_parts(ground.len(), workers, |codes| codes.collect::<Vec<u32>>())?;
    let ground = Arc::new(ground.clone());
    Ok(codes
        .into_iter()
        .flatten()
        .map(|code| {
            Topology::new(decode_family(code), ground.clone()).expect("search emits topologies")
        })
        .collect())
}

/// Number of topologies on `n` points, counted on up to `workers` threads.
pub fn count_parallel(n: usize, workers: usize) -> Result<u64, Error> {
    Ok(run_parts(n, workers, |codes| codes.count() as u64)?
        .into_iter()
        .sum())
}
