//! Std companion to `clusterkit-core`: parallel enumeration drivers.
//!
//! The core enumerator is single-threaded; this crate splits the
//! insertion tree at a fixed frontier depth and distributes subtrees to
//! worker threads. Totals are sums over a partition of the frontier, so
//! they are identical for every worker count.

use clusterkit_core::enumerate::{self, ClassSpec, EnumerateError, EnumerateOptions};
use clusterkit_core::perm::Permutation;

/// Frontier depth used to generate parallel work units.
const SPLIT_DEPTH: usize = 5;

/// Like [`enumerate::count_class`], but with subtrees distributed over
/// `jobs` worker threads.
pub fn count_class_parallel(
    spec: &ClassSpec,
    n_max: usize,
    opts: &EnumerateOptions,
    jobs: usize,
) -> Result<Vec<u64>, EnumerateError> {
    let jobs = jobs.max(1);
    if jobs == 1 || n_max <= SPLIT_DEPTH {
        return enumerate::count_class(spec, n_max, opts);
    }
    let mut counts = enumerate::count_class(spec, SPLIT_DEPTH - 1, opts)?;
    counts.resize(n_max + 1, 0);
    let roots = enumerate::frontier(spec, SPLIT_DEPTH, opts)?;
    let n_chunks = jobs.min(roots.len()).max(1);
    let mut chunks: Vec<Vec<Permutation>> = vec![Vec::new(); n_chunks];
    for (i, root) in roots.into_iter().enumerate() {
        chunks[i % n_chunks].push(root);
    }
    let partials: Result<Vec<Vec<u64>>, EnumerateError> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                scope.spawn(move || {
                    let mut acc = vec![0u64; n_max + 1];
                    for root in chunk {
                        let sub = enumerate::count_subtree(spec, root, n_max, opts)?;
                        for (a, s) in acc.iter_mut().zip(&sub) {
                            *a += s;
                        }
                    }
                    Ok(acc)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    for acc in partials? {
        for n in SPLIT_DEPTH..=n_max {
            counts[n] += acc[n];
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clusterkit_core::perm::PatternSet;

    #[test]
    fn worker_count_does_not_change_totals() {
        let spec = ClassSpec::new(
            "fc-hexagon",
            PatternSet::fully_commutative(),
            vec![clusterkit_core::perm::hexagon()],
        )
        .unwrap();
        let opts = EnumerateOptions::default();
        let seq = enumerate::count_class(&spec, 8, &opts).unwrap();
        for jobs in [1, 2, 3, 8] {
            let par = count_class_parallel(&spec, 8, &opts, jobs).unwrap();
            assert_eq!(par, seq, "jobs = {jobs}");
        }
    }
}
