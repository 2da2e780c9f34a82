//! Permutations, heaps of reduced words, and exact generating functions.
//!
//! The crate has four layers:
//!
//! * [`perm`] — permutations in 1-line notation, classical pattern
//!   containment, the `N(w)` statistic counting `[321]` instances, and the
//!   word/permutation conversions.
//! * [`heap`] — heaps of reduced words as labeled posets with a normalized
//!   lattice embedding: full commutativity, heap containment, braid cluster
//!   column decompositions, and the diamond reduction bijection.
//! * [`genfun`] — exact polynomial, rational-function, and truncated power
//!   series arithmetic over arbitrary-precision rationals, together with the
//!   generating-function transforms relating fully commutative, freely
//!   braided, and maximally clustered pattern classes.
//! * [`enumerate`] — brute-force enumeration of pattern/heap-pattern classes
//!   by insertion trees, and verification harnesses that cross-check counts
//!   against generating functions and recurrences.
//!
//! Everything is exact: there is no floating point anywhere. All values are
//! immutable after construction and every operation is a pure function, so
//! the library is safe to use from multiple threads.
//!
//! The crate is `no_std` (it requires `alloc`); IO, CLI, and parallel
//! drivers live in the companion `clusterkit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod enumerate;
pub mod genfun;
pub mod heap;
pub mod perm;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::perm::Permutation;
    use alloc::vec::Vec;

    /// All of `S_n` in no particular order, for exhaustive small checks.
    pub(crate) fn all_permutations(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut vals: Vec<u8> = (1..=n as u8).collect();
        permute(&mut vals, 0, &mut out);
        out
    }

    fn permute(vals: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
        if k == vals.len() {
            out.push(Permutation::new(vals.clone()).unwrap());
            return;
        }
        for i in k..vals.len() {
            vals.swap(k, i);
            permute(vals, k + 1, out);
            vals.swap(k, i);
        }
    }
}
