//! Heaps of reduced words as labeled posets with a lattice embedding.
//!
//! A reduced word `w_1 ... w_k` induces a partial order on its letter
//! positions: the transitive closure of `i ≺ j` when `i < j` and the
//! letters do not commute. Labeling position `i` by its generator gives
//! the heap of the word; words in the same commutativity class have
//! isomorphic heaps, so heaps classify commutativity classes.
//!
//! Heaps are drawn as lattice points: an entry labeled `s_i` sits in
//! column `i`, and an entry covers another only if their columns differ
//! by one and no entry of either column lies between them. Levels here
//! are always normalized by longest-path rank from the minimal entries
//! (the "gravity" drawing), which makes heap equality a plain structural
//! comparison of `(column, level)` pairs.
//!
//! On top of the basic model this module provides:
//!
//! * the lateral-convexity test for full commutativity (every minimal
//!   same-column pair must have a distinct resolution),
//! * heap containment as a convex labeled subposet under subscript-shift
//!   embeddings,
//! * the canonical braid cluster column decomposition of a maximally
//!   clustered permutation, and
//! * the diamond reduction bijection and its inverse.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{
    classify, count_321_instances, reduced_word_of, support_and_connectivity,
    word_to_permutation, PermError, Permutation,
};

/// Errors from heap construction and heap operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeapError {
    /// A word failed the reducedness check.
    NotReduced { word_length: usize, element_length: usize },
    /// Operation requires a fully commutative heap.
    NotFullyCommutative,
    /// Operation requires a connected heap.
    NotConnected,
    /// Decomposition requires a maximally clustered permutation.
    NotMaximallyClustered,
    /// Strict diamond reduction found an internal column with fewer than
    /// two entries.
    ThinInternalColumn { col: usize },
    /// Heaps are indexed by 128-bit masks; larger heaps are unsupported.
    TooManyEntries { entries: usize },
    /// Commutativity-class search is only supported for fully commutative
    /// and maximally clustered permutations.
    ClassSearchUnsupported,
    /// The class search exceeded its node budget.
    SearchBudgetExceeded { limit: usize },
    /// The containment pattern must be connected and fully commutative.
    UnsupportedHeapPattern,
    /// An internal consistency check failed.
    Inconsistent(&'static str),
    Perm(PermError),
}

impl fmt::Display for HeapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeapError::NotReduced { word_length, element_length } => write!(
                f,
                "word of length {word_length} is not reduced (element has length {element_length})"
            ),
            HeapError::NotFullyCommutative => write!(f, "heap is not fully commutative"),
            HeapError::NotConnected => write!(f, "heap is not connected"),
            HeapError::NotMaximallyClustered => {
                write!(f, "permutation is not maximally clustered")
            }
            HeapError::ThinInternalColumn { col } => {
                write!(f, "internal column {col} has fewer than two entries")
            }
            HeapError::TooManyEntries { entries } => {
                write!(f, "heap has {entries} entries (max 128)")
            }
            HeapError::ClassSearchUnsupported => write!(
                f,
                "class-search unsupported: permutation is neither fully commutative nor maximally clustered"
            ),
            HeapError::SearchBudgetExceeded { limit } => {
                write!(f, "commutativity-class search exceeded budget of {limit}")
            }
            HeapError::UnsupportedHeapPattern => {
                write!(f, "heap pattern must be connected and fully commutative")
            }
            HeapError::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
            HeapError::Perm(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for HeapError {}

impl From<PermError> for HeapError {
    fn from(e: PermError) -> Self {
        HeapError::Perm(e)
    }
}

/// Default node budget for commutativity-class searches.
pub const DEFAULT_CLASS_LIMIT: usize = 100_000;

// ---- Reduced words ----

/// A reduced word in the generators `s_i`, tagged with its ambient rank.
///
/// Construction via [`ReducedWord::new`] checks reducedness: the word
/// length must equal the inversion count of the evaluated permutation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<usize>,
    rank: usize,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self, HeapError> {
        let w = word_to_permutation(&letters, rank)?;
        if w.length() != letters.len() {
            return Err(HeapError::NotReduced {
                word_length: letters.len(),
                element_length: w.length(),
            });
        }
        Ok(ReducedWord { letters, rank })
    }

    /// For words known to be reduced by construction.
    pub(crate) fn new_unchecked(letters: Vec<usize>, rank: usize) -> Self {
        ReducedWord { letters, rank }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word reinterpreted in a larger symmetric group.
    pub fn with_rank(&self, rank: usize) -> Result<ReducedWord, HeapError> {
        ReducedWord::new(self.letters.clone(), rank)
    }

    pub fn evaluate(&self) -> Permutation {
        word_to_permutation(&self.letters, self.rank).expect("reduced word is valid")
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty word)");
        }
        for (i, s) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{s}")?;
        }
        Ok(())
    }
}

/// The canonical braid cluster `s_{m+1} s_{m+2} ... s_{m+k} s_{m+k+1}
/// s_{m+k} ... s_{m+1}` of length `2k+1`, which evaluates to the
/// transposition `(m+1, m+k+2)`. Returned with the minimal rank `m+k+2`.
pub fn canonical_braid_cluster(m: usize, k: usize) -> ReducedWord {
    let mut letters = Vec::with_capacity(2 * k + 1);
    letters.extend(m + 1..=m + k + 1);
    letters.extend((m + 1..=m + k).rev());
    let word = ReducedWord::new_unchecked(letters, m + k + 2);
    debug_assert_eq!(word.evaluate().length(), 2 * k + 1);
    word
}

/// The hexagon `[46718235]` as a reduced word of rank 8.
pub fn hexagon_word() -> ReducedWord {
    ReducedWord::new(vec![5, 6, 7, 3, 4, 5, 6, 2, 3, 4, 5, 1, 2, 3], 8).expect("hexagon word")
}

/// The 3-hexagon, the diamond reduction of the hexagon (rank 6).
pub fn three_hexagon_word() -> ReducedWord {
    ReducedWord::new(vec![4, 5, 2, 3, 4, 1, 2], 6).expect("3-hexagon word")
}

/// The single minimal diamond `s_2 s_1 s_3 s_2`, which evaluates to `[3412]`.
pub fn diamond_word() -> ReducedWord {
    ReducedWord::new(vec![2, 1, 3, 2], 4).expect("diamond word")
}

// ---- Heaps ----

/// One lattice point of a heap: an entry labeled `s_col` at height `level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeapNode {
    pub col: usize,
    pub level: usize,
}

/// A heap with its normalized lattice embedding.
///
/// `rank` is the ambient symmetric group rank, so columns range over
/// `1..=rank-1`. Nodes are kept sorted by `(col, level)`; levels are
/// normalized to longest-path rank, so two heaps are equal as posets
/// exactly when they compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Heap {
    rank: usize,
    nodes: Vec<HeapNode>,
}

/// Reachability masks over heap entries; bit `j` of `above[i]` means
/// entry `i` lies strictly below entry `j` in the heap order.
struct Closure {
    above: Vec<u128>,
    below: Vec<u128>,
}

fn mask_bits(mut m: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl Heap {
    /// The empty heap of a given ambient rank.
    pub fn empty(rank: usize) -> Heap {
        Heap { rank, nodes: Vec::new() }
    }

    /// Drops the letters of a reduced word into their columns.
    ///
    /// Each letter lands one level above the highest earlier entry among
    /// its own column and the two neighbors, which yields the normalized
    /// longest-path embedding directly. Words in the same commutativity
    /// class produce identical heaps.
    pub fn from_word(word: &ReducedWord) -> Heap {
        let rank = word.rank();
        let mut top = vec![0usize; rank + 2];
        let mut nodes = Vec::with_capacity(word.len());
        for &c in word.letters() {
            let level = 1 + top[c - 1].max(top[c]).max(top[c + 1]);
            top[c] = level;
            nodes.push(HeapNode { col: c, level });
        }
        nodes.sort_unstable();
        Heap { rank, nodes }
    }

    /// Convenience: validate a word and build its heap.
    pub fn from_letters(letters: Vec<usize>, rank: usize) -> Result<Heap, HeapError> {
        Ok(Heap::from_word(&ReducedWord::new(letters, rank)?))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> &[HeapNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Sorted `(column, level)` pairs — the machine-readable form.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.nodes.iter().map(|n| (n.col, n.level)).collect()
    }

    pub fn contains_node(&self, col: usize, level: usize) -> bool {
        self.nodes.binary_search(&HeapNode { col, level }).is_ok()
    }

    /// Node indices of one column, in increasing level order.
    fn col_range(&self, col: usize) -> core::ops::Range<usize> {
        let lo = self.nodes.partition_point(|n| n.col < col);
        let hi = self.nodes.partition_point(|n| n.col <= col);
        lo..hi
    }

    pub fn column_count(&self, col: usize) -> usize {
        self.col_range(col).len()
    }

    /// Columns `1..=rank-1` with no entry.
    pub fn empty_columns(&self) -> Vec<usize> {
        (1..self.rank).filter(|&c| self.column_count(c) == 0).collect()
    }

    /// The interval of occupied columns, if any.
    pub fn support_interval(&self) -> Option<(usize, usize)> {
        let lo = self.nodes.iter().map(|n| n.col).min()?;
        let hi = self.nodes.iter().map(|n| n.col).max()?;
        Some((lo, hi))
    }

    /// Connected: the occupied columns form a nonempty interval.
    pub fn is_connected(&self) -> bool {
        match self.support_interval() {
            Some((lo, hi)) => (lo..=hi).all(|c| self.column_count(c) > 0),
            None => false,
        }
    }

    /// A reduced word reading of the heap: any linear extension returns
    /// a word for the same permutation; this one reads by level, then
    /// column.
    pub fn to_word(&self) -> ReducedWord {
        let mut order: Vec<&HeapNode> = self.nodes.iter().collect();
        order.sort_unstable_by_key(|n| (n.level, n.col));
        let letters = order.iter().map(|n| n.col).collect();
        ReducedWord::new_unchecked(letters, self.rank)
    }

    /// The permutation this heap represents.
    pub fn evaluate(&self) -> Permutation {
        word_to_permutation(self.to_word().letters(), self.rank).expect("heap word is valid")
    }

    fn closure(&self) -> Result<Closure, HeapError> {
        let n = self.nodes.len();
        if n > 128 {
            return Err(HeapError::TooManyEntries { entries: n });
        }
        let mut by_level: Vec<usize> = (0..n).collect();
        by_level.sort_unstable_by_key(|&i| core::cmp::Reverse(self.nodes[i].level));
        let mut above = vec![0u128; n];
        for &i in &by_level {
            let ni = self.nodes[i];
            for j in 0..n {
                let nj = self.nodes[j];
                if nj.level > ni.level && ni.col.abs_diff(nj.col) <= 1 {
                    above[i] |= (1u128 << j) | above[j];
                }
            }
        }
        let mut below = vec![0u128; n];
        for i in 0..n {
            for j in mask_bits(above[i]) {
                below[j] |= 1u128 << i;
            }
        }
        Ok(Closure { above, below })
    }

    /// Minimal pairs: node index pairs `(lower, upper)` that are adjacent
    /// in their column's chain.
    fn minimal_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut c = 1;
        while c < self.rank {
            let r = self.col_range(c);
            for i in r.start..r.end.saturating_sub(1) {
                out.push((i, i + 1));
            }
            c += 1;
        }
        out
    }

    /// Nodes of `col` with level strictly between `lo` and `hi`.
    ///
    /// For columns adjacent to a pair's column this is exactly the set of
    /// entries strictly between the pair in the heap order, because
    /// entries of adjacent columns are always comparable.
    fn col_nodes_between(&self, col: usize, lo: usize, hi: usize) -> Vec<usize> {
        if col == 0 || col >= self.rank {
            return Vec::new();
        }
        self.col_range(col)
            .filter(|&i| self.nodes[i].level > lo && self.nodes[i].level < hi)
            .collect()
    }

    fn pair_has_distinct_resolution(&self, lower: usize, upper: usize) -> bool {
        let c = self.nodes[lower].col;
        let lo = self.nodes[lower].level;
        let hi = self.nodes[upper].level;
        !self.col_nodes_between(c - 1, lo, hi).is_empty()
            && !self.col_nodes_between(c + 1, lo, hi).is_empty()
    }

    /// Lateral convexity: every minimal pair has a distinct resolution.
    /// Agrees with `[321]`-avoidance of the evaluated permutation.
    pub fn is_fully_commutative(&self) -> bool {
        self.minimal_pairs().iter().all(|&(x, y)| self.pair_has_distinct_resolution(x, y))
    }

    /// The minimal diamonds of a fully commutative heap: each minimal
    /// pair together with its distinct resolution.
    pub fn minimal_diamonds(&self) -> Result<Vec<MinimalDiamond>, HeapError> {
        if !self.is_fully_commutative() {
            return Err(HeapError::NotFullyCommutative);
        }
        let mut out = Vec::new();
        for (x, y) in self.minimal_pairs() {
            let c = self.nodes[x].col;
            let (lo, hi) = (self.nodes[x].level, self.nodes[y].level);
            let lefts = self.col_nodes_between(c - 1, lo, hi);
            let rights = self.col_nodes_between(c + 1, lo, hi);
            // In a fully commutative heap the resolution is unique on
            // each side.
            debug_assert_eq!(lefts.len(), 1);
            debug_assert_eq!(rights.len(), 1);
            out.push(MinimalDiamond {
                pair: (self.nodes[x], self.nodes[y]),
                resolution: (self.nodes[lefts[0]], self.nodes[rights[0]]),
            });
        }
        Ok(out)
    }

    /// All single braid moves applicable to this heap, as the resulting
    /// heaps. A braid move applies at a minimal pair with exactly one
    /// entry strictly between its members.
    fn braid_moves(&self) -> Result<Vec<Heap>, HeapError> {
        let cl = self.closure()?;
        let mut out = Vec::new();
        for (x, y) in self.minimal_pairs() {
            let between = cl.above[x] & cl.below[y];
            if between.count_ones() != 1 {
                continue;
            }
            let z = between.trailing_zeros() as usize;
            out.push(self.apply_braid_move(&cl, x, z, y));
        }
        Ok(out)
    }

    /// Rewrites the triple `x < z < y` (labels `i j i`) as `j i j`.
    ///
    /// Emits a linear extension in which the triple is consecutive: first
    /// the strict down-set of `z` without `x`, then `x z y`, then the
    /// rest. Down-set elements never exceed `x` (anything above `x` and
    /// below `z` would lie between the pair), so the order is valid.
    fn apply_braid_move(&self, cl: &Closure, x: usize, z: usize, y: usize) -> Heap {
        let n = self.nodes.len();
        let i = self.nodes[x].col;
        let j = self.nodes[z].col;
        let head_mask = cl.below[z] & !(1u128 << x);
        let mut head: Vec<usize> = mask_bits(head_mask).collect();
        head.sort_unstable_by_key(|&t| (self.nodes[t].level, self.nodes[t].col));
        let mut tail: Vec<usize> = (0..n)
            .filter(|&t| head_mask & (1u128 << t) == 0 && t != x && t != z && t != y)
            .collect();
        tail.sort_unstable_by_key(|&t| (self.nodes[t].level, self.nodes[t].col));

        let mut letters = Vec::with_capacity(n);
        letters.extend(head.iter().map(|&t| self.nodes[t].col));
        letters.extend([j, i, j]);
        letters.extend(tail.iter().map(|&t| self.nodes[t].col));
        let word = ReducedWord::new_unchecked(letters, self.rank);
        debug_assert_eq!(word.evaluate(), self.evaluate());
        Heap::from_word(&word)
    }

    /// Splits into connected components, left to right. Each component is
    /// returned with its original starting column and its heap shifted to
    /// start at column 1; concatenating them back (respecting the empty
    /// columns) reconstructs the input.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut c = 1;
        while c < self.rank {
            if self.column_count(c) == 0 {
                c += 1;
                continue;
            }
            let start = c;
            while c < self.rank && self.column_count(c) > 0 {
                c += 1;
            }
            let width = c - start;
            let nodes: Vec<HeapNode> = self
                .nodes
                .iter()
                .filter(|n| n.col >= start && n.col < c)
                .map(|n| HeapNode { col: n.col - start + 1, level: n.level })
                .collect();
            out.push(Component { start_col: start, heap: Heap { rank: width + 1, nodes } });
        }
        out
    }

    /// The diamond reduction: replaces every minimal diamond by a single
    /// entry, dropping the two extremal columns.
    ///
    /// Requires a connected, fully commutative heap with at least two
    /// entries in each internal column; violations are reported with the
    /// offending column. For inputs with at least three columns the
    /// result is connected and the operation is inverted exactly by
    /// [`Heap::inverse_diamond_reduction`].
    pub fn diamond_reduction(&self) -> Result<Heap, HeapError> {
        self.diamond_reduction_impl(true)
    }

    /// The informal diamond reduction with the internal-column check
    /// relaxed: still requires a connected fully commutative heap, but
    /// thin internal columns are allowed and the result may be
    /// disconnected (the 3-hexagon reduces to `s_1 s_3` this way).
    pub fn diamond_reduction_relaxed(&self) -> Result<Heap, HeapError> {
        self.diamond_reduction_impl(false)
    }

    fn diamond_reduction_impl(&self, strict: bool) -> Result<Heap, HeapError> {
        let (lo, hi) = self.support_interval().ok_or(HeapError::NotConnected)?;
        if !self.is_connected() {
            return Err(HeapError::NotConnected);
        }
        if !self.is_fully_commutative() {
            return Err(HeapError::NotFullyCommutative);
        }
        if strict {
            for col in lo + 1..hi {
                if self.column_count(col) < 2 {
                    return Err(HeapError::ThinInternalColumn { col });
                }
            }
        }
        let diamonds = self.minimal_diamonds()?;
        // Represent each diamond by its top entry; the induced subposet,
        // shifted one column left, is the reduced heap.
        let mut tops: Vec<HeapNode> = diamonds.iter().map(|d| d.pair.1).collect();
        tops.sort_unstable_by_key(|n| (n.level, n.col));
        let letters: Vec<usize> = tops.iter().map(|n| n.col - 1).collect();
        if self.rank < 2 {
            return Err(HeapError::Inconsistent("rank too small for diamond reduction"));
        }
        let word = ReducedWord::new(letters, self.rank - 2)
            .map_err(|_| HeapError::Inconsistent("diamond reduction reading is not reduced"))?;
        Ok(Heap::from_word(&word))
    }

    /// The inverse diamond reduction: builds the heap with a minimal
    /// diamond centered at each entry of `self`.
    ///
    /// Requires a connected, fully commutative heap. The output is
    /// connected, fully commutative, has two more columns, at least two
    /// entries in each internal column, and reduces back to the input.
    pub fn inverse_diamond_reduction(&self) -> Result<Heap, HeapError> {
        let (a, b) = self.support_interval().ok_or(HeapError::NotConnected)?;
        if !self.is_connected() {
            return Err(HeapError::NotConnected);
        }
        if !self.is_fully_commutative() {
            return Err(HeapError::NotFullyCommutative);
        }
        let new_rank = self.rank + 2;

        // One chain per output column c spanning a..=b+2; the chain for
        // column c has (number of entries in input column c-1) + 1 nodes.
        let m = |x: usize| -> usize {
            if x >= a && x <= b {
                self.column_count(x)
            } else {
                0
            }
        };
        let mut offset = vec![0usize; b + 4];
        let mut total = 0usize;
        for c in a..=b + 2 {
            offset[c] = total;
            total += m(c - 1) + 1;
        }
        let id = |c: usize, t: usize| offset[c] + t;

        // Sandwich relations: the i-th entry of input column x becomes the
        // minimal pair (t = i-1, i) of output column x+1, resolved by one
        // chain node of column x and one of column x+2. Which chain node
        // is determined by how the entry interleaves with the neighboring
        // input columns.
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for c in a..=b + 2 {
            for t in 0..m(c - 1) {
                edges.push((id(c, t), id(c, t + 1)));
            }
        }
        for x in a..=b {
            let col = self.col_range(x);
            for (i, idx) in col.clone().enumerate() {
                let level = self.nodes[idx].level;
                let pair_lo = id(x + 1, i);
                let pair_hi = id(x + 1, i + 1);
                let k_left = if x > a {
                    self.col_range(x - 1).filter(|&u| self.nodes[u].level < level).count()
                } else {
                    0
                };
                let k_right = if x < b {
                    self.col_range(x + 1).filter(|&u| self.nodes[u].level < level).count()
                } else {
                    0
                };
                edges.push((pair_lo, id(x, k_left)));
                edges.push((id(x, k_left), pair_hi));
                edges.push((pair_lo, id(x + 2, k_right)));
                edges.push((id(x + 2, k_right), pair_hi));
            }
        }

        // Longest-path levels over the relation graph.
        let mut indeg = vec![0usize; total];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); total];
        for &(u, v) in &edges {
            succ[u].push(v);
            indeg[v] += 1;
        }
        let mut level = vec![1usize; total];
        let mut queue: VecDeque<usize> = (0..total).filter(|&u| indeg[u] == 0).collect();
        let mut seen = 0usize;
        while let Some(u) = queue.pop_front() {
            seen += 1;
            for &v in &succ[u] {
                level[v] = level[v].max(level[u] + 1);
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if seen != total {
            return Err(HeapError::Inconsistent("inverse diamond relations are cyclic"));
        }

        let mut placed: Vec<(usize, usize, usize)> = Vec::with_capacity(total);
        for c in a..=b + 2 {
            for t in 0..=m(c - 1) {
                placed.push((level[id(c, t)], c, id(c, t)));
            }
        }
        placed.sort_unstable();
        let letters: Vec<usize> = placed.iter().map(|&(_, c, _)| c).collect();
        let word = ReducedWord::new(letters, new_rank)
            .map_err(|_| HeapError::Inconsistent("inverse diamond reading is not reduced"))?;
        let result = Heap::from_word(&word);
        match result.diamond_reduction() {
            Ok(back) if back == *self => Ok(result),
            _ => Err(HeapError::Inconsistent("inverse diamond reduction failed its round-trip")),
        }
    }
}

impl fmt::Display for Heap {
    /// Lattice picture, highest level first: `*` for an entry, `.` for an
    /// empty lattice point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nodes.is_empty() {
            return write!(f, "(empty heap)");
        }
        let ncols = self.rank - 1;
        let max_level = self.nodes.iter().map(|n| n.level).max().unwrap_or(0);
        for level in (1..=max_level).rev() {
            for col in 1..=ncols {
                if col > 1 {
                    write!(f, " ")?;
                }
                write!(f, "{}", if self.contains_node(col, level) { '*' } else { '.' })?;
            }
            if level > 1 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// A connected component of a heap, with its original starting column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub start_col: usize,
    pub heap: Heap,
}

/// A minimal pair of same-column entries together with its distinct
/// resolution in the two neighboring columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalDiamond {
    /// The two same-column entries, lower first.
    pub pair: (HeapNode, HeapNode),
    /// The resolving entries in columns `col-1` and `col+1`.
    pub resolution: (HeapNode, HeapNode),
}

// ---- Full commutativity and class search ----

/// Heap-side full commutativity test. Must (and does, exhaustively
/// tested) agree with `[321]`-avoidance in 1-line notation.
pub fn is_fully_commutative(w: &Permutation) -> bool {
    Heap::from_word(&reduced_word_of(w)).is_fully_commutative()
}

/// Enumerates the commutativity classes of `w` as their normalized heaps,
/// by closing the heap of one reduced word under single braid moves.
///
/// The class count is the product over braid clusters of the cluster's
/// own class count, so this is cheap for fully commutative (one class)
/// and maximally clustered permutations; `limit` guards everything else.
pub fn commutativity_classes(w: &Permutation, limit: usize) -> Result<Vec<Heap>, HeapError> {
    let start = Heap::from_word(&reduced_word_of(w));
    let mut seen: BTreeSet<Vec<HeapNode>> = BTreeSet::new();
    seen.insert(start.nodes.clone());
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut out = Vec::new();
    while let Some(h) = queue.pop_front() {
        for nb in h.braid_moves()? {
            if !seen.contains(&nb.nodes) {
                if seen.len() >= limit {
                    return Err(HeapError::SearchBudgetExceeded { limit });
                }
                seen.insert(nb.nodes.clone());
                queue.push_back(nb);
            }
        }
        out.push(h);
    }
    Ok(out)
}

/// Heap containment: does some commutativity class of `w`, under some
/// subscript-shift embedding, contain the heap of `h` as a convex labeled
/// subposet?
///
/// `h` must be connected and fully commutative (its heap is then unique,
/// and the orientation-preserving embeddings are exactly the shifts
/// `s_i -> s_{i+c}` for `c` up to the rank difference). `w` must be fully
/// commutative or maximally clustered; anything else is rejected with
/// [`HeapError::ClassSearchUnsupported`].
pub fn heap_contains(w: &Permutation, h: &Permutation) -> Result<bool, HeapError> {
    let flags = classify(w);
    if !flags.maximally_clustered {
        return Err(HeapError::ClassSearchUnsupported);
    }
    heap_contains_unrestricted(w, h, DEFAULT_CLASS_LIMIT)
}

/// [`heap_contains`] without the class guard on `w`: searches every
/// commutativity class up to `limit`. Intended for small ranks where the
/// full class search is feasible.
pub fn heap_contains_unrestricted(
    w: &Permutation,
    h: &Permutation,
    limit: usize,
) -> Result<bool, HeapError> {
    let (_, h_connected) = support_and_connectivity(h);
    if !h_connected || count_321_instances(h) != 0 {
        return Err(HeapError::UnsupportedHeapPattern);
    }
    if h.rank() > w.rank() || h.length() > w.length() {
        return Ok(false);
    }
    let pat = Heap::from_word(&reduced_word_of(h));
    let pat_cl = pat.closure()?;
    let max_shift = w.rank() - h.rank();
    for class in commutativity_classes(w, limit)? {
        let host_cl = class.closure()?;
        for shift in 0..=max_shift {
            if embeds_with_shift(&class, &host_cl, &pat, &pat_cl, shift) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Tests whether `pat`, with its columns shifted right by `shift`, occurs
/// as a convex labeled subposet of `host`.
///
/// Candidate images are anchored on the column multiset: inside each host
/// column the image must be a contiguous window of the column chain (a
/// gap would already violate convexity), so windows are enumerated per
/// column and each combination is checked for order isomorphism and
/// convexity.
fn embeds_with_shift(
    host: &Heap,
    host_cl: &Closure,
    pat: &Heap,
    pat_cl: &Closure,
    shift: usize,
) -> bool {
    let mut pat_cols: Vec<(usize, core::ops::Range<usize>)> = Vec::new();
    {
        let mut c = 1;
        while c < pat.rank {
            let r = pat.col_range(c);
            if !r.is_empty() {
                pat_cols.push((c, r));
            }
            c += 1;
        }
    }
    let mut windows: Vec<usize> = Vec::with_capacity(pat_cols.len());
    for (c, r) in &pat_cols {
        let host_count = host.column_count(c + shift);
        if host_count < r.len() {
            return false;
        }
        windows.push(host_count - r.len() + 1);
    }
    let mut offsets = vec![0usize; pat_cols.len()];
    loop {
        if check_embedding(host, host_cl, pat, pat_cl, shift, &pat_cols, &offsets) {
            return true;
        }
        // next mixed-radix combination
        let mut i = 0;
        loop {
            if i == offsets.len() {
                return false;
            }
            offsets[i] += 1;
            if offsets[i] < windows[i] {
                break;
            }
            offsets[i] = 0;
            i += 1;
        }
    }
}

fn check_embedding(
    host: &Heap,
    host_cl: &Closure,
    pat: &Heap,
    pat_cl: &Closure,
    shift: usize,
    pat_cols: &[(usize, core::ops::Range<usize>)],
    offsets: &[usize],
) -> bool {
    let mut map = vec![usize::MAX; pat.nodes.len()];
    let mut image: u128 = 0;
    for ((c, r), &off) in pat_cols.iter().zip(offsets) {
        let host_r = host.col_range(c + shift);
        for (t, p_idx) in r.clone().enumerate() {
            let h_idx = host_r.start + off + t;
            map[p_idx] = h_idx;
            image |= 1u128 << h_idx;
        }
    }
    // Order isomorphism in both directions.
    for u in 0..pat.nodes.len() {
        for v in 0..pat.nodes.len() {
            let pat_less = pat_cl.above[u] & (1u128 << v) != 0;
            let host_less = host_cl.above[map[u]] & (1u128 << map[v]) != 0;
            if pat_less != host_less {
                return false;
            }
        }
    }
    // Convexity: no outside entry strictly between two image entries.
    for z in 0..host.nodes.len() {
        if image & (1u128 << z) != 0 {
            continue;
        }
        if host_cl.below[z] & image != 0 && host_cl.above[z] & image != 0 {
            return false;
        }
    }
    true
}

// ---- Braid cluster column decomposition ----

/// The canonical braid cluster column decomposition of a maximally
/// clustered permutation: alternating column intervals
/// `C_0, B_1, C_1, ..., B_k, C_k` where each `B_i` carries a braid
/// cluster in canonical form and every minimal pair in a `C` column has a
/// distinct resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterDecomposition {
    rank: usize,
    /// `k+1` possibly-empty intervals, stored as `(lo, hi)` with
    /// `lo > hi` denoting empty.
    c_intervals: Vec<(usize, usize)>,
    /// `k` cluster column intervals.
    b_intervals: Vec<(usize, usize)>,
    /// `n_i` for each cluster; the cluster word has length `2 n_i + 1`.
    half_lengths: Vec<usize>,
    canonical_heap: Heap,
}

impl ClusterDecomposition {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cluster_count(&self) -> usize {
        self.b_intervals.len()
    }

    pub fn cluster_intervals(&self) -> &[(usize, usize)] {
        &self.b_intervals
    }

    pub fn c_intervals(&self) -> &[(usize, usize)] {
        &self.c_intervals
    }

    pub fn half_lengths(&self) -> &[usize] {
        &self.half_lengths
    }

    /// Sum of the `n_i`, which equals `N(w)`.
    pub fn total_weight(&self) -> u64 {
        self.half_lengths.iter().map(|&n| n as u64).sum()
    }

    pub fn canonical_heap(&self) -> &Heap {
        &self.canonical_heap
    }

    /// A contracted reduced word read off the canonical heap: clusters
    /// appear as contiguous blocks, everything evaluates back to `w`.
    pub fn contracted_word(&self) -> ReducedWord {
        let h = &self.canonical_heap;
        let n = h.nodes.len();
        // Group nodes: one supernode per cluster, singletons elsewhere.
        let group_of = |idx: usize| -> usize {
            let col = h.nodes[idx].col;
            for (g, &(lo, hi)) in self.b_intervals.iter().enumerate() {
                if col >= lo && col <= hi {
                    return g;
                }
            }
            self.b_intervals.len() + idx
        };
        let mut members: alloc::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for idx in 0..n {
            members.entry(group_of(idx)).or_default().push(idx);
        }
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                let (ni, nj) = (h.nodes[i], h.nodes[j]);
                if ni.col.abs_diff(nj.col) <= 1 && ni.level < nj.level {
                    let (gi, gj) = (group_of(i), group_of(j));
                    if gi != gj {
                        edges.insert((gi, gj));
                    }
                }
            }
        }
        let mut indeg: alloc::collections::BTreeMap<usize, usize> =
            members.keys().map(|&g| (g, 0)).collect();
        for &(_, t) in &edges {
            *indeg.get_mut(&t).unwrap() += 1;
        }
        let mut letters = Vec::with_capacity(n);
        let mut ready: BTreeSet<(usize, usize, usize)> = indeg
            .iter()
            .filter(|&(_, &d)| d == 0)
            .map(|(&g, _)| group_key(h, &members[&g], g))
            .collect();
        let mut emitted = 0usize;
        while let Some(&key) = ready.iter().next() {
            ready.remove(&key);
            let g = key.2;
            let mut ms = members[&g].clone();
            ms.sort_unstable_by_key(|&idx| (h.nodes[idx].level, h.nodes[idx].col));
            letters.extend(ms.iter().map(|&idx| h.nodes[idx].col));
            emitted += 1;
            for &(s, t) in &edges {
                if s == g {
                    let d = indeg.get_mut(&t).unwrap();
                    *d -= 1;
                    if *d == 0 {
                        ready.insert(group_key(h, &members[&t], t));
                    }
                }
            }
        }
        debug_assert_eq!(emitted, members.len());
        let word = ReducedWord::new_unchecked(letters, h.rank);
        debug_assert_eq!(word.evaluate(), h.evaluate());
        word
    }
}

fn group_key(h: &Heap, members: &[usize], g: usize) -> (usize, usize, usize) {
    let min = members
        .iter()
        .map(|&idx| (h.nodes[idx].level, h.nodes[idx].col))
        .min()
        .expect("nonempty group");
    (min.0, min.1, g)
}

/// Computes the canonical braid cluster column decomposition of a
/// maximally clustered permutation.
///
/// Searches the commutativity classes of `w` breadth-first until the
/// unique class whose heap admits the decomposition is found. The result
/// is anchored by invariants rather than the search order: the sum of the
/// cluster half-lengths equals `N(w)` and the canonical heap evaluates
/// back to `w`.
pub fn braid_cluster_decomposition(w: &Permutation) -> Result<ClusterDecomposition, HeapError> {
    braid_cluster_decomposition_with(w, DEFAULT_CLASS_LIMIT)
}

pub fn braid_cluster_decomposition_with(
    w: &Permutation,
    limit: usize,
) -> Result<ClusterDecomposition, HeapError> {
    if !classify(w).maximally_clustered {
        return Err(HeapError::NotMaximallyClustered);
    }
    let expected = count_321_instances(w);
    let start = Heap::from_word(&reduced_word_of(w));
    let ncols = w.rank().saturating_sub(1);
    if expected == 0 {
        return Ok(ClusterDecomposition {
            rank: w.rank(),
            c_intervals: vec![(1, ncols)],
            b_intervals: Vec::new(),
            half_lengths: Vec::new(),
            canonical_heap: start,
        });
    }
    let mut seen: BTreeSet<Vec<HeapNode>> = BTreeSet::new();
    seen.insert(start.nodes.clone());
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(h) = queue.pop_front() {
        if let Some(dec) = try_bc_decomposition(&h, expected) {
            debug_assert_eq!(dec.canonical_heap.evaluate(), *w);
            return Ok(dec);
        }
        for nb in h.braid_moves()? {
            if !seen.contains(&nb.nodes) {
                if seen.len() >= limit {
                    return Err(HeapError::SearchBudgetExceeded { limit });
                }
                seen.insert(nb.nodes.clone());
                queue.push_back(nb);
            }
        }
    }
    Err(HeapError::Inconsistent("no commutativity class admits a cluster decomposition"))
}

/// Checks whether this heap admits a braid cluster column decomposition
/// with total weight `expected`, and extracts it when it does.
///
/// Columns carrying a minimal pair without a distinct resolution must be
/// exactly the non-peak columns of the clusters; each maximal run of such
/// columns, extended one column right, must restrict to the canonical
/// ascending-then-descending cluster chain.
fn try_bc_decomposition(h: &Heap, expected: u64) -> Option<ClusterDecomposition> {
    let ncols = h.rank.saturating_sub(1);
    let mut unresolved = vec![false; ncols + 2];
    for (x, y) in h.minimal_pairs() {
        if !h.pair_has_distinct_resolution(x, y) {
            unresolved[h.nodes[x].col] = true;
        }
    }
    let mut b_intervals = Vec::new();
    let mut half_lengths = Vec::new();
    let mut col = 1;
    while col <= ncols {
        if !unresolved[col] {
            col += 1;
            continue;
        }
        let p = col;
        while col <= ncols && unresolved[col] {
            col += 1;
        }
        let q = col; // peak column, one past the run
        if q > ncols || !is_canonical_cluster_restriction(h, p, q) {
            return None;
        }
        b_intervals.push((p, q));
        half_lengths.push(q - p);
        col += 1;
    }
    if half_lengths.iter().map(|&n| n as u64).sum::<u64>() != expected {
        return None;
    }
    let mut c_intervals = Vec::with_capacity(b_intervals.len() + 1);
    let mut prev_end = 0usize;
    for &(p, q) in &b_intervals {
        c_intervals.push((prev_end + 1, p - 1));
        prev_end = q;
    }
    c_intervals.push((prev_end + 1, ncols));
    Some(ClusterDecomposition {
        rank: h.rank,
        c_intervals,
        b_intervals,
        half_lengths,
        canonical_heap: h.clone(),
    })
}

/// The restriction to columns `p..=q` must be the canonical cluster: a
/// chain whose column sequence reads `p, p+1, ..., q, q-1, ..., p`.
fn is_canonical_cluster_restriction(h: &Heap, p: usize, q: usize) -> bool {
    for c in p..q {
        if h.column_count(c) != 2 {
            return false;
        }
    }
    if h.column_count(q) != 1 {
        return false;
    }
    let mut nodes: Vec<&HeapNode> = h.nodes.iter().filter(|n| n.col >= p && n.col <= q).collect();
    nodes.sort_unstable_by_key(|n| n.level);
    if nodes.windows(2).any(|w| w[0].level >= w[1].level) {
        return false;
    }
    let up: Vec<usize> = (p..=q).collect();
    let down: Vec<usize> = (p..q).rev().collect();
    nodes.iter().map(|n| n.col).eq(up.into_iter().chain(down))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn heap_of(letters: &[usize], rank: usize) -> Heap {
        Heap::from_letters(letters.to_vec(), rank).unwrap()
    }

    #[test]
    fn heap_coordinates_of_example_word() {
        // s_2 s_3 s_1 s_2 s_4: five entries, s_2 at the bottom.
        let h = heap_of(&[2, 3, 1, 2, 4], 5);
        assert_eq!(h.pairs(), vec![(1, 2), (2, 1), (2, 3), (3, 2), (4, 3)]);
        assert_eq!(h.evaluate(), p("[34152]"));
    }

    #[test]
    fn empty_word_gives_empty_heap() {
        let h = Heap::from_word(&ReducedWord::new(vec![], 4).unwrap());
        assert!(h.is_empty());
        assert_eq!(h.evaluate(), Permutation::identity(4));
    }

    #[test]
    fn the_two_heaps_of_321_differ() {
        let a = heap_of(&[1, 2, 1], 3);
        let b = heap_of(&[2, 1, 2], 3);
        assert_ne!(a, b);
        assert_eq!(a.evaluate(), b.evaluate());
    }

    #[test]
    fn non_reduced_word_is_rejected() {
        match ReducedWord::new(vec![1, 2, 1, 2], 3) {
            Err(HeapError::NotReduced { word_length: 4, element_length: 2 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn full_commutativity_examples() {
        assert!(!is_fully_commutative(&p("[321]")));
        assert!(heap_of(&[2, 3, 1, 2, 4], 5).is_fully_commutative());
        assert!(is_fully_commutative(&p("[46718235]")));
    }

    #[test]
    fn heap_containment_examples() {
        let w = word_to_permutation(&[2, 3, 1, 2, 4], 5).unwrap();
        let chain = word_to_permutation(&[1, 2, 3], 4).unwrap();
        assert_eq!(heap_contains(&w, &chain), Ok(true));
        let short_braid = p("[321]");
        assert_eq!(heap_contains(&w, &short_braid), Ok(false));
        let hex = p("[46718235]");
        assert_eq!(heap_contains(&hex, &hex), Ok(true));
    }

    #[test]
    fn heap_contains_rejects_unsupported_inputs() {
        // [4321] is not maximally clustered.
        assert_eq!(heap_contains(&p("[4321]"), &p("[321]")), Err(HeapError::ClassSearchUnsupported));
        // [2143] is disconnected, unusable as a containment pattern.
        assert_eq!(heap_contains(&p("[3412]"), &p("[2143]")), Err(HeapError::UnsupportedHeapPattern));
    }

    #[test]
    fn canonical_cluster_examples() {
        assert_eq!(canonical_braid_cluster(0, 0).letters(), &[1]);
        assert_eq!(canonical_braid_cluster(0, 3).letters(), &[1, 2, 3, 4, 3, 2, 1]);
        // s_2 s_3 s_2 is the transposition (2, 4).
        assert_eq!(canonical_braid_cluster(1, 1).evaluate(), p("[1432]"));
    }

    #[test]
    fn hexagon_word_evaluates_to_hexagon() {
        assert_eq!(hexagon_word().evaluate(), p("[46718235]"));
        assert_eq!(diamond_word().evaluate(), p("[3412]"));
        assert_eq!(three_hexagon_word().evaluate(), p("[351624]"));
    }

    #[test]
    fn decomposition_of_canonical_example() {
        // (s_5)(s_1 s_2 s_3 s_4 s_3 s_2 s_1)(s_6 s_5 s_9)(s_7 s_8 s_7)(s_6)
        let letters = [5, 1, 2, 3, 4, 3, 2, 1, 6, 5, 9, 7, 8, 7, 6];
        let w = word_to_permutation(&letters, 10).unwrap();
        let dec = braid_cluster_decomposition(&w).unwrap();
        assert_eq!(dec.cluster_intervals(), &[(1, 4), (7, 8)]);
        assert_eq!(dec.half_lengths(), &[3, 1]);
        assert_eq!(dec.total_weight(), count_321_instances(&w));
        assert_eq!(dec.canonical_heap().evaluate(), w);
        let contracted = dec.contracted_word();
        assert_eq!(contracted.evaluate(), w);
    }

    #[test]
    fn decomposition_of_fully_commutative_is_trivial() {
        let w = p("[34152]");
        let dec = braid_cluster_decomposition(&w).unwrap();
        assert_eq!(dec.cluster_count(), 0);
        assert_eq!(dec.c_intervals(), &[(1, 4)]);
        assert_eq!(dec.canonical_heap(), &Heap::from_word(&reduced_word_of(&w)));
    }

    #[test]
    fn decomposition_of_short_braid() {
        let dec = braid_cluster_decomposition(&p("[321]")).unwrap();
        assert_eq!(dec.cluster_count(), 1);
        assert_eq!(dec.half_lengths(), &[1]);
        assert_eq!(dec.total_weight(), 1);
    }

    #[test]
    fn decomposition_rejects_non_mc() {
        assert_eq!(braid_cluster_decomposition(&p("[4321]")), Err(HeapError::NotMaximallyClustered));
    }

    #[test]
    fn minimal_diamond_examples() {
        let hex = Heap::from_word(&hexagon_word());
        assert_eq!(hex.minimal_diamonds().unwrap().len(), 7);
        let chain = heap_of(&[1, 2, 3], 4);
        assert!(chain.minimal_diamonds().unwrap().is_empty());
        let d = Heap::from_word(&diamond_word());
        let ds = d.minimal_diamonds().unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].pair, (HeapNode { col: 2, level: 1 }, HeapNode { col: 2, level: 3 }));
        assert_eq!(
            ds[0].resolution,
            (HeapNode { col: 1, level: 2 }, HeapNode { col: 3, level: 2 })
        );
    }

    #[test]
    fn diamond_reduction_of_hexagon_is_three_hexagon() {
        let hex = Heap::from_word(&hexagon_word());
        let reduced = hex.diamond_reduction().unwrap();
        assert_eq!(reduced, Heap::from_word(&three_hexagon_word()));
    }

    #[test]
    fn diamond_reduction_of_single_diamond() {
        let d = Heap::from_word(&diamond_word());
        let r = d.diamond_reduction().unwrap();
        assert_eq!(r.pairs(), vec![(1, 1)]);
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn three_hexagon_needs_relaxed_mode() {
        let q = Heap::from_word(&three_hexagon_word());
        assert_eq!(q.diamond_reduction(), Err(HeapError::ThinInternalColumn { col: 3 }));
        let r = q.diamond_reduction_relaxed().unwrap();
        assert_eq!(r.pairs(), vec![(1, 1), (3, 1)]);
        assert!(!r.is_connected());
    }

    #[test]
    fn inverse_diamond_examples() {
        let single = heap_of(&[1], 2);
        let d = single.inverse_diamond_reduction().unwrap();
        assert_eq!(d, Heap::from_word(&diamond_word()));
        let q = Heap::from_word(&three_hexagon_word());
        assert_eq!(q.inverse_diamond_reduction().unwrap(), Heap::from_word(&hexagon_word()));
    }

    #[test]
    fn connected_component_examples() {
        let h = heap_of(&[1, 3], 4);
        let comps = h.connected_components();
        assert_eq!(comps.len(), 2);
        let h = heap_of(&[1, 2, 5], 7);
        let comps = h.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].start_col, 1);
        assert_eq!(comps[0].heap.pairs(), vec![(1, 1), (2, 2)]);
        assert_eq!(comps[1].start_col, 5);
        assert_eq!(comps[1].heap.pairs(), vec![(1, 1)]);
        assert_eq!(h.empty_columns(), vec![3, 4, 6]);
        let conn = heap_of(&[2, 3, 1, 2, 4], 5);
        let comps = conn.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].heap, conn);
    }

    #[test]
    fn class_enumeration_of_321() {
        let classes = commutativity_classes(&p("[321]"), 100).unwrap();
        assert_eq!(classes.len(), 2);
        let classes = commutativity_classes(&p("[34152]"), 100).unwrap();
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn heap_picture_matches_layout() {
        let h = heap_of(&[2, 3, 1, 2, 4], 5);
        let picture = format!("{h}");
        assert_eq!(picture, ". * . *\n* . * .\n. * . .");
    }

    #[test]
    fn string_overlay_roundtrip_small() {
        for n in 1..=5usize {
            for w in crate::testutil::all_permutations(n) {
                let h = Heap::from_word(&reduced_word_of(&w));
                assert_eq!(h.evaluate(), w, "overlay failed for {w}");
                assert_eq!(h.len(), w.length());
            }
        }
    }

    #[test]
    fn lateral_convexity_matches_pattern_test_small() {
        for n in 1..=6usize {
            for w in crate::testutil::all_permutations(n) {
                assert_eq!(
                    is_fully_commutative(&w),
                    count_321_instances(&w) == 0,
                    "mismatch for {w}"
                );
            }
        }
    }
}
