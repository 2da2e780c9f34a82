//! Permutations in 1-line notation and classical pattern containment.
//!
//! A permutation `w` of `{1, ..., n}` is written `[w_1 w_2 ... w_n]` where
//! `w` maps `i` to `w_i`. The symmetric group `S_n` is generated by the
//! adjacent transpositions `s_1, ..., s_{n-1}`; `s_i` interchanges the
//! entries `i` and `i+1` of the 1-line notation.
//!
//! Words in the generators act on the identity left to right, each letter
//! `s_i` swapping positions `i` and `i+1` of the current 1-line string.
//! This matches reading a string diagram from bottom to top, so heap and
//! string-overlay checks can compare words and permutations directly.
//! Indexing is 1-based throughout: positions, values, and generator
//! subscripts.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::heap::ReducedWord;

/// Errors from constructing or parsing permutations and words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// The value sequence is not a bijection of `{1, ..., n}`.
    NotABijection { value: usize },
    /// Unexpected character while parsing, with its byte offset.
    Parse { offset: usize, message: String },
    /// A generator subscript lies outside `1..=rank-1`.
    SubscriptOutOfRange { subscript: usize, rank: usize },
    /// Rank exceeds what the library supports.
    RankTooLarge { rank: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotABijection { value } => {
                write!(f, "values are not a bijection of 1..=n (offending value {value})")
            }
            PermError::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
            PermError::SubscriptOutOfRange { subscript, rank } => {
                write!(f, "generator subscript s_{subscript} out of range for rank {rank}")
            }
            PermError::RankTooLarge { rank } => write!(f, "rank {rank} too large (max 120)"),
        }
    }
}

impl core::error::Error for PermError {}

/// Largest supported rank. Heap machinery indexes entries with 128-bit
/// masks, and a permutation of rank n has at most n(n-1)/2 heap entries.
pub const MAX_RANK: usize = 120;

/// A permutation in 1-line notation.
///
/// Stored as the value sequence `[w_1, ..., w_n]`; the rank `n` is the size
/// of the ambient symmetric group. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its 1-line values, checking bijectivity.
    pub fn new(values: Vec<u8>) -> Result<Self, PermError> {
        let n = values.len();
        if n > MAX_RANK {
            return Err(PermError::RankTooLarge { rank: n });
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotABijection { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n as u8).collect() }
    }

    /// Rank `n` of the ambient symmetric group.
    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// The 1-line value sequence.
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Value at 1-based position `i`.
    pub fn value_at(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.values;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Group inverse.
    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { values: inv }
    }

    /// Applies `s_i` on the right: swaps positions `i` and `i+1`.
    fn swap_positions(&mut self, i: usize) {
        self.values.swap(i - 1, i);
    }

    /// Restriction to the values `1..=k`, as a permutation of rank `k`.
    ///
    /// Deleting the largest values of a permutation preserves avoidance of
    /// any pattern, which is what drives the insertion-tree enumerator.
    pub fn restrict_to(&self, k: usize) -> Permutation {
        let values = self.values.iter().copied().filter(|&v| v as usize <= k).collect();
        Permutation { values }
    }
}

impl fmt::Display for Permutation {
    /// Bracketed 1-line form: comma-free for ranks up to 9 (`[46718235]`),
    /// comma-separated beyond (`[4,6,7,1,8,2,3,5,10,9]`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.rank() <= 9 {
            for &v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, &v) in self.values.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| PermError::Parse {
                offset: 0,
                message: "expected bracketed 1-line notation like [321] or [4,6,7,1,8,2,3,5]"
                    .to_owned(),
            })?;
        let base = t.find('[').unwrap_or(0) + 1;
        let mut values = Vec::new();
        if inner.contains(',') {
            let mut offset = base;
            for part in inner.split(',') {
                let p = part.trim();
                let v: usize = p.parse().map_err(|_| PermError::Parse {
                    offset,
                    message: alloc::format!("invalid entry {p:?}"),
                })?;
                if v == 0 || v > u8::MAX as usize {
                    return Err(PermError::Parse {
                        offset,
                        message: alloc::format!("entry {v} out of range"),
                    });
                }
                values.push(v as u8);
                offset += part.len() + 1;
            }
        } else {
            for (i, ch) in inner.char_indices() {
                match ch.to_digit(10) {
                    Some(d) if d >= 1 => values.push(d as u8),
                    _ => {
                        return Err(PermError::Parse {
                            offset: base + i,
                            message: alloc::format!("invalid digit {ch:?} in comma-free form"),
                        })
                    }
                }
            }
        }
        Permutation::new(values)
    }
}

// ---- Pattern containment ----

/// True when `w` contains `p` as a classical 1-line pattern: there are
/// positions `i_1 < ... < i_k` whose values are order-isomorphic to `p`.
/// A pattern of larger rank than the host is never contained.
pub fn contains_pattern(w: &Permutation, p: &Permutation) -> bool {
    pattern_witness(w, p).is_some()
}

/// Like [`contains_pattern`], returning one witnessing index tuple
/// (1-based positions in `w`) when the pattern occurs.
pub fn pattern_witness(w: &Permutation, p: &Permutation) -> Option<Vec<usize>> {
    let k = p.rank();
    let n = w.rank();
    if k > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    if search_pattern(w.values(), p.values(), 0, &mut chosen, None) {
        Some(chosen.iter().map(|&i| i + 1).collect())
    } else {
        None
    }
}

/// Containment with one pattern slot pinned to a fixed host position.
///
/// Used by the insertion-tree enumerator: after inserting the new maximum
/// into a pattern-avoiding parent, any fresh pattern instance must use the
/// inserted position, and the maximum value can only play the pattern's
/// own maximum slot.
pub(crate) fn contains_pattern_pinned(w: &Permutation, p: &Permutation, host_pos: usize) -> bool {
    let k = p.rank();
    if k > w.rank() {
        return false;
    }
    let pat_slot = p.values().iter().position(|&v| v as usize == k).expect("pattern nonempty");
    let mut chosen = Vec::with_capacity(k);
    search_pattern(w.values(), p.values(), 0, &mut chosen, Some((pat_slot, host_pos - 1)))
}

/// Backtracking over host positions; prunes on remaining length and on
/// order-consistency with previously chosen positions.
fn search_pattern(
    host: &[u8],
    pat: &[u8],
    next: usize,
    chosen: &mut Vec<usize>,
    pinned: Option<(usize, usize)>,
) -> bool {
    let t = chosen.len();
    if t == pat.len() {
        return true;
    }
    let lo = if t == 0 { 0 } else { chosen[t - 1] + 1 };
    let _ = next;
    for i in lo..host.len() {
        if host.len() - i < pat.len() - t {
            return false;
        }
        if let Some((slot, pos)) = pinned {
            if t == slot && i != pos {
                continue;
            }
            if t < slot && i >= pos {
                return false;
            }
            if t > slot && i <= pos {
                continue;
            }
        }
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(s, &j)| (host[j] < host[i]) == (pat[s] < pat[t]));
        if consistent {
            chosen.push(i);
            if search_pattern(host, pat, next, chosen, pinned) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// The number `N(w)` of `[321]` pattern instances: triples of positions
/// `i < j < k` with `w_i > w_j > w_k`.
///
/// Counted in O(n^2) as a sum over the middle entry.
pub fn count_321_instances(w: &Permutation) -> u64 {
    let v = w.values();
    let n = v.len();
    let mut total = 0u64;
    for j in 0..n {
        let left = (0..j).filter(|&i| v[i] > v[j]).count() as u64;
        let right = (j + 1..n).filter(|&k| v[k] < v[j]).count() as u64;
        total += left * right;
    }
    total
}

// ---- Pattern sets and classification ----

/// A finite set of forbidden 1-line patterns, optionally labeled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
    name: Option<String>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Permutation>, name: Option<String>) -> Self {
        PatternSet { patterns, name }
    }

    /// The empty pattern set (avoided by everything).
    pub fn empty() -> Self {
        PatternSet { patterns: Vec::new(), name: Some("empty".to_owned()) }
    }

    /// Fully commutative: avoid `[321]`.
    pub fn fully_commutative() -> Self {
        Self::from_strs("fc", &["[321]"])
    }

    /// Freely braided: avoid `[4231]`, `[3421]`, `[4312]`, `[4321]`.
    pub fn freely_braided() -> Self {
        Self::from_strs("fb", &["[4231]", "[3421]", "[4312]", "[4321]"])
    }

    /// Maximally clustered: avoid `[3421]`, `[4312]`, `[4321]`.
    pub fn maximally_clustered() -> Self {
        Self::from_strs("mc", &["[3421]", "[4312]", "[4321]"])
    }

    /// The four 1-line translates of heap-avoiding the hexagon.
    pub fn hexagon_one_line() -> Self {
        Self::from_strs("hex1l", &["[46718235]", "[46781235]", "[56718234]", "[56781234]"])
    }

    fn from_strs(name: &str, pats: &[&str]) -> Self {
        let patterns = pats.iter().map(|s| s.parse().expect("builtin pattern")).collect();
        PatternSet { patterns, name: Some(name.to_owned()) }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// True when `w` avoids every pattern in the set.
    pub fn avoids(&self, w: &Permutation) -> bool {
        self.patterns.iter().all(|p| !contains_pattern(w, p))
    }

    /// Union of two sets, unlabeled.
    pub fn union(&self, other: &PatternSet) -> PatternSet {
        let mut patterns = self.patterns.clone();
        for p in &other.patterns {
            if !patterns.contains(p) {
                patterns.push(p.clone());
            }
        }
        PatternSet { patterns, name: None }
    }
}

/// The hexagon permutation `[46718235]`, whose heap-avoidance defines the
/// hexagon-avoiding classes.
pub fn hexagon() -> Permutation {
    "[46718235]".parse().expect("hexagon")
}

/// Membership flags for the nested pattern classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassFlags {
    pub fully_commutative: bool,
    pub freely_braided: bool,
    pub maximally_clustered: bool,
    pub hexagon_avoiding_1line: bool,
}

/// Classifies `w` against the built-in pattern sets.
///
/// The containments FC ⊆ FB ⊆ MC hold for every permutation; this is
/// checked whenever debug assertions are enabled.
pub fn classify(w: &Permutation) -> ClassFlags {
    let flags = ClassFlags {
        fully_commutative: PatternSet::fully_commutative().avoids(w),
        freely_braided: PatternSet::freely_braided().avoids(w),
        maximally_clustered: PatternSet::maximally_clustered().avoids(w),
        hexagon_avoiding_1line: PatternSet::hexagon_one_line().avoids(w),
    };
    debug_assert!(!flags.fully_commutative || flags.freely_braided);
    debug_assert!(!flags.freely_braided || flags.maximally_clustered);
    flags
}

// ---- Words ----

/// Evaluates a word in the generators, applying letters left to right as
/// position swaps on the identity. The word need not be reduced.
pub fn word_to_permutation(letters: &[usize], rank: usize) -> Result<Permutation, PermError> {
    if rank > MAX_RANK {
        return Err(PermError::RankTooLarge { rank });
    }
    let mut w = Permutation::identity(rank);
    for &s in letters {
        if s == 0 || s >= rank {
            return Err(PermError::SubscriptOutOfRange { subscript: s, rank });
        }
        w.swap_positions(s);
    }
    Ok(w)
}

/// A canonical reduced word for `w`, deterministic by construction.
///
/// Peels maximal entries: repeatedly moves the largest unplaced value to
/// its home position with adjacent swaps, then reverses the recorded
/// sorting word. The result has length equal to the inversion count.
pub fn reduced_word_of(w: &Permutation) -> ReducedWord {
    let n = w.rank();
    let mut cur = w.values().to_vec();
    let mut sorting = Vec::with_capacity(w.length());
    for v in (1..=n).rev() {
        let mut pos = cur.iter().position(|&x| x as usize == v).expect("bijection") + 1;
        while pos < v {
            cur.swap(pos - 1, pos);
            sorting.push(pos);
            pos += 1;
        }
    }
    sorting.reverse();
    let word = ReducedWord::new_unchecked(sorting, n);
    debug_assert_eq!(&word.evaluate(), w);
    word
}

/// The support of `w` (generators occurring in any reduced word) together
/// with connectedness: the subscripts must form a nonempty interval.
pub fn support_and_connectivity(w: &Permutation) -> (BTreeSet<usize>, bool) {
    let word = reduced_word_of(w);
    let support: BTreeSet<usize> = word.letters().iter().copied().collect();
    let connected = match (support.first(), support.last()) {
        (Some(&lo), Some(&hi)) => hi - lo + 1 == support.len(),
        _ => false,
    };
    (support, connected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_compact() {
        let w = p("[53241]");
        assert_eq!(w.values(), &[5, 3, 2, 4, 1]);
        assert_eq!(alloc::format!("{w}"), "[53241]");
    }

    #[test]
    fn parse_and_display_comma() {
        let w: Permutation = "[4,6,7,1,8,2,3,5]".parse().unwrap();
        assert_eq!(w, p("[46718235]"));
        let big = Permutation::identity(11);
        assert_eq!(alloc::format!("{big}"), "[1,2,3,4,5,6,7,8,9,10,11]");
        assert_eq!(alloc::format!("{big}").parse::<Permutation>().unwrap(), big);
    }

    #[test]
    fn parse_errors_carry_position() {
        match "[3x1]".parse::<Permutation>() {
            Err(PermError::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("[321".parse::<Permutation>().is_err());
        assert!("[331]".parse::<Permutation>().is_err());
        assert!("[341]".parse::<Permutation>().is_err());
    }

    #[test]
    fn contains_pattern_examples() {
        assert!(contains_pattern(&p("[53241]"), &p("[321]")));
        let id = Permutation::identity(9);
        assert!(!contains_pattern(&id, &p("[21]")));
        assert!(!contains_pattern(&p("[3421]"), &p("[4312]")));
    }

    #[test]
    fn pattern_witness_is_an_instance() {
        let w = p("[53241]");
        let pat = p("[321]");
        let wit = pattern_witness(&w, &pat).unwrap();
        assert_eq!(wit.len(), 3);
        assert!(wit.windows(2).all(|a| a[0] < a[1]));
        for a in 0..3 {
            for b in a + 1..3 {
                assert_eq!(
                    w.value_at(wit[a]) < w.value_at(wit[b]),
                    pat.value_at(a + 1) < pat.value_at(b + 1)
                );
            }
        }
    }

    #[test]
    fn count_321_examples() {
        assert_eq!(count_321_instances(&p("[53241]")), 5);
        assert_eq!(count_321_instances(&Permutation::identity(6)), 0);
        assert_eq!(count_321_instances(&p("[4321]")), 4);
    }

    #[test]
    fn classify_examples() {
        let f = classify(&p("[4321]"));
        assert!(!f.fully_commutative && !f.freely_braided && !f.maximally_clustered);
        let f = classify(&p("[4231]"));
        assert!(f.maximally_clustered && !f.freely_braided);
    }

    #[test]
    fn class_counts_in_s4() {
        let mut mc = 0;
        let mut fb = 0;
        for w in all_permutations(4) {
            let f = classify(&w);
            if f.maximally_clustered {
                mc += 1;
            }
            if f.freely_braided {
                fb += 1;
            }
        }
        assert_eq!(mc, 21);
        assert_eq!(fb, 20);
    }

    #[test]
    fn word_evaluation_examples() {
        assert_eq!(word_to_permutation(&[1, 2, 1], 3).unwrap(), p("[321]"));
        assert_eq!(word_to_permutation(&[2, 3, 1, 2, 4], 5).unwrap(), p("[34152]"));
        // Non-reduced word: four letters but the product has length 2.
        let w = word_to_permutation(&[1, 2, 1, 2], 3).unwrap();
        assert_eq!(w.length(), 2);
        assert!(word_to_permutation(&[3], 3).is_err());
        assert!(word_to_permutation(&[0], 3).is_err());
    }

    #[test]
    fn reduced_word_examples() {
        assert!(reduced_word_of(&Permutation::identity(5)).letters().is_empty());
        assert_eq!(reduced_word_of(&p("[321]")).len(), 3);
        let w321 = reduced_word_of(&p("[321]"));
        assert_eq!(w321.evaluate(), p("[321]"));
    }

    #[test]
    fn support_examples() {
        let (supp, conn) = support_and_connectivity(&p("[2143]"));
        assert_eq!(supp.into_iter().collect::<Vec<_>>(), alloc::vec![1, 3]);
        assert!(!conn);
        let (supp, conn) = support_and_connectivity(&p("[321]"));
        assert_eq!(supp.into_iter().collect::<Vec<_>>(), alloc::vec![1, 2]);
        assert!(conn);
        let (supp, conn) = support_and_connectivity(&Permutation::identity(4));
        assert!(supp.is_empty());
        assert!(!conn);
    }

    #[test]
    fn canonical_word_support_example() {
        // Contracted word (s_5)(s_1 s_2 s_3 s_4 s_3 s_2 s_1)(s_6 s_5 s_9)(s_7 s_8 s_7)(s_6)
        let letters = [5, 1, 2, 3, 4, 3, 2, 1, 6, 5, 9, 7, 8, 7, 6];
        let w = word_to_permutation(&letters, 10).unwrap();
        let (supp, conn) = support_and_connectivity(&w);
        assert_eq!(supp, (1..=9).collect());
        assert!(conn);
    }

    use crate::testutil::all_permutations;

    fn brute_contains(w: &Permutation, pat: &Permutation) -> bool {
        fn rec(host: &[u8], pat: &[u8], start: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == pat.len() {
                for a in 0..pat.len() {
                    for b in a + 1..pat.len() {
                        if (host[chosen[a]] < host[chosen[b]]) != (pat[a] < pat[b]) {
                            return false;
                        }
                    }
                }
                return true;
            }
            for i in start..host.len() {
                chosen.push(i);
                if rec(host, pat, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        pat.rank() <= w.rank() && rec(w.values(), pat.values(), 0, &mut Vec::new())
    }

    fn brute_count_321(w: &Permutation) -> u64 {
        let v = w.values();
        let mut c = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                for k in j + 1..v.len() {
                    if v[i] > v[j] && v[j] > v[k] {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<u32>(), n).prop_map(|keys| {
                let mut idx: Vec<usize> = (0..keys.len()).collect();
                idx.sort_by_key(|&i| (keys[i], i));
                let mut vals = alloc::vec![0u8; keys.len()];
                for (r, &i) in idx.iter().enumerate() {
                    vals[i] = r as u8 + 1;
                }
                Permutation::new(vals).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn display_parse_roundtrip(w in arb_perm(14)) {
            let s = alloc::format!("{w}");
            prop_assert_eq!(s.parse::<Permutation>().unwrap(), w);
        }

        #[test]
        fn containment_matches_bruteforce(w in arb_perm(7), pat in arb_perm(4)) {
            prop_assert_eq!(contains_pattern(&w, &pat), brute_contains(&w, &pat));
        }

        #[test]
        fn count_321_matches_bruteforce(w in arb_perm(9)) {
            prop_assert_eq!(count_321_instances(&w), brute_count_321(&w));
        }

        #[test]
        fn classification_chain(w in arb_perm(8)) {
            let f = classify(&w);
            prop_assert!(!f.fully_commutative || f.freely_braided);
            prop_assert!(!f.freely_braided || f.maximally_clustered);
            prop_assert_eq!(f.fully_commutative, count_321_instances(&w) == 0);
        }

        #[test]
        fn word_roundtrip(w in arb_perm(9)) {
            let word = reduced_word_of(&w);
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(word.evaluate(), w);
        }

        #[test]
        fn restriction_preserves_avoidance(w in arb_perm(8), pat in arb_perm(4), k in 1usize..8) {
            // Monotonicity used by the insertion-tree enumerator.
            prop_assume!(k <= w.rank());
            if !contains_pattern(&w, &pat) {
                prop_assert!(!contains_pattern(&w.restrict_to(k), &pat));
            }
        }
    }
}
