//! Brute-force enumeration of pattern classes and verification harnesses.
//!
//! Enumeration walks the insertion tree: the children of `w` in `S_n` are
//! the `n+1` permutations obtained by inserting the value `n+1`. Deleting
//! the largest value preserves pattern avoidance, so subtrees rooted at
//! 1-line violations can be pruned. Heap-avoidance constraints are *not*
//! assumed monotone under insertion; they are re-tested at every node as
//! a membership filter and never used for pruning.
//!
//! The walk is deterministic, and member lists are returned in
//! lexicographic order. For parallel drivers, [`frontier`] exposes the
//! tree layer at a fixed depth and [`count_subtree`] counts one subtree;
//! summing subtree counts over any partition of the frontier gives
//! totals identical to the sequential walk.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::genfun::transform::clustered_by_count_series;
use crate::genfun::{NamedClass, Series};
use crate::heap::{heap_contains_unrestricted, HeapError, DEFAULT_CLASS_LIMIT};
use crate::perm::{
    classify, contains_pattern, contains_pattern_pinned, PatternSet, Permutation,
};

/// Default hard limit for full brute-force enumeration.
pub const DEFAULT_MAX_RANK: usize = 11;

/// Errors from the enumeration layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    /// The requested rank exceeds the configured brute-force limit.
    LimitExceeded { requested: usize, limit: usize },
    /// The heap pattern fails the transform hypothesis (connected, fully
    /// commutative, at least two entries per internal column).
    InvalidHeapPattern { reason: &'static str },
    /// `is_ideal_pattern` requires the candidate to lie in the class.
    PatternNotInClass,
    Heap(HeapError),
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::LimitExceeded { requested, limit } => {
                write!(f, "rank {requested} exceeds the brute-force limit {limit} (override with CLUSTERKIT_MAX_N)")
            }
            EnumerateError::InvalidHeapPattern { reason } => {
                write!(f, "invalid heap pattern: {reason}")
            }
            EnumerateError::PatternNotInClass => {
                write!(f, "candidate pattern does not avoid the class patterns")
            }
            EnumerateError::Heap(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EnumerateError {}

impl From<HeapError> for EnumerateError {
    fn from(e: HeapError) -> Self {
        EnumerateError::Heap(e)
    }
}

/// Tunables for the enumerator.
#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Hard rank limit for full enumeration.
    pub max_rank: usize,
    /// Node budget for commutativity-class searches.
    pub class_search_limit: usize,
    /// Permit class searches on permutations that are neither fully
    /// commutative nor maximally clustered (feasible only at small rank).
    pub allow_unrestricted_class_search: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_rank: DEFAULT_MAX_RANK,
            class_search_limit: DEFAULT_CLASS_LIMIT,
            allow_unrestricted_class_search: false,
        }
    }
}

/// A pattern class: 1-line patterns to avoid plus heap patterns to
/// heap-avoid.
#[derive(Debug, Clone)]
pub struct ClassSpec {
    label: String,
    patterns: PatternSet,
    heap_patterns: Vec<Permutation>,
}

impl ClassSpec {
    /// Builds a class, validating each heap pattern against the transform
    /// hypothesis: connected, fully commutative, and at least two entries
    /// in each internal column of its heap.
    pub fn new(
        label: &str,
        patterns: PatternSet,
        heap_patterns: Vec<Permutation>,
    ) -> Result<Self, EnumerateError> {
        for h in &heap_patterns {
            let (flags, connected) = (classify(h), crate::perm::support_and_connectivity(h).1);
            if !flags.fully_commutative {
                return Err(EnumerateError::InvalidHeapPattern {
                    reason: "heap pattern must be fully commutative",
                });
            }
            if !connected {
                return Err(EnumerateError::InvalidHeapPattern {
                    reason: "heap pattern must be connected",
                });
            }
            let heap = crate::heap::Heap::from_word(&crate::perm::reduced_word_of(h));
            let (lo, hi) = heap.support_interval().expect("connected pattern is nonempty");
            for col in lo + 1..hi {
                if heap.column_count(col) < 2 {
                    return Err(EnumerateError::InvalidHeapPattern {
                        reason: "heap pattern has an internal column with fewer than two entries",
                    });
                }
            }
        }
        Ok(ClassSpec::new_relaxed(label, patterns, heap_patterns))
    }

    /// Builds a class without the internal-column hypothesis. Containment
    /// still requires connected fully commutative patterns; enumeration
    /// works, but the clustered transforms need not apply to the result.
    pub fn new_relaxed(label: &str, patterns: PatternSet, heap_patterns: Vec<Permutation>) -> Self {
        ClassSpec { label: label.to_string(), patterns, heap_patterns }
    }

    /// A pure 1-line avoidance class.
    pub fn one_line(label: &str, patterns: PatternSet) -> Self {
        ClassSpec::new_relaxed(label, patterns, Vec::new())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn patterns(&self) -> &PatternSet {
        &self.patterns
    }

    pub fn heap_patterns(&self) -> &[Permutation] {
        &self.heap_patterns
    }

    /// Full membership test for a permutation that already avoids the
    /// 1-line patterns.
    fn heap_member(&self, w: &Permutation, opts: &EnumerateOptions) -> Result<bool, EnumerateError> {
        if self.heap_patterns.is_empty() {
            return Ok(true);
        }
        if !classify(w).maximally_clustered && !opts.allow_unrestricted_class_search {
            return Err(EnumerateError::Heap(HeapError::ClassSearchUnsupported));
        }
        for h in &self.heap_patterns {
            if heap_contains_unrestricted(w, h, opts.class_search_limit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn insert_max(w: &Permutation, pos: usize) -> Permutation {
    let mut values = Vec::with_capacity(w.rank() + 1);
    values.extend_from_slice(&w.values()[..pos - 1]);
    values.push(w.rank() as u8 + 1);
    values.extend_from_slice(&w.values()[pos - 1..]);
    Permutation::new(values).expect("insertion preserves bijectivity")
}

/// Depth-first walk of the 1-line avoidance tree rooted at `root`,
/// visiting every avoider of rank up to `n_max` in the subtree.
fn walk<E>(
    root: &Permutation,
    patterns: &PatternSet,
    n_max: usize,
    visit: &mut impl FnMut(&Permutation) -> Result<(), E>,
) -> Result<(), E> {
    visit(root)?;
    if root.rank() >= n_max {
        return Ok(());
    }
    for pos in 1..=root.rank() + 1 {
        let child = insert_max(root, pos);
        // The parent avoids everything, so a fresh instance must involve
        // the inserted maximum; the pinned check suffices.
        if patterns.patterns().iter().all(|p| !contains_pattern_pinned(&child, p, pos)) {
            walk(&child, patterns, n_max, visit)?;
        }
    }
    Ok(())
}

fn check_limit(n: usize, opts: &EnumerateOptions) -> Result<(), EnumerateError> {
    if n > opts.max_rank {
        return Err(EnumerateError::LimitExceeded { requested: n, limit: opts.max_rank });
    }
    Ok(())
}

/// Counts class members of every rank `1..=n_max`; slot `n` of the
/// result holds the count in `S_n` (slot 0 is unused).
pub fn count_class(
    spec: &ClassSpec,
    n_max: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<u64>, EnumerateError> {
    check_limit(n_max, opts)?;
    let mut counts = vec![0u64; n_max + 1];
    let root = Permutation::identity(1);
    if !spec.patterns.avoids(&root) {
        return Ok(counts);
    }
    walk(&root, &spec.patterns, n_max, &mut |w| {
        if spec.heap_member(w, opts)? {
            counts[w.rank()] += 1;
        }
        Ok::<(), EnumerateError>(())
    })?;
    Ok(counts)
}

/// The class members of rank exactly `n`, in lexicographic order.
pub fn class_members(
    spec: &ClassSpec,
    n: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<Permutation>, EnumerateError> {
    check_limit(n, opts)?;
    let mut out = Vec::new();
    let root = Permutation::identity(1);
    if !spec.patterns.avoids(&root) {
        return Ok(out);
    }
    walk(&root, &spec.patterns, n, &mut |w| {
        if w.rank() == n && spec.heap_member(w, opts)? {
            out.push(w.clone());
        }
        Ok::<(), EnumerateError>(())
    })?;
    out.sort();
    Ok(out)
}

/// The 1-line avoidance tree layer at `depth` (no heap filtering), in
/// lexicographic order. These are the roots handed to parallel workers.
pub fn frontier(
    spec: &ClassSpec,
    depth: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<Permutation>, EnumerateError> {
    check_limit(depth, opts)?;
    let mut out = Vec::new();
    let root = Permutation::identity(1);
    if !spec.patterns.avoids(&root) {
        return Ok(out);
    }
    walk(&root, &spec.patterns, depth, &mut |w| {
        if w.rank() == depth {
            out.push(w.clone());
        }
        Ok::<(), EnumerateError>(())
    })?;
    out.sort();
    Ok(out)
}

/// Counts class members of ranks `root.rank()..=n_max` within the
/// subtree rooted at `root` (inclusive of the root itself).
pub fn count_subtree(
    spec: &ClassSpec,
    root: &Permutation,
    n_max: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<u64>, EnumerateError> {
    check_limit(n_max, opts)?;
    let mut counts = vec![0u64; n_max + 1];
    walk(root, &spec.patterns, n_max, &mut |w| {
        if spec.heap_member(w, opts)? {
            counts[w.rank()] += 1;
        }
        Ok::<(), EnumerateError>(())
    })?;
    Ok(counts)
}

// ---- Heap-pattern translation machinery ----

/// `U^P(h)`: the members of the rank-`r(h)` layer of the class avoiding
/// `P` that heap-contain `h`.
pub fn compute_u(
    patterns: &PatternSet,
    h: &Permutation,
    opts: &EnumerateOptions,
) -> Result<Vec<Permutation>, EnumerateError> {
    let spec = ClassSpec::one_line("u-scan", patterns.clone());
    let mut out = Vec::new();
    for w in class_members(&spec, h.rank(), opts)? {
        if !classify(&w).maximally_clustered && !opts.allow_unrestricted_class_search {
            return Err(EnumerateError::Heap(HeapError::ClassSearchUnsupported));
        }
        if heap_contains_unrestricted(&w, h, opts.class_search_limit)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// Is `p` an ideal pattern in the class avoiding `patterns`: does every
/// class member of rank `r(p)+1` that contains `p` as a 1-line pattern
/// also heap-contain it?
pub fn is_ideal_pattern(
    p: &Permutation,
    patterns: &PatternSet,
    opts: &EnumerateOptions,
) -> Result<bool, EnumerateError> {
    if !patterns.avoids(p) {
        return Err(EnumerateError::PatternNotInClass);
    }
    let spec = ClassSpec::one_line("ideal-scan", patterns.clone());
    for q in class_members(&spec, p.rank() + 1, opts)? {
        if contains_pattern(&q, p) {
            if !classify(&q).maximally_clustered && !opts.allow_unrestricted_class_search {
                return Err(EnumerateError::Heap(HeapError::ClassSearchUnsupported));
            }
            if !heap_contains_unrestricted(&q, p, opts.class_search_limit)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Report from [`verify_translation`].
#[derive(Debug, Clone)]
pub struct TranslationReport {
    /// `U^P(h)` for each heap pattern, in input order.
    pub u_sets: Vec<(Permutation, Vec<Permutation>)>,
    /// Members of the union of the `U` sets failing the ideal-pattern
    /// test.
    pub ideal_failures: Vec<Permutation>,
    /// Per rank: members via heap-avoidance, members via the translated
    /// 1-line patterns, and whether the two sets coincide.
    pub per_rank: Vec<(usize, u64, u64, bool)>,
}

impl TranslationReport {
    pub fn ok(&self) -> bool {
        self.ideal_failures.is_empty() && self.per_rank.iter().all(|&(_, _, _, eq)| eq)
    }
}

/// Verifies that heap-avoidance of `heap_patterns` within the class
/// avoiding `patterns` is equivalent to 1-line avoidance of
/// `patterns ∪ (U sets)`, rank by rank up to `n_max`, and checks the
/// ideal-pattern hypothesis for every translated pattern.
pub fn verify_translation(
    patterns: &PatternSet,
    heap_patterns: &[Permutation],
    n_max: usize,
    opts: &EnumerateOptions,
) -> Result<TranslationReport, EnumerateError> {
    let mut u_sets = Vec::new();
    let mut translated = patterns.clone();
    for h in heap_patterns {
        let u = compute_u(patterns, h, opts)?;
        translated = translated.union(&PatternSet::new(u.clone(), None));
        u_sets.push((h.clone(), u));
    }
    let mut ideal_failures = Vec::new();
    for (_, u) in &u_sets {
        for p in u {
            if !is_ideal_pattern(p, patterns, opts)? {
                ideal_failures.push(p.clone());
            }
        }
    }
    let heap_spec = ClassSpec::new_relaxed("heap-route", patterns.clone(), heap_patterns.to_vec());
    let line_spec = ClassSpec::one_line("translated-route", translated);
    let mut per_rank = Vec::new();
    for n in 1..=n_max {
        let lhs = class_members(&heap_spec, n, opts)?;
        let rhs = class_members(&line_spec, n, opts)?;
        per_rank.push((n, lhs.len() as u64, rhs.len() as u64, lhs == rhs));
    }
    Ok(TranslationReport { u_sets, ideal_failures, per_rank })
}

// ---- Count reports and table verification ----

/// How a count was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Gf,
    Recurrence,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Gf => "gf",
            Method::Recurrence => "recurrence",
        }
    }
}

/// One `(class, n, count, method)` record; `n` is the symmetric group
/// size, so it corresponds to the coefficient of `x^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub class: String,
    pub n: usize,
    pub count: u64,
    pub method: Method,
}

impl CountRow {
    pub fn json_line(&self) -> String {
        alloc::format!(
            "{{\"class\":\"{}\",\"n\":{},\"count\":{},\"method\":\"{}\"}}",
            self.class,
            self.n,
            self.count,
            self.method.as_str()
        )
    }
}

/// A bundle of count rows with provenance.
#[derive(Debug, Clone, Default)]
pub struct CountReport {
    pub rows: Vec<CountRow>,
}

impl CountReport {
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.json_line());
            out.push('\n');
        }
        out
    }

    /// An aligned text table: one line per (class, method), one column
    /// per rank.
    pub fn to_text_table(&self) -> String {
        let mut ns: Vec<usize> = self.rows.iter().map(|r| r.n).collect();
        ns.sort_unstable();
        ns.dedup();
        let mut keys: Vec<(String, Method)> = Vec::new();
        for r in &self.rows {
            let key = (r.class.clone(), r.method);
            if !keys.contains(&key) {
                keys.push(key);
            }
        }
        let label_width = keys
            .iter()
            .map(|(c, m)| c.len() + m.as_str().len() + 3)
            .max()
            .unwrap_or(0)
            .max(5);
        let mut col_width = vec![0usize; ns.len()];
        for (i, &n) in ns.iter().enumerate() {
            col_width[i] = n.to_string().len().max(
                self.rows
                    .iter()
                    .filter(|r| r.n == n)
                    .map(|r| r.count.to_string().len())
                    .max()
                    .unwrap_or(1),
            );
        }
        let mut out = String::new();
        out.push_str(&alloc::format!("{:label_width$}", "n"));
        for (i, &n) in ns.iter().enumerate() {
            out.push_str(&alloc::format!("  {:>width$}", n, width = col_width[i]));
        }
        out.push('\n');
        for (class, method) in keys {
            out.push_str(&alloc::format!(
                "{:label_width$}",
                alloc::format!("{class} [{}]", method.as_str())
            ));
            for (i, &n) in ns.iter().enumerate() {
                let cell = self
                    .rows
                    .iter()
                    .find(|r| r.class == class && r.method == method && r.n == n)
                    .map(|r| r.count.to_string())
                    .unwrap_or_else(|| "-".to_string());
                out.push_str(&alloc::format!("  {:>width$}", cell, width = col_width[i]));
            }
            out.push('\n');
        }
        out
    }
}

/// Extra restriction applied on top of a class for the `L`/`M` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SupportFilter {
    None,
    /// The rightmost generator must be in the support: `w(n) != n`.
    Rightmost,
    /// Both extremal generators: `w(1) != 1` and `w(n) != n`.
    Both,
}

impl SupportFilter {
    fn admits(&self, w: &Permutation) -> bool {
        let n = w.rank();
        match self {
            SupportFilter::None => true,
            SupportFilter::Rightmost => n >= 1 && w.value_at(n) != n,
            SupportFilter::Both => n >= 1 && w.value_at(n) != n && w.value_at(1) != 1,
        }
    }
}

/// The brute-force realization of a named class: 1-line patterns, heap
/// patterns, and the support filter for the piece rows.
fn class_enumeration_parts(class: NamedClass) -> (PatternSet, Vec<Permutation>, SupportFilter) {
    use NamedClass::*;
    let hexagon = vec![crate::perm::hexagon()];
    match class {
        Fc => (PatternSet::fully_commutative(), vec![], SupportFilter::None),
        LEmpty => (PatternSet::fully_commutative(), vec![], SupportFilter::Rightmost),
        MEmpty => (PatternSet::fully_commutative(), vec![], SupportFilter::Both),
        Fb => (PatternSet::freely_braided(), vec![], SupportFilter::None),
        Mc => (PatternSet::maximally_clustered(), vec![], SupportFilter::None),
        FcHexagon => (PatternSet::fully_commutative(), hexagon, SupportFilter::None),
        LHexagon => (PatternSet::fully_commutative(), hexagon, SupportFilter::Rightmost),
        MHexagon => (PatternSet::fully_commutative(), hexagon, SupportFilter::Both),
        FbHexagon => (PatternSet::freely_braided(), hexagon, SupportFilter::None),
        McHexagon => (PatternSet::maximally_clustered(), hexagon, SupportFilter::None),
        DiamondAvoiding => (
            PatternSet::fully_commutative()
                .union(&PatternSet::new(vec!["[3412]".parse().unwrap()], None)),
            vec![],
            SupportFilter::None,
        ),
    }
}

/// Brute-force counts for a named class, per symmetric group size
/// `1..=n_max` (slot 0 unused).
pub fn brute_counts_for_class(
    class: NamedClass,
    n_max: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<u64>, EnumerateError> {
    let (patterns, heap_patterns, filter) = class_enumeration_parts(class);
    let spec = ClassSpec::new(class.name(), patterns, heap_patterns)?;
    check_limit(n_max, opts)?;
    let mut counts = vec![0u64; n_max + 1];
    let root = Permutation::identity(1);
    if !spec.patterns.avoids(&root) {
        return Ok(counts);
    }
    walk(&root, &spec.patterns, n_max, &mut |w| {
        if filter.admits(w) && spec.heap_member(w, opts)? {
            counts[w.rank()] += 1;
        }
        Ok::<(), EnumerateError>(())
    })?;
    Ok(counts)
}

/// Report from [`verify_tables`]: counts by every applicable method for
/// every row, plus the overall verdict.
#[derive(Debug, Clone)]
pub struct TablesReport {
    pub report: CountReport,
    pub all_agree: bool,
    /// `(class, n)` cells where methods disagreed.
    pub disagreements: Vec<(String, usize)>,
}

/// Cross-checks brute-force counts, generating-function coefficients,
/// and recurrence values for all catalog rows, for sizes `1..=n_max`.
/// Brute force stops at the configured limit; the other methods cover
/// the full range.
pub fn verify_tables(n_max: usize, opts: &EnumerateOptions) -> Result<TablesReport, EnumerateError> {
    let mut report = CountReport::default();
    let mut disagreements = Vec::new();
    let brute_max = n_max.min(opts.max_rank);
    for class in NamedClass::all() {
        let name = class.name().to_string();
        let brute = brute_counts_for_class(class, brute_max, opts)?;
        for n in 1..=brute_max {
            report.rows.push(CountRow {
                class: name.clone(),
                n,
                count: brute[n],
                method: Method::Brute,
            });
        }
        let series = class.series(n_max.saturating_sub(1));
        let series_count = |n: usize| -> u64 {
            series.coeff(n - 1).to_integer().to_u64().expect("nonnegative count")
        };
        for n in 1..=n_max {
            report.rows.push(CountRow {
                class: name.clone(),
                n,
                count: series_count(n),
                method: Method::Gf,
            });
        }
        if let Some(rec) = class.recurrence() {
            let terms = rec.terms_to(n_max.saturating_sub(1));
            for n in 1..=n_max {
                report.rows.push(CountRow {
                    class: name.clone(),
                    n,
                    count: terms[n - 1].to_integer().to_u64().expect("nonnegative count"),
                    method: Method::Recurrence,
                });
            }
        }
        for n in 1..=n_max {
            let mut seen: Option<u64> = None;
            for row in report.rows.iter().filter(|r| r.class == name && r.n == n) {
                match seen {
                    None => seen = Some(row.count),
                    Some(c) if c != row.count => {
                        disagreements.push((name.clone(), n));
                        break;
                    }
                    _ => {}
                }
            }
        }
    }
    let all_agree = disagreements.is_empty();
    Ok(TablesReport { report, all_agree, disagreements })
}

/// All connected fully commutative heaps with at most `max_entries`
/// entries, with full support at their rank (so translates are counted
/// once). Walks the `[321]`-avoidance insertion tree with pruning on the
/// inversion count, which only grows under insertion.
pub fn connected_fc_heaps_up_to_entries(max_entries: usize) -> Vec<crate::heap::Heap> {
    let fc = PatternSet::fully_commutative();
    let mut out = Vec::new();
    fn rec(
        w: &Permutation,
        fc: &PatternSet,
        max_entries: usize,
        out: &mut Vec<crate::heap::Heap>,
    ) {
        let r = w.rank();
        let len = w.length();
        if len > 0 && len <= max_entries {
            let (support, connected) = crate::perm::support_and_connectivity(w);
            if connected && support.first() == Some(&1) && support.last() == Some(&(r - 1)) {
                out.push(crate::heap::Heap::from_word(&crate::perm::reduced_word_of(w)));
            }
        }
        if r > max_entries {
            return;
        }
        for pos in 1..=r + 1 {
            if len + (r + 1 - pos) > max_entries {
                continue;
            }
            let child = insert_max(w, pos);
            if fc.patterns().iter().all(|p| !contains_pattern_pinned(&child, p, pos)) {
                rec(&child, fc, max_entries, out);
            }
        }
    }
    rec(&Permutation::identity(1), &fc, max_entries, &mut out);
    out
}

/// The connected fully commutative members of `S_rank` with full support,
/// as permutations.
pub fn connected_full_support_fc_members(
    rank: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<Permutation>, EnumerateError> {
    let spec = ClassSpec::one_line("fc", PatternSet::fully_commutative());
    Ok(class_members(&spec, rank, opts)?
        .into_iter()
        .filter(|w| {
            let (support, connected) = crate::perm::support_and_connectivity(w);
            connected && support.first() == Some(&1) && support.last() == Some(&(rank - 1))
        })
        .collect())
}

/// Counts the maximally clustered members of `S_n` by their number of
/// braid clusters. The profile matches, cluster count by cluster count,
/// the series `L^2 M^{k-1} / (1-x)^k` from the clustered transform.
pub fn cluster_count_profile(
    n: usize,
    opts: &EnumerateOptions,
) -> Result<BTreeMap<usize, u64>, EnumerateError> {
    let spec = ClassSpec::one_line("mc", PatternSet::maximally_clustered());
    let mut profile = BTreeMap::new();
    for w in class_members(&spec, n, opts)? {
        let dec = crate::heap::braid_cluster_decomposition_with(&w, opts.class_search_limit)?;
        *profile.entry(dec.cluster_count()).or_insert(0u64) += 1;
    }
    Ok(profile)
}

/// The generating function route for the same profile: coefficient
/// `n-1` of `clustered_by_count_series(F, k)` with `F` the Catalan
/// series.
pub fn cluster_profile_series(k: usize, order: usize) -> Series {
    let f = crate::genfun::series::catalan_series(order);
    clustered_by_count_series(&f, k).expect("catalan has constant term 1")
}
