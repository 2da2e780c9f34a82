//! Command-line front end: classification, heaps, decompositions,
//! generating functions, counting, and the verification suites.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage
//! errors. Progress goes to stderr; stdout stays machine-clean.

use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use clusterkit_core::enumerate::{
    self, cluster_count_profile, cluster_profile_series, verify_tables, verify_translation,
    ClassSpec, EnumerateOptions,
};
use clusterkit_core::genfun::{
    self, clustered_gf, diamond_closed_from_g, diamond_closed_from_gc, pieces_gf,
    recurrence_from_ratfun, to_connected_gf, to_full_gf, BigRational, ClusterMode, NamedClass,
    RationalGF,
};
use clusterkit_core::heap::{
    braid_cluster_decomposition, hexagon_word, three_hexagon_word, Heap, ReducedWord,
};
use clusterkit_core::perm::{classify, count_321_instances, reduced_word_of, PatternSet, Permutation};

#[derive(Parser)]
#[command(name = "clusterkit", version, about = "Pattern classes, heaps, and exact enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for brute-force counting.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a permutation; for maximally clustered inputs, also print
    /// the braid cluster decomposition summary.
    Classify {
        /// Permutation in 1-line notation, e.g. "[46718235]" or "[4,6,7,1,8,2,3,5]".
        perm: String,
    },
    /// Print generating function, series, and recurrence for a class or a
    /// user-supplied rational generating function.
    Gf(GfArgs),
    /// Print the heap of a word or of a permutation's canonical reduced word.
    Heap(HeapArgs),
    /// Braid cluster column decomposition of a maximally clustered permutation.
    Decompose { perm: String },
    /// Diamond reduction and its inverse on heaps.
    Diamond {
        #[command(subcommand)]
        op: DiamondOp,
    },
    /// Count class members by brute-force enumeration.
    Count(CountArgs),
    /// Verification suites; exits 1 if any check fails.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Args)]
struct GfArgs {
    /// Built-in class name (fc, l, m, fb, mc, fc-hexagon, l-hexagon,
    /// m-hexagon, fb-hexagon, mc-hexagon, diamond-avoiding).
    class: Option<String>,
    /// A rational generating function "(<poly>)/(<poly>)" with polynomials
    /// as "c*x^k" terms, e.g. "(1*x^0 + -1*x^1)/(1*x^0 + -3*x^1 + 1*x^2)".
    #[arg(long, conflicts_with = "class")]
    ratfun: Option<String>,
    /// Transform to apply to --ratfun input.
    #[arg(long, value_enum, requires = "ratfun")]
    transform: Option<TransformName>,
    /// Series truncation order.
    #[arg(long, default_value_t = 15)]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformName {
    /// F -> L = F - xF - 1.
    PiecesL,
    /// F -> M = F - 2xF + x^2 F - 1.
    PiecesM,
    /// F -> freely braided transform F + L^2/(1-M).
    ClusteredFb,
    /// F -> maximally clustered transform F + L^2/(1-x-M).
    ClusteredMc,
    /// F -> F_c (connected members).
    ToConnected,
    /// F_c -> F (all members from connected).
    ToFull,
    /// G_c -> F via the closed diamond transform.
    DiamondFromGc,
    /// G -> F via the closed diamond transform.
    DiamondFromG,
}

#[derive(Args)]
struct HeapArgs {
    /// Permutation whose canonical reduced word is used.
    perm: Option<String>,
    /// Generator subscripts, e.g. "2 3 1 2 4"; must form a reduced word.
    #[arg(long, conflicts_with = "perm")]
    word: Option<String>,
    /// Ambient rank for --word (defaults to max subscript + 1).
    #[arg(long, requires = "word")]
    rank: Option<usize>,
}

#[derive(Subcommand)]
enum DiamondOp {
    /// Replace every minimal diamond by an entry (two fewer columns).
    Reduce {
        #[command(flatten)]
        input: HeapArgs,
        /// Allow thin internal columns (the informal computation).
        #[arg(long)]
        relaxed: bool,
    },
    /// Center a minimal diamond at every entry (two more columns).
    Expand {
        #[command(flatten)]
        input: HeapArgs,
    },
}

#[derive(Args)]
struct CountArgs {
    /// Built-in class name (see `gf`).
    #[arg(long, conflicts_with_all = ["avoid", "heap_avoid"])]
    class: Option<String>,
    /// 1-line patterns to avoid, space- or comma-separated, e.g. "[321] [3412]".
    #[arg(long)]
    avoid: Option<String>,
    /// Heap patterns (as permutations) to heap-avoid.
    #[arg(long)]
    heap_avoid: Option<String>,
    /// Largest symmetric group size to count.
    #[arg(long)]
    n_max: usize,
    /// Smallest size to report.
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    /// Permit class searches on unrestricted permutations (small ranks only).
    #[arg(long)]
    allow_unrestricted: bool,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Brute force vs generating functions vs recurrences for every
    /// catalog row.
    Tables {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Heap-avoidance of the hexagon equals avoidance of its four 1-line
    /// translates, with the ideal-pattern hypothesis.
    Translation {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Base pattern set: fc, fb, or mc.
        #[arg(long, default_value = "fc")]
        patterns: String,
    },
    /// Cluster-count profile of the maximally clustered class against the
    /// piecewise geometric series.
    Bijection {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Diamond reduction round-trips and the hexagon example.
    Diamond {
        /// Round-trip every connected fully commutative heap with at most
        /// this many entries.
        #[arg(long, default_value_t = 12)]
        max_entries: usize,
        /// Inverse round-trip heaps on at most this many columns.
        #[arg(long, default_value_t = 8)]
        max_cols: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn options_from_env() -> EnumerateOptions {
    let mut opts = EnumerateOptions::default();
    if let Ok(v) = std::env::var("CLUSTERKIT_MAX_N") {
        if let Ok(n) = v.parse::<usize>() {
            if n > enumerate::DEFAULT_MAX_RANK {
                eprintln!(
                    "note: CLUSTERKIT_MAX_N={n} raises the brute-force limit; expect long runtimes"
                );
            }
            opts.max_rank = n;
        } else {
            eprintln!("warning: ignoring unparsable CLUSTERKIT_MAX_N={v:?}");
        }
    }
    opts
}

fn parse_perm(s: &str) -> Result<Permutation> {
    Permutation::from_str(s).map_err(|e| anyhow!("invalid permutation {s:?}: {e}"))
}

fn parse_word_args(args: &HeapArgs) -> Result<Heap> {
    if let Some(word) = &args.word {
        let letters: Vec<usize> = word
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().with_context(|| format!("invalid subscript {t:?}")))
            .collect::<Result<_>>()?;
        let rank = args.rank.unwrap_or_else(|| letters.iter().max().map_or(1, |m| m + 1));
        let word = ReducedWord::new(letters, rank).map_err(|e| anyhow!("{e}"))?;
        Ok(Heap::from_word(&word))
    } else if let Some(perm) = &args.perm {
        let w = parse_perm(perm)?;
        Ok(Heap::from_word(&reduced_word_of(&w)))
    } else {
        bail!("provide a permutation or --word");
    }
}

fn heap_json(h: &Heap) -> Value {
    json!({
        "rank": h.rank(),
        "entries": h.pairs().iter().map(|&(c, l)| json!([c, l])).collect::<Vec<_>>(),
    })
}

fn print_heap_block(h: &Heap) {
    println!("{h}");
    println!("entries: {:?}", h.pairs());
    println!("word: {}", h.to_word());
    println!("permutation: {}", h.evaluate());
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let opts = options_from_env();
    match &cli.command {
        Command::Classify { perm } => {
            let w = parse_perm(perm)?;
            let flags = classify(&w);
            let n321 = count_321_instances(&w);
            let dec = if flags.maximally_clustered {
                Some(braid_cluster_decomposition(&w).map_err(|e| anyhow!("{e}"))?)
            } else {
                None
            };
            if cli.format == Format::Json {
                let clusters: Vec<Value> = dec
                    .as_ref()
                    .map(|d| {
                        d.cluster_intervals()
                            .iter()
                            .zip(d.half_lengths())
                            .map(|(&(lo, hi), &n)| json!({"columns": [lo, hi], "half_length": n}))
                            .collect()
                    })
                    .unwrap_or_default();
                let mut obj = json!({
                    "permutation": w.to_string(),
                    "rank": w.rank(),
                    "length": w.length(),
                    "n321": n321,
                    "fully_commutative": flags.fully_commutative,
                    "freely_braided": flags.freely_braided,
                    "maximally_clustered": flags.maximally_clustered,
                    "hexagon_avoiding_1line": flags.hexagon_avoiding_1line,
                });
                if let Some(d) = &dec {
                    obj["clusters"] = Value::Array(clusters);
                    obj["canonical_heap"] = heap_json(d.canonical_heap());
                    obj["contracted_word"] = json!(d.contracted_word().to_string());
                }
                println!("{obj}");
            } else {
                println!("permutation: {w}  (rank {}, length {})", w.rank(), w.length());
                println!("N(w) = {n321}");
                println!("fully commutative:      {}", flags.fully_commutative);
                println!("freely braided:         {}", flags.freely_braided);
                println!("maximally clustered:    {}", flags.maximally_clustered);
                println!("hexagon-avoiding (1-line): {}", flags.hexagon_avoiding_1line);
                if let Some(d) = &dec {
                    if d.cluster_count() > 0 {
                        println!("clusters:");
                        for (&(lo, hi), &n) in d.cluster_intervals().iter().zip(d.half_lengths()) {
                            println!("  columns {lo}..={hi}, half-length {n}");
                        }
                    } else {
                        println!("clusters: none");
                    }
                    println!("contracted word: {}", d.contracted_word());
                    println!("canonical heap:");
                    println!("{}", d.canonical_heap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gf(args) => run_gf(cli, args),
        Command::Heap(args) => {
            let h = parse_word_args(args)?;
            if cli.format == Format::Json {
                println!("{}", heap_json(&h));
            } else {
                print_heap_block(&h);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { perm } => {
            let w = parse_perm(perm)?;
            let d = braid_cluster_decomposition(&w).map_err(|e| anyhow!("{e}"))?;
            if cli.format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "permutation": w.to_string(),
                        "n321": count_321_instances(&w),
                        "clusters": d
                            .cluster_intervals()
                            .iter()
                            .zip(d.half_lengths())
                            .map(|(&(lo, hi), &n)| json!({"columns": [lo, hi], "half_length": n}))
                            .collect::<Vec<_>>(),
                        "c_intervals": d
                            .c_intervals()
                            .iter()
                            .filter(|&&(lo, hi)| lo <= hi)
                            .map(|&(lo, hi)| json!([lo, hi]))
                            .collect::<Vec<_>>(),
                        "contracted_word": d.contracted_word().to_string(),
                        "canonical_heap": heap_json(d.canonical_heap()),
                    })
                );
            } else {
                println!("permutation: {w}");
                println!("N(w) = {} = sum of half-lengths {:?}", d.total_weight(), d.half_lengths());
                for (&(lo, hi), &n) in d.cluster_intervals().iter().zip(d.half_lengths()) {
                    println!("cluster on columns {lo}..={hi} (half-length {n})");
                }
                println!("contracted word: {}", d.contracted_word());
                println!("canonical heap:");
                println!("{}", d.canonical_heap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Diamond { op } => {
            let (input, result) = match op {
                DiamondOp::Reduce { input, relaxed } => {
                    let h = parse_word_args(input)?;
                    let r = if *relaxed {
                        h.diamond_reduction_relaxed()
                    } else {
                        h.diamond_reduction()
                    };
                    (h, r.map_err(|e| anyhow!("{e}"))?)
                }
                DiamondOp::Expand { input } => {
                    let h = parse_word_args(input)?;
                    let r = h.inverse_diamond_reduction().map_err(|e| anyhow!("{e}"))?;
                    (h, r)
                }
            };
            if cli.format == Format::Json {
                println!("{}", json!({"input": heap_json(&input), "result": heap_json(&result)}));
            } else {
                println!("input heap:");
                println!("{input}");
                println!("result heap:");
                print_heap_block(&result);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count(args) => run_count(cli, args, &opts),
        Command::Verify { suite } => run_verify(cli, suite, &opts),
    }
}

fn apply_transform(gf: &RationalGF, t: TransformName) -> Result<RationalGF> {
    let out = match t {
        TransformName::PiecesL => pieces_gf(gf).map(|(l, _)| l),
        TransformName::PiecesM => pieces_gf(gf).map(|(_, m)| m),
        TransformName::ClusteredFb => clustered_gf(gf, ClusterMode::FreelyBraided),
        TransformName::ClusteredMc => clustered_gf(gf, ClusterMode::MaximallyClustered),
        TransformName::ToConnected => to_connected_gf(gf),
        TransformName::ToFull => to_full_gf(gf),
        TransformName::DiamondFromGc => diamond_closed_from_gc(gf),
        TransformName::DiamondFromG => diamond_closed_from_g(gf),
    };
    out.map_err(|e| anyhow!("{e}"))
}

fn run_gf(cli: &Cli, args: &GfArgs) -> Result<ExitCode> {
    let (label, gf, series) = if let Some(src) = &args.ratfun {
        let mut gf: RationalGF = src.parse().map_err(|e| anyhow!("invalid --ratfun: {e}"))?;
        if let Some(t) = args.transform {
            gf = apply_transform(&gf, t)?;
        }
        let series = gf.series(args.order);
        ("custom".to_string(), Some(gf), series)
    } else if let Some(name) = &args.class {
        let class = NamedClass::from_name(name).ok_or_else(|| {
            anyhow!("unknown class {name:?}; known: {}", genfun::catalog::class_names().join(", "))
        })?;
        (name.clone(), class.gf(), class.series(args.order))
    } else {
        bail!("provide a class name or --ratfun");
    };
    let recurrence = gf.as_ref().map(recurrence_from_ratfun);
    if cli.format == Format::Json {
        println!(
            "{}",
            json!({
                "class": label,
                "rational": gf.is_some(),
                "gf": gf.as_ref().map(|g| g.to_string()),
                "order": args.order,
                "series": series.to_string(),
                "recurrence": recurrence.as_ref().map(|r| r.to_string()),
            })
        );
    } else {
        println!("class: {label}");
        match &gf {
            Some(g) => println!("gf: {g}"),
            None => println!("gf: algebraic (series only)"),
        }
        println!("series: {series}");
        if let Some(r) = &recurrence {
            println!("recurrence: {r}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_pattern_list(s: &str) -> Result<Vec<Permutation>> {
    s.replace(']', "] ")
        .split_whitespace()
        .map(|t| t.trim_matches(','))
        .filter(|t| !t.is_empty())
        .map(parse_perm)
        .collect()
}

fn run_count(cli: &Cli, args: &CountArgs, opts: &EnumerateOptions) -> Result<ExitCode> {
    if args.n_min > args.n_max {
        bail!("--n-min must not exceed --n-max");
    }
    let mut opts = opts.clone();
    opts.allow_unrestricted_class_search |= args.allow_unrestricted;
    let mut report = enumerate::CountReport::default();
    if let Some(name) = &args.class {
        let class = NamedClass::from_name(name)
            .ok_or_else(|| anyhow!("unknown class {name:?}"))?;
        let counts = enumerate::brute_counts_for_class(class, args.n_max, &opts)
            .map_err(|e| anyhow!("{e}"))?;
        for n in args.n_min..=args.n_max {
            report.rows.push(enumerate::CountRow {
                class: name.clone(),
                n,
                count: counts[n],
                method: enumerate::Method::Brute,
            });
        }
    } else {
        let patterns = match &args.avoid {
            Some(s) => PatternSet::new(parse_pattern_list(s)?, None),
            None => PatternSet::empty(),
        };
        let heap_patterns = match &args.heap_avoid {
            Some(s) => parse_pattern_list(s)?,
            None => Vec::new(),
        };
        let spec = ClassSpec::new_relaxed("custom", patterns, heap_patterns);
        let counts = crate_count(&spec, args.n_max, &opts, cli.jobs)?;
        for n in args.n_min..=args.n_max {
            report.rows.push(enumerate::CountRow {
                class: "custom".to_string(),
                n,
                count: counts[n],
                method: enumerate::Method::Brute,
            });
        }
    }
    if cli.format == Format::Json {
        print!("{}", report.to_json_lines());
    } else {
        print!("{}", report.to_text_table());
    }
    Ok(ExitCode::SUCCESS)
}

fn crate_count(
    spec: &ClassSpec,
    n_max: usize,
    opts: &EnumerateOptions,
    jobs: usize,
) -> Result<Vec<u64>> {
    clusterkit::count_class_parallel(spec, n_max, opts, jobs).map_err(|e| anyhow!("{e}"))
}

struct CheckList {
    name: &'static str,
    checks: Vec<(String, bool)>,
}

impl CheckList {
    fn new(name: &'static str) -> Self {
        CheckList { name, checks: Vec::new() }
    }

    fn push(&mut self, label: impl Into<String>, ok: bool) {
        self.checks.push((label.into(), ok));
    }

    fn finish(self, format: Format) -> ExitCode {
        let passed = self.checks.iter().all(|(_, ok)| *ok);
        if format == Format::Json {
            println!(
                "{}",
                json!({
                    "suite": self.name,
                    "passed": passed,
                    "checks": self
                        .checks
                        .iter()
                        .map(|(label, ok)| json!({"check": label, "passed": ok}))
                        .collect::<Vec<_>>(),
                })
            );
        } else {
            for (label, ok) in &self.checks {
                println!("{} {label}", if *ok { "PASS" } else { "FAIL" });
            }
            println!(
                "{}: {}",
                self.name,
                if passed { "all checks passed" } else { "FAILURES PRESENT" }
            );
        }
        if passed {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

fn run_verify(cli: &Cli, suite: &VerifySuite, opts: &EnumerateOptions) -> Result<ExitCode> {
    match suite {
        VerifySuite::Tables { n_max } => {
            let t = verify_tables(*n_max, opts).map_err(|e| anyhow!("{e}"))?;
            let mut list = CheckList::new("tables");
            if cli.format == Format::Text {
                print!("{}", t.report.to_text_table());
            }
            for class in NamedClass::all() {
                let bad = t.disagreements.iter().any(|(c, _)| c == class.name());
                list.push(format!("row {} methods agree", class.name()), !bad);
            }
            Ok(list.finish(cli.format))
        }
        VerifySuite::Translation { n_max, patterns } => {
            let base = match patterns.as_str() {
                "fc" => PatternSet::fully_commutative(),
                "fb" => PatternSet::freely_braided(),
                "mc" => PatternSet::maximally_clustered(),
                other => bail!("unknown pattern set {other:?} (use fc, fb, or mc)"),
            };
            let hex = clusterkit_core::perm::hexagon();
            let report =
                verify_translation(&base, &[hex], *n_max, opts).map_err(|e| anyhow!("{e}"))?;
            let mut list = CheckList::new("translation");
            for (h, u) in &report.u_sets {
                eprintln!("U({h}) = {:?}", u.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            }
            list.push("ideal-pattern hypothesis", report.ideal_failures.is_empty());
            for &(n, lhs, rhs, eq) in &report.per_rank {
                list.push(format!("S_{n}: heap route {lhs} == translated route {rhs}"), eq);
            }
            Ok(list.finish(cli.format))
        }
        VerifySuite::Bijection { n_max } => {
            let mut list = CheckList::new("bijection");
            for n in 2..=*n_max {
                let profile = cluster_count_profile(n, opts).map_err(|e| anyhow!("{e}"))?;
                let max_k = profile.keys().max().copied().unwrap_or(0);
                for k in 0..=max_k {
                    let expect = cluster_profile_series(k, n - 1);
                    let got = profile.get(&k).copied().unwrap_or(0);
                    let ok = expect.coeff(n - 1) == &BigRational::from_integer(got.into());
                    list.push(format!("S_{n}, {k} clusters: {got}"), ok);
                }
            }
            Ok(list.finish(cli.format))
        }
        VerifySuite::Diamond { max_entries, max_cols } => {
            let mut list = CheckList::new("diamond");
            let hex = Heap::from_word(&hexagon_word());
            let three = Heap::from_word(&three_hexagon_word());
            list.push(
                "diamond reduction of the hexagon is the 3-hexagon",
                hex.diamond_reduction().map(|r| r == three).unwrap_or(false),
            );
            let gs = enumerate::connected_fc_heaps_up_to_entries(*max_entries);
            let mut fwd_ok = true;
            for g in &gs {
                let ok = g
                    .inverse_diamond_reduction()
                    .and_then(|h| h.diamond_reduction())
                    .map(|back| back == *g)
                    .unwrap_or(false);
                fwd_ok &= ok;
            }
            list.push(
                format!("expand-then-reduce identity on {} heaps (<= {max_entries} entries)", gs.len()),
                fwd_ok,
            );
            let mut count = 0usize;
            let mut inv_ok = true;
            for rank in 4..=max_cols + 1 {
                for w in enumerate::connected_full_support_fc_members(rank, opts)
                    .map_err(|e| anyhow!("{e}"))?
                {
                    let h = Heap::from_word(&reduced_word_of(&w));
                    let (lo, hi) = h.support_interval().expect("connected");
                    if (lo + 1..hi).any(|c| h.column_count(c) < 2) {
                        continue;
                    }
                    count += 1;
                    let ok = h
                        .diamond_reduction()
                        .and_then(|g| g.inverse_diamond_reduction())
                        .map(|back| back == h)
                        .unwrap_or(false);
                    inv_ok &= ok;
                }
            }
            list.push(
                format!("reduce-then-expand identity on {count} heaps (<= {max_cols} columns)"),
                inv_ok,
            );
            Ok(list.finish(cli.format))
        }
    }
}

