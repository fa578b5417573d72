//! Exhaustive searches: shortest identities (optionally restricted to a
//! class of pairs), minimal parameters for the block families, separation
//! tables and the affix extension of group identities.
//!
//! Shortest-identity searches enumerate candidate words in a word tree and
//! bucket them in two rounds. The coarse key combines features every
//! identity must share (prefix, suffix and factor set in semigroup mode,
//! letter counts in group mode) with a digest over a small seeded sample of
//! assignments. Words sharing a coarse key get a fine digest over the full
//! conjugation-reduced assignment set, and every reported pair is confirmed
//! by the exact checker.

mod extend;
mod minimize;
mod tables;
mod tree;

pub use extend::{extend_group_identity, ExtendReport};
pub use minimize::{minimize_ab, minimize_abcd, AbMinimum, AbcdMinimum};
pub use tables::{s6_s7_screen, sep_table, sepp_table, LevelResult, ScreenRow, SepTable, SepTableRow};
pub use tree::{Bits, Blocks, WordTree, MAX_TREE_LETTERS};

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::lcm_upto;
use crate::checker::{check_level, is_identity, is_irreducible, Mode, SampleSpec};
use crate::error::{Error, Result};
use crate::families::{Family, IdentityPair};
use crate::words::{Expr, Word};

/// Default cap on estimated work (candidate words times assignments).
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;
/// Default seed for every sampled signature.
pub const DEFAULT_SEED: u64 = 0x5eed_2014;
/// Size of the seeded sample behind the coarse key.
pub const COARSE_SAMPLE: usize = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassFilter {
    All,
    /// Both words have the same number of each letter.
    Balanced,
    /// The pair uses both letters.
    Binary,
    /// Both words are `{xy, yx}`-words.
    XyyxWords,
    /// `v` is the reversal of `u`.
    PalindromePairs,
}

impl ClassFilter {
    fn admits(self, u: &Word, v: &Word) -> bool {
        match self {
            ClassFilter::All | ClassFilter::XyyxWords | ClassFilter::PalindromePairs => true,
            ClassFilter::Balanced => crate::words::is_balanced(u, v),
            ClassFilter::Binary => {
                let has = |l| u.count(l) + v.count(l) > 0;
                has(crate::words::Letter::X) && has(crate::words::Letter::Y)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub mode: Mode,
    pub k: usize,
    /// Longest side, in letters.
    pub max_length: usize,
    pub class_filter: ClassFilter,
    pub require_irreducible: bool,
    /// Worker threads; 0 uses the global pool.
    pub parallelism: usize,
    pub seed: u64,
    /// Refuse runs whose estimated work exceeds this.
    pub budget: u128,
    /// Run even when the estimate exceeds the budget.
    pub allow_long_run: bool,
}

impl SearchConfig {
    pub fn new(mode: Mode, k: usize, max_length: usize) -> Self {
        Self {
            mode,
            k,
            max_length,
            class_filter: ClassFilter::All,
            require_irreducible: true,
            parallelism: 0,
            seed: DEFAULT_SEED,
            budget: DEFAULT_BUDGET,
            allow_long_run: false,
        }
    }

    pub fn class(mut self, class: ClassFilter) -> Self {
        self.class_filter = class;
        self
    }

    pub fn jobs(mut self, n: usize) -> Self {
        self.parallelism = n;
        self
    }

    fn tree(&self) -> WordTree {
        match self.class_filter {
            ClassFilter::XyyxWords => WordTree::new(Blocks::XyYx, self.max_length / 2),
            _ => WordTree::new(Blocks::Letters, self.max_length),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    /// Shortest length with an identity in the class, if any up to the cap.
    pub minimal_length: Option<usize>,
    /// All identities of that length, one per symmetry class, ascending.
    pub identities: Vec<IdentityPair>,
    pub candidates_examined: u64,
    /// Pairs handed to the exact checker.
    pub exact_checks: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl PartialEq for SearchReport {
    fn eq(&self, other: &Self) -> bool {
        self.minimal_length == other.minimal_length
            && self.identities == other.identities
            && self.candidates_examined == other.candidates_examined
            && self.exact_checks == other.exact_checks
    }
}

/// Rough number of conjugation orbits of assignments.
pub fn orbit_estimate(mode: Mode, k: usize) -> u128 {
    let fact: u128 = (1..=k as u128).product();
    match mode {
        Mode::Group => fact,
        Mode::Semigroup => ((k as u128).pow(2 * k as u32) / fact).max(1),
    }
}

/// Estimated work: candidate words times assignments per fine digest.
pub fn estimate(cfg: &SearchConfig) -> u128 {
    let depth = match cfg.class_filter {
        ClassFilter::XyyxWords => cfg.max_length / 2,
        _ => cfg.max_length,
    };
    ((1u128 << (depth + 1)) - 1) * orbit_estimate(cfg.mode, cfg.k)
}

fn validate(cfg: &SearchConfig) -> Result<()> {
    check_level(cfg.mode, cfg.k)?;
    if cfg.max_length == 0 {
        return Err(Error::InvalidArgument("max_length must be at least 1".into()));
    }
    if cfg.max_length > MAX_TREE_LETTERS {
        return Err(Error::Capability(format!("searches are limited to words of {MAX_TREE_LETTERS} letters")));
    }
    let est = estimate(cfg);
    if est > cfg.budget && !cfg.allow_long_run {
        return Err(Error::Infeasible { estimate: est, budget: cfg.budget });
    }
    Ok(())
}

/// Runs `f` on a pool with `jobs` threads (the global pool when 0).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(f))
}

/// Symmetries preserving identities: swapping the letters and swapping the
/// sides always; reversing both sides only for group identities, since
/// inverting a positive identity yields its reversal.
pub fn canonical_pair(u: &Word, v: &Word, mode: Mode) -> (Word, Word) {
    let order = |a: Word, b: Word| if a <= b { (a, b) } else { (b, a) };
    let mut images = vec![order(u.clone(), v.clone()), order(u.swapped(), v.swapped())];
    if mode == Mode::Group {
        images.push(order(u.reversed(), v.reversed()));
        images.push(order(u.reversed().swapped(), v.reversed().swapped()));
    }
    images.into_iter().min().expect("non-empty")
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct CoarseKey {
    features: [u64; 3],
    digest: u128,
}

fn features(cfg: &SearchConfig, w: Bits, lcm: u64) -> [u64; 3] {
    let counts = ((w.count_x() as u64) << 32) | w.count_y() as u64;
    match cfg.mode {
        Mode::Semigroup => {
            let k = cfg.k as u32;
            if k < 2 {
                return [0; 3];
            }
            let balanced = if cfg.class_filter == ClassFilter::Balanced { counts } else { 0 };
            [((w.prefix(k - 2)) << 32) | w.suffix(k - 1), w.factor_mask(k - 1), balanced]
        }
        Mode::Group => {
            let modular = ((w.count_x() as u64 % lcm) << 32) | (w.count_y() as u64 % lcm);
            let exact = if cfg.class_filter == ClassFilter::Balanced { counts } else { 0 };
            [modular, exact, 0]
        }
    }
}

/// A word can occur in an identity of `T_k` only if it is at least `k - 1`
/// letters long: a shorter word is recognized exactly by a path automaton
/// with at most `k` states.
fn may_occur(cfg: &SearchConfig, w: Bits) -> bool {
    cfg.mode == Mode::Group || cfg.k < 2 || w.len as usize + 2 > cfg.k
}

/// All identities of minimal length within the class, up to symmetry.
pub fn shortest_identities(cfg: &SearchConfig) -> Result<SearchReport> {
    validate(cfg)?;
    let start = Instant::now();
    let mut report = with_jobs(cfg.parallelism, || search(cfg))??;
    report.wall_time = start.elapsed();
    Ok(report)
}

fn search(cfg: &SearchConfig) -> Result<SearchReport> {
    let k = cfg.k;
    let tree = cfg.tree();
    let sample = SampleSpec::Seeded { seed: cfg.seed, size: COARSE_SAMPLE }.assignments(cfg.mode, k)?;
    let full = SampleSpec::Full.assignments(cfg.mode, k)?;
    let lcm = lcm_upto(k as u64)?;
    let digests = tree.digests(&sample, k);

    let n = tree.node_count();
    let key = |i: usize| CoarseKey { features: features(cfg, tree.word(i), lcm), digest: digests[i].finish() };
    let candidates: Vec<usize> =
        (0..n).into_par_iter().filter(|&i| may_occur(cfg, tree.word(i)) && tree.word(i).len as usize <= cfg.max_length).collect();
    let examined = candidates.len() as u64;

    // Groups of nodes that might be pairwise identities, each sorted by node.
    let groups: Vec<Vec<usize>> = if cfg.class_filter == ClassFilter::PalindromePairs {
        candidates
            .par_iter()
            .filter_map(|&i| {
                let r = tree.node_of(tree.word(i).reversed()).expect("reversal is in the tree");
                (i < r && key(i) == key(r)).then(|| vec![i, r])
            })
            .collect()
    } else {
        let mut keyed: Vec<(CoarseKey, usize)> = candidates.par_iter().map(|&i| (key(i), i)).collect();
        keyed.par_sort_unstable();
        keyed
            .chunk_by(|a, b| a.0 == b.0)
            .filter(|g| g.len() > 1)
            .map(|g| g.iter().map(|&(_, i)| i).collect())
            .collect()
    };

    // Fine round: split each coarse group by the full digest.
    let fine: Vec<Vec<usize>> = groups
        .par_iter()
        .flat_map_iter(|g| {
            let mut d: Vec<(u128, usize)> =
                g.iter().map(|&i| (tree::word_digest(tree.word(i), &full, k), i)).collect();
            d.sort_unstable();
            d.chunk_by(|a, b| a.0 == b.0)
                .filter(|c| c.len() > 1)
                .map(|c| c.iter().map(|&(_, i)| i).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .collect();

    let len_of = |i: usize| tree.word(i).len as usize;
    let mut lengths: BTreeSet<usize> = BTreeSet::new();
    for g in &fine {
        // Node order is shortlex, so the shortest pair in a group ends at
        // its second member.
        lengths.extend(g.iter().skip(1).map(|&i| len_of(i)));
    }

    let mut exact_checks = 0u64;
    for &l in &lengths {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for g in &fine {
            for (bi, &b) in g.iter().enumerate() {
                if len_of(b) == l {
                    pairs.extend(g[..bi].iter().map(|&a| (a, b)));
                }
            }
        }
        exact_checks += pairs.len() as u64;
        let confirmed: Vec<(Word, Word)> = pairs
            .par_iter()
            .map(|&(a, b)| -> Result<Option<(Word, Word)>> {
                let (u, v) = (tree.word(a).to_word(), tree.word(b).to_word());
                if !cfg.class_filter.admits(&u, &v) {
                    return Ok(None);
                }
                let (eu, ev) = (Expr::from(&u), Expr::from(&v));
                if !is_identity(&eu, &ev, k, cfg.mode)?.holds() {
                    return Ok(None);
                }
                if cfg.require_irreducible && !is_irreducible(&eu, &ev, k, cfg.mode)? {
                    return Ok(None);
                }
                Ok(Some(canonical_pair(&u, &v, cfg.mode)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if !confirmed.is_empty() {
            let unique: BTreeSet<(Word, Word)> = confirmed.into_iter().collect();
            let identities = unique
                .into_iter()
                .map(|(u, v)| IdentityPair {
                    u: Expr::compress(&u),
                    v: Expr::compress(&v),
                    k,
                    family: Family::Found,
                    claimed_length: l as u128,
                })
                .collect();
            return Ok(SearchReport {
                minimal_length: Some(l),
                identities,
                candidates_examined: examined,
                exact_checks,
                wall_time: Duration::ZERO,
            });
        }
    }
    Ok(SearchReport {
        minimal_length: None,
        identities: Vec::new(),
        candidates_examined: examined,
        exact_checks,
        wall_time: Duration::ZERO,
    })
}
