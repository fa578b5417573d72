use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Serialize, Serializer};
use wordsep_core::search::{ClassFilter, DEFAULT_BUDGET, DEFAULT_SEED};

#[derive(Parser, Debug, Serialize)]
#[command(name = "wordsep", version, about = "Short identities of T_k and S_k and the words separation functions")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Serialize)]
pub struct Global {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "WORDSEP_JOBS", default_value_t = 0)]
    pub jobs: usize,
    /// Seed for every sampled assignment set.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Run searches whose estimated cost exceeds the budget.
    #[arg(long, global = true)]
    pub yes_long_run: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    /// One JSON run record.
    Json,
    /// A human-readable table.
    Text,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    /// Decide whether u = v is an identity of T_k (or S_k with --group).
    /// Exit status 0 if it holds, 1 if it fails, 2 on error.
    Check {
        u: String,
        v: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        group: bool,
    },
    /// Smallest number of states separating u and v.
    Sep {
        u: String,
        v: String,
        #[arg(long, default_value_t = 7)]
        kmax: usize,
        /// Permutational automata only.
        #[arg(long)]
        perm: bool,
    },
    /// Build an identity from one of the closed-form families.
    Family(FamilyArgs),
    /// Shortest identities of a level, optionally within a word class.
    Search(SearchArgs),
    /// Smallest parameters of the (xy)/(yx) block identities of S_k.
    Minimize {
        #[arg(value_enum)]
        kind: BlockKind,
        #[arg(long)]
        k: usize,
        /// Node budget (ab) or largest parameter sum tried (abcd).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Sep(n), Sepp(n), or the block-parameter table.
    Table(TableArgs),
    /// Build a separating automaton, optionally writing Graphviz DOT.
    Separator {
        #[command(subcommand)]
        kind: SeparatorKind,
        /// Write the automaton in DOT format to this file ("-" for stdout).
        #[arg(long, global = true)]
        dot: Option<String>,
    },
    /// Check identities in S_5, S_6 and S_7 (the S_5 catalog by default).
    Screen {
        u: Option<String>,
        v: Option<String>,
    },
    /// Look for identities z u w = z v w of T_k over a group identity u = v.
    Extend {
        u: Option<String>,
        v: Option<String>,
        #[arg(long)]
        k: usize,
        /// Largest |z| + |w|.
        #[arg(long, conflicts_with = "catalog")]
        max_extra: Option<usize>,
        /// Use every S_5 catalog identity as a base.
        #[arg(long)]
        catalog: bool,
        /// With --catalog: largest total length of the extended identity.
        #[arg(long, default_value_t = 48)]
        max_total: usize,
    },
}

#[derive(Args, Debug, Serialize)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    #[serde(rename = "family")]
    pub name: FamilyName,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    /// Large-k construction: how b is built.
    #[arg(long, value_enum, default_value_t = Variant::Plain)]
    pub variant: Variant,
    /// Large-k split point; overrides --alpha.
    #[arg(long)]
    pub m: Option<usize>,
    /// Large-k split ratio as a fraction, m = floor(alpha k).
    #[arg(long, default_value = "2/3")]
    pub alpha: Fraction,
    /// Also check the identity at level k.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyName {
    Unary,
    Nonuniform,
    Unbalanced,
    Balanced,
    ShortSemigroup,
    Ab,
    Abcd,
    Theorem2,
    Catalog,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Plain,
    Footnote,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    Ab,
    Abcd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeArg {
    Semigroup,
    Group,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassArg {
    All,
    Balanced,
    Binary,
    XyyxWords,
    PalindromePairs,
}

impl From<ClassArg> for ClassFilter {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::All => ClassFilter::All,
            ClassArg::Balanced => ClassFilter::Balanced,
            ClassArg::Binary => ClassFilter::Binary,
            ClassArg::XyyxWords => ClassFilter::XyyxWords,
            ClassArg::PalindromePairs => ClassFilter::PalindromePairs,
        }
    }
}

#[derive(Args, Debug, Serialize)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Semigroup)]
    pub mode: ModeArg,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub max_length: usize,
    #[arg(long, value_enum, default_value_t = ClassArg::All)]
    pub class: ClassArg,
    /// Keep identities that extend a shorter one by a common letter.
    #[arg(long)]
    pub allow_reducible: bool,
    /// Refuse runs estimated above this many evaluations.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

#[derive(Args, Debug, Serialize)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// Largest n for sep and sepp.
    #[arg(long, default_value_t = 14)]
    pub n_max: usize,
    /// Highest level searched for sep and sepp.
    #[arg(long, default_value_t = 5)]
    pub k_max: usize,
    /// Levels for table2, as a..b.
    #[arg(long, default_value = "5..23")]
    pub k: KRange,
    /// Which identity type table2 covers.
    #[arg(long = "type", value_enum, default_value_t = TypeArg::Both)]
    pub kind2: TypeArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    Sep,
    Sepp,
    Table2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TypeArg {
    Ab,
    Abcd,
    Both,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SeparatorKind {
    /// Separates two words by their common prefix (length + 3 states).
    Prefix { u: String, v: String },
    /// Accepts exactly the words ending with the pattern.
    Suffix { pattern: String },
    /// Accepts exactly the words containing the pattern.
    Factor { pattern: String },
    /// An x-cycle of length i; y fixes every state or merges two of them.
    Counter {
        #[arg(long)]
        cycle: usize,
        /// y sends state FROM to state TO, as FROM:TO.
        #[arg(long)]
        merge: Option<String>,
    },
    /// The automaton of a failing assignment of u = v at level k.
    Witness {
        u: String,
        v: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        group: bool,
    },
}

/// A positive rational, written p/q.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl FromStr for Fraction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (n, d) = s.split_once('/').ok_or_else(|| format!("expected p/q, got {s:?}"))?;
        let num = n.trim().parse().map_err(|e| format!("{e}"))?;
        let den = d.trim().parse().map_err(|e| format!("{e}"))?;
        Ok(Self { num, den })
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Inclusive range of levels, written a..b or a single number.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct KRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad level {t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let k = parse(s)?;
                (k, k)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Serialize for KRange {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
