//! Binary words over `{x, y}`, their combinatorics and the necessary
//! conditions every identity of `T_k` satisfies.

mod expr;

pub use expr::{parse_expr, parse_word, Expr, DEFAULT_MAX_LEN};

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use bitvec::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn other(self) -> Self {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }

    fn bit(self) -> bool {
        self == Letter::Y
    }

    fn from_bit(b: bool) -> Self {
        if b {
            Letter::Y
        } else {
            Letter::X
        }
    }
}

/// A finite word over `{x, y}`, bit-packed (`x` = 0, `y` = 1).
///
/// Words are ordered shortlex: by length, then lexicographically with `x < y`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: BitVec<u64, Lsb0>,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        Self { bits: letters.into_iter().map(Letter::bit).collect() }
    }

    /// Reads a plain string of `x`/`y` letters. Panics on anything else; use
    /// [`parse_word`] for user input.
    pub fn from_plain(s: &str) -> Self {
        Self::from_letters(s.chars().map(|c| match c {
            'x' => Letter::X,
            'y' => Letter::Y,
            other => panic!("not a letter: {other:?}"),
        }))
    }

    /// Word of length `len` whose letters are the bits of `bits`, first letter
    /// in the most significant position (so numeric order is lexicographic).
    pub fn from_bits_msb(bits: u64, len: usize) -> Self {
        Self::from_letters((0..len).map(|i| Letter::from_bit((bits >> (len - 1 - i)) & 1 == 1)))
    }

    pub fn to_bits_msb(&self) -> Option<u64> {
        (self.len() <= 64).then(|| self.bits.iter().fold(0u64, |acc, b| (acc << 1) | *b as u64))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn letter(&self, i: usize) -> Letter {
        Letter::from_bit(self.bits[i])
    }

    pub fn first(&self) -> Option<Letter> {
        self.bits.first().map(|b| Letter::from_bit(*b))
    }

    pub fn last(&self) -> Option<Letter> {
        self.bits.last().map(|b| Letter::from_bit(*b))
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.bits.iter().map(|b| Letter::from_bit(*b))
    }

    pub fn count(&self, letter: Letter) -> usize {
        match letter {
            Letter::Y => self.bits.count_ones(),
            Letter::X => self.bits.count_zeros(),
        }
    }

    pub fn push(&mut self, letter: Letter) {
        self.bits.push(letter.bit());
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.bits.extend_from_bitslice(&other.bits);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }

    pub fn repeat(&self, n: usize) -> Word {
        let mut bits = BitVec::with_capacity(self.len() * n);
        for _ in 0..n {
            bits.extend_from_bitslice(&self.bits);
        }
        Word { bits }
    }

    pub fn reversed(&self) -> Word {
        let mut bits = self.bits.clone();
        bits.reverse();
        Word { bits }
    }

    /// Exchanges `x` and `y`.
    pub fn swapped(&self) -> Word {
        Word { bits: !self.bits.clone() }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word { bits: self.bits[range].to_bitvec() }
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0..n.min(self.len()))
    }

    pub fn suffix(&self, n: usize) -> Word {
        let n = n.min(self.len());
        self.slice(self.len() - n..self.len())
    }

    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.letters().zip(other.letters()).take_while(|(a, b)| a == b).count()
    }

    pub fn common_suffix_len(&self, other: &Word) -> usize {
        self.letters().rev().zip(other.letters().rev()).take_while(|(a, b)| a == b).count()
    }

    pub fn contains_factor(&self, f: &Word) -> bool {
        f.is_empty()
            || (f.len() <= self.len()
                && (0..=self.len() - f.len()).any(|i| self.bits[i..i + f.len()] == f.bits))
    }

    /// Whether the word factors into blocks `xy` and `yx`.
    pub fn is_xyyx_word(&self) -> bool {
        self.len() % 2 == 0 && self.bits.chunks(2).all(|c| c[0] != c[1])
    }

    /// Reverses the order of the length-2 blocks, keeping each block intact.
    pub fn block_reversed(&self) -> Word {
        let mut bits = BitVec::with_capacity(self.len());
        for c in self.bits.chunks(2).rev() {
            bits.extend_from_bitslice(c);
        }
        Word { bits }
    }

    /// Compact exponent notation, e.g. `(xy)^12(yx)^5`; `1` for the empty word.
    pub fn render(&self) -> String {
        Expr::compress(self).to_string()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.render())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_word(&text, DEFAULT_MAX_LEN).map_err(serde::de::Error::custom)
    }
}

/// All length-`l` factors of `w`.
pub fn factors(w: &Word, l: usize) -> BTreeSet<Word> {
    if l > w.len() {
        return BTreeSet::new();
    }
    (0..=w.len() - l).map(|i| w.slice(i..i + l)).collect()
}

pub fn is_balanced(u: &Word, v: &Word) -> bool {
    u.count(Letter::X) == v.count(Letter::X) && u.count(Letter::Y) == v.count(Letter::Y)
}

pub fn is_uniform(u: &Word, v: &Word) -> bool {
    u.len() == v.len()
}

/// Which of the necessary conditions failed first, with enough detail to
/// build a small separating automaton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// The longest common prefix is shorter than required.
    Prefix { common: usize },
    /// The longest common suffix is shorter than required.
    Suffix { common: usize },
    /// `factor` occurs in one word (the first one when `in_u`) but not the other.
    Factor { factor: Word, in_u: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub k: usize,
    pub prefix_ok: bool,
    pub suffix_ok: bool,
    pub factors_ok: bool,
    pub first_violation: Option<Violation>,
}

impl ConditionReport {
    pub fn all_ok(&self) -> bool {
        self.prefix_ok && self.suffix_ok && self.factors_ok
    }
}

/// Checks that `u` and `v` share a prefix of length `k-2`, a suffix of
/// length `k-1` and their sets of factors of length `k-1`.
pub fn necessary_conditions(u: &Word, v: &Word, k: usize) -> ConditionReport {
    if k < 2 {
        // Every pair is an identity of the trivial monoid.
        return ConditionReport { k, prefix_ok: true, suffix_ok: true, factors_ok: true, first_violation: None };
    }
    let lcp = u.common_prefix_len(v);
    let lcs = u.common_suffix_len(v);
    let need_prefix = (k - 2).min(u.len()).min(v.len());
    let need_suffix = (k - 1).min(u.len()).min(v.len());
    let prefix_ok = lcp >= need_prefix;
    let suffix_ok = lcs >= need_suffix;

    let fu = factors(u, k - 1);
    let fv = factors(v, k - 1);
    let missing = fu
        .difference(&fv)
        .next()
        .map(|f| (f.clone(), true))
        .or_else(|| fv.difference(&fu).next().map(|f| (f.clone(), false)));
    let factors_ok = missing.is_none();

    let first_violation = if !prefix_ok {
        Some(Violation::Prefix { common: lcp })
    } else if !suffix_ok {
        Some(Violation::Suffix { common: lcs })
    } else {
        missing.map(|(factor, in_u)| Violation::Factor { factor, in_u })
    };
    ConditionReport { k, prefix_ok, suffix_ok, factors_ok, first_violation }
}

/// Symmetry flags of a pair of words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordClass {
    /// `v` is the reversal of `u`.
    pub palindrome: bool,
    /// Both words factor into blocks `xy`, `yx`.
    pub xyyx_words: bool,
    /// Both are `{xy,yx}`-words and `v` is `u` with its blocks reversed.
    pub xyyx_palindrome: bool,
}

pub fn word_class(u: &Word, v: &Word) -> WordClass {
    let xyyx_words = u.is_xyyx_word() && v.is_xyyx_word();
    WordClass {
        palindrome: *v == u.reversed(),
        xyyx_words,
        xyyx_palindrome: xyyx_words && *v == u.block_reversed(),
    }
}
