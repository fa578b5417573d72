use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Letter, Word};
use crate::error::{Error, Result};

/// Default cap on the number of letters a word may expand to.
pub const DEFAULT_MAX_LEN: u64 = 10_000_000;

/// A word in exponent notation. Exponent blocks stay symbolic, so words far
/// longer than anything that could be materialized (`x^5354228902`) are
/// representable and can still be evaluated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Letter(Letter),
    Concat(Vec<Expr>),
    Pow(Box<Expr>, u64),
}

impl Expr {
    pub fn empty() -> Self {
        Expr::Concat(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Expr::Letter(l)
    }

    pub fn x() -> Self {
        Expr::Letter(Letter::X)
    }

    pub fn y() -> Self {
        Expr::Letter(Letter::Y)
    }

    /// Letters given as a plain `x`/`y` string.
    pub fn plain(s: &str) -> Self {
        Expr::from(&Word::from_plain(s))
    }

    pub fn pow(self, n: u64) -> Self {
        match n {
            0 => Expr::empty(),
            1 => self,
            _ => Expr::Pow(Box::new(self), n),
        }
    }

    pub fn concat<I: IntoIterator<Item = Expr>>(parts: I) -> Self {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                Expr::Concat(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().expect("one element")
        } else {
            Expr::Concat(flat)
        }
    }

    pub fn then(self, other: Expr) -> Self {
        Expr::concat([self, other])
    }

    /// Number of letters, or `None` on overflow.
    pub fn len(&self) -> Option<u128> {
        match self {
            Expr::Letter(_) => Some(1),
            Expr::Concat(parts) => parts.iter().try_fold(0u128, |acc, p| acc.checked_add(p.len()?)),
            Expr::Pow(e, n) => e.len()?.checked_mul(*n as u128),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn count(&self, letter: Letter) -> Option<u128> {
        match self {
            Expr::Letter(l) => Some((*l == letter) as u128),
            Expr::Concat(parts) => {
                parts.iter().try_fold(0u128, |acc, p| acc.checked_add(p.count(letter)?))
            }
            Expr::Pow(e, n) => e.count(letter)?.checked_mul(*n as u128),
        }
    }

    /// Materializes the word, refusing anything longer than `max_len` letters.
    pub fn expand(&self, max_len: u64) -> Result<Word> {
        let len = self.len().ok_or(Error::WordTooLong { length: u128::MAX, cap: max_len })?;
        if len > max_len as u128 {
            return Err(Error::WordTooLong { length: len, cap: max_len });
        }
        let mut out = Word::new();
        self.expand_into(&mut out);
        Ok(out)
    }

    fn expand_into(&self, out: &mut Word) {
        match self {
            Expr::Letter(l) => out.push(*l),
            Expr::Concat(parts) => parts.iter().for_each(|p| p.expand_into(out)),
            Expr::Pow(e, n) => {
                let mut block = Word::new();
                e.expand_into(&mut block);
                for _ in 0..*n {
                    out.extend_from(&block);
                }
            }
        }
    }

    /// Lazily yields the letters, for words too long to materialize.
    pub fn letters(&self) -> Box<dyn Iterator<Item = Letter> + '_> {
        match self {
            Expr::Letter(l) => Box::new(std::iter::once(*l)),
            Expr::Concat(parts) => Box::new(parts.iter().flat_map(|p| p.letters())),
            Expr::Pow(e, n) => Box::new((0..*n).flat_map(move |_| e.letters())),
        }
    }

    pub fn reversed(&self) -> Expr {
        match self {
            Expr::Letter(l) => Expr::Letter(*l),
            Expr::Concat(parts) => Expr::Concat(parts.iter().rev().map(Expr::reversed).collect()),
            Expr::Pow(e, n) => Expr::Pow(Box::new(e.reversed()), *n),
        }
    }

    pub fn swapped(&self) -> Expr {
        match self {
            Expr::Letter(l) => Expr::Letter(l.other()),
            Expr::Concat(parts) => Expr::Concat(parts.iter().map(Expr::swapped).collect()),
            Expr::Pow(e, n) => Expr::Pow(Box::new(e.swapped()), *n),
        }
    }

    /// Whether both expressions denote the same word. Compares letter by
    /// letter when the words are too long to expand.
    pub fn same_word(&self, other: &Expr) -> bool {
        if self.len() != other.len() || self.count(Letter::X) != other.count(Letter::X) {
            return false;
        }
        match (self.expand(DEFAULT_MAX_LEN), other.expand(DEFAULT_MAX_LEN)) {
            (Ok(a), Ok(b)) => a == b,
            _ => self.letters().eq(other.letters()),
        }
    }

    /// Canonical compact form of a concrete word: greedily, at each
    /// position, take the repeated block (period up to 8) covering the most
    /// letters, preferring shorter periods on ties.
    pub fn compress(w: &Word) -> Expr {
        const MAX_PERIOD: usize = 8;
        let letters: Vec<Letter> = w.letters().collect();
        let n = letters.len();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < n {
            let mut best = (1usize, 1usize); // (period, repetitions)
            for p in 1..=MAX_PERIOD.min(n - i) {
                let mut r = 1;
                while i + (r + 1) * p <= n
                    && letters[i + r * p..i + (r + 1) * p] == letters[i..i + p]
                {
                    r += 1;
                }
                if r >= 2 && p * r > best.0 * best.1 {
                    best = (p, r);
                }
            }
            let (p, r) = best;
            let block = Word::from_letters(letters[i..i + p].iter().copied());
            let inner = if p == 1 { Expr::Letter(letters[i]) } else { Expr::compress(&block) };
            parts.push(inner.pow(r as u64));
            i += p * r;
        }
        Expr::concat(parts)
    }
}

impl From<&Word> for Expr {
    fn from(w: &Word) -> Self {
        Expr::concat(w.letters().map(Expr::Letter))
    }
}

impl From<Word> for Expr {
    fn from(w: Word) -> Self {
        Expr::from(&w)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_atom(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match e {
                Expr::Letter(l) => write!(f, "{}", l.as_char()),
                other => write!(f, "({other})"),
            }
        }
        match self {
            Expr::Letter(l) => write!(f, "{}", l.as_char()),
            Expr::Concat(parts) if parts.is_empty() => f.write_str("1"),
            Expr::Concat(parts) => parts.iter().try_for_each(|p| match p {
                Expr::Concat(_) => write!(f, "({p})^1"),
                _ => write!(f, "{p}"),
            }),
            Expr::Pow(e, n) => {
                write_atom(e, f)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({self})")
    }
}

impl Serialize for Expr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Expr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_expr(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses exponent notation into a symbolic word.
///
/// Grammar (whitespace ignored):
///
/// ```text
/// word  := term*
/// term  := atom ('^' uint)? | '(' word ')' ('^' uint)?
/// atom  := 'x' | 'y' | '1'
/// uint  := digits | '{' digits '}'
/// ```
///
/// `1` denotes the empty word, as does the empty string.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars: &chars, pos: 0, end: text.len() };
    let e = p.word()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(e)
}

/// Parses and expands, refusing words longer than `max_len`.
pub fn parse_word(text: &str, max_len: u64) -> Result<Word> {
    parse_expr(text)?.expand(max_len)
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error(&self, message: &str) -> Error {
        let message = match self.peek() {
            Some(c) => format!("{message} {c:?}"),
            None => format!("{message}: end of input"),
        };
        Error::Syntax { position: self.offset(), message }
    }

    fn word(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            let base = match c {
                'x' => {
                    self.pos += 1;
                    Expr::x()
                }
                'y' => {
                    self.pos += 1;
                    Expr::y()
                }
                '1' => {
                    self.pos += 1;
                    Expr::empty()
                }
                '(' => {
                    self.pos += 1;
                    let inner = self.word()?;
                    if self.peek() != Some(')') {
                        return Err(self.error("expected ')' but found"));
                    }
                    self.pos += 1;
                    inner
                }
                ')' => break,
                _ => return Err(self.error("unexpected character")),
            };
            if self.peek() == Some('^') {
                self.pos += 1;
                let n = self.uint()?;
                parts.push(Expr::Pow(Box::new(base), n));
            } else {
                parts.push(base);
            }
        }
        Ok(Expr::concat(parts))
    }

    fn uint(&mut self) -> Result<u64> {
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| Error::Syntax { position: self.offset(), message: "exponent overflows".into() })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected exponent but found"));
        }
        if braced {
            if self.peek() != Some('}') {
                return Err(self.error("expected '}' but found"));
            }
            self.pos += 1;
        }
        Ok(value)
    }
}
