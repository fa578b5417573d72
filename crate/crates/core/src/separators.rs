//! Small explicit automata that separate words: the prefix, suffix and
//! factor gadgets behind the necessary conditions on identities, the cycle
//! counters used for exponent arguments, and automata read off a witness.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::Transformation;
use crate::checker::Witness;
use crate::error::{Error, Result};
use crate::words::{Letter, Violation, Word};

/// A complete deterministic automaton over `{x, y}` with states `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfa {
    pub k: usize,
    pub delta_x: Transformation,
    pub delta_y: Transformation,
    pub initial: u32,
    /// Designated final states; empty when the automaton only separates by
    /// end state.
    pub accepting: Vec<u32>,
}

impl Dfa {
    pub fn new(delta_x: Transformation, delta_y: Transformation, initial: u32, accepting: Vec<u32>) -> Result<Self> {
        let k = delta_x.k();
        if delta_y.k() != k {
            return Err(Error::DomainMismatch { left: k, right: delta_y.k() });
        }
        if initial as usize >= k || accepting.iter().any(|&q| q as usize >= k) {
            return Err(Error::InvalidArgument(format!("state out of range for a {k}-state automaton")));
        }
        Ok(Self { k, delta_x, delta_y, initial, accepting })
    }

    fn from_tables(x: Vec<u32>, y: Vec<u32>, initial: u32, accepting: Vec<u32>) -> Self {
        Self::new(
            Transformation::new(x).expect("valid table"),
            Transformation::new(y).expect("valid table"),
            initial,
            accepting,
        )
        .expect("valid automaton")
    }

    pub fn is_permutational(&self) -> bool {
        self.delta_x.is_permutation() && self.delta_y.is_permutation()
    }

    pub fn step(&self, q: u32, letter: Letter) -> u32 {
        match letter {
            Letter::X => self.delta_x.apply(q),
            Letter::Y => self.delta_y.apply(q),
        }
    }

    /// End state after reading `w` from the initial state.
    pub fn run(&self, w: &Word) -> u32 {
        w.letters().fold(self.initial, |q, l| self.step(q, l))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.accepting.contains(&self.run(w))
    }

    pub fn separates(&self, u: &Word, v: &Word) -> bool {
        self.run(u) != self.run(v)
    }

    /// Graphviz text. Nodes are listed in ascending id order, then edges
    /// grouped by source state with the `x` edge before the `y` edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dfa {\n");
        for q in 0..self.k as u32 {
            let shape = if self.accepting.contains(&q) { "doublecircle" } else { "circle" };
            if q == self.initial {
                let _ = writeln!(out, "  {q} [shape={shape}, style=bold];");
            } else {
                let _ = writeln!(out, "  {q} [shape={shape}];");
            }
        }
        for q in 0..self.k as u32 {
            let _ = writeln!(out, "  {q} -> {} [label=\"x\"];", self.delta_x.apply(q));
            let _ = writeln!(out, "  {q} -> {} [label=\"y\"];", self.delta_y.apply(q));
        }
        out.push_str("}\n");
        out
    }
}

/// Separator for two words whose longest common prefix has length `l`:
/// a path of `l + 1` states reading the prefix, then two absorbing states
/// entered on the first differing letter. Always `l + 3` states.
///
/// When one word is a prefix of the other, the shorter word halts at the
/// end of the path while the longer one moves to an absorbing state.
pub fn prefix_separator(u: &Word, v: &Word) -> Result<Dfa> {
    if u == v {
        return Err(Error::Inseparable);
    }
    let l = u.common_prefix_len(v);
    let (on_x, on_y) = ((l + 1) as u32, (l + 2) as u32);
    let mut x = Vec::with_capacity(l + 3);
    let mut y = Vec::with_capacity(l + 3);
    for i in 0..l {
        let next = (i + 1) as u32;
        // Off-path letters cannot occur on either word; park them anywhere.
        match u.letter(i) {
            Letter::X => {
                x.push(next);
                y.push(on_y);
            }
            Letter::Y => {
                x.push(on_x);
                y.push(next);
            }
        }
    }
    x.push(on_x);
    y.push(on_y);
    for s in [on_x, on_y] {
        x.push(s);
        y.push(s);
    }
    Ok(Dfa::from_tables(x, y, 0, vec![on_x, on_y]))
}

fn kmp_table(s: &Word) -> Vec<[u32; 2]> {
    let n = s.len();
    let mut fail = vec![0usize; n + 1];
    let mut delta = vec![[0u32; 2]; n + 1];
    for j in 0..=n {
        for (c, letter) in [Letter::X, Letter::Y].into_iter().enumerate() {
            delta[j][c] = if j < n && s.letter(j) == letter {
                (j + 1) as u32
            } else if j == 0 {
                0
            } else {
                delta[fail[j]][c]
            };
        }
        if j + 1 <= n && j > 0 {
            let c = (s.letter(j) == Letter::Y) as usize;
            fail[j + 1] = delta[fail[j]][c] as usize;
        }
    }
    delta
}

/// `|s| + 1` states; the run ends in state `|s|` exactly when the input has
/// suffix `s`. State `j` records the longest prefix of `s` that is a suffix
/// of the input so far.
pub fn suffix_separator(s: &Word) -> Result<Dfa> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("pattern must be non-empty".into()));
    }
    let delta = kmp_table(s);
    let x = delta.iter().map(|d| d[0]).collect();
    let y = delta.iter().map(|d| d[1]).collect();
    Ok(Dfa::from_tables(x, y, 0, vec![s.len() as u32]))
}

/// Like [`suffix_separator`], but the final state is absorbing: the run ends
/// there exactly when the input contains `f` as a factor.
pub fn factor_separator(f: &Word) -> Result<Dfa> {
    if f.is_empty() {
        return Err(Error::InvalidArgument("pattern must be non-empty".into()));
    }
    let n = f.len();
    let mut delta = kmp_table(f);
    delta[n] = [n as u32, n as u32];
    let x = delta.iter().map(|d| d[0]).collect();
    let y = delta.iter().map(|d| d[1]).collect();
    Ok(Dfa::from_tables(x, y, 0, vec![n as u32]))
}

/// How `y` acts in a [`cycle_counter`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CounterY {
    Identity,
    /// `y` sends `from` to `to` and fixes every other state, so the y-edges
    /// out of `from` and `to` meet in `to`.
    Merge { from: u32, to: u32 },
}

/// `i` states on which `x` is the cycle `q -> q + 1 mod i`, started in 0.
/// With `y` the identity it counts occurrences of `x` modulo `i`.
pub fn cycle_counter(i: usize, with_y: CounterY) -> Result<Dfa> {
    if i == 0 {
        return Err(Error::InvalidArgument("a cycle counter needs at least one state".into()));
    }
    let x: Vec<u32> = (0..i as u32).map(|q| (q + 1) % i as u32).collect();
    let mut y: Vec<u32> = (0..i as u32).collect();
    if let CounterY::Merge { from, to } = with_y {
        if from as usize >= i || to as usize >= i || from == to {
            return Err(Error::InvalidArgument(format!(
                "merge positions {from} -> {to} must be distinct states below {i}"
            )));
        }
        y[from as usize] = to;
    }
    Ok(Dfa::from_tables(x, y, 0, Vec::new()))
}

/// The automaton whose transitions are the witness maps, started at the
/// witness state.
pub fn from_witness(w: &Witness) -> Dfa {
    let a = &w.assignment;
    Dfa::new(a.x_map.clone(), a.y_map.clone(), w.state, Vec::new()).expect("witness is well formed")
}

/// Separator matching a failed necessary condition. The number of states is
/// at most the level the condition was checked at.
pub fn separator_for_violation(u: &Word, v: &Word, violation: &Violation) -> Result<Dfa> {
    match violation {
        Violation::Prefix { .. } => prefix_separator(u, v),
        Violation::Suffix { common } => {
            let l = *common as usize;
            let (long, short) = if u.len() >= v.len() { (u, v) } else { (v, u) };
            if short.len() <= l || short.common_suffix_len(long) != l {
                return Err(Error::InvalidArgument("words do not violate the suffix condition".into()));
            }
            suffix_separator(&long.suffix(l + 1))
        }
        Violation::Factor { factor, .. } => factor_separator(factor),
    }
}
