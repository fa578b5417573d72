//! Deciding identities of `T_k` and `S_k`, separating witnesses, and the
//! separation functions `Sep(u, v)` / `Sepp(u, v)`.
//!
//! A pair `(u, v)` is an identity at level `k` when every assignment of maps
//! to the letters evaluates both words to the same map. When it is not, some
//! assignment and some start state tell the words apart, and those two maps
//! are the transition table of a `k`-state automaton separating `u` from `v`.

mod signature;
mod space;

pub use signature::{signature, Digest128, SampleSpec, Signature};
pub use space::{
    all_permutations, check_level, reduced_pairs, AssignmentSpace, MAX_GROUP_K, MAX_SEMIGROUP_K,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{compose, power, PackedMap, Transformation};
use crate::error::{Error, Result};
use crate::words::{Expr, Letter, Word, DEFAULT_MAX_LEN};

/// Which maps the letters range over.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// All selfmaps: identities of `T_k`, separation by arbitrary automata.
    Semigroup,
    /// Permutations only: positive identities of `S_k`, permutational automata.
    Group,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Semigroup => "semigroup",
            Mode::Group => "group",
        })
    }
}

/// Maps assigned to the letters `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    pub x_map: Transformation,
    pub y_map: Transformation,
}

impl Assignment {
    pub fn new(x_map: Transformation, y_map: Transformation) -> Result<Self> {
        if x_map.k() != y_map.k() {
            return Err(Error::DomainMismatch { left: x_map.k(), right: y_map.k() });
        }
        Ok(Self { x_map, y_map })
    }

    pub fn k(&self) -> usize {
        self.x_map.k()
    }

    pub fn is_permutational(&self) -> bool {
        self.x_map.is_permutation() && self.y_map.is_permutation()
    }

    pub fn map(&self, letter: Letter) -> &Transformation {
        match letter {
            Letter::X => &self.x_map,
            Letter::Y => &self.y_map,
        }
    }

    fn from_packed(x: PackedMap, y: PackedMap, k: usize) -> Self {
        Self { x_map: x.to_transformation(k), y_map: y.to_transformation(k) }
    }
}

/// A start state from which `u` and `v` end in different states under the
/// assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub assignment: Assignment,
    pub state: u32,
}

impl Witness {
    /// Replays both words letter by letter.
    pub fn separates(&self, u: &Expr, v: &Expr) -> bool {
        eval_expr(u, &self.assignment).apply(self.state) != eval_expr(v, &self.assignment).apply(self.state)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails { witness: Witness },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails { witness } => Some(witness),
        }
    }
}

/// Image of `w` under the assignment, letter by letter. The empty word maps
/// to the identity.
pub fn eval(w: &Word, a: &Assignment) -> Transformation {
    w.letters().fold(Transformation::identity(a.k()), |acc, l| {
        compose(&acc, a.map(l)).expect("assignment maps share a domain")
    })
}

/// Image of a symbolic word; exponent blocks are evaluated by repeated
/// squaring, so the cost is logarithmic in the exponents.
pub fn eval_expr(e: &Expr, a: &Assignment) -> Transformation {
    match e {
        Expr::Letter(l) => a.map(*l).clone(),
        Expr::Concat(parts) => parts.iter().fold(Transformation::identity(a.k()), |acc, p| {
            compose(&acc, &eval_expr(p, a)).expect("same domain")
        }),
        Expr::Pow(inner, n) => power(&eval_expr(inner, a), *n),
    }
}

/// Packed counterpart of [`eval_expr`] for `k <= 16`.
pub fn eval_packed(e: &Expr, x: PackedMap, y: PackedMap, k: usize) -> PackedMap {
    match e {
        Expr::Letter(Letter::X) => x,
        Expr::Letter(Letter::Y) => y,
        Expr::Concat(parts) => {
            parts.iter().fold(PackedMap::identity(k), |acc, p| acc.then(eval_packed(p, x, y, k), k))
        }
        Expr::Pow(inner, n) => eval_packed(inner, x, y, k).pow(*n, k),
    }
}

/// Letter-by-letter packed evaluation of a concrete word.
#[inline]
pub fn eval_word_packed(w: &Word, x: PackedMap, y: PackedMap, k: usize) -> PackedMap {
    w.letters().fold(PackedMap::identity(k), |acc, l| {
        acc.then(if l == Letter::X { x } else { y }, k)
    })
}

/// Decides whether `(u, v)` is an identity at level `k`, over all maps in
/// semigroup mode and over permutations in group mode. Enumeration is
/// exhaustive up to simultaneous conjugation; on failure the first
/// separating assignment in canonical order is returned.
pub fn is_identity(u: &Expr, v: &Expr, k: usize, mode: Mode) -> Result<Verdict> {
    let space = AssignmentSpace::get(mode, k)?;
    let hit = space.find_first(|x, y| {
        let eu = eval_packed(u, x, y, k);
        let ev = eval_packed(v, x, y, k);
        (eu != ev).then_some((x, y, eu, ev))
    });
    Ok(match hit {
        None => Verdict::Holds,
        Some((x, y, eu, ev)) => {
            let state = (0..k).find(|&q| eu.apply(q) != ev.apply(q)).expect("maps differ") as u32;
            Verdict::Fails { witness: Witness { assignment: Assignment::from_packed(x, y, k), state } }
        }
    })
}

/// `u ≡_k v`: identity of the full transformation semigroup.
pub fn is_identity_t(u: &Expr, v: &Expr, k: usize) -> Result<Verdict> {
    is_identity(u, v, k, Mode::Semigroup)
}

/// `u ≅_k v`: positive identity of the symmetric group.
pub fn is_identity_s(u: &Expr, v: &Expr, k: usize) -> Result<Verdict> {
    is_identity(u, v, k, Mode::Group)
}

/// Exhaustive check over every assignment, without conjugation reduction.
pub fn is_identity_naive(u: &Word, v: &Word, k: usize, mode: Mode) -> Result<Verdict> {
    check_level(mode, k)?;
    for (x, y) in AssignmentSpace::naive_pairs(mode, k) {
        let eu = eval_word_packed(u, x, y, k);
        let ev = eval_word_packed(v, x, y, k);
        if eu != ev {
            let state = (0..k).find(|&q| eu.apply(q) != ev.apply(q)).expect("maps differ") as u32;
            return Ok(Verdict::Fails {
                witness: Witness { assignment: Assignment::from_packed(x, y, k), state },
            });
        }
    }
    Ok(Verdict::Holds)
}

/// Result of a separation query.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k", rename_all = "snake_case")]
pub enum SepValue {
    /// The minimum number of states of a separating automaton.
    Exact(usize),
    /// No automaton with at most this many states separates the words.
    Exceeds(usize),
}

fn separation(u: &Expr, v: &Expr, k_max: usize, mode: Mode) -> Result<SepValue> {
    if u.same_word(v) {
        return Err(Error::Inseparable);
    }
    if k_max >= 2 {
        check_level(mode, k_max)?;
    }
    // Identities at level k persist at every smaller level, so the first
    // failing level is the answer. A one-state automaton never separates.
    for k in 2..=k_max {
        if !is_identity(u, v, k, mode)?.holds() {
            return Ok(SepValue::Exact(k));
        }
    }
    Ok(SepValue::Exceeds(k_max))
}

/// `Sep(u, v)`: fewest states of an automaton separating `u` and `v`.
pub fn sep(u: &Expr, v: &Expr, k_max: usize) -> Result<SepValue> {
    separation(u, v, k_max, Mode::Semigroup)
}

/// `Sepp(u, v)`: the same, restricted to permutational automata.
pub fn sepp(u: &Expr, v: &Expr, k_max: usize) -> Result<SepValue> {
    separation(u, v, k_max, Mode::Group)
}

/// Whether an identity cannot be obtained from a shorter identity by
/// adding a common first or last letter. Stripping one shared letter is
/// enough: if `(wu', wv')` reduces to `(u', v')`, then stripping only the
/// first letter of `w` also leaves an identity.
pub fn is_irreducible(u: &Expr, v: &Expr, k: usize, mode: Mode) -> Result<bool> {
    if !is_identity(u, v, k, mode)?.holds() {
        return Err(Error::NotAnIdentity { k });
    }
    let u = u.expand(DEFAULT_MAX_LEN)?;
    let v = v.expand(DEFAULT_MAX_LEN)?;
    if u.is_empty() || v.is_empty() {
        return Ok(true);
    }
    if u.first() == v.first() {
        let (su, sv) = (u.slice(1..u.len()), v.slice(1..v.len()));
        if is_identity(&Expr::from(&su), &Expr::from(&sv), k, mode)?.holds() {
            return Ok(false);
        }
    }
    if u.last() == v.last() {
        let (su, sv) = (u.slice(0..u.len() - 1), v.slice(0..v.len() - 1));
        if is_identity(&Expr::from(&su), &Expr::from(&sv), k, mode)?.holds() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_expr;

    fn e(s: &str) -> Expr {
        parse_expr(s).unwrap()
    }

    fn t(images: &[u32]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn eval_examples() {
        let a = Assignment::new(t(&[1, 2, 3, 3]), t(&[0, 0, 1, 2])).unwrap();
        assert!(eval(&Word::new(), &a).is_identity());
        assert_eq!(eval(&Word::from_plain("xy"), &a), compose(&a.x_map, &a.y_map).unwrap());
        assert_eq!(eval_expr(&e("x^15"), &a), Transformation::constant(4, 3).unwrap());
        assert_eq!(eval(&Word::from_plain("xxx"), &a), Transformation::constant(4, 3).unwrap());
    }

    #[test]
    fn packed_eval_matches_reference() {
        let a = Assignment::new(t(&[1, 2, 0, 0]), t(&[3, 3, 1, 2])).unwrap();
        let (x, y) = (PackedMap::from_transformation(&a.x_map), PackedMap::from_transformation(&a.y_map));
        for s in ["1", "x", "xy^3x", "(xy)^7(yx)^3", "((x^2y)^3y)^5"] {
            let ex = e(s);
            let w = ex.expand(1000).unwrap();
            assert_eq!(eval_packed(&ex, x, y, 4).to_transformation(4), eval(&w, &a), "{s}");
            assert_eq!(eval_expr(&ex, &a), eval(&w, &a), "{s}");
        }
    }

    #[test]
    fn identity_examples() {
        assert!(is_identity_t(&e("x^3"), &e("x^15"), 4).unwrap().holds());
        let v = is_identity_t(&e("xy"), &e("yx"), 2).unwrap();
        let w = v.witness().expect("xy and yx differ in T_2");
        assert!(w.separates(&e("xy"), &e("yx")));
        assert!(is_identity_s(&e("x^2y^2"), &e("y^2x^2"), 3).unwrap().holds());
        assert!(!is_identity_s(&e("x^2y^2"), &e("y^2x^2"), 4).unwrap().holds());
        assert!(is_identity_s(&e("x"), &e("y"), 1).unwrap().holds());
    }

    #[test]
    fn capability_errors() {
        assert!(matches!(is_identity_t(&e("x"), &e("y"), 8), Err(Error::Capability(_))));
        assert!(matches!(is_identity_s(&e("x"), &e("y"), 10), Err(Error::Capability(_))));
    }

    #[test]
    fn sep_examples() {
        assert_eq!(sep(&e("x"), &e("y"), 5).unwrap(), SepValue::Exact(2));
        assert_eq!(sep(&e("x^2"), &e("x^8"), 5).unwrap(), SepValue::Exact(4));
        assert_eq!(sep(&e("xy"), &e("yx"), 5).unwrap(), SepValue::Exact(2));
        assert_eq!(sepp(&e("x"), &e("y"), 5).unwrap(), SepValue::Exact(2));
        assert_eq!(sepp(&e("x^2y^2"), &e("y^2x^2"), 5).unwrap(), SepValue::Exact(4));
        assert_eq!(sep(&e("x"), &e("x"), 3), Err(Error::Inseparable));
        assert_eq!(sep(&e("(xy)^2"), &e("xyxy"), 3), Err(Error::Inseparable));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&e("x^2"), &e("x^8"), 3, Mode::Semigroup).unwrap());
        assert!(!is_irreducible(&e("x x^2"), &e("x x^8"), 3, Mode::Semigroup).unwrap());
        assert!(matches!(
            is_irreducible(&e("xy"), &e("yx"), 3, Mode::Semigroup),
            Err(Error::NotAnIdentity { k: 3 })
        ));
    }

    #[test]
    fn reduced_matches_naive_on_small_levels() {
        let pairs = [("xy", "yx"), ("x^2y^2", "y^2x^2"), ("x^3", "x^15"), ("xyx", "yxy"), ("x^2", "x^8")];
        for (mode, k) in [(Mode::Semigroup, 2), (Mode::Semigroup, 3), (Mode::Group, 3), (Mode::Group, 4)] {
            for (u, v) in pairs {
                let (eu, ev) = (e(u), e(v));
                let (wu, wv) = (eu.expand(100).unwrap(), ev.expand(100).unwrap());
                assert_eq!(
                    is_identity(&eu, &ev, k, mode).unwrap().holds(),
                    is_identity_naive(&wu, &wv, k, mode).unwrap().holds(),
                    "{u} = {v} in {mode} k={k}"
                );
            }
        }
    }
}
