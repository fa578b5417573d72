//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's evaluation or search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rayon::prelude::*;
use wordsep_core::words::{Letter, Word};

/// Letters of `w` as booleans, `true` for `y`.
pub fn bits(w: &Word) -> Vec<bool> {
    w.letters().map(|l| l == Letter::Y).collect()
}

pub fn word(b: &[bool]) -> Word {
    Word::from_letters(b.iter().map(|&y| if y { Letter::Y } else { Letter::X }))
}

pub fn all_words(max: usize) -> Vec<Vec<bool>> {
    let mut out = vec![vec![]];
    let mut level = vec![vec![]];
    for _ in 0..max {
        level = level
            .iter()
            .flat_map(|w: &Vec<bool>| {
                [false, true].map(|c| {
                    let mut n = w.clone();
                    n.push(c);
                    n
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Every selfmap of `{0..k}`, or only the permutations.
pub fn all_maps(k: usize, perms_only: bool) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let total = (k as u64).pow(k as u32);
    for mut n in 0..total {
        let mut m = Vec::with_capacity(k);
        for _ in 0..k {
            m.push((n % k as u64) as u8);
            n /= k as u64;
        }
        if !perms_only || m.iter().collect::<BTreeSet<_>>().len() == k {
            out.push(m);
        }
    }
    out
}

fn runs(w: &[bool]) -> Vec<(bool, usize)> {
    let mut r: Vec<(bool, usize)> = Vec::new();
    for &c in w {
        match r.last_mut() {
            Some((l, n)) if *l == c => *n += 1,
            _ => r.push((c, 1)),
        }
    }
    r
}

fn pow(m: &[u8], n: usize) -> Vec<u8> {
    let mut s: Vec<u8> = (0..m.len() as u8).collect();
    for _ in 0..n {
        s = s.iter().map(|&q| m[q as usize]).collect();
    }
    s
}

/// Brute force over all `k^k * k^k` (or `k! * k!`) assignments. States are
/// pushed through the word left to right.
pub struct Oracle {
    k: usize,
    maps: Vec<Vec<u8>>,
}

impl Oracle {
    pub fn new(k: usize, group: bool) -> Self {
        Self { k, maps: all_maps(k, group) }
    }

    fn powers(&self, lens: &[usize]) -> Vec<Vec<Vec<u8>>> {
        self.maps.iter().map(|m| lens.iter().map(|&n| pow(m, n)).collect()).collect()
    }

    fn image(&self, r: &[(bool, usize)], lens: &[usize], xp: &[Vec<u8>], yp: &[Vec<u8>]) -> Vec<u8> {
        let mut s: Vec<u8> = (0..self.k as u8).collect();
        for &(c, n) in r {
            let i = lens.iter().position(|&l| l == n).expect("run length");
            let p = if c { &yp[i] } else { &xp[i] };
            for q in s.iter_mut() {
                *q = p[*q as usize];
            }
        }
        s
    }

    /// First assignment `(x, y)` on which the words differ.
    pub fn counterexample(&self, u: &[bool], v: &[bool], parallel: bool) -> Option<(Vec<u8>, Vec<u8>)> {
        let (ru, rv) = (runs(u), runs(v));
        let mut lens: Vec<usize> = ru.iter().chain(&rv).map(|r| r.1).collect();
        lens.sort_unstable();
        lens.dedup();
        let pw = self.powers(&lens);
        let differs = |xi: usize, yi: usize| {
            self.image(&ru, &lens, &pw[xi], &pw[yi]) != self.image(&rv, &lens, &pw[xi], &pw[yi])
        };
        let n = self.maps.len();
        let hit = if parallel {
            (0..n).into_par_iter().find_map_first(|xi| (0..n).find(|&yi| differs(xi, yi)).map(|yi| (xi, yi)))
        } else {
            (0..n).find_map(|xi| (0..n).find(|&yi| differs(xi, yi)).map(|yi| (xi, yi)))
        };
        hit.map(|(xi, yi)| (self.maps[xi].clone(), self.maps[yi].clone()))
    }

    pub fn holds(&self, u: &[bool], v: &[bool]) -> bool {
        self.counterexample(u, v, false).is_none()
    }

    pub fn holds_par(&self, u: &[bool], v: &[bool]) -> bool {
        self.counterexample(u, v, true).is_none()
    }

    /// Irreducible: dropping a shared first or last letter gives no identity.
    pub fn irreducible(&self, u: &[bool], v: &[bool]) -> bool {
        let first = !u.is_empty() && !v.is_empty() && u[0] == v[0] && self.holds(&u[1..], &v[1..]);
        let last = !u.is_empty()
            && !v.is_empty()
            && u[u.len() - 1] == v[v.len() - 1]
            && self.holds(&u[..u.len() - 1], &v[..v.len() - 1]);
        !(first || last)
    }
}

pub fn swapped(w: &[bool]) -> Vec<bool> {
    w.iter().map(|&c| !c).collect()
}

pub fn reversed(w: &[bool]) -> Vec<bool> {
    w.iter().rev().copied().collect()
}

/// Shortlex key: length first, then `x < y`.
fn key(w: &[bool]) -> (usize, Vec<bool>) {
    (w.len(), w.to_vec())
}

/// Smallest image of an unordered pair under letter swap (and reversal when
/// `with_reversal`), sides ordered shortlex.
pub fn canonical(u: &[bool], v: &[bool], with_reversal: bool) -> (Vec<bool>, Vec<bool>) {
    let mut images = vec![(u.to_vec(), v.to_vec()), (swapped(u), swapped(v))];
    if with_reversal {
        let more: Vec<_> = images.iter().map(|(a, b)| (reversed(a), reversed(b))).collect();
        images.extend(more);
    }
    images
        .into_iter()
        .map(|(a, b)| if key(&a) <= key(&b) { (a, b) } else { (b, a) })
        .min_by_key(|(a, b)| (key(a), key(b)))
        .expect("non-empty")
}

/// `Sep(n)` straight from the definition: one more than the largest level
/// among `1..=k_max` with an identity of length at most `n`.
pub fn sep_brute(n: usize, k_max: usize, group: bool) -> usize {
    let words = all_words(n);
    let mut best = 1;
    for k in 1..=k_max {
        let o = Oracle::new(k, group);
        let found = words.iter().enumerate().any(|(i, u)| words[i + 1..].iter().any(|v| o.holds(u, v)));
        if found {
            best = k + 1;
        }
    }
    best
}

/// Element orders of `S_k`: lcms of the partitions of `k`.
pub fn group_orders(k: usize) -> BTreeSet<u64> {
    fn go(rest: usize, max: usize, acc: u64, out: &mut BTreeSet<u64>) {
        if rest == 0 {
            out.insert(acc);
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            go(rest - p, p, num_integer::lcm(acc, p as u64), out);
        }
    }
    let mut out = BTreeSet::new();
    go(k, k, 1, &mut out);
    out
}

/// Least `a + b` such that every element order of `S_k` divides `a` or `b`.
pub fn ab_brute(k: usize, max_sum: u64) -> Option<u64> {
    let orders = group_orders(k);
    (2..=max_sum).find(|&s| (1..s).any(|a| orders.iter().all(|&q| a % q == 0 || (s - a) % q == 0)))
}
