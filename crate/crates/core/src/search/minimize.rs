//! Smallest parameters for the two-block and four-block `(xy)/(yx)`
//! identities of `S_k`.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{is_prime, lcm_upto, maximal_orders};
use crate::error::{Error, Result};
use crate::families::{check_ab_condition, theorem2_params_with_m, AbParams, AbcdParams, Theorem2Variant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbMinimum {
    pub params: AbParams,
    /// Every optimal pair found, oriented like `params`, ascending.
    pub ties: Vec<AbParams>,
    /// Whether the search finished within budget, proving optimality.
    pub exhaustive: bool,
    pub nodes: u64,
}

/// Orients an unordered pair: `b` is the side divisible by the largest
/// prime `p <= k`. When both or neither are, the smaller number is `b`.
fn orient(k: usize, x: u64, y: u64) -> AbParams {
    let p = (2..=k as u64).rev().find(|&n| is_prime(n)).unwrap_or(1);
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    let (a, b) = match (lo % p == 0, hi % p == 0) {
        (false, true) => (lo, hi),
        _ => (hi, lo),
    };
    AbParams { k, a, b }
}

struct AbSearch {
    orders: Vec<u64>,
    budget: u64,
    nodes: u64,
    best: u64,
    ties: BTreeSet<(u64, u64)>,
    seen: HashSet<(u64, u64)>,
    exhausted: bool,
}

impl AbSearch {
    fn visit(&mut self, a: u64, b: u64) {
        if self.exhausted {
            return;
        }
        let key = (a.min(b), a.max(b));
        if !self.seen.insert(key) {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let uncovered: Vec<u64> = self.orders.iter().copied().filter(|&q| a % q != 0 && b % q != 0).collect();
        let Some(&q) = uncovered.first() else {
            let s = a + b;
            if s < self.best {
                self.best = s;
                self.ties.clear();
            }
            if s == self.best {
                self.ties.insert(key);
            }
            return;
        };
        // Each uncovered order must join one side.
        let bound = uncovered.iter().map(|&r| (a.lcm(&r) + b).min(a + b.lcm(&r))).max().expect("non-empty");
        if bound > self.best {
            return;
        }
        let left = (a.lcm(&q), b);
        let right = (a, b.lcm(&q));
        let mut children = vec![left];
        if a != b {
            children.push(right);
        }
        children.sort_by_key(|&(x, y)| x + y);
        for (x, y) in children {
            self.visit(x, y);
        }
    }
}

/// Minimizes `a + b` subject to every element order of `S_k` dividing `a`
/// or `b`. An optimal pair can always be shrunk to `a = lcm(A)`,
/// `b = lcm(B)` for a split `A, B` of the divisibility-maximal orders, so
/// the branch and bound assigns each maximal order to a side. `budget`
/// caps the number of search nodes.
pub fn minimize_ab(k: usize, budget: u64) -> Result<AbMinimum> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("need k >= 2, got {k}")));
    }
    let orders = maximal_orders(k);
    let mut best = lcm_upto(k as u64)? + 1;
    let mut start = vec![(lcm_upto(k as u64)?, 1)];
    for m in 1..k {
        for v in [Theorem2Variant::Plain, Theorem2Variant::Footnote] {
            if let Ok(p) = theorem2_params_with_m(k, m, v) {
                if check_ab_condition(k, p.a, p.b) && p.a + p.b <= best {
                    best = p.a + p.b;
                    start.push((p.a, p.b));
                }
            }
        }
    }
    let mut s = AbSearch {
        orders,
        budget,
        nodes: 0,
        best,
        ties: BTreeSet::new(),
        seen: HashSet::new(),
        exhausted: false,
    };
    for &(a, b) in &start {
        if a + b == best {
            s.ties.insert((a.min(b), a.max(b)));
        }
    }
    s.visit(1, 1);
    let mut ties: Vec<AbParams> = s.ties.iter().map(|&(x, y)| orient(k, x, y)).collect();
    ties.sort_by_key(|p| (p.a, p.b));
    let params = ties[0];
    Ok(AbMinimum { params, ties, exhaustive: !s.exhausted, nodes: s.nodes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbcdMinimum {
    /// Canonical optimal quadruple (lexicographically smaller of a tuple
    /// and its mirror).
    pub params: AbcdParams,
    /// Every optimal quadruple, canonical, ascending.
    pub ties: Vec<AbcdParams>,
    /// Always true on success: every sum up to the optimum was covered.
    pub exhaustive: bool,
}

/// Residues allowed for `c` modulo `q` given `a`, `b`, `d`: `None` when every
/// residue works, otherwise a subset of `{0, a, -a}`.
fn allowed_c(q: u64, a: u64, b: u64, d: u64) -> Option<Vec<u64>> {
    let div = |n: u64| n % q == 0;
    if (div(a) && b % q == d % q) || (div(d) && div(b)) {
        return None;
    }
    let mut r = Vec::new();
    if div(a) || div(d + b) {
        r.push(0);
    }
    if div(b) {
        r.push((q - a % q) % q);
    }
    if div(d) {
        r.push(a % q);
    }
    r.sort_unstable();
    r.dedup();
    Some(r)
}

/// Smallest `c` in `1..=c_max` that every order accepts.
fn min_c(orders: &[u64], a: u64, b: u64, d: u64, c_max: u64) -> Option<u64> {
    let mut restricted: Vec<(u64, Vec<u64>)> = Vec::new();
    for &q in orders {
        if let Some(r) = allowed_c(q, a, b, d) {
            if r.is_empty() {
                return None;
            }
            restricted.push((q, r));
        }
    }
    if restricted.is_empty() {
        return (c_max >= 1).then_some(1);
    }
    // Step through the candidates of the most selective order.
    restricted.sort_by(|x, y| (y.0 / y.1.len() as u64).cmp(&(x.0 / x.1.len() as u64)));
    let (q0, r0) = &restricted[0];
    let mut base = 0u64;
    while base <= c_max {
        for &r in r0 {
            let c = base + r;
            if c == 0 || c > c_max {
                continue;
            }
            if restricted[1..].iter().all(|(q, rs)| rs.contains(&(c % q))) {
                return Some(c);
            }
        }
        base += q0;
    }
    None
}

/// Minimizes `a + b + c + d` over positive quadruples satisfying the
/// four-block condition, trying every sum up to `budget`.
pub fn minimize_abcd(k: usize, budget: u64) -> Result<AbcdMinimum> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("need k >= 2, got {k}")));
    }
    let orders = maximal_orders(k);
    // Best total so far (inclusive limit for ties).
    let mut limit = budget;
    let mut found: BTreeSet<(u64, u64, u64, u64)> = BTreeSet::new();
    let mut t = 3u64;
    // t = a + b + d; c >= 1 so t < limit.
    while t < limit {
        let c_cap = limit - t;
        let hits: Vec<(u64, u64, u64, u64)> = (1..t - 1)
            .into_par_iter()
            .flat_map_iter(|a| {
                let orders = &orders;
                (a..=t - 1 - a).filter_map(move |d| {
                    let b = t - a - d;
                    if b == 0 {
                        return None;
                    }
                    min_c(orders, a, b, d, c_cap).map(|c| (a, b, c, d))
                })
            })
            .collect();
        for (a, b, c, d) in hits {
            let s = a + b + c + d;
            if s < limit {
                found.clear();
                limit = s;
            }
            if s == limit {
                let p = AbcdParams { k, a, b, c, d }.canonical();
                found.insert((p.a, p.b, p.c, p.d));
            }
        }
        t += 1;
    }
    if found.is_empty() {
        return Err(Error::BudgetExhausted(format!("no quadruple with a + b + c + d <= {budget} for k = {k}")));
    }
    let ties: Vec<AbcdParams> = found.iter().map(|&(a, b, c, d)| AbcdParams { k, a, b, c, d }).collect();
    Ok(AbcdMinimum { params: ties[0], ties, exhaustive: true })
}
