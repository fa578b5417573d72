use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `k` accepted by [`lcm_upto`].
pub const MAX_LCM_K: u64 = 40;

/// `lcm(1, .., k)`.
pub fn lcm_upto(k: u64) -> Result<u64> {
    if k > MAX_LCM_K {
        return Err(Error::LcmOverflow { k, max: MAX_LCM_K });
    }
    Ok((1..=k.max(1)).fold(1u64, |acc, i| acc.lcm(&i)))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `n = p^e` with `p` prime and `e >= 1`.
pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut m = n;
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            return (m == 1).then_some((d, e));
        }
        d += 1;
    }
    Some((n, 1))
}

/// Product of the primes and prime powers in `{m+1, .., k}`.
pub fn prime_power_product(m: u64, k: u64) -> Result<u64> {
    if m >= k {
        return Err(Error::InvalidArgument(format!("need m < k, got m = {m}, k = {k}")));
    }
    ((m + 1)..=k)
        .filter(|&n| is_prime_power(n).is_some())
        .try_fold(1u64, |acc, n| acc.checked_mul(n))
        .ok_or_else(|| Error::Overflow(format!("prime power product over ({m}, {k}]")))
}

/// All partitions of `n` as non-increasing part lists, in reverse
/// lexicographic order (`[n]` first).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The set of element orders of `S_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSet {
    pub k: usize,
    pub orders: BTreeSet<u64>,
}

impl OrderSet {
    pub fn contains(&self, q: u64) -> bool {
        self.orders.contains(&q)
    }

    pub fn max(&self) -> u64 {
        *self.orders.iter().next_back().expect("always contains 1")
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.orders.iter().copied()
    }

    /// Orders not dividing any other order, in decreasing order.
    pub fn maximal(&self) -> Vec<u64> {
        let all: Vec<u64> = self.orders.iter().copied().collect();
        let mut out: Vec<u64> = all
            .iter()
            .copied()
            .filter(|&q| !all.iter().any(|&r| r != q && r % q == 0))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Orders of the elements of `S_k`, as lcms over the partitions of `k`.
pub fn element_orders(k: usize) -> OrderSet {
    let orders = partitions(k.max(1))
        .iter()
        .map(|p| p.iter().fold(1u64, |acc, &part| acc.lcm(&(part as u64))))
        .collect();
    OrderSet { k, orders }
}

/// Divisibility-maximal element orders of `S_k`, largest first.
pub fn maximal_orders(k: usize) -> Vec<u64> {
    element_orders(k).maximal()
}
