//! Finite selfmaps of `{0, .., k-1}` and the number theory around their orders.
//!
//! Composition is left-to-right throughout the crate: `compose(s, t)` applies
//! `s` first and then `t`, so `compose(s, t)(q) = t(s(q))`. This matches the
//! right action `q.w` of a word read from left to right by an automaton.

mod numtheory;
mod packed;

pub use numtheory::{
    element_orders, is_prime, is_prime_power, lcm_upto, maximal_orders, partitions,
    prime_power_product, OrderSet, MAX_LCM_K,
};
pub use packed::{PackedMap, MAX_PACKED_K};

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the full transformation semigroup `T_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Transformation {
    images: Vec<u32>,
}

impl Transformation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let k = images.len();
        if k == 0 {
            return Err(Error::InvalidTransformation("domain must be non-empty".into()));
        }
        if let Some(bad) = images.iter().find(|&&i| i as usize >= k) {
            return Err(Error::InvalidTransformation(format!(
                "image {bad} out of range for k = {k}"
            )));
        }
        Ok(Self { images })
    }

    pub fn identity(k: usize) -> Self {
        assert!(k > 0, "domain must be non-empty");
        Self { images: (0..k as u32).collect() }
    }

    pub fn constant(k: usize, value: u32) -> Result<Self> {
        Self::new(vec![value; k])
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, state: u32) -> u32 {
        self.images[state as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(q, &i)| q as u32 == i)
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.k()];
        self.images.iter().all(|&i| !std::mem::replace(&mut seen[i as usize], true))
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        compose(self, other)
    }

    pub fn pow(&self, e: u64) -> Self {
        power(self, e)
    }

    /// Size of the image set.
    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.k()];
        for &i in &self.images {
            seen[i as usize] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        cycle_structure(self)
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl TryFrom<Vec<u32>> for Transformation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Transformation> for Vec<u32> {
    fn from(t: Transformation) -> Self {
        t.images
    }
}

/// An element of the symmetric group `S_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Transformation);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        Self::try_from(Transformation::new(images)?)
    }

    pub fn identity(k: usize) -> Self {
        Self(Transformation::identity(k))
    }

    /// The cycle `(c0 c1 .. cn)` on `k` points, fixing everything else.
    pub fn cycle(k: usize, cycle: &[u32]) -> Result<Self> {
        let mut images: Vec<u32> = (0..k as u32).collect();
        for (i, &c) in cycle.iter().enumerate() {
            let next = cycle[(i + 1) % cycle.len()];
            if c as usize >= k || next as usize >= k {
                return Err(Error::InvalidTransformation(format!("cycle point out of range for k = {k}")));
            }
            images[c as usize] = next;
        }
        Self::new(images)
    }

    /// Disjoint cycles of the given lengths laid out on consecutive points.
    pub fn with_cycle_type(k: usize, lengths: &[usize]) -> Result<Self> {
        let total: usize = lengths.iter().sum();
        if total > k || lengths.contains(&0) {
            return Err(Error::InvalidArgument(format!("cycle type {lengths:?} does not fit k = {k}")));
        }
        let mut images: Vec<u32> = (0..k as u32).collect();
        let mut start = 0;
        for &len in lengths {
            for i in 0..len {
                images[start + i] = (start + (i + 1) % len) as u32;
            }
            start += len;
        }
        Self::new(images)
    }

    pub fn k(&self) -> usize {
        self.0.k()
    }

    pub fn as_transformation(&self) -> &Transformation {
        &self.0
    }

    pub fn into_transformation(self) -> Transformation {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.k()];
        for (q, &i) in self.0.images.iter().enumerate() {
            inv[i as usize] = q as u32;
        }
        Self(Transformation { images: inv })
    }

    pub fn order(&self) -> u64 {
        order(self)
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths = self.0.cycle_structure().cycles;
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl TryFrom<Transformation> for Permutation {
    type Error = Error;

    fn try_from(t: Transformation) -> Result<Self> {
        if t.is_permutation() {
            Ok(Self(t))
        } else {
            Err(Error::NotBijective(t.images))
        }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0.images
    }
}

/// Cycles of the functional graph of a transformation together with the
/// distance of every state to the cycle it eventually enters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleStructure {
    /// Cycle lengths, listed in order of the smallest state on each cycle.
    pub cycles: Vec<usize>,
    pub tail_depths: Vec<usize>,
}

impl CycleStructure {
    pub fn cycle_states(&self) -> usize {
        self.cycles.iter().sum()
    }

    pub fn max_depth(&self) -> usize {
        self.tail_depths.iter().copied().max().unwrap_or(0)
    }
}

/// Applies `s` first, then `t`.
pub fn compose(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    if s.k() != t.k() {
        return Err(Error::DomainMismatch { left: s.k(), right: t.k() });
    }
    Ok(Transformation { images: s.images.iter().map(|&q| t.images[q as usize]).collect() })
}

/// `t` composed with itself `e` times, by repeated squaring.
pub fn power(t: &Transformation, mut e: u64) -> Transformation {
    let mut result = Transformation::identity(t.k());
    let mut base = t.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = compose(&result, &base).expect("same domain");
        }
        e >>= 1;
        if e > 0 {
            base = compose(&base, &base).expect("same domain");
        }
    }
    result
}

/// Order of a permutation: the lcm of its cycle lengths.
pub fn order(p: &Permutation) -> u64 {
    p.0.cycle_structure().cycles.iter().fold(1u64, |acc, &c| acc.lcm(&(c as u64)))
}

pub fn cycle_structure(t: &Transformation) -> CycleStructure {
    let k = t.k();
    // 0 = unvisited, 1 = on the current walk, 2 = finished
    let mut mark = vec![0u8; k];
    let mut on_cycle = vec![false; k];
    let mut cycle_min: Vec<(u32, usize)> = Vec::new();
    for start in 0..k {
        if mark[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut q = start;
        while mark[q] == 0 {
            mark[q] = 1;
            walk.push(q);
            q = t.images[q] as usize;
        }
        if mark[q] == 1 {
            let pos = walk.iter().position(|&s| s == q).expect("on walk");
            let cycle = &walk[pos..];
            for &s in cycle {
                on_cycle[s] = true;
            }
            let min = *cycle.iter().min().expect("non-empty");
            cycle_min.push((min as u32, cycle.len()));
        }
        for s in walk {
            mark[s] = 2;
        }
    }
    cycle_min.sort_unstable();
    let mut depth = vec![usize::MAX; k];
    for q in 0..k {
        if on_cycle[q] {
            depth[q] = 0;
        }
    }
    for q in 0..k {
        let mut path = Vec::new();
        let mut s = q;
        while depth[s] == usize::MAX {
            path.push(s);
            s = t.images[s] as usize;
        }
        let mut d = depth[s];
        for &p in path.iter().rev() {
            d += 1;
            depth[p] = d;
        }
    }
    CycleStructure { cycles: cycle_min.into_iter().map(|(_, l)| l).collect(), tail_depths: depth }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[u32]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        assert_eq!(compose(&t(&[1, 2, 2]), &t(&[0, 0, 1])).unwrap(), t(&[0, 1, 1]));
        let id = Transformation::identity(3);
        assert_eq!(compose(&id, &t(&[2, 0, 0])).unwrap(), t(&[2, 0, 0]));
        let swap = t(&[1, 0]);
        assert!(compose(&swap, &swap).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_mismatched_domains() {
        assert_eq!(
            compose(&t(&[0]), &t(&[0, 1])),
            Err(Error::DomainMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn power_examples() {
        assert!(power(&t(&[1, 2, 2]), 0).is_identity());
        assert_eq!(power(&t(&[1, 2, 2]), 3), t(&[2, 2, 2]));
        let five = Permutation::cycle(5, &[0, 1, 2, 3, 4]).unwrap();
        assert!(power(five.as_transformation(), 5).is_identity());
    }

    #[test]
    fn order_examples() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(Permutation::with_cycle_type(5, &[3, 2]).unwrap().order(), 6);
        assert_eq!(Permutation::with_cycle_type(7, &[7]).unwrap().order(), 7);
        assert!(matches!(Permutation::new(vec![0, 0]), Err(Error::NotBijective(_))));
    }

    #[test]
    fn cycle_structure_examples() {
        let id = Transformation::identity(4).cycle_structure();
        assert_eq!(id.cycles, vec![1, 1, 1, 1]);
        assert_eq!(id.tail_depths, vec![0; 4]);

        let c = Transformation::constant(3, 0).unwrap().cycle_structure();
        assert_eq!(c.cycles, vec![1]);
        assert_eq!(c.tail_depths, vec![0, 1, 1]);

        let s = t(&[1, 2, 0, 0]).cycle_structure();
        assert_eq!(s.cycles, vec![3]);
        assert_eq!(s.tail_depths, vec![0, 0, 0, 1]);
    }

    #[test]
    fn rejects_out_of_range_images() {
        assert!(Transformation::new(vec![0, 2]).is_err());
        assert!(Transformation::new(vec![]).is_err());
    }
}
