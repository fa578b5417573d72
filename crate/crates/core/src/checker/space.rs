//! Enumeration of letter assignments up to simultaneous conjugation.
//!
//! Relabeling the states by a permutation `g` maps an assignment `(x, y)` to
//! `(g⁻¹xg, g⁻¹yg)` and conjugates the image of every word the same way, so
//! whether two words evaluate equally is constant on each orbit. The space
//! fixes `x` to one representative per conjugacy class and keeps only those
//! `y` that are minimal (as packed values) under the centralizer of `x`:
//! exactly one pair per orbit.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::Mode;
use crate::algebra::{partitions, Permutation, PackedMap};
use crate::error::{Error, Result};

/// Largest level for which `T_k` assignments can be enumerated.
pub const MAX_SEMIGROUP_K: usize = 7;
/// Largest level for which `S_k` assignments can be enumerated.
pub const MAX_GROUP_K: usize = 9;

const CHUNK: usize = 4096;

#[derive(Debug)]
struct XClass {
    x: PackedMap,
    /// Non-trivial elements `(g, g⁻¹)` of the centralizer of `x`.
    centralizer: Vec<(PackedMap, PackedMap)>,
}

/// Conjugation-reduced assignments `(x, y)` at one level.
#[derive(Debug)]
pub struct AssignmentSpace {
    mode: Mode,
    k: usize,
    classes: Vec<XClass>,
    /// All candidates for `y`: every map in semigroup mode, every
    /// permutation in group mode.
    ys: Arc<Vec<PackedMap>>,
}

pub fn check_level(mode: Mode, k: usize) -> Result<()> {
    let max = match mode {
        Mode::Semigroup => MAX_SEMIGROUP_K,
        Mode::Group => MAX_GROUP_K,
    };
    if k == 0 || k > max {
        return Err(Error::Capability(format!(
            "{mode} level k = {k} is outside the supported range 1..={max}"
        )));
    }
    Ok(())
}

/// All permutations of `{0..k-1}` in lexicographic order of image lists.
pub fn all_permutations(k: usize) -> Arc<Vec<PackedMap>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<PackedMap>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("poisoned").get(&k) {
        return p.clone();
    }
    let mut out = Vec::new();
    let mut perm: Vec<u32> = (0..k as u32).collect();
    loop {
        out.push(PackedMap::from_images(&perm));
        // next permutation in lexicographic order
        let Some(i) = (1..k).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..k).rev().find(|&j| perm[j] > perm[i - 1]).expect("exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    let out = Arc::new(out);
    cache.lock().expect("poisoned").insert(k, out.clone());
    out
}

fn all_maps(k: usize) -> Arc<Vec<PackedMap>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<PackedMap>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("poisoned").get(&k) {
        return p.clone();
    }
    let n = k.pow(k as u32);
    let out = Arc::new((0..n).map(|i| PackedMap::from_index(i, k)).collect::<Vec<_>>());
    cache.lock().expect("poisoned").insert(k, out.clone());
    out
}

impl AssignmentSpace {
    /// The reduced space at level `k`, built once per `(mode, k)` and cached.
    pub fn get(mode: Mode, k: usize) -> Result<Arc<AssignmentSpace>> {
        static CACHE: OnceLock<Mutex<HashMap<(Mode, usize), Arc<AssignmentSpace>>>> = OnceLock::new();
        check_level(mode, k)?;
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.lock().expect("poisoned").get(&(mode, k)) {
            return Ok(s.clone());
        }
        let space = Arc::new(Self::build(mode, k));
        cache.lock().expect("poisoned").insert((mode, k), space.clone());
        Ok(space)
    }

    fn build(mode: Mode, k: usize) -> Self {
        let perms = all_permutations(k);
        let inverses: Vec<(PackedMap, PackedMap)> =
            perms.iter().map(|&g| (g, g.inverse(k))).collect();
        let reps: Vec<PackedMap> = match mode {
            Mode::Group => partitions(k)
                .iter()
                .map(|p| {
                    let perm = Permutation::with_cycle_type(k, p).expect("fits");
                    PackedMap::from_transformation(perm.as_transformation())
                })
                .collect(),
            Mode::Semigroup => {
                let n = k.pow(k as u32);
                let mut seen = vec![false; n];
                let mut reps = Vec::new();
                for i in 0..n {
                    if seen[i] {
                        continue;
                    }
                    let x = PackedMap::from_index(i, k);
                    reps.push(x);
                    for &(g, gi) in &inverses {
                        seen[x.conjugate(g, gi, k).index(k)] = true;
                    }
                }
                reps
            }
        };
        let identity = PackedMap::identity(k);
        let classes = reps
            .into_par_iter()
            .map(|x| XClass {
                x,
                centralizer: inverses
                    .iter()
                    .copied()
                    .filter(|&(g, gi)| g != identity && x.conjugate(g, gi, k) == x)
                    .collect(),
            })
            .collect();
        let ys = match mode {
            Mode::Group => perms,
            Mode::Semigroup => all_maps(k),
        };
        Self { mode, k, classes, ys }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of conjugacy classes of `x`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    fn is_canonical(&self, class: &XClass, y: PackedMap) -> bool {
        class.centralizer.iter().all(|&(g, gi)| y.conjugate(g, gi, self.k) >= y)
    }

    fn jobs(&self) -> Vec<(usize, usize)> {
        let mut jobs = Vec::new();
        for c in 0..self.classes.len() {
            for start in (0..self.ys.len()).step_by(CHUNK) {
                jobs.push((c, start));
            }
        }
        jobs
    }

    /// First hit of `f` in canonical order (classes in order, then `y`
    /// ascending through the candidate list). Deterministic regardless of
    /// how the work is scheduled.
    pub fn find_first<R, F>(&self, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(PackedMap, PackedMap) -> Option<R> + Sync,
    {
        self.jobs().into_par_iter().find_map_first(|(c, start)| {
            let class = &self.classes[c];
            let end = (start + CHUNK).min(self.ys.len());
            self.ys[start..end]
                .iter()
                .filter(|&&y| self.is_canonical(class, y))
                .find_map(|&y| f(class.x, y))
        })
    }

    /// All reduced pairs, in canonical order.
    pub fn pairs(&self) -> Vec<(PackedMap, PackedMap)> {
        let chunks: Vec<Vec<(PackedMap, PackedMap)>> = self
            .jobs()
            .into_par_iter()
            .map(|(c, start)| {
                let class = &self.classes[c];
                let end = (start + CHUNK).min(self.ys.len());
                self.ys[start..end]
                    .iter()
                    .filter(|&&y| self.is_canonical(class, y))
                    .map(|&y| (class.x, y))
                    .collect()
            })
            .collect();
        chunks.concat()
    }

    /// Every assignment without any reduction; for cross-checking.
    pub fn naive_pairs(mode: Mode, k: usize) -> Vec<(PackedMap, PackedMap)> {
        let all = match mode {
            Mode::Group => all_permutations(k),
            Mode::Semigroup => all_maps(k),
        };
        all.iter().flat_map(|&x| all.iter().map(move |&y| (x, y))).collect()
    }
}

/// Materialized reduced pairs, cached per level. Only for levels where the
/// list is small enough to hold in memory (`T_k` up to 6, `S_k` up to 9).
pub fn reduced_pairs(mode: Mode, k: usize) -> Result<Arc<Vec<(PackedMap, PackedMap)>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Mode, usize), Arc<Vec<(PackedMap, PackedMap)>>>>> =
        OnceLock::new();
    let limit = match mode {
        Mode::Semigroup => 6,
        Mode::Group => MAX_GROUP_K,
    };
    check_level(mode, k)?;
    if k > limit {
        return Err(Error::Capability(format!(
            "materializing {mode} assignments at k = {k} needs too much memory (limit {limit})"
        )));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("poisoned").get(&(mode, k)) {
        return Ok(p.clone());
    }
    let pairs = Arc::new(AssignmentSpace::get(mode, k)?.pairs());
    cache.lock().expect("poisoned").insert((mode, k), pairs.clone());
    Ok(pairs)
}
