//! Fingerprints of words: the images of a word under a fixed, ordered list
//! of assignments, folded into 128 bits. Two words with different
//! fingerprints under the full reduced list are not an identity; equal
//! fingerprints are confirmed by direct comparison before being trusted.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::space::{all_permutations, check_level, reduced_pairs};
use super::{eval_packed, Mode};
use crate::algebra::PackedMap;
use crate::error::{Error, Result};
use crate::words::Expr;

/// 128-bit digest of a sequence of values, formed as a wrapping sum of
/// position-keyed hashes. The sum does not depend on the order in which
/// terms are added, so partial digests computed in parallel combine exactly.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Digest128 {
    lo: u64,
    hi: u64,
}

#[inline(always)]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Digest128 {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the term for `value` at position `index`.
    #[inline(always)]
    pub fn add(&mut self, index: u64, value: u64) {
        let key = mix(index.wrapping_add(0x9e37_79b9_7f4a_7c15));
        self.lo = self.lo.wrapping_add(mix(value ^ key));
        self.hi = self.hi.wrapping_add(mix(value.rotate_left(29).wrapping_add(key.wrapping_mul(0xd6e8_feb8_6659_fd93))));
    }

    pub fn merge(&mut self, other: &Digest128) {
        self.lo = self.lo.wrapping_add(other.lo);
        self.hi = self.hi.wrapping_add(other.hi);
    }

    pub fn finish(&self) -> u128 {
        ((self.hi as u128) << 64) | self.lo as u128
    }
}

/// Which assignments a signature is taken over.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SampleSpec {
    /// Every conjugation-reduced assignment.
    Full,
    /// `size` uniformly random assignments drawn from a ChaCha stream.
    Seeded { seed: u64, size: usize },
}

impl SampleSpec {
    pub fn id(&self, mode: Mode, k: usize) -> String {
        match self {
            SampleSpec::Full => format!("{mode}-k{k}-full"),
            SampleSpec::Seeded { seed, size } => format!("{mode}-k{k}-seed{seed}-n{size}"),
        }
    }

    /// The assignments in signature order.
    pub fn assignments(&self, mode: Mode, k: usize) -> Result<Arc<Vec<(PackedMap, PackedMap)>>> {
        match *self {
            SampleSpec::Full => reduced_pairs(mode, k),
            SampleSpec::Seeded { seed, size } => {
                check_level(mode, k)?;
                if size == 0 {
                    return Err(Error::InvalidArgument("sample size must be positive".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let perms = all_permutations(k);
                let mut draw = || match mode {
                    Mode::Group => perms[rng.random_range(0..perms.len())],
                    Mode::Semigroup => PackedMap::from_index(rng.random_range(0..k.pow(k as u32)), k),
                };
                Ok(Arc::new((0..size).map(|_| (draw(), draw())).collect()))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub digest: u128,
    pub sample_id: String,
}

/// Digest of the images of `w` under the sampled assignments, in order.
pub fn signature(w: &Expr, k: usize, mode: Mode, sample: &SampleSpec) -> Result<Signature> {
    let pairs = sample.assignments(mode, k)?;
    let mut d = Digest128::new();
    for (i, &(x, y)) in pairs.iter().enumerate() {
        d.add(i as u64, eval_packed(w, x, y, k).0);
    }
    Ok(Signature { digest: d.finish(), sample_id: sample.id(mode, k) })
}
