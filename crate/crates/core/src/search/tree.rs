//! Complete binary tree of words in heap layout. Node `i` has children
//! `2i + 1` (append block 0) and `2i + 2` (append block 1), so index order is
//! shortlex order over blocks. Letters are held MSB-first in a `u64`.

use rayon::prelude::*;

use crate::algebra::PackedMap;
use crate::checker::Digest128;
use crate::words::{Letter, Word};

/// Longest word (in letters) a tree node can hold.
pub const MAX_TREE_LETTERS: usize = 62;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Blocks {
    /// Blocks `x` and `y`: every word.
    Letters,
    /// Blocks `xy` and `yx`: the `{xy, yx}`-words.
    XyYx,
}

impl Blocks {
    pub fn width(self) -> usize {
        match self {
            Blocks::Letters => 1,
            Blocks::XyYx => 2,
        }
    }

    fn maps(self, x: PackedMap, y: PackedMap, k: usize) -> [PackedMap; 2] {
        match self {
            Blocks::Letters => [x, y],
            Blocks::XyYx => [x.then(y, k), y.then(x, k)],
        }
    }
}

#[derive(Copy, Clone, Debug)]
pub struct WordTree {
    pub blocks: Blocks,
    /// Depth in blocks.
    pub depth: usize,
}

/// A word as `(letters, bits)` with the first letter in the highest of the
/// `len` low bits; `y` is 1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    pub len: u32,
    pub bits: u64,
}

impl Bits {
    pub fn to_word(self) -> Word {
        Word::from_bits_msb(self.bits, self.len as usize)
    }

    pub fn reversed(self) -> Bits {
        let n = self.len;
        let bits = if n == 0 { 0 } else { self.bits.reverse_bits() >> (64 - n) };
        Bits { len: n, bits }
    }

    pub fn count_y(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn count_x(self) -> u32 {
        self.len - self.bits.count_ones()
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len).rev().map(move |i| if (self.bits >> i) & 1 == 1 { Letter::Y } else { Letter::X })
    }

    fn low(self, n: u32) -> u64 {
        if n == 0 {
            0
        } else {
            self.bits & (u64::MAX >> (64 - n))
        }
    }

    /// First `n` letters (`n <= len`).
    pub fn prefix(self, n: u32) -> u64 {
        if n == 0 {
            0
        } else {
            self.bits >> (self.len - n)
        }
    }

    /// Last `n` letters (`n <= len`).
    pub fn suffix(self, n: u32) -> u64 {
        self.low(n)
    }

    /// Bitmask over the `2^n` possible factors of length `n` (`n <= 6`).
    pub fn factor_mask(self, n: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut mask = 0u64;
        let mut i = n;
        while i <= self.len {
            let f = (self.bits >> (self.len - i)) & (u64::MAX >> (64 - n));
            mask |= 1 << f;
            i += 1;
        }
        mask
    }
}

impl WordTree {
    pub fn new(blocks: Blocks, depth: usize) -> Self {
        assert!(depth * blocks.width() <= MAX_TREE_LETTERS, "tree too deep");
        Self { blocks, depth }
    }

    pub fn node_count(&self) -> usize {
        (1usize << (self.depth + 1)) - 1
    }

    pub fn level_range(level: usize) -> std::ops::Range<usize> {
        ((1usize << level) - 1)..((1usize << (level + 1)) - 1)
    }

    /// The word at node `i`.
    pub fn word(&self, i: usize) -> Bits {
        let m = (i + 1) as u64;
        let level = 63 - m.leading_zeros();
        let block_bits = m - (1u64 << level);
        match self.blocks {
            Blocks::Letters => Bits { len: level, bits: block_bits },
            Blocks::XyYx => {
                let mut bits = 0u64;
                for j in (0..level).rev() {
                    bits = (bits << 2) | if (block_bits >> j) & 1 == 1 { 0b10 } else { 0b01 };
                }
                Bits { len: 2 * level, bits }
            }
        }
    }

    /// Node holding `w`, if `w` is a word of this tree.
    pub fn node_of(&self, w: Bits) -> Option<usize> {
        let level = match self.blocks {
            Blocks::Letters => w.len as usize,
            Blocks::XyYx => {
                if w.len % 2 == 1 {
                    return None;
                }
                w.len as usize / 2
            }
        };
        if level > self.depth {
            return None;
        }
        let block_bits = match self.blocks {
            Blocks::Letters => w.bits,
            Blocks::XyYx => {
                let mut b = 0u64;
                for j in (0..level).rev() {
                    match (w.bits >> (2 * j)) & 0b11 {
                        0b01 => b = b << 1,
                        0b10 => b = (b << 1) | 1,
                        _ => return None,
                    }
                }
                b
            }
        };
        Some(((1u64 << level) - 1 + block_bits) as usize)
    }

    /// Per-node digests of the images under `assignments`, computed level by
    /// level: each node's map is its parent's map followed by a block map.
    pub fn digests(&self, assignments: &[(PackedMap, PackedMap)], k: usize) -> Vec<Digest128> {
        let n = self.node_count();
        let mut maps = vec![PackedMap::default(); n];
        let mut digests = vec![Digest128::default(); n];
        for (j, &(x, y)) in assignments.iter().enumerate() {
            let [b0, b1] = self.blocks.maps(x, y, k);
            maps[0] = PackedMap::identity(k);
            for level in 1..=self.depth {
                let range = Self::level_range(level);
                let start = range.start;
                let (prev, cur) = maps.split_at_mut(start);
                cur[..range.len()].par_iter_mut().enumerate().with_min_len(4096).for_each(|(o, m)| {
                    let i = start + o;
                    let parent = prev[(i - 1) / 2];
                    *m = parent.then(if i % 2 == 1 { b0 } else { b1 }, k);
                });
            }
            digests.par_iter_mut().zip(maps.par_iter()).with_min_len(4096).for_each(|(d, m)| d.add(j as u64, m.0));
        }
        digests
    }
}

/// Digest of one word under `assignments`, matching [`WordTree::digests`].
pub fn word_digest(w: Bits, assignments: &[(PackedMap, PackedMap)], k: usize) -> u128 {
    let mut d = Digest128::new();
    for (j, &(x, y)) in assignments.iter().enumerate() {
        let m = w.letters().fold(PackedMap::identity(k), |acc, l| acc.then(if l == Letter::X { x } else { y }, k));
        d.add(j as u64, m.0);
    }
    d.finish()
}
