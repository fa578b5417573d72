use super::Transformation;

/// Largest domain size representable by [`PackedMap`].
pub const MAX_PACKED_K: usize = 16;

/// A selfmap of `{0, .., k-1}` with `k <= 16`, packed four bits per image.
///
/// Nibble `q` holds the image of `q`; nibbles at positions `>= k` are zero.
/// The domain size is not stored, callers pass it where it matters. The
/// numeric order of the packed value is the order used for canonical forms.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PackedMap(pub u64);

impl PackedMap {
    #[inline]
    pub fn identity(k: usize) -> Self {
        debug_assert!(k <= MAX_PACKED_K);
        let mut bits = 0u64;
        for q in 0..k {
            bits |= (q as u64) << (4 * q);
        }
        Self(bits)
    }

    pub fn from_images(images: &[u32]) -> Self {
        assert!(images.len() <= MAX_PACKED_K, "packed maps hold at most 16 states");
        let mut bits = 0u64;
        for (q, &i) in images.iter().enumerate() {
            debug_assert!((i as usize) < images.len());
            bits |= (i as u64) << (4 * q);
        }
        Self(bits)
    }

    pub fn from_transformation(t: &Transformation) -> Self {
        Self::from_images(t.images())
    }

    pub fn to_transformation(self, k: usize) -> Transformation {
        Transformation::new(self.images(k)).expect("packed map is well formed")
    }

    pub fn images(self, k: usize) -> Vec<u32> {
        (0..k).map(|q| self.apply(q)).collect()
    }

    #[inline(always)]
    pub fn apply(self, q: usize) -> u32 {
        ((self.0 >> (4 * q)) & 0xF) as u32
    }

    /// `self` first, then `other`.
    #[inline(always)]
    pub fn then(self, other: Self, k: usize) -> Self {
        let mut bits = 0u64;
        let mut s = self.0;
        for q in 0..k {
            let img = (other.0 >> (4 * (s & 0xF))) & 0xF;
            bits |= img << (4 * q);
            s >>= 4;
        }
        Self(bits)
    }

    pub fn pow(self, mut e: u64, k: usize) -> Self {
        let mut result = Self::identity(k);
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(base, k);
            }
            e >>= 1;
            if e > 0 {
                base = base.then(base, k);
            }
        }
        result
    }

    /// Inverse of a permutation. Meaningless for non-bijective maps.
    pub fn inverse(self, k: usize) -> Self {
        let mut bits = 0u64;
        for q in 0..k {
            bits |= (q as u64) << (4 * self.apply(q));
        }
        Self(bits)
    }

    /// Relabels states by the permutation `g`: the result maps `g(q)` to
    /// `g(self(q))`. `g_inv` must be the inverse of `g`.
    #[inline]
    pub fn conjugate(self, g: Self, g_inv: Self, k: usize) -> Self {
        g_inv.then(self, k).then(g, k)
    }

    pub fn is_permutation(self, k: usize) -> bool {
        let mut seen = 0u32;
        for q in 0..k {
            seen |= 1 << self.apply(q);
        }
        seen.count_ones() as usize == k
    }

    /// Base-`k` index of the map, image of state 0 least significant.
    pub fn index(self, k: usize) -> usize {
        (0..k).rev().fold(0usize, |acc, q| acc * k + self.apply(q) as usize)
    }

    pub fn from_index(mut index: usize, k: usize) -> Self {
        let mut bits = 0u64;
        for q in 0..k {
            bits |= ((index % k) as u64) << (4 * q);
            index /= k;
        }
        Self(bits)
    }
}
