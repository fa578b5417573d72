//! Shared fixtures for the benchmarks.

use wordsep_core::families::{known_s5_identities, IdentityPair};

/// The length 32 block identity of `S_5`.
pub fn s5_blocks() -> IdentityPair {
    known_s5_identities()
        .into_iter()
        .find(|c| c.name == "len32-blocks")
        .expect("catalog entry")
        .pair
}

/// A short identity per level for the checker benches, `(k, pair)`.
pub fn level_identities() -> Vec<(usize, IdentityPair)> {
    use wordsep_core::families::{balanced_identity, unary_identity};
    vec![
        (4, unary_identity(4).unwrap()),
        (3, balanced_identity(3).unwrap()),
        (4, balanced_identity(4).unwrap()),
    ]
}
