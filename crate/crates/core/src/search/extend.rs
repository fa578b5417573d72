//! Lifting group identities to semigroup identities by adding a common
//! prefix `z` and suffix `w`.
//!
//! If `z u w ≡_k z v w` with `z`, `w` the longest common prefix and suffix,
//! then `u ≅_k v`. So identities of `T_k` can be hunted by taking identities
//! of `S_k` and trying every short `z` and `w`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canonical_pair;
use crate::algebra::PackedMap;
use crate::checker::{eval_packed, eval_word_packed, is_identity, is_identity_s, Mode, SampleSpec};
use crate::error::{Error, Result};
use crate::families::{Family, IdentityPair};
use crate::words::{necessary_conditions, Expr, Word, DEFAULT_MAX_LEN};

/// Size of the seeded `T_k` sample used to discard affixes cheaply.
const FILTER_SAMPLE: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendReport {
    /// Identities `(z u w, z v w)` of `T_k`, one per symmetry class, ascending.
    pub identities: Vec<IdentityPair>,
    /// Affix pairs considered.
    pub candidates: u64,
    /// Affix pairs that survived the sample filter and went to the exact check.
    pub exact_checks: u64,
}

fn all_words(len: usize) -> impl Iterator<Item = Word> {
    (0..1u64 << len).map(move |b| Word::from_bits_msb(b, len))
}

/// All `(z u w, z v w)` with `|z| + |w| <= max_extra` that are identities of
/// `T_k`. Affixes too short to meet the prefix and suffix conditions are
/// skipped, survivors of a seeded sample filter are checked exactly.
pub fn extend_group_identity(u: &Expr, v: &Expr, k: usize, max_extra: usize, seed: u64) -> Result<ExtendReport> {
    if !is_identity_s(u, v, k)?.holds() {
        return Err(Error::NotAnIdentity { k });
    }
    if max_extra > 40 {
        return Err(Error::Capability("affixes are limited to 40 letters in total".into()));
    }
    let wu = u.expand(DEFAULT_MAX_LEN)?;
    let wv = v.expand(DEFAULT_MAX_LEN)?;
    let sample = SampleSpec::Seeded { seed, size: FILTER_SAMPLE }.assignments(Mode::Semigroup, k)?;
    let bases: Vec<(PackedMap, PackedMap)> =
        sample.iter().map(|&(x, y)| (eval_packed(u, x, y, k), eval_packed(v, x, y, k))).collect();

    // Prefix and suffix conditions on z u w and z v w, when u and v have
    // the same length (otherwise the common affixes can reach into u, v).
    let (min_z, min_w) = if wu.len() == wv.len() && wu != wv {
        (
            (k.saturating_sub(2)).saturating_sub(wu.common_prefix_len(&wv)),
            (k.saturating_sub(1)).saturating_sub(wu.common_suffix_len(&wv)),
        )
    } else {
        (0, 0)
    };

    let zs: Vec<Word> = (min_z..=max_extra).flat_map(all_words).collect();
    let results: Vec<(u64, u64, Vec<(Word, Word)>)> = zs
        .par_iter()
        .map(|z| -> Result<(u64, u64, Vec<(Word, Word)>)> {
            let mut candidates = 0u64;
            let mut checks = 0u64;
            let mut found = Vec::new();
            let zu: Vec<(PackedMap, PackedMap)> = sample
                .iter()
                .zip(&bases)
                .map(|(&(x, y), &(bu, bv))| {
                    let zm = eval_word_packed(z, x, y, k);
                    (zm.then(bu, k), zm.then(bv, k))
                })
                .collect();
            let rest = max_extra - z.len();
            for w in (min_w..=rest).flat_map(all_words) {
                candidates += 1;
                let pass = sample.iter().zip(&zu).all(|(&(x, y), &(a, b))| {
                    let wm = eval_word_packed(&w, x, y, k);
                    a.then(wm, k) == b.then(wm, k)
                });
                if !pass {
                    continue;
                }
                let lu = z.concat(&wu).concat(&w);
                let lv = z.concat(&wv).concat(&w);
                if !necessary_conditions(&lu, &lv, k).all_ok() {
                    continue;
                }
                checks += 1;
                if is_identity(&Expr::from(&lu), &Expr::from(&lv), k, Mode::Semigroup)?.holds() {
                    found.push(canonical_pair(&lu, &lv, Mode::Semigroup));
                }
            }
            Ok((candidates, checks, found))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut unique = BTreeSet::new();
    let (mut candidates, mut exact_checks) = (0, 0);
    for (c, e, f) in results {
        candidates += c;
        exact_checks += e;
        unique.extend(f);
    }
    let identities = unique
        .into_iter()
        .map(|(a, b)| {
            let len = a.len().max(b.len()) as u128;
            IdentityPair { u: Expr::compress(&a), v: Expr::compress(&b), k, family: Family::Found, claimed_length: len }
        })
        .collect();
    Ok(ExtendReport { identities, candidates, exact_checks })
}
