//! `Sep(n)` / `Sepp(n)` tables and the multi-level screen of group
//! identities.

use serde::{Deserialize, Serialize};

use super::{shortest_identities, SearchConfig};
use crate::checker::{is_identity_s, Mode, Verdict};
use crate::error::{Error, Result};
use crate::families::IdentityPair;

/// Shortest identity at one level, or `None` when there is none up to the
/// length cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelResult {
    pub k: usize,
    pub shortest_length: Option<usize>,
    /// One identity of that length, the first in canonical order.
    pub witness: Option<IdentityPair>,
    pub identities_found: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SepTableRow {
    pub n: usize,
    pub value: usize,
    /// False when the value is only a lower bound (the level cap was hit).
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SepTable {
    pub mode: Mode,
    pub n_max: usize,
    pub levels: Vec<LevelResult>,
    pub rows: Vec<SepTableRow>,
}

/// Identities at level `k` persist at all lower levels, so the shortest
/// identity length grows with `k` and the separation value of `n` is one
/// more than the largest level whose shortest identity fits in `n` letters.
fn table(mode: Mode, n_max: usize, k_max: usize, base: &SearchConfig) -> Result<SepTable> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let mut levels = Vec::new();
    let mut closed = false;
    for k in 1..=k_max {
        let cfg = SearchConfig { mode, k, max_length: n_max, ..base.clone() };
        let report = shortest_identities(&cfg)?;
        let level = LevelResult {
            k,
            shortest_length: report.minimal_length,
            witness: report.identities.first().cloned(),
            identities_found: report.identities.len(),
        };
        let none = level.shortest_length.is_none();
        levels.push(level);
        if none {
            closed = true;
            break;
        }
    }
    let rows = (1..=n_max)
        .map(|n| {
            let top = levels.iter().filter(|l| l.shortest_length.is_some_and(|s| s <= n)).map(|l| l.k).max().unwrap_or(0);
            // Exact once some searched level has no identity within n letters.
            let exact = closed || levels.iter().any(|l| l.shortest_length.map_or(true, |s| s > n));
            SepTableRow { n, value: top + 1, exact }
        })
        .collect();
    Ok(SepTable { mode, n_max, levels, rows })
}

/// `Sep(1..=n_max)` from exhaustive searches in `T_1, .., T_{k_max}`.
pub fn sep_table(n_max: usize, k_max: usize, base: &SearchConfig) -> Result<SepTable> {
    table(Mode::Semigroup, n_max, k_max, base)
}

/// `Sepp(1..=n_max)` from exhaustive searches in `S_1, .., S_{k_max}`.
pub fn sepp_table(n_max: usize, k_max: usize, base: &SearchConfig) -> Result<SepTable> {
    table(Mode::Group, n_max, k_max, base)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenRow {
    pub pair: IdentityPair,
    /// `(k, verdict)` for `k = 5, 6, 7`.
    pub levels: Vec<(usize, Verdict)>,
}

impl ScreenRow {
    pub fn holds(&self, k: usize) -> Option<bool> {
        self.levels.iter().find(|(l, _)| *l == k).map(|(_, v)| v.holds())
    }
}

/// Checks each pair in `S_5`, `S_6` and `S_7`.
pub fn s6_s7_screen(pairs: &[IdentityPair]) -> Result<Vec<ScreenRow>> {
    pairs
        .iter()
        .map(|p| {
            let levels = (5..=7).map(|k| Ok((k, is_identity_s(&p.u, &p.v, k)?))).collect::<Result<Vec<_>>>()?;
            Ok(ScreenRow { pair: p.clone(), levels })
        })
        .collect()
}
