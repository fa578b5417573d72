mod common;

use std::collections::BTreeSet;

use common::{all_words, bits, canonical, Oracle};
use wordsep_core::checker::Mode;
use wordsep_core::search::{shortest_identities, ClassFilter, SearchConfig, SearchReport};
use wordsep_core::words::necessary_conditions;

type Pairs = BTreeSet<(Vec<bool>, Vec<bool>)>;

fn admits(class: ClassFilter, u: &[bool], v: &[bool]) -> bool {
    let ys = |w: &[bool]| w.iter().filter(|&&c| c).count();
    match class {
        ClassFilter::All => true,
        ClassFilter::Balanced => u.len() == v.len() && ys(u) == ys(v),
        ClassFilter::PalindromePairs => v.iter().rev().eq(u.iter()),
        _ => unreachable!(),
    }
}

/// Plain double loop over all pairs, shortest first.
fn naive(mode: Mode, k: usize, max: usize, class: ClassFilter, irreducible: bool) -> (Option<usize>, Pairs) {
    let group = mode == Mode::Group;
    let o = Oracle::new(k, group);
    let words = all_words(max);
    for len in 0..=max {
        let mut found = BTreeSet::new();
        for u in words.iter().filter(|w| w.len() == len) {
            for v in words.iter().filter(|w| w.len() <= len && *w != u) {
                if admits(class, u, v) && o.holds(u, v) && (!irreducible || o.irreducible(u, v)) {
                    found.insert(canonical(u, v, group));
                }
            }
        }
        if !found.is_empty() {
            return (Some(len), found);
        }
    }
    (None, BTreeSet::new())
}

fn reported(r: &SearchReport, group: bool) -> Pairs {
    r.identities
        .iter()
        .map(|p| {
            let (u, v) = (p.u.expand(1000).unwrap(), p.v.expand(1000).unwrap());
            canonical(&bits(&u), &bits(&v), group)
        })
        .collect()
}

#[test]
fn search_matches_double_loop() {
    for mode in [Mode::Semigroup, Mode::Group] {
        for k in 1..=3 {
            for class in [ClassFilter::All, ClassFilter::Balanced, ClassFilter::PalindromePairs] {
                for irreducible in [true, false] {
                    let mut cfg = SearchConfig::new(mode, k, 8).class(class);
                    cfg.require_irreducible = irreducible;
                    let r = shortest_identities(&cfg).unwrap();
                    let (len, set) = naive(mode, k, 8, class, irreducible);
                    let ctx = format!("{mode} k={k} {class:?} irreducible={irreducible}");
                    assert_eq!(r.minimal_length, len, "{ctx}");
                    assert_eq!(reported(&r, mode == Mode::Group), set, "{ctx}");
                    for p in &r.identities {
                        assert_eq!(p.length(), len.unwrap() as u128);
                        if mode == Mode::Semigroup {
                            let (u, v) = (p.u.expand(1000).unwrap(), p.v.expand(1000).unwrap());
                            assert!(necessary_conditions(&u, &v, k).all_ok(), "{ctx}: {u} = {v}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let configs = [
        SearchConfig::new(Mode::Semigroup, 3, 10),
        SearchConfig::new(Mode::Semigroup, 2, 6).class(ClassFilter::Balanced),
        SearchConfig::new(Mode::Group, 4, 11),
        SearchConfig::new(Mode::Group, 5, 20).class(ClassFilter::PalindromePairs),
    ];
    for cfg in configs {
        let base = serde_json::to_string(&shortest_identities(&cfg.clone().jobs(1)).unwrap()).unwrap();
        for jobs in [2, 3, 4] {
            let other = serde_json::to_string(&shortest_identities(&cfg.clone().jobs(jobs)).unwrap()).unwrap();
            assert_eq!(base, other, "{:?} k={} jobs={jobs}", cfg.mode, cfg.k);
        }
    }
}

#[test]
fn seed_changes_work_not_results() {
    let mut cfg = SearchConfig::new(Mode::Group, 4, 11);
    let a = shortest_identities(&cfg).unwrap();
    cfg.seed = 12345;
    let b = shortest_identities(&cfg).unwrap();
    assert_eq!(a.minimal_length, b.minimal_length);
    assert_eq!(a.identities, b.identities);
}
