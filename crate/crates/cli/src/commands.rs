use std::collections::BTreeSet;

use serde_json::{json, Value};
use wordsep_core::algebra::lcm_upto;
use wordsep_core::checker::{eval_expr, is_identity, sep, sepp, Mode, SepValue, Verdict};
use wordsep_core::families::{
    ab_identity, abcd_identity, balanced_identity, check_ab_condition, check_abcd_condition, known_s5_identities,
    nonuniform_identity, theorem1_identity, theorem2_params, theorem2_params_with_m, unary_identity,
    unbalanced_identity, AbParams, AbcdParams, IdentityPair, Theorem2Variant,
};
use wordsep_core::search::{
    canonical_pair, extend_group_identity, minimize_ab, minimize_abcd, s6_s7_screen, sep_table, sepp_table,
    shortest_identities, SearchConfig, DEFAULT_BUDGET,
};
use wordsep_core::separators::{
    cycle_counter, factor_separator, from_witness, prefix_separator, suffix_separator, CounterY, Dfa,
};
use wordsep_core::words::DEFAULT_MAX_LEN;
use wordsep_core::{parse_expr, Expr};

use crate::args::{
    BlockKind, Cli, Command, FamilyArgs, FamilyName, ModeArg, SearchArgs, SeparatorKind, TableArgs, TableKind, TypeArg,
    Variant,
};
use crate::render;

/// Default node budget for the two-block minimizer.
const AB_BUDGET: u64 = 10_000_000;
/// Default cap on `a + b + c + d` for the four-block minimizer.
const ABCD_BUDGET: u64 = 2_000;

pub struct Output {
    pub result: Value,
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(result: Value, text: String) -> Self {
        Self { result, text, status: 0 }
    }
}

type Res<T> = Result<T, String>;

fn core<T>(r: wordsep_core::Result<T>) -> Res<T> {
    r.map_err(|e| e.to_string())
}

fn to_json<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("results serialize")
}

fn parse(text: &str) -> Res<Expr> {
    core(parse_expr(text))
}

fn mode_of(group: bool) -> Mode {
    if group {
        Mode::Group
    } else {
        Mode::Semigroup
    }
}

pub fn run(cli: &Cli) -> Res<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Check { u, v, k, group } => check(u, v, *k, *group),
        Command::Sep { u, v, kmax, perm } => separation(u, v, *kmax, *perm),
        Command::Family(a) => family(a),
        Command::Search(a) => search(a, g.jobs, g.seed, g.yes_long_run),
        Command::Minimize { kind, k, budget } => minimize(*kind, *k, *budget),
        Command::Table(a) => table(a, g.jobs, g.seed, g.yes_long_run),
        Command::Separator { kind, dot } => separator(kind, dot.as_deref()),
        Command::Screen { u, v } => screen(u.as_deref(), v.as_deref()),
        Command::Extend { u, v, k, max_extra, catalog, max_total } => {
            extend(u.as_deref(), v.as_deref(), *k, *max_extra, *catalog, *max_total, g.seed)
        }
    }
}

fn check(u: &str, v: &str, k: usize, group: bool) -> Res<Output> {
    let (eu, ev) = (parse(u)?, parse(v)?);
    let mode = mode_of(group);
    let verdict = core(is_identity(&eu, &ev, k, mode))?;
    let level = if group { format!("S_{k}") } else { format!("T_{k}") };
    let (text, status) = match &verdict {
        Verdict::Holds => (format!("{eu} = {ev} holds in {level}\n"), 0),
        Verdict::Fails { witness } => {
            let a = &witness.assignment;
            let q = witness.state;
            let (eu_q, ev_q) = (eval_expr(&eu, a).apply(q), eval_expr(&ev, a).apply(q));
            (
                format!(
                    "{eu} = {ev} fails in {level}\n  x -> {:?}\n  y -> {:?}\n  from state {q}: u ends in {eu_q}, v ends in {ev_q}\n",
                    a.x_map.images(),
                    a.y_map.images()
                ),
                1,
            )
        }
    };
    let mut result = to_json(&verdict);
    result["u"] = to_json(&eu);
    result["v"] = to_json(&ev);
    result["k"] = json!(k);
    result["mode"] = to_json(&mode);
    Ok(Output { result, text, status })
}

fn separation(u: &str, v: &str, kmax: usize, perm: bool) -> Res<Output> {
    let (eu, ev) = (parse(u)?, parse(v)?);
    let value = core(if perm { sepp(&eu, &ev, kmax) } else { sep(&eu, &ev, kmax) })?;
    let name = if perm { "Sepp" } else { "Sep" };
    let text = match value {
        SepValue::Exact(n) => format!("{name}({eu}, {ev}) = {n}\n"),
        SepValue::Exceeds(n) => format!("{name}({eu}, {ev}) > {n}\n"),
    };
    Ok(Output::ok(json!({ "u": eu, "v": ev, "permutational": perm, "value": value }), text))
}

fn need(x: Option<u64>, name: &str) -> Res<u64> {
    x.ok_or_else(|| format!("--{name} is required for this family"))
}

fn family(a: &FamilyArgs) -> Res<Output> {
    let k = a.k;
    let verify_mode = match a.name {
        FamilyName::Ab | FamilyName::Abcd | FamilyName::Theorem2 | FamilyName::Catalog => Mode::Group,
        _ => Mode::Semigroup,
    };
    let mut extra = serde_json::Map::new();
    let pair: IdentityPair = match a.name {
        FamilyName::Unary => core(unary_identity(k))?,
        FamilyName::Nonuniform => core(nonuniform_identity(k))?,
        FamilyName::Unbalanced => core(unbalanced_identity(k))?,
        FamilyName::Balanced => core(balanced_identity(k))?,
        FamilyName::ShortSemigroup => core(theorem1_identity(k))?,
        FamilyName::Ab => {
            let p = AbParams { k, a: need(a.a, "a")?, b: need(a.b, "b")? };
            extra.insert("params".into(), to_json(&p));
            extra.insert("condition_holds".into(), json!(check_ab_condition(k, p.a, p.b)));
            core(ab_identity(p))?
        }
        FamilyName::Abcd => {
            let p = AbcdParams { k, a: need(a.a, "a")?, b: need(a.b, "b")?, c: need(a.c, "c")?, d: need(a.d, "d")? };
            extra.insert("params".into(), to_json(&p));
            extra.insert("condition_holds".into(), json!(check_abcd_condition(k, p.a, p.b, p.c, p.d)));
            core(abcd_identity(p))?
        }
        FamilyName::Theorem2 => {
            let variant = match a.variant {
                Variant::Plain => Theorem2Variant::Plain,
                Variant::Footnote => Theorem2Variant::Footnote,
            };
            let p = match a.m {
                Some(m) => core(theorem2_params_with_m(k, m, variant))?,
                None => core(theorem2_params(k, variant, a.alpha.num, a.alpha.den))?,
            };
            extra.insert("params".into(), to_json(&p));
            extra.insert("condition_holds".into(), json!(check_ab_condition(k, p.a, p.b)));
            core(ab_identity(p))?
        }
        FamilyName::Catalog => {
            let all = known_s5_identities();
            let text = render::catalog(&all);
            return Ok(Output::ok(json!({ "identities": all }), text));
        }
    };
    let mut text = format!("{} = {}\nlength {}\n", pair.u, pair.v, pair.length());
    if let Some(p) = extra.get("params") {
        text.push_str(&format!("params {p}\n"));
    }
    if a.verify {
        let verdict = core(is_identity(&pair.u, &pair.v, k, verify_mode))?;
        text.push_str(&format!("holds at level {k}: {}\n", verdict.holds()));
        extra.insert("verified".into(), to_json(&verdict));
    }
    let mut result = serde_json::Map::new();
    result.insert("identity".into(), to_json(&pair));
    result.insert("length".into(), json!(pair.length()));
    result.extend(extra);
    Ok(Output::ok(Value::Object(result), text))
}

fn search(a: &SearchArgs, jobs: usize, seed: u64, long: bool) -> Res<Output> {
    let mode = match a.mode {
        ModeArg::Semigroup => Mode::Semigroup,
        ModeArg::Group => Mode::Group,
    };
    let mut cfg = SearchConfig::new(mode, a.k, a.max_length).class(a.class.into()).jobs(jobs);
    cfg.require_irreducible = !a.allow_reducible;
    cfg.seed = seed;
    cfg.budget = a.budget;
    cfg.allow_long_run = long;
    let report = core(shortest_identities(&cfg))?;
    let text = render::search(&report);
    Ok(Output::ok(to_json(&report), text))
}

fn minimize(kind: BlockKind, k: usize, budget: Option<u64>) -> Res<Output> {
    match kind {
        BlockKind::Ab => {
            let m = core(minimize_ab(k, budget.unwrap_or(AB_BUDGET)))?;
            let text = format!(
                "k = {k}: a = {}, b = {}, length {}{}\n",
                m.params.a,
                m.params.b,
                m.params.length(),
                if m.exhaustive { "" } else { " (best found, budget exhausted)" }
            );
            Ok(Output::ok(to_json(&m), text))
        }
        BlockKind::Abcd => {
            let m = core(minimize_abcd(k, budget.unwrap_or(ABCD_BUDGET)))?;
            let p = m.params;
            let text = format!("k = {k}: a = {}, b = {}, c = {}, d = {}, length {}\n", p.a, p.b, p.c, p.d, p.length());
            Ok(Output::ok(to_json(&m), text))
        }
    }
}

fn table(a: &TableArgs, jobs: usize, seed: u64, long: bool) -> Res<Output> {
    match a.kind {
        TableKind::Sep | TableKind::Sepp => {
            let mode = if a.kind == TableKind::Sep { Mode::Semigroup } else { Mode::Group };
            let mut base = SearchConfig::new(mode, 1, 1).jobs(jobs);
            base.seed = seed;
            base.budget = DEFAULT_BUDGET;
            base.allow_long_run = long;
            let t = core(if mode == Mode::Semigroup {
                sep_table(a.n_max, a.k_max, &base)
            } else {
                sepp_table(a.n_max, a.k_max, &base)
            })?;
            let text = render::sep_table(&t);
            Ok(Output::ok(to_json(&t), text))
        }
        TableKind::Table2 => {
            let mut rows = Vec::new();
            for k in a.k.lo..=a.k.hi {
                let lcm = core(lcm_upto(k as u64))?;
                let ab = match a.kind2 {
                    TypeArg::Ab | TypeArg::Both => Some(core(minimize_ab(k, AB_BUDGET))?),
                    TypeArg::Abcd => None,
                };
                // The four-block optimum is only tractable for small k.
                let abcd = match a.kind2 {
                    TypeArg::Abcd | TypeArg::Both if k <= 12 => Some(core(minimize_abcd(k, ABCD_BUDGET))?),
                    _ => None,
                };
                rows.push(render::Table2Row { k, abcd, ab, lcm });
            }
            let text = render::table2(&rows);
            Ok(Output::ok(json!({ "rows": rows }), text))
        }
    }
}

fn words(u: &str, v: &str) -> Res<(wordsep_core::Word, wordsep_core::Word)> {
    Ok((core(parse(u)?.expand(DEFAULT_MAX_LEN))?, core(parse(v)?.expand(DEFAULT_MAX_LEN))?))
}

fn separator(kind: &SeparatorKind, dot: Option<&str>) -> Res<Output> {
    let dfa: Dfa = match kind {
        SeparatorKind::Prefix { u, v } => {
            let (wu, wv) = words(u, v)?;
            core(prefix_separator(&wu, &wv))?
        }
        SeparatorKind::Suffix { pattern } => core(suffix_separator(&core(parse(pattern)?.expand(DEFAULT_MAX_LEN))?))?,
        SeparatorKind::Factor { pattern } => core(factor_separator(&core(parse(pattern)?.expand(DEFAULT_MAX_LEN))?))?,
        SeparatorKind::Counter { cycle, merge } => {
            let y = match merge {
                None => CounterY::Identity,
                Some(m) => {
                    let (f, t) = m.split_once(':').ok_or_else(|| format!("expected FROM:TO, got {m:?}"))?;
                    let from = f.trim().parse().map_err(|e| format!("bad state {f:?}: {e}"))?;
                    let to = t.trim().parse().map_err(|e| format!("bad state {t:?}: {e}"))?;
                    CounterY::Merge { from, to }
                }
            };
            core(cycle_counter(*cycle, y))?
        }
        SeparatorKind::Witness { u, v, k, group } => {
            let (eu, ev) = (parse(u)?, parse(v)?);
            match core(is_identity(&eu, &ev, *k, mode_of(*group)))? {
                Verdict::Holds => return Err(format!("{eu} = {ev} holds at level {k}; nothing separates them")),
                Verdict::Fails { witness } => from_witness(&witness),
            }
        }
    };
    let text = dfa.to_dot();
    match dot {
        Some("-") | None => {}
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {path}: {e}"))?,
    }
    let result = json!({ "states": dfa.k, "automaton": dfa, "dot_file": dot });
    Ok(Output::ok(result, text))
}

fn screen(u: Option<&str>, v: Option<&str>) -> Res<Output> {
    let pairs: Vec<(String, IdentityPair)> = match (u, v) {
        (Some(u), Some(v)) => {
            let pair = IdentityPair {
                u: parse(u)?,
                v: parse(v)?,
                k: 5,
                family: wordsep_core::families::Family::Catalog,
                claimed_length: 0,
            };
            let len = pair.length();
            vec![("input".into(), IdentityPair { claimed_length: len, ..pair })]
        }
        (None, None) => known_s5_identities().into_iter().map(|c| (c.name.to_string(), c.pair)).collect(),
        _ => return Err("give both sides of the identity, or neither to screen the catalog".into()),
    };
    let rows = core(s6_s7_screen(&pairs.iter().map(|p| p.1.clone()).collect::<Vec<_>>()))?;
    let names: Vec<&str> = pairs.iter().map(|p| p.0.as_str()).collect();
    let text = render::screen(&names, &rows);
    let result: Vec<Value> = names
        .iter()
        .zip(&rows)
        .map(|(n, r)| {
            let mut v = to_json(r);
            v["name"] = json!(n);
            v
        })
        .collect();
    Ok(Output::ok(json!({ "rows": result }), text))
}

fn extend(
    u: Option<&str>,
    v: Option<&str>,
    k: usize,
    max_extra: Option<usize>,
    catalog: bool,
    max_total: usize,
    seed: u64,
) -> Res<Output> {
    let bases: Vec<(String, Expr, Expr, usize)> = match (u, v, catalog) {
        (Some(u), Some(v), false) => {
            let extra = max_extra.ok_or("--max-extra is required with an explicit base")?;
            vec![("input".into(), parse(u)?, parse(v)?, extra)]
        }
        (None, None, true) => known_s5_identities()
            .into_iter()
            .map(|c| {
                let len = c.pair.length() as usize;
                (c.name.to_string(), c.pair.u, c.pair.v, max_total.saturating_sub(len))
            })
            .collect(),
        _ => return Err("give a base identity u v, or --catalog".into()),
    };
    let mut per_base = Vec::new();
    let mut seen = BTreeSet::new();
    let mut found = Vec::new();
    for (name, bu, bv, extra) in bases {
        let r = core(extend_group_identity(&bu, &bv, k, extra, seed))?;
        for p in &r.identities {
            let (a, b) = (core(p.u.expand(DEFAULT_MAX_LEN))?, core(p.v.expand(DEFAULT_MAX_LEN))?);
            if seen.insert(canonical_pair(&a, &b, Mode::Semigroup)) {
                found.push(p.clone());
            }
        }
        per_base.push(json!({ "base": name, "max_extra": extra, "report": r }));
    }
    let mut text = format!("{} identities of T_{k}\n", found.len());
    for p in &found {
        text.push_str(&format!("  {} = {}  (length {})\n", p.u, p.v, p.length()));
    }
    Ok(Output::ok(json!({ "identities": found, "bases": per_base }), text))
}
