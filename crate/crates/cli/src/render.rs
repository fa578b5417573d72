//! Plain-text tables for `--format text`.

use std::fmt::Write;

use serde::Serialize;
use wordsep_core::families::KnownIdentity;
use wordsep_core::search::{AbMinimum, AbcdMinimum, ScreenRow, SearchReport, SepTable};

#[derive(Serialize)]
pub struct Table2Row {
    pub k: usize,
    pub abcd: Option<AbcdMinimum>,
    pub ab: Option<AbMinimum>,
    pub lcm: u64,
}

pub fn table2(rows: &[Table2Row]) -> String {
    let mut s = String::new();
    writeln!(s, "{:>3} | {:>4} {:>4} {:>4} {:>4} {:>6} | {:>7} {:>7} {:>8} | {:>11}", "k", "a", "b", "c", "d", "Len", "a", "b", "Len", "lcm(k)")
        .unwrap();
    for r in rows {
        let four = match &r.abcd {
            Some(m) => {
                let p = m.params;
                format!("{:>4} {:>4} {:>4} {:>4} {:>6}", p.a, p.b, p.c, p.d, p.length())
            }
            None => format!("{:>4} {:>4} {:>4} {:>4} {:>6}", "", "", "", "", ""),
        };
        let two = match &r.ab {
            Some(m) => {
                let mark = if m.exhaustive { "" } else { "*" };
                format!("{:>7} {:>7} {:>8}{mark}", m.params.a, m.params.b, m.params.length())
            }
            None => format!("{:>7} {:>7} {:>8}", "", "", ""),
        };
        writeln!(s, "{:>3} | {four} | {two} | {:>11}", r.k, r.lcm).unwrap();
    }
    s
}

pub fn sep_table(t: &SepTable) -> String {
    let name = match t.mode {
        wordsep_core::Mode::Semigroup => "Sep",
        wordsep_core::Mode::Group => "Sepp",
    };
    let mut s = String::new();
    for l in &t.levels {
        match (&l.shortest_length, &l.witness) {
            (Some(n), Some(w)) => writeln!(s, "k = {}: shortest identity {} = {} (length {n})", l.k, w.u, w.v).unwrap(),
            _ => writeln!(s, "k = {}: no identity up to length {}", l.k, t.n_max).unwrap(),
        }
    }
    writeln!(s, "{:>4} {:>8}", "n", format!("{name}(n)")).unwrap();
    for r in &t.rows {
        let v = if r.exact { r.value.to_string() } else { format!(">= {}", r.value) };
        writeln!(s, "{:>4} {:>8}", r.n, v).unwrap();
    }
    s
}

pub fn search(r: &SearchReport) -> String {
    let mut s = String::new();
    match r.minimal_length {
        Some(n) => writeln!(s, "shortest length {n}, {} identities up to symmetry", r.identities.len()).unwrap(),
        None => writeln!(s, "no identity within the length cap").unwrap(),
    }
    for p in &r.identities {
        writeln!(s, "  {} = {}", p.u, p.v).unwrap();
    }
    writeln!(s, "{} candidate words, {} exact checks", r.candidates_examined, r.exact_checks).unwrap();
    s
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub fn screen(names: &[&str], rows: &[ScreenRow]) -> String {
    let mut s = String::new();
    writeln!(s, "{:<18} {:>4} {:>4} {:>4} {:>4}", "name", "len", "S_5", "S_6", "S_7").unwrap();
    for (n, r) in names.iter().zip(rows) {
        writeln!(
            s,
            "{:<18} {:>4} {:>4} {:>4} {:>4}",
            n,
            r.pair.length(),
            yes_no(r.holds(5)),
            yes_no(r.holds(6)),
            yes_no(r.holds(7))
        )
        .unwrap();
    }
    s
}

pub fn catalog(all: &[KnownIdentity]) -> String {
    let mut s = String::new();
    for c in all {
        writeln!(s, "{:<18} {:>3}  {} = {}", c.name, c.pair.length(), c.pair.u, c.pair.v).unwrap();
    }
    s
}
