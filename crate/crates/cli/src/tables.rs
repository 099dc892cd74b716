//! Table builders for the `table` subcommand. Each builder returns plain row
//! data plus a prerendered human-readable line, so the dispatcher can emit
//! text, CSV, or JSON from one source.

use std::collections::BTreeSet;

use genocchi_cycles::counting::{self, DescentSpec};
use genocchi_cycles::enumerate::CycleFamily;
use genocchi_cycles::{Error, Result};

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Row>,
}

pub struct Row {
    pub cells: Vec<Cell>,
    pub text: String,
}

pub enum Cell {
    Num(u64),
    /// Exact integer, decimal rendering.
    Big(String),
    /// A set of values, ascending.
    Values(Vec<u32>),
}

impl Cell {
    pub fn csv(&self) -> String {
        match self {
            Cell::Num(v) => v.to_string(),
            Cell::Big(s) => s.clone(),
            Cell::Values(vs) => vs
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join("-"),
        }
    }

    pub fn json(&self) -> serde_json::Value {
        match self {
            Cell::Num(v) => serde_json::json!(v),
            Cell::Big(s) => serde_json::json!(s),
            Cell::Values(vs) => serde_json::json!(vs),
        }
    }
}

/// Genocchi numbers g_1..g_max_n off the series route, which cross-checks
/// itself against the reference prefix internally.
pub fn genocchi(max_n: u32) -> Result<Table> {
    if max_n == 0 {
        return Err(Error::Domain("the table needs at least one row".into()));
    }
    let values = counting::genocchi_series_table(max_n)?;
    let rows = values
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let n = i as u64 + 1;
            Row {
                text: format!("g_{n} = {g}"),
                cells: vec![Cell::Num(n), Cell::Big(g.to_string())],
            }
        })
        .collect();
    Ok(Table {
        columns: vec!["n", "value"],
        rows,
    })
}

/// Even-odd-drop cycle counts over the contents {1^k, ..., (2n)^k}, rows in
/// (n, k) order.
pub fn genocchi_k(max_n: u32, max_k: u32, lift_guard: bool) -> Result<Table> {
    if max_n == 0 || max_k == 0 {
        return Err(Error::Domain("the table needs at least one row".into()));
    }
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for k in 1..=max_k {
            let count = counting::uniform_cycle_count(CycleFamily::EvenOddDrop, n, k, lift_guard)?;
            rows.push(Row {
                text: format!("n={n} k={k}: {count}"),
                cells: vec![Cell::Num(n.into()), Cell::Num(k.into()), Cell::Num(count)],
            });
        }
    }
    Ok(Table {
        columns: vec!["n", "k", "value"],
        rows,
    })
}

/// Largest word length `f_eq` tabulates without the guard lifted; the row
/// count doubles with each extra letter.
pub const MAX_F_EQ_LEN: u32 = 12;

/// Exact descent-top counts for every candidate set inside 2..=n, one row
/// per subset in bitmask order (bit i is the value i + 2).
pub fn f_eq(n: u32, lift_guard: bool) -> Result<Table> {
    if !lift_guard && n > MAX_F_EQ_LEN {
        return Err(Error::Guard(format!(
            "word length {n} is over the table limit {MAX_F_EQ_LEN}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("word length must be positive".into()));
    }
    let candidates: Vec<u32> = (2..=n).collect();
    let mut rows = Vec::new();
    for mask in 0u64..1 << candidates.len() {
        let tops: BTreeSet<u32> = (0..candidates.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| candidates[i])
            .collect();
        let spec = DescentSpec::new(n, tops.iter().copied())?;
        let value = spec.count_exact_by_subsets();
        let shown = tops
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        rows.push(Row {
            text: format!("S={{{shown}}}: {value}"),
            cells: vec![
                Cell::Num(n.into()),
                Cell::Values(tops.into_iter().collect()),
                Cell::Big(value.to_string()),
            ],
        });
    }
    Ok(Table {
        columns: vec!["n", "s", "value"],
        rows,
    })
}
