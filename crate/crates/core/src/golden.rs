//! Reference tables of reduced coefficients and the replay against them.
//!
//! File format, one table per file:
//!
//! ```text
//! # comment
//! group SU(3)
//! family A
//! rank 2
//! classes 0 A1
//! 00 |   15     6 |   20    10
//! ```
//!
//! Each row holds the Dynkin labels followed by one `C/N D` pair per class;
//! `.` stands for an empty cell (zero).

use crate::costrat::{d_coeffs_from_table, DCoeffTable};
use crate::lattice::{parse_q, pq_map, ExpKernel};
use crate::relcoeff::{coeff_table, CoeffTable};
use crate::repthy::WeightSystemCache;
use crate::rootsys::{DynkinLabels, Family, LieType, RootSystem};
use crate::subsys::{enumerate_classes, find_class};
use crate::weyl::WeylGroup;
use crate::{Error, Result, Q};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

const BUILTIN: [(&str, &str); 8] = [
    ("su2.txt", include_str!("../golden/su2.txt")),
    ("su3.txt", include_str!("../golden/su3.txt")),
    ("su4.txt", include_str!("../golden/su4.txt")),
    ("su5.txt", include_str!("../golden/su5.txt")),
    ("sp2.txt", include_str!("../golden/sp2.txt")),
    ("sp3.txt", include_str!("../golden/sp3.txt")),
    ("spin7.txt", include_str!("../golden/spin7.txt")),
    ("spin8.txt", include_str!("../golden/spin8.txt")),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub labels: Vec<i64>,
    /// `(C/N, D)` per class.
    pub cells: Vec<(Q, Q)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub group: String,
    pub lie_type: LieType,
    pub classes: Vec<String>,
    pub rows: Vec<GoldenRow>,
}

fn parse_labels(s: &str, rank: usize) -> Result<Vec<i64>> {
    let s = s.trim();
    let v: Vec<i64> = if s.contains(char::is_whitespace) {
        s.split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad label `{x}`"))))
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(i64::from)
                    .ok_or_else(|| Error::Parse(format!("bad label digit `{c}`")))
            })
            .collect::<Result<_>>()?
    };
    if v.len() != rank {
        return Err(Error::Parse(format!("label `{s}` does not have {rank} entries")));
    }
    Ok(v)
}

fn parse_cell(s: &str) -> Result<Q> {
    if s == "." {
        Ok(Q::zero())
    } else {
        parse_q(s)
    }
}

impl GoldenTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut group = None;
        let mut family = None;
        let mut rank = None;
        let mut classes: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| Error::Parse(format!("line {}: {m}", no + 1));
            if let Some(rest) = line.strip_prefix("group ") {
                group = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("family ") {
                family = Some(rest.parse::<Family>()?);
            } else if let Some(rest) = line.strip_prefix("rank ") {
                rank = Some(rest.trim().parse::<usize>().map_err(|_| err("bad rank"))?);
            } else if let Some(rest) = line.strip_prefix("classes ") {
                classes = Some(rest.split_whitespace().map(str::to_string).collect());
            } else {
                let rank = rank.ok_or_else(|| err("row before rank"))?;
                let ncls = classes.as_ref().ok_or_else(|| err("row before classes"))?.len();
                let mut parts = line.split('|');
                let labels = parse_labels(parts.next().unwrap_or(""), rank)?;
                let cells = parts
                    .map(|cell| {
                        let v: Vec<&str> = cell.split_whitespace().collect();
                        match v.as_slice() {
                            [c, d] => Ok((parse_cell(c)?, parse_cell(d)?)),
                            _ => Err(err("each cell needs two values")),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                if cells.len() != ncls {
                    return Err(err("cell count does not match the class list"));
                }
                rows.push(GoldenRow { labels, cells });
            }
        }
        let missing = |k: &str| Error::Parse(format!("missing `{k}` header"));
        let lie_type = LieType::new(family.ok_or_else(|| missing("family"))?, rank.ok_or_else(|| missing("rank"))?)?;
        Ok(GoldenTable {
            group: group.ok_or_else(|| missing("group"))?,
            lie_type,
            classes: classes.ok_or_else(|| missing("classes"))?,
            rows,
        })
    }
}

/// The tables shipped with the crate.
pub fn builtin() -> Vec<GoldenTable> {
    BUILTIN
        .iter()
        .map(|(name, text)| {
            GoldenTable::parse(text).unwrap_or_else(|e| panic!("built-in table {name}: {e}"))
        })
        .collect()
}

/// Every `*.txt` file of a directory, in name order.
pub fn load_dir(dir: &Path) -> Result<Vec<GoldenTable>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p)?;
            GoldenTable::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    C,
    D,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub group: String,
    pub class: String,
    pub lambda: DynkinLabels,
    pub column: Column,
    pub expected: Q,
    pub got: Q,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = match self.column {
            Column::C => "C/N",
            Column::D => "D",
        };
        write!(
            f,
            "{} class {} λ={} {col}: expected {}, got {}",
            self.group, self.class, self.lambda, self.expected, self.got
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct TableReport {
    pub group: String,
    pub checked: usize,
    /// Node permutation applied to the reference labels (0-based).
    pub permutation: Vec<usize>,
    pub mismatches: Vec<Mismatch>,
}

/// Computed tables for the classes of one reference table.
pub struct Computed {
    pub classes: Vec<(String, CoeffTable, DCoeffTable)>,
}

pub fn compute_for(t: &GoldenTable) -> Result<Computed> {
    let rs = RootSystem::new(t.lie_type);
    let wg = WeylGroup::generate(&rs);
    let pq = pq_map(&rs, &ExpKernel::simply_connected(rs.rank()))?;
    let all = enumerate_classes(&rs, &wg);
    let cache = WeightSystemCache::new();
    let classes = t
        .classes
        .par_iter()
        .map(|label| {
            let c = find_class(&rs, &all, label)?;
            let ct = coeff_table(&rs, &wg, c, &pq)?;
            let dt = d_coeffs_from_table(&rs, &wg, &ct, &cache)?;
            Ok((label.clone(), ct, dt))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Computed { classes })
}

fn permute(l: &[i64], p: &[usize]) -> Vec<i64> {
    let mut out = vec![0; l.len()];
    for (i, &x) in l.iter().enumerate() {
        out[p[i]] = x;
    }
    out
}

fn compare(
    t: &GoldenTable,
    computed: &Computed,
    perm: &[usize],
    only_first_class: bool,
) -> (usize, Vec<Mismatch>) {
    let mut mismatches = Vec::new();
    let mut checked = 0;
    let ncls = if only_first_class { 1 } else { t.classes.len() };
    for (ci, (label, ct, dt)) in computed.classes.iter().enumerate().take(ncls) {
        let mut listed = BTreeSet::new();
        for row in &t.rows {
            let ours = permute(&row.labels, perm);
            listed.insert(ours.clone());
            let (ec, ed) = row.cells[ci];
            for (column, expected, got) in [(Column::C, ec, ct.get(&ours)), (Column::D, ed, dt.get(&ours))] {
                checked += 1;
                if expected != got {
                    mismatches.push(Mismatch {
                        group: t.group.clone(),
                        class: label.clone(),
                        lambda: DynkinLabels(row.labels.clone()),
                        column,
                        expected,
                        got,
                    });
                }
            }
        }
        let extra_c = ct.entries.iter().map(|(k, v)| (k, *v, Column::C));
        let extra_d = dt.entries.iter().map(|(k, v)| (k, *v, Column::D));
        for (k, v, column) in extra_c.chain(extra_d) {
            if !v.is_zero() && !listed.contains(&k.0) {
                let inv: Vec<usize> = (0..perm.len()).map(|j| perm.iter().position(|&p| p == j).unwrap()).collect();
                mismatches.push(Mismatch {
                    group: t.group.clone(),
                    class: label.clone(),
                    lambda: DynkinLabels(permute(&k.0, &inv)),
                    column,
                    expected: Q::zero(),
                    got: v,
                });
            }
        }
    }
    (checked, mismatches)
}

/// Node relabelings to try: the identity, and for `D_4` the permutations of
/// the three outer nodes.
pub fn candidate_permutations(t: LieType) -> Vec<Vec<usize>> {
    let n = t.rank();
    let id: Vec<usize> = (0..n).collect();
    if t.family() != Family::D || n != 4 {
        return vec![id];
    }
    let outer = [0usize, 2, 3];
    let mut out = vec![id];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a == b || b == c || a == c || (a, b, c) == (0, 1, 2) {
                    continue;
                }
                let mut p = vec![0, 1, 0, 0];
                p[outer[0]] = outer[a];
                p[outer[1]] = outer[b];
                p[outer[2]] = outer[c];
                out.push(p);
            }
        }
    }
    out
}

/// Recomputes every entry of a table and diffs it.
///
/// The node relabeling is chosen by the first class column, ties broken by the
/// full table, then by preferring the identity.
pub fn verify_table(t: &GoldenTable) -> Result<TableReport> {
    let computed = compute_for(t)?;
    let perms = candidate_permutations(t.lie_type);
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for p in &perms {
        let first = compare(t, &computed, p, true).1.len();
        let all = compare(t, &computed, p, false).1.len();
        if best.as_ref().is_none_or(|(f, a, _)| (first, all) < (*f, *a)) {
            best = Some((first, all, p.clone()));
        }
    }
    let perm = best.map(|b| b.2).unwrap_or_default();
    let (checked, mismatches) = compare(t, &computed, &perm, false);
    Ok(TableReport {
        group: t.group.clone(),
        checked,
        permutation: perm,
        mismatches,
    })
}

pub fn verify_all(tables: &[GoldenTable]) -> Result<Vec<TableReport>> {
    tables.iter().map(verify_table).collect()
}
