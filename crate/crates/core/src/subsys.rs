//! Root subsystems, their `W`-conjugacy classes for the classical series, and
//! the order by inclusion modulo conjugacy.

use crate::rootsys::{Family, NamedRoot, RootSystem, WeightVec};
use crate::weyl::WeylGroup;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// One simple factor of a class label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub kind: char,
    pub size: usize,
}

impl Factor {
    fn order_key(&self) -> (u8, usize) {
        let k = match self.kind {
            'A' => 0,
            'D' => 1,
            _ => 2,
        };
        (k, self.size)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.size)
    }
}

/// Canonical label: factors sorted A, D, then B/C, each ascending, joined by
/// `+`; `"0"` when empty.
pub fn format_label(factors: &[Factor]) -> String {
    if factors.is_empty() {
        return "0".to_string();
    }
    let mut f = factors.to_vec();
    f.sort_by_key(Factor::order_key);
    f.iter().map(Factor::to_string).collect::<Vec<_>>().join("+")
}

/// Parses `A1+D2`, `A1⊕D2` or `0`.
pub fn parse_label(s: &str) -> Result<Vec<Factor>> {
    let s = s.trim();
    if s == "0" || s.is_empty() {
        return Ok(vec![]);
    }
    s.split(['+', '⊕'])
        .map(|part| {
            let part = part.trim();
            let mut chars = part.chars();
            let kind = chars
                .next()
                .map(|c| c.to_ascii_uppercase())
                .filter(|c| "ABCD".contains(*c))
                .ok_or_else(|| Error::UnknownClass(s.to_string()))?;
            let size: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::UnknownClass(s.to_string()))?;
            if size == 0 {
                return Err(Error::UnknownClass(s.to_string()));
            }
            Ok(Factor { kind, size })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSubsystem {
    /// Sorted indices into the root list.
    pub roots: Vec<usize>,
    pub closed: bool,
    pub label: String,
}

impl RootSubsystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.roots.binary_search(&idx).is_ok()
    }
}

#[derive(Debug, Clone)]
pub struct SubsystemClass {
    pub label: String,
    pub factors: Vec<Factor>,
    /// Base of the representative, as root indices.
    pub base: Vec<usize>,
    pub representative: RootSubsystem,
    /// Lexicographically least sorted index set in the `W`-orbit.
    pub canonical_key: Vec<usize>,
}

impl SubsystemClass {
    pub fn closed(&self) -> bool {
        self.representative.closed
    }

    pub fn base_vectors(&self, rs: &RootSystem) -> Vec<WeightVec> {
        self.base.iter().map(|&i| rs.roots()[i].clone()).collect()
    }

    pub fn is_full(&self, rs: &RootSystem) -> bool {
        self.representative.len() == rs.len()
    }
}

/// Smallest reflection-stable set containing the given root indices.
pub fn span_indices(rs: &RootSystem, base: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = base.iter().flat_map(|&b| [b, rs.negative(b)]).collect();
    let mut frontier: Vec<usize> = set.iter().copied().collect();
    while !frontier.is_empty() {
        let current: Vec<usize> = set.iter().copied().collect();
        let mut next = Vec::new();
        for &a in &frontier {
            for &b in &current {
                for (x, y) in [(a, b), (b, a)] {
                    let r = rs.reflect_index(x, y);
                    if set.insert(r) {
                        next.push(r);
                    }
                }
            }
        }
        frontier = next;
    }
    set.into_iter().collect()
}

pub fn span_subsystem(rs: &RootSystem, base: &[WeightVec]) -> Result<RootSubsystem> {
    let idx: Vec<usize> = base
        .iter()
        .map(|b| {
            rs.find(b)
                .ok_or_else(|| Error::InvalidArgument(format!("{b} is not a root")))
        })
        .collect::<Result<_>>()?;
    let roots = span_indices(rs, &idx);
    let closed = is_closed(rs, &roots);
    Ok(RootSubsystem {
        roots,
        closed,
        label: String::new(),
    })
}

/// True when every root in the set is mapped into the set by the reflections
/// of its elements.
pub fn is_root_subsystem(rs: &RootSystem, set: &[usize]) -> bool {
    let mut member = vec![false; rs.len()];
    set.iter().for_each(|&i| member[i] = true);
    set.iter()
        .all(|&a| set.iter().all(|&b| member[rs.reflect_index(a, b)]))
}

pub fn is_closed(rs: &RootSystem, set: &[usize]) -> bool {
    let mut member = vec![false; rs.len()];
    set.iter().for_each(|&i| member[i] = true);
    set.iter().all(|&a| {
        set.iter()
            .all(|&b| rs.sum_index(a, b).is_none_or(|s| member[s]))
    })
}

fn image(wg: &WeylGroup, w: usize, set: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().map(|&i| wg.act_root(w, i)).collect();
    v.sort_unstable();
    v
}

/// Distinct images of `set` under `W`, sorted.
pub fn orbit_of_set(wg: &WeylGroup, set: &[usize]) -> Vec<Vec<usize>> {
    let all: BTreeSet<Vec<usize>> = (0..wg.order()).map(|w| image(wg, w, set)).collect();
    all.into_iter().collect()
}

pub fn canonical_key(wg: &WeylGroup, set: &[usize]) -> Vec<usize> {
    (0..wg.order())
        .map(|w| image(wg, w, set))
        .min()
        .unwrap_or_default()
}

/// Some `w` with `w(Γ1) = Γ2`.
pub fn are_conjugate(wg: &WeylGroup, g1: &[usize], g2: &[usize]) -> Option<usize> {
    if g1.len() != g2.len() {
        return None;
    }
    let mut target = g2.to_vec();
    target.sort_unstable();
    (0..wg.order()).find(|&w| image(wg, w, g1) == target)
}

/// The admissible tuples of the classification, as factor lists.
pub fn admissible_tuples(family: Family, n: usize) -> Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    // nondecreasing sequences with entries >= min and sum <= budget
    fn seqs(min: usize, budget: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        fn rec(start: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            for x in start..=budget {
                cur.push(x);
                out.push(cur.clone());
                rec(x, budget - x, cur, out);
                cur.pop();
            }
        }
        rec(min, budget, &mut vec![], &mut out);
        out
    }
    let mut out = Vec::new();
    match family {
        Family::A => {
            for i in seqs(1, n) {
                let s: usize = i.iter().sum();
                if i.is_empty() || s + i.len() - 1 <= n {
                    out.push((i, vec![], vec![]));
                }
            }
        }
        Family::B | Family::C | Family::D => {
            for i in seqs(1, n) {
                let a = i.iter().sum::<usize>() + i.len();
                if a > n {
                    continue;
                }
                for j in seqs(2, n - a) {
                    let d = j.iter().sum::<usize>();
                    if family == Family::D {
                        out.push((i.clone(), j, vec![]));
                        continue;
                    }
                    for k in seqs(1, n - a - d) {
                        out.push((i.clone(), j.clone(), k));
                    }
                }
            }
        }
    }
    out
}

fn simple(rs: &RootSystem, one_based: usize) -> usize {
    rs.simple_index(one_based - 1)
}

/// Base (root indices) of the representative of a tuple.
fn tuple_base(
    rs: &RootSystem,
    i: &[usize],
    j: &[usize],
    k: &[usize],
) -> Result<Vec<usize>> {
    let family = rs.lie_type().family();
    let n = rs.rank();
    let mut base = Vec::new();
    let mut start = 1;
    for &size in i {
        base.extend((start..start + size).map(|l| simple(rs, l)));
        start += size + 1;
    }
    let p0 = i.iter().sum::<usize>() + i.len();
    let mut p = p0 + 1;
    for (l, &size) in j.iter().enumerate() {
        if family == Family::D && l + 1 == j.len() {
            base.extend((n - size + 1..=n).map(|m| simple(rs, m)));
            break;
        }
        let kind = match family {
            Family::B => NamedRoot::B,
            Family::C => NamedRoot::CTilde,
            _ => NamedRoot::D,
        };
        let x = rs.named_root_index(kind, p)?;
        base.push(simple(rs, p));
        base.push(rs.negative(x));
        base.extend((p + 1..p + size - 1).map(|m| simple(rs, m)));
        p += size;
    }
    let mut acc = 0;
    for (l, &size) in k.iter().enumerate() {
        acc += size;
        let m = n - acc + 1;
        if l == 0 {
            base.extend((m..=n).map(|x| simple(rs, x)));
        } else {
            let kind = if family == Family::B {
                NamedRoot::A
            } else {
                NamedRoot::C
            };
            base.push(rs.negative(rs.named_root_index(kind, m)?));
            base.extend((m..m + size - 1).map(|x| simple(rs, x)));
        }
    }
    Ok(base)
}

/// All classes of the classical type, one per admissible tuple, sorted by
/// (cardinality, label).
pub fn enumerate_classes(rs: &RootSystem, wg: &WeylGroup) -> Vec<SubsystemClass> {
    let family = rs.lie_type().family();
    let last = match family {
        Family::A => 'A',
        Family::B => 'B',
        Family::C => 'C',
        Family::D => 'D',
    };
    let mut classes: Vec<SubsystemClass> = admissible_tuples(family, rs.rank())
        .into_iter()
        .map(|(i, j, k)| {
            let base = tuple_base(rs, &i, &j, &k).expect("admissible tuple has a valid base");
            let mut factors: Vec<Factor> = i.iter().map(|&s| Factor { kind: 'A', size: s }).collect();
            factors.extend(j.iter().map(|&s| Factor { kind: 'D', size: s }));
            factors.extend(k.iter().map(|&s| Factor { kind: last, size: s }));
            let label = format_label(&factors);
            let roots = span_indices(rs, &base);
            let closed = is_closed(rs, &roots);
            let canonical = canonical_key(wg, &roots);
            SubsystemClass {
                label: label.clone(),
                factors,
                base,
                representative: RootSubsystem {
                    roots,
                    closed,
                    label,
                },
                canonical_key: canonical,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        a.representative
            .len()
            .cmp(&b.representative.len())
            .then_with(|| a.label.cmp(&b.label))
    });
    classes
}

/// Looks a class up by label; `full` names the whole root system.
pub fn find_class<'a>(
    rs: &RootSystem,
    classes: &'a [SubsystemClass],
    label: &str,
) -> Result<&'a SubsystemClass> {
    if label.trim().eq_ignore_ascii_case("full") {
        return classes
            .iter()
            .find(|c| c.is_full(rs))
            .ok_or_else(|| Error::UnknownClass(label.to_string()));
    }
    let want = format_label(&parse_label(label)?);
    classes
        .iter()
        .find(|c| c.label == want)
        .ok_or_else(|| Error::UnknownClass(label.to_string()))
}

/// `r1 ≤ r2` iff some conjugate of the first representative lies inside the
/// second.
pub fn class_leq(wg: &WeylGroup, r1: &SubsystemClass, r2: &SubsystemClass) -> bool {
    let a = &r1.representative;
    let b = &r2.representative;
    if a.len() > b.len() {
        return false;
    }
    orbit_of_set(wg, &a.roots)
        .iter()
        .any(|s| s.iter().all(|&x| b.contains(x)))
}

#[derive(Debug, Clone)]
pub struct ClassPoset {
    pub classes: Vec<SubsystemClass>,
    pub leq: Vec<Vec<bool>>,
    /// Covering pairs `(lower, upper)`.
    pub hasse_edges: Vec<(usize, usize)>,
}

impl ClassPoset {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Edges as label pairs.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.hasse_edges
            .iter()
            .map(|&(a, b)| (self.classes[a].label.clone(), self.classes[b].label.clone()))
            .collect()
    }

    /// Graphviz rendering; closed classes filled, others hollow.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, c) in self.classes.iter().enumerate() {
            let style = if c.closed() {
                "style=filled, fillcolor=black, fontcolor=white"
            } else {
                "style=solid"
            };
            s.push_str(&format!("  n{i} [label=\"{}\", shape=circle, {style}];\n", c.label));
        }
        for &(a, b) in &self.hasse_edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn build_poset(wg: &WeylGroup, classes: Vec<SubsystemClass>) -> ClassPoset {
    use rayon::prelude::*;
    let m = classes.len();
    let orbits: Vec<Vec<Vec<usize>>> = classes
        .par_iter()
        .map(|c| orbit_of_set(wg, &c.representative.roots))
        .collect();
    let leq: Vec<Vec<bool>> = (0..m)
        .into_par_iter()
        .map(|a| {
            (0..m)
                .map(|b| {
                    let rb = &classes[b].representative;
                    classes[a].representative.len() <= rb.len()
                        && orbits[a].iter().any(|s| s.iter().all(|&x| rb.contains(x)))
                })
                .collect()
        })
        .collect();
    let mut hasse_edges = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a == b || !leq[a][b] {
                continue;
            }
            let covered = (0..m).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
            if !covered {
                hasse_edges.push((a, b));
            }
        }
    }
    ClassPoset {
        classes,
        leq,
        hasse_edges,
    }
}
