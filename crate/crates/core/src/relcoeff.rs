//! Character coefficients of the relation functions.
//!
//! Weights are handled as integral Dynkin label vectors throughout; the
//! `(q/p)`-scaled roots are always integral because `p = 1` whenever the kernel
//! contains the coroot lattice.

use crate::error::invalid;
use crate::lattice::PQRatio;
use crate::rootsys::{DynkinLabels, RootSystem, WeightVec};
use crate::subsys::{is_root_subsystem, SubsystemClass};
use crate::weyl::WeylGroup;
use crate::{Error, Result, Q};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// Finitely supported integer valued function on weights, keyed by labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedSum {
    entries: HashMap<Vec<i64>, i64>,
}

impl WeightedSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// The function with value 1 at 0.
    pub fn unit(rank: usize) -> Self {
        let mut s = Self::new();
        s.add(vec![0; rank], 1);
        s
    }

    pub fn add(&mut self, key: Vec<i64>, v: i64) {
        if v == 0 {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.entries.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }

    pub fn get(&self, key: &[i64]) -> i64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.entries.iter()
    }

    /// Entries sorted by labels.
    pub fn sorted(&self) -> Vec<(Vec<i64>, i64)> {
        let mut v: Vec<(Vec<i64>, i64)> = self.entries.iter().map(|(k, v)| (k.clone(), *v)).collect();
        v.sort();
        v
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Entries as ambient vectors.
    pub fn to_weights(&self, rs: &RootSystem) -> Vec<(WeightVec, i64)> {
        self.sorted()
            .into_iter()
            .map(|(k, v)| (rs.from_labels(&DynkinLabels(k)).expect("rank matches"), v))
            .collect()
    }

    /// `max ‖η‖²` over the support.
    pub fn max_norm2(&self, rs: &RootSystem) -> Q {
        self.entries
            .keys()
            .map(|k| rs.norm2_labels(k))
            .max()
            .unwrap_or_else(Q::zero)
    }

    fn from_map(entries: HashMap<Vec<i64>, i64>) -> Self {
        WeightedSum {
            entries: entries.into_iter().filter(|(_, v)| *v != 0).collect(),
        }
    }
}

/// `Σ ∖ Γ` as sorted root indices.
pub fn complement(rs: &RootSystem, gamma: &[usize]) -> Vec<usize> {
    let mut member = vec![false; rs.len()];
    gamma.iter().for_each(|&g| member[g] = true);
    (0..rs.len()).filter(|&i| !member[i]).collect()
}

fn scaled_labels(rs: &RootSystem, pq: &[PQRatio], root: usize) -> Result<Vec<i64>> {
    let s = pq[root].scale();
    rs.root_labels(root)
        .iter()
        .map(|&c| {
            let x = s * c;
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::NonLatticeWeight(format!("{s}·root {root}")))
            }
        })
        .collect()
}

/// `V(η)`: signed count of subsets `Δ` of the given roots with
/// `Σ_{α∈Δ} (q/p)α = η`, folded one root (or one `±α` pair) at a time.
pub fn subset_sums(rs: &RootSystem, pq: &[PQRatio], roots: &[usize]) -> Result<WeightedSum> {
    if pq.len() != rs.len() {
        return invalid("p/q table does not match the root system");
    }
    let mut present = vec![false; rs.len()];
    roots.iter().for_each(|&r| present[r] = true);
    let mut steps: Vec<(Vec<i64>, bool)> = Vec::new();
    for &r in roots {
        let neg = rs.negative(r);
        if present[neg] {
            if r < neg {
                steps.push((scaled_labels(rs, pq, r)?, true));
                debug_assert_eq!(pq[r], pq[neg]);
            }
        } else {
            steps.push((scaled_labels(rs, pq, r)?, false));
        }
    }
    let mut cur: HashMap<Vec<i64>, i64> = HashMap::new();
    cur.insert(vec![0; rs.rank()], 1);
    for (s, paired) in steps {
        let mut next: HashMap<Vec<i64>, i64> = HashMap::with_capacity(cur.len() * 2);
        for (k, v) in &cur {
            let plus: Vec<i64> = k.iter().zip(&s).map(|(a, b)| a + b).collect();
            *next.entry(plus).or_insert(0) -= v;
            if paired {
                let minus: Vec<i64> = k.iter().zip(&s).map(|(a, b)| a - b).collect();
                *next.entry(minus).or_insert(0) -= v;
                *next.entry(k.clone()).or_insert(0) += 2 * v;
            } else {
                *next.entry(k.clone()).or_insert(0) += v;
            }
        }
        next.retain(|_, v| *v != 0);
        cur = next;
    }
    Ok(WeightedSum::from_map(cur))
}

/// `Ṽ(η) = Σ_{w'} V(w'η)` over one representative `w'` per right coset.
pub fn symmetrize(wg: &WeylGroup, reps: &[usize], v: &WeightedSum) -> WeightedSum {
    let mut out: HashMap<Vec<i64>, i64> = HashMap::with_capacity(v.len() * reps.len());
    for &w in reps {
        let winv = wg.inverse(w);
        for (k, val) in v.iter() {
            *out.entry(wg.act_labels(winv, k)).or_insert(0) += val;
        }
    }
    WeightedSum::from_map(out)
}

/// Every dominant `λ` with `‖λ+δ‖ ≤ M + ‖δ‖`, where `M² = m2`, in
/// lexicographic order.
pub fn candidate_dominants(rs: &RootSystem, m2: Q) -> Vec<DynkinLabels> {
    let n = rs.rank();
    let ones = vec![1i64; n];
    let d2 = rs.norm2_labels(&ones);
    let bound = (m2.to_f64().unwrap().sqrt() + d2.to_f64().unwrap().sqrt()) * (1.0 + 1e-9) + 1e-9;
    let caps: Vec<i64> = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            let g = rs.norm2_labels(&e).to_f64().unwrap().sqrt();
            ((bound / g).floor() as i64 - 1).max(0)
        })
        .collect();
    let within = |l: &[i64]| {
        let shifted: Vec<i64> = l.iter().map(|x| x + 1).collect();
        let x = rs.norm2_labels(&shifted);
        let y = x - m2 - d2;
        y <= Q::zero() || y * y <= Q::from_integer(4) * m2 * d2
    };
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        if within(&cur) {
            out.push(DynkinLabels(cur.clone()));
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < caps[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    pub class_label: String,
    /// Nonzero values `C̃_λ/N_λ`, lexicographic in the labels.
    pub entries: BTreeMap<DynkinLabels, Q>,
    /// `|W_Γ|`
    pub reduction_factor: usize,
}

impl CoeffTable {
    pub fn get(&self, l: &[i64]) -> Q {
        self.entries
            .get(&DynkinLabels(l.to_vec()))
            .copied()
            .unwrap_or_else(Q::zero)
    }

    /// Unreduced `C_λ/N_λ = |W_Γ| C̃_λ/N_λ`.
    pub fn full(&self, l: &[i64]) -> Q {
        self.get(l) * Q::from_integer(self.reduction_factor as i64)
    }

    /// Entries whose value is not an integer.
    pub fn non_integral(&self) -> Vec<&DynkinLabels> {
        self.entries
            .iter()
            .filter(|(_, v)| !v.is_integer())
            .map(|(k, _)| k)
            .collect()
    }
}

/// `Σ_{w} sign(w) Ṽ(w(λ+δ) - δ)`.
pub fn reduced_coefficient(wg: &WeylGroup, vt: &WeightedSum, l: &[i64]) -> i64 {
    let shifted: Vec<i64> = l.iter().map(|x| x + 1).collect();
    (0..wg.order())
        .map(|w| {
            let mut img = wg.act_labels(w, &shifted);
            img.iter_mut().for_each(|x| *x -= 1);
            wg.sign(w) * vt.get(&img)
        })
        .sum()
}

/// The pipeline for an explicit subsystem `Γ`: `V`, `Ṽ`, candidates, sweep.
pub fn coeff_table_for(
    rs: &RootSystem,
    wg: &WeylGroup,
    gamma: &[usize],
    label: &str,
    pq: &[PQRatio],
) -> Result<CoeffTable> {
    if gamma.iter().any(|&g| g >= rs.len()) || !is_root_subsystem(rs, gamma) {
        return invalid(format!("class `{label}` is not a root subsystem of {}", rs.lie_type()));
    }
    let stab = wg.setwise_stabilizer(gamma);
    let reps = wg.coset_representatives(&stab)?;
    let v = subset_sums(rs, pq, &complement(rs, gamma))?;
    let vt = symmetrize(wg, &reps, &v);
    let candidates = candidate_dominants(rs, v.max_norm2(rs));
    let entries: BTreeMap<DynkinLabels, Q> = candidates
        .par_iter()
        .filter_map(|l| {
            let c = reduced_coefficient(wg, &vt, &l.0);
            (c != 0).then(|| (l.clone(), Q::from_integer(c)))
        })
        .collect();
    Ok(CoeffTable {
        class_label: label.to_string(),
        entries,
        reduction_factor: stab.len(),
    })
}

pub fn coeff_table(
    rs: &RootSystem,
    wg: &WeylGroup,
    class: &SubsystemClass,
    pq: &[PQRatio],
) -> Result<CoeffTable> {
    coeff_table_for(rs, wg, &class.representative.roots, &class.label, pq)
}

/// Alternative evaluation: each support point `η` of `Ṽ` contributes
/// `sign(w) Ṽ(η)` to `λ = w(η+δ) - δ` when `η+δ` is regular.
pub fn straighten(wg: &WeylGroup, vt: &WeightedSum) -> BTreeMap<Vec<i64>, i64> {
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (k, v) in vt.iter() {
        let shifted: Vec<i64> = k.iter().map(|x| x + 1).collect();
        let (dom, w) = wg.dominant_labels(&shifted);
        if dom.contains(&0) {
            continue;
        }
        let lambda: Vec<i64> = dom.iter().map(|x| x - 1).collect();
        *out.entry(lambda).or_insert(0) += wg.sign(w) * v;
    }
    out.retain(|_, v| *v != 0);
    out
}
