//! `D` coefficients and normalized `K` matrix blocks.
//!
//! Every `K` entry is stored without its transcendental prefactor
//! `N_{λ'}/N_λ`; [`norm_ratio`] supplies it on demand.

use crate::error::invalid;
use crate::relcoeff::{candidate_dominants, coeff_table, CoeffTable};
use crate::lattice::PQRatio;
use crate::repthy::{orbit_sum_t, WeightSystemCache};
use crate::rootsys::{DynkinLabels, RootSystem};
use crate::subsys::{ClassPoset, SubsystemClass};
use crate::weyl::{orbit_labels, WeylGroup};
use crate::{Result, Q};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCoeffTable {
    pub class_label: String,
    /// `D̃_μ` on `HWS^r`, zeros included.
    pub entries: BTreeMap<DynkinLabels, Q>,
}

impl DCoeffTable {
    pub fn get(&self, mu: &[i64]) -> Q {
        self.entries
            .get(&DynkinLabels(mu.to_vec()))
            .copied()
            .unwrap_or_else(Q::zero)
    }

    /// `HWS^r`
    pub fn support(&self) -> impl Iterator<Item = &DynkinLabels> {
        self.entries.keys()
    }
}

/// `D̃_μ = Σ_{λ''} (C̃_{λ''}/N_{λ''}) m_{λ''}(μ)`.
pub fn d_coeffs(
    rs: &RootSystem,
    wg: &WeylGroup,
    class: &SubsystemClass,
    table: &CoeffTable,
) -> Result<DCoeffTable> {
    if class.label != table.class_label {
        return invalid(format!(
            "coefficient table belongs to `{}`, not `{}`",
            table.class_label, class.label
        ));
    }
    d_coeffs_from_table(rs, wg, table, &WeightSystemCache::new())
}

pub fn d_coeffs_from_table(
    rs: &RootSystem,
    wg: &WeylGroup,
    table: &CoeffTable,
    cache: &WeightSystemCache,
) -> Result<DCoeffTable> {
    let systems = table
        .entries
        .par_iter()
        .map(|(l, c)| Ok((cache.get(rs, wg, &l.0)?, *c)))
        .collect::<Result<Vec<_>>>()?;
    let mut entries: BTreeMap<DynkinLabels, Q> = BTreeMap::new();
    for (ws, c) in systems {
        for (mu, m) in &ws.dominant_entries {
            *entries.entry(mu.clone()).or_insert_with(Q::zero) += c * Q::from_integer(*m);
        }
    }
    Ok(DCoeffTable {
        class_label: table.class_label.clone(),
        entries,
    })
}

/// Stable: `λ + μ'` is dominant for every `μ'` in the orbit of every
/// `μ ∈ HWS^r`.
pub fn is_stable(rs: &RootSystem, d: &DCoeffTable, lambda: &[i64]) -> bool {
    d.support().all(|mu| {
        orbit_labels(rs, &mu.0)
            .iter()
            .all(|mp| lambda.iter().zip(mp).all(|(a, b)| a + b >= 0))
    })
}

/// `Σ_{μ∈HWS^r} D̃_μ T_{λλ'}(μ)`, the entry `(N_λ/N_{λ'}) K̃_{λ'λ}`.
pub fn k_entry(rs: &RootSystem, wg: &WeylGroup, d: &DCoeffTable, lambda_p: &[i64], lambda: &[i64]) -> Q {
    d.entries
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(mu, v)| *v * Q::from_integer(orbit_sum_t(rs, wg, lambda, lambda_p, &mu.0)))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KBlock {
    pub class_label: String,
    /// Bound on `‖λ+δ‖²` for both indices.
    pub cutoff2: Q,
    /// `(λ', λ) ↦ (N_λ/N_{λ'}) K̃_{λ'λ}`, nonzero only.
    pub entries: BTreeMap<(DynkinLabels, DynkinLabels), Q>,
    /// Rows `λ` with contributions beyond the cutoff.
    pub incomplete_rows: BTreeSet<DynkinLabels>,
    /// All `λ` inside the window.
    pub rows: Vec<DynkinLabels>,
}

impl KBlock {
    pub fn get(&self, lambda_p: &[i64], lambda: &[i64]) -> Q {
        self.entries
            .get(&(DynkinLabels(lambda_p.to_vec()), DynkinLabels(lambda.to_vec())))
            .copied()
            .unwrap_or_else(Q::zero)
    }

    /// Nonzero entries of the row `λ`, keyed by `λ'`.
    pub fn row(&self, lambda: &[i64]) -> BTreeMap<DynkinLabels, Q> {
        let l = DynkinLabels(lambda.to_vec());
        self.entries
            .iter()
            .filter(|((_, b), _)| *b == l)
            .map(|((a, _), v)| (a.clone(), *v))
            .collect()
    }
}

/// Dominant weights with `‖λ+δ‖² ≤ cutoff2`.
pub fn window(rs: &RootSystem, cutoff2: Q) -> Vec<DynkinLabels> {
    if cutoff2 < Q::zero() {
        return vec![];
    }
    let d2 = rs.norm2_labels(&rs.delta_labels());
    if cutoff2 < d2 {
        return vec![];
    }
    // ‖λ+δ‖ ≤ √cutoff2 is implied by ‖λ+δ‖ ≤ M + ‖δ‖ with M = √cutoff2
    candidate_dominants(rs, cutoff2)
        .into_iter()
        .filter(|l| {
            let s: Vec<i64> = l.0.iter().map(|x| x + 1).collect();
            rs.norm2_labels(&s) <= cutoff2
        })
        .collect()
}

/// All normalized entries with both indices inside the window.
pub fn k_block(rs: &RootSystem, wg: &WeylGroup, d: &DCoeffTable, cutoff2: Q) -> KBlock {
    let rows = window(rs, cutoff2);
    let orbits: Vec<(Q, Vec<Vec<i64>>)> = d
        .entries
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(mu, v)| (*v, orbit_labels(rs, &mu.0)))
        .collect();
    let per_row: Vec<(Vec<((DynkinLabels, DynkinLabels), Q)>, bool)> = rows
        .par_iter()
        .map(|lambda| {
            let mut acc: BTreeMap<DynkinLabels, Q> = BTreeMap::new();
            let mut incomplete = false;
            for (v, orbit) in &orbits {
                for mp in orbit {
                    let x: Vec<i64> = lambda.0.iter().zip(mp).map(|(a, b)| a + b + 1).collect();
                    let (dom, w) = wg.dominant_labels(&x);
                    if dom.contains(&0) {
                        continue;
                    }
                    if rs.norm2_labels(&dom) > cutoff2 {
                        incomplete = true;
                        continue;
                    }
                    let lp = DynkinLabels(dom.iter().map(|c| c - 1).collect());
                    *acc.entry(lp).or_insert_with(Q::zero) += *v * Q::from_integer(wg.sign(w));
                }
            }
            let entries = acc
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(lp, v)| ((lp, lambda.clone()), v))
                .collect();
            (entries, incomplete)
        })
        .collect();
    let mut entries = BTreeMap::new();
    let mut incomplete_rows = BTreeSet::new();
    for (lambda, (e, inc)) in rows.iter().zip(per_row) {
        entries.extend(e);
        if inc {
            incomplete_rows.insert(lambda.clone());
        }
    }
    KBlock {
        class_label: d.class_label.clone(),
        cutoff2,
        entries,
        incomplete_rows,
        rows,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HbarConfig {
    pub hbar: f64,
    pub dim_g: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormRatio {
    /// `e` in `N_{λ'}/N_λ = exp(ħ e)`.
    pub exponent: Q,
    pub value: f64,
}

/// `N_{λ'}/N_λ = exp(ħ(‖λ'+δ‖² - ‖λ+δ‖²)/2)`.
pub fn norm_ratio(rs: &RootSystem, cfg: HbarConfig, lambda_p: &[i64], lambda: &[i64]) -> Result<NormRatio> {
    if !(cfg.hbar > 0.0) {
        return invalid("hbar must be positive");
    }
    let s = |l: &[i64]| -> Vec<i64> { l.iter().map(|x| x + 1).collect() };
    let exponent = (rs.norm2_labels(&s(lambda_p)) - rs.norm2_labels(&s(lambda))) / Q::from_integer(2);
    let value = (cfg.hbar * exponent.to_f64().unwrap_or(f64::NAN)).exp();
    Ok(NormRatio { exponent, value })
}

/// One truncated row of the condition for a class `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub class_label: String,
    pub lambda: DynkinLabels,
    pub row: BTreeMap<DynkinLabels, Q>,
    pub incomplete: bool,
}

/// Rows `λ` of `K^r` for every class `r` with `r₀ ≰ r`, inside the window.
pub fn vanishing_system(
    rs: &RootSystem,
    wg: &WeylGroup,
    poset: &ClassPoset,
    r0: usize,
    pq: &[PQRatio],
    cutoff2: Q,
) -> Result<Vec<Constraint>> {
    if r0 >= poset.classes.len() {
        return invalid("class index out of range");
    }
    let cache = WeightSystemCache::new();
    let mut out = Vec::new();
    for (r, class) in poset.classes.iter().enumerate() {
        if poset.leq[r0][r] {
            continue;
        }
        let table = coeff_table(rs, wg, class, pq)?;
        let d = d_coeffs_from_table(rs, wg, &table, &cache)?;
        let block = k_block(rs, wg, &d, cutoff2);
        for lambda in &block.rows {
            out.push(Constraint {
                class_label: class.label.clone(),
                lambda: lambda.clone(),
                row: block.row(&lambda.0),
                incomplete: block.incomplete_rows.contains(lambda),
            });
        }
    }
    Ok(out)
}
