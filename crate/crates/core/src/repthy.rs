//! Weight systems, dimensions and the signed straightening used for tensor
//! product coefficients.

use crate::error::invalid;
use crate::rootsys::{DynkinLabels, RootSystem};
use crate::weyl::{orbit_labels, WeylGroup};
use crate::{Result, Q};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub highest: DynkinLabels,
    /// Multiplicities of the dominant weights.
    pub dominant_entries: BTreeMap<DynkinLabels, i64>,
}

impl WeightSystem {
    pub fn multiplicity(&self, mu: &[i64]) -> i64 {
        self.dominant_entries
            .get(&DynkinLabels(mu.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ |W(μ)| m(μ)` over the dominant weights.
    pub fn total_dimension(&self, rs: &RootSystem) -> i64 {
        self.dominant_entries
            .iter()
            .map(|(mu, m)| orbit_labels(rs, &mu.0).len() as i64 * m)
            .sum()
    }
}

fn height_below(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Q {
    let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
    rs.labels_to_root_coords(&diff).iter().sum()
}

/// Dominant weights with Freudenthal multiplicities.
pub fn dominant_weight_system(rs: &RootSystem, wg: &WeylGroup, lambda: &[i64]) -> Result<WeightSystem> {
    if lambda.len() != rs.rank() {
        return invalid(format!("expected {} labels", rs.rank()));
    }
    if lambda.iter().any(|&x| x < 0) {
        return invalid(format!("{} is not dominant", DynkinLabels(lambda.to_vec())));
    }
    let np = rs.n_positive();
    let mut seen: HashSet<Vec<i64>> = HashSet::from([lambda.to_vec()]);
    let mut stack = vec![lambda.to_vec()];
    while let Some(mu) = stack.pop() {
        for a in 0..np {
            let nu: Vec<i64> = mu.iter().zip(rs.root_labels(a)).map(|(x, y)| x - y).collect();
            if nu.iter().all(|&x| x >= 0) && seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut order: Vec<(Q, Vec<i64>)> = seen
        .into_iter()
        .map(|mu| (height_below(rs, lambda, &mu), mu))
        .collect();
    order.sort();

    let shifted = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| x + 1).collect() };
    let top = rs.norm2_labels(&shifted(lambda));
    let mut mult: HashMap<Vec<i64>, Q> = HashMap::new();
    for (_, mu) in order {
        if mu == lambda {
            mult.insert(mu, Q::one());
            continue;
        }
        let mut sum = Q::zero();
        for a in 0..np {
            let al = rs.root_labels(a);
            let mut nu: Vec<i64> = mu.iter().zip(al).map(|(x, y)| x + y).collect();
            loop {
                let (dom, _) = wg.dominant_labels(&nu);
                let m = match mult.get(&dom) {
                    Some(m) => *m,
                    None => break,
                };
                sum += m * rs.pairing_labels(&nu, al);
                nu.iter_mut().zip(al).for_each(|(x, y)| *x += y);
            }
        }
        let denom = top - rs.norm2_labels(&shifted(&mu));
        let m = Q::from_integer(2) * sum / denom;
        if !m.is_zero() {
            mult.insert(mu, m);
        }
    }
    let dominant_entries = mult
        .into_iter()
        .map(|(k, v)| {
            debug_assert!(v.is_integer());
            (DynkinLabels(k), v.to_integer())
        })
        .collect();
    Ok(WeightSystem {
        highest: DynkinLabels(lambda.to_vec()),
        dominant_entries,
    })
}

/// Memoized weight systems; safe to share between threads.
#[derive(Debug, Default, Clone)]
pub struct WeightSystemCache {
    inner: Arc<Mutex<HashMap<Vec<i64>, Arc<WeightSystem>>>>,
}

impl WeightSystemCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, rs: &RootSystem, wg: &WeylGroup, lambda: &[i64]) -> Result<Arc<WeightSystem>> {
        if let Some(ws) = self.inner.lock().expect("cache lock").get(lambda) {
            return Ok(ws.clone());
        }
        let ws = Arc::new(dominant_weight_system(rs, wg, lambda)?);
        self.inner
            .lock()
            .expect("cache lock")
            .insert(lambda.to_vec(), ws.clone());
        Ok(ws)
    }
}

/// `Π_{α>0} k(λ+δ,α)/k(δ,α)`.
pub fn weyl_dim(rs: &RootSystem, lambda: &[i64]) -> i64 {
    let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    let delta = rs.delta_labels();
    let mut d = Q::one();
    for a in 0..rs.n_positive() {
        let al = rs.root_labels(a);
        d *= rs.pairing_labels(&shifted, al) / rs.pairing_labels(&delta, al);
    }
    d.to_integer()
}

/// `sign(w)` for the unique `w` with `w(λ+μ'+δ) = λ'+δ`, or 0.
pub fn tau(wg: &WeylGroup, lambda: &[i64], lambda_p: &[i64], mu_p: &[i64]) -> i64 {
    let x: Vec<i64> = lambda.iter().zip(mu_p).map(|(a, b)| a + b + 1).collect();
    let (dom, w) = wg.dominant_labels(&x);
    if dom.contains(&0) {
        return 0;
    }
    if dom.iter().zip(lambda_p).all(|(d, l)| *d == l + 1) {
        wg.sign(w)
    } else {
        0
    }
}

/// `T_{λλ'}(μ) = Σ_{μ'∈W(μ)} τ_{λλ'}(μ')`.
pub fn orbit_sum_t(rs: &RootSystem, wg: &WeylGroup, lambda: &[i64], lambda_p: &[i64], mu: &[i64]) -> i64 {
    orbit_labels(rs, mu)
        .iter()
        .map(|m| tau(wg, lambda, lambda_p, m))
        .sum()
}

/// Multiplicity of `λ'` in `λ'' ⊗ λ`, by `Σ_{μ∈HWS(λ'')} m_{λ''}(μ) T_{λλ'}(μ)`.
pub fn tensor_coeff(
    rs: &RootSystem,
    wg: &WeylGroup,
    lambda_pp: &[i64],
    lambda: &[i64],
    lambda_p: &[i64],
) -> Result<i64> {
    for l in [lambda_pp, lambda, lambda_p] {
        if l.len() != rs.rank() || l.iter().any(|&x| x < 0) {
            return invalid(format!("{} is not a dominant weight", DynkinLabels(l.to_vec())));
        }
    }
    let ws = dominant_weight_system(rs, wg, lambda_pp)?;
    Ok(ws
        .dominant_entries
        .iter()
        .map(|(mu, m)| m * orbit_sum_t(rs, wg, lambda, lambda_p, &mu.0))
        .sum())
}

/// Full decomposition of `λ'' ⊗ λ` by straightening every weight of `λ''`.
pub fn tensor_decomposition(
    rs: &RootSystem,
    wg: &WeylGroup,
    lambda_pp: &[i64],
    lambda: &[i64],
) -> Result<BTreeMap<DynkinLabels, i64>> {
    let ws = dominant_weight_system(rs, wg, lambda_pp)?;
    let mut out: BTreeMap<DynkinLabels, i64> = BTreeMap::new();
    for (mu, m) in &ws.dominant_entries {
        for mp in orbit_labels(rs, &mu.0) {
            let x: Vec<i64> = lambda.iter().zip(&mp).map(|(a, b)| a + b + 1).collect();
            let (dom, w) = wg.dominant_labels(&x);
            if dom.contains(&0) {
                continue;
            }
            let lp = DynkinLabels(dom.iter().map(|c| c - 1).collect());
            *out.entry(lp).or_insert(0) += wg.sign(w) * m;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, LieType};

    fn setup(f: Family, n: usize) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::new(LieType::new(f, n).unwrap());
        let wg = WeylGroup::generate(&rs);
        (rs, wg)
    }

    #[test]
    fn small_weight_systems() {
        let (rs, wg) = setup(Family::A, 1);
        let ws = dominant_weight_system(&rs, &wg, &[2]).unwrap();
        assert_eq!(ws.multiplicity(&[2]), 1);
        assert_eq!(ws.multiplicity(&[0]), 1);
        assert_eq!(ws.dominant_entries.len(), 2);
        let (rs, wg) = setup(Family::A, 2);
        let ws = dominant_weight_system(&rs, &wg, &[1, 1]).unwrap();
        assert_eq!(ws.multiplicity(&[1, 1]), 1);
        assert_eq!(ws.multiplicity(&[0, 0]), 2);
        assert!(dominant_weight_system(&rs, &wg, &[-1, 0]).is_err());
    }

    #[test]
    fn dimensions() {
        let (rs, wg) = setup(Family::A, 2);
        assert_eq!(weyl_dim(&rs, &[0, 0]), 1);
        assert_eq!(weyl_dim(&rs, &[1, 1]), 8);
        assert_eq!(weyl_dim(&rs, &[2, 2]), 27);
        for l in [[1, 0], [2, 1], [3, 0], [2, 2]] {
            let ws = dominant_weight_system(&rs, &wg, &l).unwrap();
            assert_eq!(ws.total_dimension(&rs), weyl_dim(&rs, &l));
        }
        let (rs1, _) = setup(Family::A, 1);
        assert_eq!(weyl_dim(&rs1, &[2]), 3);
        let (rs, wg) = setup(Family::D, 4);
        for l in [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 0]] {
            let ws = dominant_weight_system(&rs, &wg, &l).unwrap();
            assert_eq!(ws.total_dimension(&rs), weyl_dim(&rs, &l));
        }
    }

    #[test]
    fn tau_cases() {
        let (_, wg) = setup(Family::A, 1);
        assert_eq!(tau(&wg, &[0], &[0], &[-2]), -1);
        assert_eq!(tau(&wg, &[0], &[0], &[-1]), 0);
        assert_eq!(tau(&wg, &[3], &[5], &[2]), 1);
    }

    #[test]
    fn t_sums() {
        let (rs, wg) = setup(Family::A, 1);
        assert_eq!(orbit_sum_t(&rs, &wg, &[0], &[0], &[2]), -1);
        assert_eq!(orbit_sum_t(&rs, &wg, &[3], &[3], &[0]), 1);
        assert_eq!(orbit_sum_t(&rs, &wg, &[3], &[4], &[0]), 0);
    }

    #[test]
    fn tensor_products() {
        let (rs, wg) = setup(Family::A, 1);
        for lp in 0..7 {
            let want = i64::from([0, 2, 4].contains(&lp));
            assert_eq!(tensor_coeff(&rs, &wg, &[2], &[2], &[lp]).unwrap(), want);
        }
        assert_eq!(tensor_coeff(&rs, &wg, &[0], &[3], &[3]).unwrap(), 1);
        let (rs, wg) = setup(Family::A, 2);
        let dec = tensor_decomposition(&rs, &wg, &[1, 1], &[1, 1]).unwrap();
        let total: i64 = dec.iter().map(|(l, m)| m * weyl_dim(&rs, &l.0)).sum();
        assert_eq!(total, 64);
        for (l, m) in &dec {
            assert_eq!(tensor_coeff(&rs, &wg, &[1, 1], &[1, 1], &l.0).unwrap(), *m);
        }
    }
}
