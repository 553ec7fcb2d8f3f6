//! Brute-force reference computations shared by the integration tests.
//!
//! Nothing here calls into the coefficient pipeline; only root data and
//! label conversions are taken from the library.

#![allow(dead_code)]

use reftype::rootsys::{DynkinLabels, Family, LieType, RootSystem};
use reftype::Q;
use std::collections::{HashMap, HashSet, VecDeque};

pub fn system(f: Family, n: usize) -> RootSystem {
    RootSystem::new(LieType::new(f, n).unwrap())
}

/// Weyl group as signed integer matrices acting on Dynkin labels.
pub struct LabelGroup {
    pub rank: usize,
    pub elements: Vec<(Vec<Vec<i64>>, i64)>,
}

impl LabelGroup {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let gens: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                let a = rs.root_labels(rs.simple_index(i));
                (0..n)
                    .map(|j| (0..n).map(|k| i64::from(j == k) - if k == i { a[j] } else { 0 }).collect())
                    .collect()
            })
            .collect();
        let id: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|k| i64::from(j == k)).collect()).collect();
        let mut seen = HashSet::from([id.clone()]);
        let mut elements = vec![(id.clone(), 1)];
        let mut queue = VecDeque::from([(id, 1i64)]);
        while let Some((g, s)) = queue.pop_front() {
            for m in &gens {
                let h: Vec<Vec<i64>> = (0..n)
                    .map(|j| (0..n).map(|k| (0..n).map(|l| m[j][l] * g[l][k]).sum()).collect())
                    .collect();
                if seen.insert(h.clone()) {
                    elements.push((h.clone(), -s));
                    queue.push_back((h, -s));
                }
            }
        }
        LabelGroup { rank: n, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn apply(&self, g: usize, l: &[i64]) -> Vec<i64> {
        let m = &self.elements[g].0;
        (0..self.rank).map(|j| (0..self.rank).map(|k| m[j][k] * l[k]).sum()).collect()
    }

    pub fn sign(&self, g: usize) -> i64 {
        self.elements[g].1
    }

    pub fn orbit(&self, l: &[i64]) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = (0..self.order()).map(|g| self.apply(g, l)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Elements mapping the root set `gamma` onto itself.
    pub fn stabilizer_order(&self, rs: &RootSystem, gamma: &[usize]) -> usize {
        let set: HashSet<Vec<i64>> = gamma.iter().map(|&i| rs.root_labels(i).to_vec()).collect();
        (0..self.order())
            .filter(|&g| set.iter().all(|l| set.contains(&self.apply(g, l))))
            .count()
    }
}

/// `Σ_Δ (-1)^{|Δ|} [Σ Δ = η]` over every subset of the complement of `gamma`.
pub fn brute_subset_sums(rs: &RootSystem, gamma: &[usize]) -> HashMap<Vec<i64>, i64> {
    let comp: Vec<usize> = (0..rs.len()).filter(|i| !gamma.contains(i)).collect();
    assert!(comp.len() <= 16, "too many subsets");
    let n = rs.rank();
    let mut out: HashMap<Vec<i64>, i64> = HashMap::new();
    for mask in 0u32..(1 << comp.len()) {
        let mut eta = vec![0i64; n];
        for (b, &r) in comp.iter().enumerate() {
            if mask >> b & 1 == 1 {
                for (e, x) in eta.iter_mut().zip(rs.root_labels(r)) {
                    *e += x;
                }
            }
        }
        *out.entry(eta).or_insert(0) += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
    }
    out.retain(|_, v| *v != 0);
    out
}

/// `Σ_{w',w''∈W} sign(w'') V(w'(w''(λ+δ) - δ))`.
pub fn unreduced_double_sum(g: &LabelGroup, v: &HashMap<Vec<i64>, i64>, lambda: &[i64]) -> i64 {
    let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    let mut total = 0;
    for w2 in 0..g.order() {
        let x: Vec<i64> = g.apply(w2, &shifted).iter().map(|c| c - 1).collect();
        for w1 in 0..g.order() {
            total += g.sign(w2) * v.get(&g.apply(w1, &x)).copied().unwrap_or(0);
        }
    }
    total
}

/// Number of ways to write `target` (simple-root coordinates) as a sum of
/// positive roots.
pub struct Kostant {
    roots: Vec<Vec<i64>>,
    memo: HashMap<(Vec<i64>, usize), u64>,
}

impl Kostant {
    pub fn new(rs: &RootSystem) -> Self {
        let roots = (0..rs.n_positive())
            .map(|i| {
                rs.labels_to_root_coords(rs.root_labels(i))
                    .iter()
                    .map(|c| c.to_integer())
                    .collect()
            })
            .collect();
        Kostant {
            roots,
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, target: &[i64]) -> u64 {
        self.count_from(target.to_vec(), 0)
    }

    fn count_from(&mut self, t: Vec<i64>, k: usize) -> u64 {
        if t.iter().any(|&x| x < 0) {
            return 0;
        }
        if t.iter().all(|&x| x == 0) {
            return 1;
        }
        if k == self.roots.len() {
            return 0;
        }
        if let Some(&c) = self.memo.get(&(t.clone(), k)) {
            return c;
        }
        let mut total = 0;
        let mut cur = t.clone();
        loop {
            total += self.count_from(cur.clone(), k + 1);
            for (c, r) in cur.iter_mut().zip(&self.roots[k]) {
                *c -= r;
            }
            if cur.iter().any(|&x| x < 0) {
                break;
            }
        }
        self.memo.insert((t, k), total);
        total
    }
}

/// `m_λ(μ) = Σ_w sign(w) P(w(λ+δ) - (μ+δ))`.
pub fn kostant_multiplicity(rs: &RootSystem, g: &LabelGroup, p: &mut Kostant, lambda: &[i64], mu: &[i64]) -> i64 {
    let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    let mut total = 0i64;
    for w in 0..g.order() {
        let diff: Vec<i64> = g
            .apply(w, &shifted)
            .iter()
            .zip(mu)
            .map(|(a, b)| a - b - 1)
            .collect();
        let coords = rs.labels_to_root_coords(&diff);
        if coords.iter().all(|c| c.is_integer()) {
            let c: Vec<i64> = coords.iter().map(|c| c.to_integer()).collect();
            total += g.sign(w) * p.count(&c) as i64;
        }
    }
    total
}

/// Multiplicity of `V(c)` in `V(a) ⊗ V(b)` for `SU(2)` by multiplying characters
/// as Laurent polynomials and peeling off highest terms.
pub fn su2_tensor_multiplicity(a: i64, b: i64, c: i64) -> i64 {
    let ch = |n: i64| -> HashMap<i64, i64> { (0..=n).map(|k| (n - 2 * k, 1)).collect() };
    let (ca, cb) = (ch(a), ch(b));
    let mut prod: HashMap<i64, i64> = HashMap::new();
    for (x, m) in &ca {
        for (y, k) in &cb {
            *prod.entry(x + y).or_insert(0) += m * k;
        }
    }
    let mut mult = HashMap::new();
    while let Some(top) = prod.iter().filter(|(_, v)| **v != 0).map(|(k, _)| *k).max() {
        let m = prod[&top];
        mult.insert(top, m);
        for (x, _) in ch(top) {
            *prod.entry(x).or_insert(0) -= m;
        }
    }
    mult.get(&c).copied().unwrap_or(0)
}

/// Dominant label vectors with entries summing to at most `s`.
pub fn dominant_up_to(rank: usize, s: i64) -> Vec<DynkinLabels> {
    let mut out = vec![];
    let mut cur = vec![0i64; rank];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<DynkinLabels>) {
        if i == cur.len() {
            out.push(DynkinLabels(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, s, &mut cur, &mut out);
    out.sort_by_key(|l| (l.0.iter().sum::<i64>(), l.0.clone()));
    out
}

/// Whether `set` is closed under its own reflections.
pub fn brute_is_subsystem(rs: &RootSystem, g: &LabelGroup, set: &[usize]) -> bool {
    let labels: HashSet<Vec<i64>> = set.iter().map(|&i| rs.root_labels(i).to_vec()).collect();
    set.iter().all(|&a| {
        let la = rs.root_labels(a);
        set.iter().all(|&b| {
            let lb = rs.root_labels(b);
            let c = (Q::from_integer(2) * rs.pairing_labels(lb, la) / rs.norm2_labels(la)).to_integer();
            let img: Vec<i64> = lb.iter().zip(la).map(|(x, y)| x - c * y).collect();
            labels.contains(&img)
        })
    }) && g.rank > 0
}

/// Whether sums of two members that are roots stay in the set.
pub fn brute_is_closed(rs: &RootSystem, set: &[usize]) -> bool {
    let all: HashSet<Vec<i64>> = (0..rs.len()).map(|i| rs.root_labels(i).to_vec()).collect();
    let mine: HashSet<Vec<i64>> = set.iter().map(|&i| rs.root_labels(i).to_vec()).collect();
    set.iter().all(|&a| {
        set.iter().all(|&b| {
            let s: Vec<i64> = rs.root_labels(a).iter().zip(rs.root_labels(b)).map(|(x, y)| x + y).collect();
            !all.contains(&s) || mine.contains(&s)
        })
    })
}

/// Number of `W`-conjugacy classes of root subsystems, by exhausting subsets.
pub fn brute_class_count(rs: &RootSystem) -> usize {
    let g = LabelGroup::new(rs);
    let np = rs.n_positive();
    assert!(np <= 16);
    let mut keys = HashSet::new();
    for mask in 0u32..(1 << np) {
        let mut set: Vec<usize> = (0..np).filter(|b| mask >> b & 1 == 1).collect();
        set.extend(set.clone().iter().map(|&i| rs.negative(i)));
        if !brute_is_subsystem(rs, &g, &set) {
            continue;
        }
        let key = (0..g.order())
            .map(|w| {
                let mut img: Vec<Vec<i64>> = set.iter().map(|&i| g.apply(w, rs.root_labels(i))).collect();
                img.sort();
                img
            })
            .min()
            .unwrap_or_default();
        keys.insert(key);
    }
    keys.len()
}

/// Exhaustive search for `{c : c·β^∨ ∈ ker}` over integer combinations of the
/// kernel generators, reduced to its positive generator.
pub fn brute_pq(rs: &RootSystem, r: &[Vec<reftype::Q>], root: usize) -> reftype::Q {
    use num_integer::Integer;
    use num_traits::Zero;
    let v = rs.coroot_coords(root);
    let n = rs.rank();
    let j = v.iter().position(|&x| x != 0).unwrap();
    let mut g = Q::zero();
    let mut k = vec![-4i64; n];
    loop {
        let x: Vec<Q> = (0..n).map(|c| (0..n).map(|i| r[i][c] * k[i]).sum()).collect();
        let c = x[j] / v[j];
        if (0..n).all(|m| x[m] == c * v[m]) && !c.is_zero() {
            let c = if c < Q::zero() { -c } else { c };
            g = if g.is_zero() {
                c
            } else {
                let den = g.denom().lcm(c.denom());
                Q::new((g * den).to_integer().gcd(&(c * den).to_integer()), den)
            };
        }
        let mut i = 0;
        loop {
            if i == n {
                return g;
            }
            if k[i] < 4 {
                k[i] += 1;
                break;
            }
            k[i] = -4;
            i += 1;
        }
    }
}
