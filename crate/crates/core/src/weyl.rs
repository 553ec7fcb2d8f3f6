//! The Weyl group as a permutation group on the root indices.
//!
//! Each element also carries its action on Dynkin labels as an integer matrix,
//! so arbitrary weights can be transformed without going through the ambient
//! coordinates.

use crate::error::invalid;
use crate::rootsys::{RootSystem, WeightVec};
use crate::{Result, Q};
use std::collections::{HashMap, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// `perm[b]` is the index of `w(β_b)`.
    pub perm: Vec<u16>,
    pub sign: i8,
    pub length: usize,
    /// Row-major action on Dynkin labels: `labels(wλ) = M · labels(λ)`.
    matrix: Vec<i64>,
}

impl WeylElement {
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u16>, usize>,
    /// `left[i][w]` = index of `s_i ∘ w`
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
}

/// `σ_α(x) = x - 2k(x,α)/k(α,α) α`.
pub fn reflect(rs: &RootSystem, alpha: &WeightVec, x: &WeightVec) -> Result<WeightVec> {
    if rs.find(alpha).is_none() {
        return invalid(format!("{alpha} is not a root"));
    }
    let c = Q::from_integer(2) * rs.pairing(x, alpha)? / rs.pairing(alpha, alpha)?;
    Ok(x - &(c * alpha))
}

fn simple_label_matrix(cartan: &[Vec<i64>], i: usize) -> Vec<i64> {
    let n = cartan.len();
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        m[j * n + j] = 1;
        m[j * n + i] -= cartan[i][j];
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

impl WeylGroup {
    /// Breadth-first closure over the simple reflections.
    pub fn generate(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let m = rs.len();
        let simple_perm: Vec<Vec<u16>> = (0..n)
            .map(|i| {
                let a = rs.simple_index(i);
                (0..m).map(|b| rs.reflect_index(a, b) as u16).collect()
            })
            .collect();
        let simple_mat: Vec<Vec<i64>> = (0..n).map(|i| simple_label_matrix(rs.cartan(), i)).collect();

        let id_perm: Vec<u16> = (0..m as u16).collect();
        let mut id_mat = vec![0i64; n * n];
        (0..n).for_each(|i| id_mat[i * n + i] = 1);
        let mut elements = vec![WeylElement {
            perm: id_perm.clone(),
            sign: 1,
            length: 0,
            matrix: id_mat,
        }];
        let mut index = HashMap::new();
        index.insert(id_perm, 0usize);
        let mut left: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                let perm: Vec<u16> = elements[w]
                    .perm
                    .iter()
                    .map(|&k| simple_perm[i][k as usize])
                    .collect();
                let g = match index.get(&perm) {
                    Some(&g) => g,
                    None => {
                        let g = elements.len();
                        let e = &elements[w];
                        let el = WeylElement {
                            perm: perm.clone(),
                            sign: -e.sign,
                            length: e.length + 1,
                            matrix: mat_mul(&simple_mat[i], &e.matrix, n),
                        };
                        elements.push(el);
                        index.insert(perm, g);
                        queue.push_back(g);
                        g
                    }
                };
                if left[i].len() <= w {
                    left[i].resize(w + 1, u32::MAX);
                }
                left[i][w] = g as u32;
            }
        }
        let inverse = elements
            .iter()
            .map(|e| {
                let mut inv = vec![0u16; m];
                for (k, &v) in e.perm.iter().enumerate() {
                    inv[v as usize] = k as u16;
                }
                index[&inv] as u32
            })
            .collect();
        let generators = (0..n).map(|i| index[&simple_perm[i]]).collect();
        WeylGroup {
            rank: n,
            elements,
            index,
            left,
            inverse,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        &self.elements[w]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Indices of the simple reflections.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn sign(&self, w: usize) -> i64 {
        i64::from(self.elements[w].sign)
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    /// Index of `s_i ∘ w`.
    pub fn left_simple(&self, i: usize, w: usize) -> usize {
        self.left[i][w] as usize
    }

    /// Index of `a ∘ b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let pa = &self.elements[a].perm;
        let perm: Vec<u16> = self.elements[b]
            .perm
            .iter()
            .map(|&k| pa[k as usize])
            .collect();
        self.index[&perm]
    }

    pub fn find(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// The element `σ_β` for the root with index `beta`.
    pub fn reflection_element(&self, rs: &RootSystem, beta: usize) -> usize {
        let perm: Vec<u16> = (0..rs.len()).map(|b| rs.reflect_index(beta, b) as u16).collect();
        self.index[&perm]
    }

    /// Image of the root with index `b`.
    pub fn act_root(&self, w: usize, b: usize) -> usize {
        self.elements[w].perm[b] as usize
    }

    /// Action on integral Dynkin labels.
    pub fn act_labels(&self, w: usize, l: &[i64]) -> Vec<i64> {
        let n = self.rank;
        let m = &self.elements[w].matrix;
        (0..n)
            .map(|i| (0..n).map(|j| m[i * n + j] * l[j]).sum())
            .collect()
    }

    /// Action on rational Dynkin labels.
    pub fn act_labels_q(&self, w: usize, l: &[Q]) -> Vec<Q> {
        let n = self.rank;
        let m = &self.elements[w].matrix;
        (0..n)
            .map(|i| (0..n).map(|j| l[j] * m[i * n + j]).sum())
            .collect()
    }

    pub fn act(&self, rs: &RootSystem, w: usize, x: &WeightVec) -> Result<WeightVec> {
        let l = rs.labels_q(x)?;
        Ok(rs.from_labels_q(&self.act_labels_q(w, &l)))
    }

    /// Orbit of integral labels, by closure under simple reflections.
    pub fn orbit_labels(&self, rs: &RootSystem, l: &[i64]) -> Vec<Vec<i64>> {
        orbit_labels(rs, l)
    }

    pub fn orbit(&self, rs: &RootSystem, x: &WeightVec) -> Result<Vec<WeightVec>> {
        let l = rs.labels_q(x)?;
        let mut seen: Vec<Vec<Q>> = self
            .elements
            .iter()
            .enumerate()
            .map(|(w, _)| self.act_labels_q(w, &l))
            .collect();
        seen.sort();
        seen.dedup();
        Ok(seen.iter().map(|v| rs.from_labels_q(v)).collect())
    }

    /// `(dominant, w)` with `w(l) = dominant`.
    pub fn dominant_labels(&self, l: &[i64]) -> (Vec<i64>, usize) {
        let mut x = l.to_vec();
        let mut w = 0usize;
        while let Some(i) = x.iter().position(|&c| c < 0) {
            x = self.act_labels(self.generators[i], &x);
            w = self.left_simple(i, w);
        }
        (x, w)
    }

    pub fn dominant_representative(
        &self,
        rs: &RootSystem,
        x: &WeightVec,
    ) -> Result<(WeightVec, usize)> {
        let mut l = rs.labels_q(x)?;
        let mut w = 0usize;
        while let Some(i) = l.iter().position(|c| *c < Q::from_integer(0)) {
            l = self.act_labels_q(self.generators[i], &l);
            w = self.left_simple(i, w);
        }
        Ok((rs.from_labels_q(&l), w))
    }

    /// `W_Γ = { w : w(Γ) = Γ }`.
    pub fn setwise_stabilizer(&self, gamma: &[usize]) -> Vec<usize> {
        let m = self.elements[0].perm.len();
        let mut member = vec![false; m];
        gamma.iter().for_each(|&g| member[g] = true);
        (0..self.order())
            .filter(|&w| {
                let p = &self.elements[w].perm;
                gamma.iter().all(|&g| member[p[g] as usize])
            })
            .collect()
    }

    fn is_subgroup(&self, h: &[usize]) -> bool {
        let set: std::collections::HashSet<usize> = h.iter().copied().collect();
        set.contains(&0)
            && h.iter()
                .all(|&a| h.iter().all(|&b| set.contains(&self.compose(a, b))))
    }

    /// One representative per right coset `H w`, the first met in BFS order.
    pub fn coset_representatives(&self, h: &[usize]) -> Result<Vec<usize>> {
        if !self.is_subgroup(h) {
            return invalid("element list is not a subgroup");
        }
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::with_capacity(self.order() / h.len());
        for w in 0..self.order() {
            if covered[w] {
                continue;
            }
            reps.push(w);
            for &x in h {
                covered[self.compose(x, w)] = true;
            }
        }
        Ok(reps)
    }
}

/// Orbit of integral labels under the simple reflections, without needing the group.
pub fn orbit_labels(rs: &RootSystem, l: &[i64]) -> Vec<Vec<i64>> {
    let cartan = rs.cartan();
    let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    seen.insert(l.to_vec());
    let mut stack = vec![l.to_vec()];
    while let Some(x) = stack.pop() {
        for (i, row) in cartan.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            let y: Vec<i64> = x.iter().zip(row).map(|(a, b)| a - x[i] * b).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort();
    out
}

pub fn generate_group(rs: &RootSystem) -> WeylGroup {
    WeylGroup::generate(rs)
}
