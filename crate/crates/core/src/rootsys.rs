//! Classical root systems in orthonormal coordinate models.
//!
//! Conventions: simple roots follow Bourbaki numbering, so that
//! `{α_1, …, α_{n-1}}` spans a subsystem of type `A_{n-1}` and the fork nodes of
//! `D_n` are `n-1` and `n`. The form is scaled so that short roots have squared
//! length 2.

use crate::error::invalid;
use crate::linalg::{self, QMatrix};
use crate::{Error, Result, Q};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest rank accepted by [`LieType::new`]; keeps full Weyl group storage small.
pub const MAX_RANK: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => invalid(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        };
        if rank < min || rank > MAX_RANK {
            return invalid(format!(
                "rank {rank} out of range for family {} (allowed {min}..={MAX_RANK})",
                family.letter()
            ));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// `|Σ|` in closed form.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
        }
    }

    /// `|W|` in closed form.
    pub fn weyl_order(&self) -> usize {
        let n = self.rank;
        let fact: usize = (1..=n).product();
        match self.family {
            Family::A => fact * (n + 1),
            Family::B | Family::C => fact << n,
            Family::D => fact << (n - 1),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A vector of the ambient rational space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(pub Vec<Q>);

impl WeightVec {
    pub fn zero(dim: usize) -> Self {
        WeightVec(vec![Q::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVec(v.iter().map(|&x| Q::from_integer(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn unit(dim: usize, i: usize, c: i64) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Q::from_integer(c);
        v
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&WeightVec> for Q {
    type Output = WeightVec;
    fn mul(self, v: &WeightVec) -> WeightVec {
        WeightVec(v.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dynkin labels `2k(λ,α_i)/k(α_i,α_i)` of an integral weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinLabels(pub Vec<i64>);

impl DynkinLabels {
    pub fn zero(rank: usize) -> Self {
        DynkinLabels(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Compact form used by the reference tables: `"1011"` when every label is
    /// a single nonnegative digit, space separated otherwise.
    pub fn compact(&self) -> String {
        if self.0.iter().all(|&x| (0..10).contains(&x)) {
            self.0.iter().map(|x| x.to_string()).collect()
        } else {
            self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// The root kinds used to build the subsystem bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedRoot {
    /// `α_l + … + α_n`
    A,
    /// `α_l + 2(α_{l+1} + … + α_n)`
    B,
    /// `2(α_l + … + α_{n-1}) + α_n`
    C,
    /// `α_l + 2(α_{l+1} + … + α_{n-1}) + α_n`
    CTilde,
    /// `α_l + 2(α_{l+1} + … + α_{n-2}) + α_{n-1} + α_n`
    D,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    /// `k(x, y) = scale * <x, y>` in the ambient coordinates.
    scale: Q,
    simple: Vec<WeightVec>,
    roots: Vec<WeightVec>,
    /// coefficients of each root over the simple roots
    root_coords: Vec<Vec<i64>>,
    root_labels: Vec<Vec<i64>>,
    n_positive: usize,
    cartan: Vec<Vec<i64>>,
    fundamental: Vec<WeightVec>,
    /// `k(ω_i, ω_j)`
    weight_gram: QMatrix,
    /// `(A^T)^{-1}`: Dynkin labels to coordinates over the simple roots
    labels_to_root_coords: QMatrix,
    delta: WeightVec,
    by_labels: HashMap<Vec<i64>, usize>,
    /// `reflection[a][b]` = index of `σ_a(β_b)`
    reflection: Vec<Vec<u16>>,
    /// `coroot_pairing[a][b]` = `2k(β_b, β_a)/k(β_a, β_a)`
    coroot_pairing: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank();
        let dim = lie_type.ambient_dim();
        let e = |i: usize, c: i64| WeightVec::unit(dim, i, c);

        let mut simple: Vec<WeightVec> = (0..n.saturating_sub(1))
            .map(|i| &e(i, 1) + &e(i + 1, -1))
            .collect();
        match lie_type.family() {
            Family::A => simple.push(&e(n - 1, 1) + &e(n, -1)),
            Family::B => simple.push(e(n - 1, 1)),
            Family::C => simple.push(e(n - 1, 2)),
            Family::D => simple.push(&e(n - 2, 1) + &e(n - 1, 1)),
        }

        let mut all: Vec<WeightVec> = Vec::new();
        match lie_type.family() {
            Family::A => {
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            all.push(&e(i, 1) + &e(j, -1));
                        }
                    }
                }
            }
            family => {
                for i in 0..n {
                    for j in i + 1..n {
                        for si in [1, -1] {
                            for sj in [1, -1] {
                                all.push(&e(i, si) + &e(j, sj));
                            }
                        }
                    }
                    match family {
                        Family::B => all.extend([e(i, 1), e(i, -1)]),
                        Family::C => all.extend([e(i, 2), e(i, -2)]),
                        _ => {}
                    }
                }
            }
        }

        let scale = if lie_type.family() == Family::B {
            Q::from_integer(2)
        } else {
            Q::one()
        };
        let dot = |a: &WeightVec, b: &WeightVec| -> Q {
            scale * a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum::<Q>()
        };
        let label_of = |x: &WeightVec, s: &WeightVec| -> Q {
            Q::from_integer(2) * dot(x, s) / dot(s, s)
        };

        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| label_of(a, b).to_integer()).collect())
            .collect();
        let cartan_q: QMatrix = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        let cartan_inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let labels_to_root_coords =
            linalg::inverse(&linalg::transpose(&cartan_q)).expect("Cartan matrix is invertible");

        let fundamental: Vec<WeightVec> = cartan_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&simple)
                    .fold(WeightVec::zero(dim), |acc, (c, a)| &acc + &(*c * a))
            })
            .collect();
        let weight_gram: QMatrix = fundamental
            .iter()
            .map(|a| fundamental.iter().map(|b| dot(a, b)).collect())
            .collect();

        let coords_of = |x: &WeightVec| -> (Vec<i64>, Vec<i64>) {
            let labels: Vec<Q> = simple.iter().map(|s| label_of(x, s)).collect();
            let coords = linalg::row_times(&labels, &linalg::transpose(&labels_to_root_coords));
            (
                coords.iter().map(|c| c.to_integer()).collect(),
                labels.iter().map(|c| c.to_integer()).collect(),
            )
        };

        let mut positive: Vec<(Vec<i64>, Vec<i64>, WeightVec)> = all
            .iter()
            .filter_map(|r| {
                let (c, l) = coords_of(r);
                c.iter().all(|&x| x >= 0).then(|| (c, l, r.clone()))
            })
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let n_positive = positive.len();

        let mut roots = Vec::with_capacity(2 * n_positive);
        let mut root_coords = Vec::with_capacity(2 * n_positive);
        let mut root_labels = Vec::with_capacity(2 * n_positive);
        for (c, l, r) in &positive {
            roots.push(r.clone());
            root_coords.push(c.clone());
            root_labels.push(l.clone());
        }
        for (c, l, r) in &positive {
            roots.push(-r);
            root_coords.push(c.iter().map(|x| -x).collect());
            root_labels.push(l.iter().map(|x| -x).collect());
        }
        let by_labels: HashMap<Vec<i64>, usize> = root_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();

        let half = Q::new(1, 2);
        let delta = half
            * &roots[..n_positive]
                .iter()
                .fold(WeightVec::zero(dim), |acc, r| &acc + r);

        let m = roots.len();
        let mut coroot_pairing = vec![vec![0i64; m]; m];
        let mut reflection = vec![vec![0u16; m]; m];
        for a in 0..m {
            for b in 0..m {
                let c = label_of(&roots[b], &roots[a]).to_integer();
                coroot_pairing[a][b] = c;
                let img: Vec<i64> = root_labels[b]
                    .iter()
                    .zip(&root_labels[a])
                    .map(|(x, y)| x - c * y)
                    .collect();
                reflection[a][b] = by_labels[&img] as u16;
            }
        }

        RootSystem {
            lie_type,
            scale,
            simple,
            roots,
            root_coords,
            root_labels,
            n_positive,
            cartan,
            fundamental,
            weight_gram,
            labels_to_root_coords,
            delta,
            by_labels,
            reflection,
            coroot_pairing,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.simple
    }

    pub fn roots(&self) -> &[WeightVec] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn n_positive(&self) -> usize {
        self.n_positive
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_positive
    }

    /// Index of `-β_idx`.
    pub fn negative(&self, idx: usize) -> usize {
        if idx < self.n_positive {
            idx + self.n_positive
        } else {
            idx - self.n_positive
        }
    }

    /// Index of the simple root `α_{i+1}` (0-based `i`).
    pub fn simple_index(&self, i: usize) -> usize {
        self.by_labels[&self.cartan[i]]
    }

    pub fn root_coords(&self, idx: usize) -> &[i64] {
        &self.root_coords[idx]
    }

    pub fn root_labels(&self, idx: usize) -> &[i64] {
        &self.root_labels[idx]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[WeightVec] {
        &self.fundamental
    }

    pub fn delta(&self) -> &WeightVec {
        &self.delta
    }

    pub fn delta_labels(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// Root index from Dynkin labels.
    pub fn find_by_labels(&self, labels: &[i64]) -> Option<usize> {
        self.by_labels.get(labels).copied()
    }

    pub fn find(&self, x: &WeightVec) -> Option<usize> {
        let labels = self.to_labels(x).ok()?;
        self.find_by_labels(&labels.0)
    }

    /// Index of `σ_a(β_b)`.
    pub fn reflect_index(&self, a: usize, b: usize) -> usize {
        self.reflection[a][b] as usize
    }

    /// `2k(β_b, β_a)/k(β_a, β_a)`.
    pub fn coroot_pairing(&self, a: usize, b: usize) -> i64 {
        self.coroot_pairing[a][b]
    }

    /// Index of `β_a + β_b` when it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.root_labels[a]
            .iter()
            .zip(&self.root_labels[b])
            .map(|(x, y)| x + y)
            .collect();
        self.find_by_labels(&s)
    }

    /// Squared length `k(β, β)` of a root.
    pub fn root_length2(&self, idx: usize) -> Q {
        let r = &self.roots[idx];
        self.form(r, r)
    }

    fn form(&self, a: &WeightVec, b: &WeightVec) -> Q {
        self.scale * a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum::<Q>()
    }

    fn check_dim(&self, x: &WeightVec) -> Result<()> {
        if x.dim() != self.lie_type.ambient_dim() {
            return invalid(format!(
                "vector of dimension {} in ambient space of dimension {}",
                x.dim(),
                self.lie_type.ambient_dim()
            ));
        }
        Ok(())
    }

    /// The invariant form `k`.
    pub fn pairing(&self, a: &WeightVec, b: &WeightVec) -> Result<Q> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.form(a, b))
    }

    /// `k` evaluated on two weights given by (possibly rational) Dynkin labels.
    pub fn pairing_labels(&self, a: &[i64], b: &[i64]) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y != 0 {
                    s += self.weight_gram[i][j] * (x * y);
                }
            }
        }
        s
    }

    /// `‖λ‖²` for a weight given by Dynkin labels.
    pub fn norm2_labels(&self, a: &[i64]) -> Q {
        self.pairing_labels(a, a)
    }

    /// Rational Dynkin labels of an arbitrary vector.
    pub fn labels_q(&self, x: &WeightVec) -> Result<Vec<Q>> {
        self.check_dim(x)?;
        Ok(self
            .simple
            .iter()
            .map(|s| Q::from_integer(2) * self.form(x, s) / self.form(s, s))
            .collect())
    }

    pub fn to_labels(&self, x: &WeightVec) -> Result<DynkinLabels> {
        let q = self.labels_q(x)?;
        if q.iter().any(|c| !c.is_integer()) {
            let shown: Vec<String> = q.iter().map(|c| c.to_string()).collect();
            return Err(Error::NonLatticeWeight(shown.join(",")));
        }
        Ok(DynkinLabels(q.iter().map(|c| c.to_integer()).collect()))
    }

    pub fn from_labels(&self, l: &DynkinLabels) -> Result<WeightVec> {
        if l.0.len() != self.rank() {
            return invalid(format!("expected {} labels, got {}", self.rank(), l.0.len()));
        }
        Ok(self.from_labels_unchecked(&l.0))
    }

    /// Ambient vector with the given rational Dynkin labels.
    pub fn from_labels_q(&self, l: &[Q]) -> WeightVec {
        l.iter()
            .zip(&self.fundamental)
            .fold(WeightVec::zero(self.lie_type.ambient_dim()), |acc, (c, w)| {
                &acc + &(*c * w)
            })
    }

    fn from_labels_unchecked(&self, l: &[i64]) -> WeightVec {
        l.iter()
            .zip(&self.fundamental)
            .fold(WeightVec::zero(self.lie_type.ambient_dim()), |acc, (c, w)| {
                &acc + &(Q::from_integer(*c) * w)
            })
    }

    /// Coordinates over the simple roots of a weight given by labels.
    pub fn labels_to_root_coords(&self, l: &[i64]) -> Vec<Q> {
        (0..self.rank())
            .map(|i| {
                l.iter()
                    .enumerate()
                    .map(|(j, x)| self.labels_to_root_coords[i][j] * x)
                    .sum()
            })
            .collect()
    }

    /// `α^∨ = 2α/k(α,α)`.
    pub fn dual_root(&self, alpha: &WeightVec) -> Result<WeightVec> {
        self.check_dim(alpha)?;
        if self.find(alpha).is_none() {
            return invalid(format!("{alpha} is not a root"));
        }
        Ok((Q::from_integer(2) / self.form(alpha, alpha)) * alpha)
    }

    /// Coefficients of `β_idx^∨` over the simple coroots; always integral.
    pub fn coroot_coords(&self, idx: usize) -> Vec<i64> {
        let len = self.root_length2(idx);
        self.root_coords[idx]
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let s = self.root_length2(self.simple_index(j));
                (Q::from_integer(*c) * s / len).to_integer()
            })
            .collect()
    }

    /// Combination of simple roots given by its coefficients.
    pub fn combination(&self, coeffs: &[i64]) -> WeightVec {
        coeffs
            .iter()
            .zip(&self.simple)
            .fold(WeightVec::zero(self.lie_type.ambient_dim()), |acc, (c, a)| {
                &acc + &(Q::from_integer(*c) * a)
            })
    }

    /// Coefficients (over the simple roots) of the named root with 1-based
    /// index `l`.
    pub fn named_root_coords(&self, kind: NamedRoot, l: usize) -> Result<Vec<i64>> {
        let n = self.rank();
        let ok = match kind {
            NamedRoot::A => (1..=n).contains(&l),
            NamedRoot::B | NamedRoot::C | NamedRoot::CTilde => (1..n).contains(&l),
            NamedRoot::D => l >= 1 && l + 2 < n,
        };
        if !ok {
            return invalid(format!("index {l} out of range for named root {kind:?} in rank {n}"));
        }
        let mut c = vec![0i64; n];
        let i = l - 1;
        match kind {
            NamedRoot::A => c[i..].iter_mut().for_each(|x| *x = 1),
            NamedRoot::B => {
                c[i] = 1;
                c[i + 1..].iter_mut().for_each(|x| *x = 2);
            }
            NamedRoot::C => {
                c[i..n - 1].iter_mut().for_each(|x| *x = 2);
                c[n - 1] = 1;
            }
            NamedRoot::CTilde => {
                c[i] = 1;
                c[i + 1..n - 1].iter_mut().for_each(|x| *x = 2);
                c[n - 1] = 1;
            }
            NamedRoot::D => {
                c[i] = 1;
                c[i + 1..n - 2].iter_mut().for_each(|x| *x = 2);
                c[n - 2] = 1;
                c[n - 1] = 1;
            }
        }
        Ok(c)
    }

    pub fn named_root(&self, kind: NamedRoot, l: usize) -> Result<WeightVec> {
        let c = self.named_root_coords(kind, l)?;
        let v = self.combination(&c);
        if self.find(&v).is_none() {
            return invalid(format!(
                "named root {kind:?}_{l} is not a root of {}",
                self.lie_type
            ));
        }
        Ok(v)
    }

    /// Index of the named root.
    pub fn named_root_index(&self, kind: NamedRoot, l: usize) -> Result<usize> {
        let v = self.named_root(kind, l)?;
        Ok(self.find(&v).expect("checked by named_root"))
    }
}

/// Builds the root system of a classical type.
pub fn build_root_system(t: LieType) -> RootSystem {
    RootSystem::new(t)
}

/// Lexicographically ordered, dominant test weights are often needed in
/// rational form; this converts labels to the ambient realization.
pub fn weight_from_labels(rs: &RootSystem, labels: &[i64]) -> Result<WeightVec> {
    rs.from_labels(&DynkinLabels(labels.to_vec()))
}

/// `Σ` regenerated by closing the simple roots under simple reflections.
/// Independent of the coordinate model and used as a cross-check.
pub fn close_under_simple_reflections(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let cartan = rs.cartan();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = cartan.iter().cloned().collect();
    let mut stack: Vec<Vec<i64>> = seen.iter().cloned().collect();
    while let Some(x) = stack.pop() {
        for i in 0..n {
            let c = x[i];
            let y: Vec<i64> = x.iter().zip(&cartan[i]).map(|(a, b)| a - c * b).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}
