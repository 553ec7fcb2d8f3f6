//! The kernel of the exponential map and the root data it induces.
//!
//! Kernels are given by a rational matrix `R` whose rows are generators of
//! `ker(exp)` written over the simple coroots (scaled by `2πi`). A torus point
//! `exp(A + iB)` is given by the coordinates of `A/2πi` and `B` over the same
//! basis, which keeps every test rational.

use crate::error::invalid;
use crate::linalg::{self, QMatrix};
use crate::rootsys::{Family, LieType, RootSystem};
use crate::subsys::{is_closed, RootSubsystem};
use crate::{Error, Result, Q};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpKernel {
    pub name: String,
    pub r: QMatrix,
}

impl ExpKernel {
    /// Validates a user matrix: square, nonsingular, and containing the coroot
    /// lattice.
    pub fn from_matrix(name: &str, r: QMatrix, rank: usize) -> Result<Self> {
        if r.len() != rank || r.iter().any(|row| row.len() != rank) {
            return invalid(format!("kernel matrix must be {rank}x{rank}"));
        }
        let inv = linalg::inverse(&r)?;
        if inv.iter().flatten().any(|x| !x.is_integer()) {
            return invalid("kernel lattice does not contain the coroot lattice");
        }
        Ok(ExpKernel {
            name: name.to_string(),
            r,
        })
    }

    pub fn simply_connected(rank: usize) -> Self {
        ExpKernel {
            name: "sc".to_string(),
            r: linalg::identity_q(rank),
        }
    }

    /// `SO(2n+1)`: the coroot lattice extended by half the short simple
    /// coroot. For `C_2` this is the same group written with the short root
    /// first.
    pub fn so_odd(t: LieType) -> Result<Self> {
        let n = t.rank();
        let node = match (t.family(), n) {
            (Family::B, _) => n - 1,
            (Family::C, 2) => 0,
            _ => return invalid(format!("so-odd preset is not defined for {t}")),
        };
        let mut r = linalg::identity_q(n);
        r[node][node] = Q::new(1, 2);
        Ok(ExpKernel {
            name: "so-odd".to_string(),
            r,
        })
    }

    /// Whitespace separated `num/den` entries, one row per generator; `#`
    /// starts a comment.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let rows: Vec<Vec<Q>> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| l.split_whitespace().map(parse_q).collect::<Result<Vec<Q>>>())
            .collect::<Result<_>>()?;
        Self::from_matrix("file", rows, rank)
    }

    pub fn load(path: &Path, rank: usize) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut k = Self::parse(&text, rank)?;
        k.name = path.display().to_string();
        Ok(k)
    }
}

/// `sc`, `so-odd`, or a path to a matrix file.
pub fn kernel_preset(name: &str, t: LieType) -> Result<ExpKernel> {
    match name {
        "sc" | "simply-connected" => Ok(ExpKernel::simply_connected(t.rank())),
        "so-odd" => ExpKernel::so_odd(t),
        path => ExpKernel::load(Path::new(path), t.rank()),
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PQRatio {
    pub p: i64,
    pub q: i64,
}

impl PQRatio {
    pub const ONE: PQRatio = PQRatio { p: 1, q: 1 };

    /// `q/p`, the factor applied to the root.
    pub fn scale(&self) -> Q {
        Q::new(self.q, self.p)
    }
}

impl fmt::Display for PQRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Generator `p/q` of `{c : c·β^∨ ∈ ker(exp)}`.
pub fn pq_ratio(rs: &RootSystem, kernel: &ExpKernel, root: usize) -> Result<PQRatio> {
    if root >= rs.len() {
        return invalid(format!("root index {root} out of range"));
    }
    if kernel.r.len() != rs.rank() {
        return invalid("kernel rank does not match the root system");
    }
    let d = linalg::common_denominator(&kernel.r);
    let scaled: Vec<Vec<i64>> = kernel
        .r
        .iter()
        .map(|row| row.iter().map(|x| (*x * d).to_integer()).collect())
        .collect();
    let snf = linalg::smith_normal_form(&scaled);
    let v = rs.coroot_coords(root);
    let n = rs.rank();
    let diag = snf.diagonal();
    let mut t = 1i64;
    for i in 0..n {
        let u: i64 = (0..n).map(|k| v[k] * snf.v[k][i]).sum();
        let s = diag[i];
        if s == 0 {
            return invalid("kernel matrix is singular");
        }
        t = t.lcm(&(s / s.gcd(&u)));
    }
    let c = Q::new(t, d);
    Ok(PQRatio {
        p: *c.numer(),
        q: *c.denom(),
    })
}

/// `(p, q)` for every root, in root order.
pub fn pq_map(rs: &RootSystem, kernel: &ExpKernel) -> Result<Vec<PQRatio>> {
    (0..rs.len()).map(|i| pq_ratio(rs, kernel, i)).collect()
}

/// `exp(A + B)` with `A` imaginary and `B` real, both given by their simple
/// coroot coordinates; `A` is measured in units of `2πi`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TorusPoint {
    pub a: Vec<Q>,
    pub b: Vec<Q>,
}

impl TorusPoint {
    pub fn identity(rank: usize) -> Self {
        TorusPoint {
            a: vec![Q::zero(); rank],
            b: vec![Q::zero(); rank],
        }
    }
}

impl FromStr for TorusPoint {
    type Err = Error;

    /// `A=1/4,0;B=0,0`; a missing part is zero.
    fn from_str(s: &str) -> Result<Self> {
        let mut a = None;
        let mut b = None;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, vals) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected KEY=values in `{part}`")))?;
            let v = vals.split(',').map(parse_q).collect::<Result<Vec<_>>>()?;
            match key.trim() {
                "A" | "a" => a = Some(v),
                "B" | "b" => b = Some(v),
                k => return Err(Error::Parse(format!("unknown point component `{k}`"))),
            }
        }
        let n = a.as_ref().or(b.as_ref()).map_or(0, Vec::len);
        let a = a.unwrap_or_else(|| vec![Q::zero(); n]);
        let b = b.unwrap_or_else(|| vec![Q::zero(); n]);
        if a.len() != b.len() {
            return Err(Error::Parse("A and B have different lengths".into()));
        }
        Ok(TorusPoint { a, b })
    }
}

/// `α ∈ Γ_x` iff `(q/p)·α(A)/2πi ∈ ℤ` and `α(B) = 0`.
pub fn root_fixes(rs: &RootSystem, pq: PQRatio, root: usize, x: &TorusPoint) -> bool {
    let l = rs.root_labels(root);
    let a: Q = l.iter().zip(&x.a).map(|(c, y)| *y * *c).sum();
    let b: Q = l.iter().zip(&x.b).map(|(c, y)| *y * *c).sum();
    (a * pq.scale()).is_integer() && b.is_zero()
}

pub fn gamma_x(rs: &RootSystem, pq: &[PQRatio], x: &TorusPoint) -> Result<RootSubsystem> {
    if x.a.len() != rs.rank() || x.b.len() != rs.rank() {
        return invalid(format!("torus point must have {} coordinates", rs.rank()));
    }
    if pq.len() != rs.len() {
        return invalid("p/q table does not match the root system");
    }
    let roots: Vec<usize> = (0..rs.len())
        .filter(|&i| root_fixes(rs, pq[i], i, x))
        .collect();
    let closed = is_closed(rs, &roots);
    Ok(RootSubsystem {
        roots,
        closed,
        label: String::new(),
    })
}

/// Whether `q/p` times every root pairs integrally with the kernel, i.e. the
/// characters `e_{(q/p)α}` exist.
pub fn characters_exist(rs: &RootSystem, kernel: &ExpKernel, pq: &[PQRatio]) -> bool {
    (0..rs.len()).all(|i| {
        let l = rs.root_labels(i);
        kernel.r.iter().all(|row| {
            let s: Q = row.iter().zip(l).map(|(r, c)| *r * *c).sum();
            (s * pq[i].scale()).is_integer()
        })
    }) && pq.iter().all(|x| x.p.gcd(&x.q).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(LieType::new(f, n).unwrap())
    }

    /// `{Σ r_i k_i}` over a box of integer `k`, restricted to multiples of the
    /// coroot, reduced to its positive generator.
    fn brute_pq(rs: &RootSystem, kernel: &ExpKernel, root: usize) -> Q {
        let v = rs.coroot_coords(root);
        let n = rs.rank();
        let j = v.iter().position(|&x| x != 0).unwrap();
        let mut g = Q::zero();
        let range: Vec<i64> = (-4..=4).collect();
        let mut k = vec![-4i64; n];
        loop {
            let x: Vec<Q> = (0..n)
                .map(|c| (0..n).map(|i| kernel.r[i][c] * k[i]).sum())
                .collect();
            let c = x[j] / v[j];
            if (0..n).all(|m| x[m] == c * v[m]) && !c.is_zero() {
                let c = if c < Q::zero() { -c } else { c };
                g = if g.is_zero() {
                    c
                } else {
                    let den = g.denom().lcm(c.denom());
                    let a = (g * den).to_integer();
                    let b = (c * den).to_integer();
                    Q::new(a.gcd(&b), den)
                };
            }
            let mut i = 0;
            loop {
                if i == n {
                    return g;
                }
                if k[i] < *range.last().unwrap() {
                    k[i] += 1;
                    break;
                }
                k[i] = -4;
                i += 1;
            }
        }
    }

    #[test]
    fn simply_connected_is_one() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let r = rs(f, n);
            let k = ExpKernel::simply_connected(n);
            assert!(pq_map(&r, &k).unwrap().iter().all(|x| *x == PQRatio::ONE));
        }
    }

    #[test]
    fn so5_short_and_long() {
        for (f, short_node) in [(Family::B, 1usize), (Family::C, 0)] {
            let r = rs(f, 2);
            let k = ExpKernel::so_odd(r.lie_type()).unwrap();
            assert_eq!(k.r[short_node][short_node], Q::new(1, 2));
            for i in 0..r.len() {
                let pq = pq_ratio(&r, &k, i).unwrap();
                let short = r.root_length2(i) == Q::from_integer(2);
                let want = if short { PQRatio { p: 1, q: 2 } } else { PQRatio::ONE };
                assert_eq!(pq, want, "root {i}");
            }
        }
    }

    #[test]
    fn snf_agrees_with_box_search() {
        let cases = [
            (rs(Family::B, 2), ExpKernel::so_odd(LieType::new(Family::B, 2).unwrap()).unwrap()),
            (rs(Family::B, 3), ExpKernel::so_odd(LieType::new(Family::B, 3).unwrap()).unwrap()),
            (
                rs(Family::A, 2),
                ExpKernel::parse("1/3 2/3\n0 1", 2).unwrap(),
            ),
        ];
        for (r, k) in &cases {
            for i in 0..r.len() {
                let pq = pq_ratio(r, k, i).unwrap();
                assert_eq!(Q::new(pq.p, pq.q), brute_pq(r, k, i));
            }
        }
    }

    #[test]
    fn kernel_validation() {
        assert!(ExpKernel::parse("1 0\n2 0", 2).is_err());
        assert!(ExpKernel::parse("2 0\n0 1", 2).is_err());
        assert!(ExpKernel::parse("1 0", 2).is_err());
        assert!(ExpKernel::parse("1/2 x\n0 1", 2).is_err());
        let id = ExpKernel::parse("1 0 # comment\n0 1", 2).unwrap();
        assert_eq!(id.r, ExpKernel::simply_connected(2).r);
        assert!(ExpKernel::so_odd(LieType::new(Family::A, 2).unwrap()).is_err());
    }

    #[test]
    fn c2_example_points() {
        let r = rs(Family::C, 2);
        let long: Vec<usize> = (0..r.len()).filter(|&i| r.root_length2(i) == Q::from_integer(4)).collect();
        let short: Vec<usize> = (0..r.len()).filter(|&i| r.root_length2(i) == Q::from_integer(2)).collect();

        let sc = pq_map(&r, &ExpKernel::simply_connected(2)).unwrap();
        let x: TorusPoint = "A=0,1/2".parse().unwrap();
        assert_eq!(gamma_x(&r, &sc, &x).unwrap().roots, long);

        let so = pq_map(&r, &ExpKernel::so_odd(r.lie_type()).unwrap()).unwrap();
        let y: TorusPoint = "A=1/4,0".parse().unwrap();
        let g = gamma_x(&r, &so, &y).unwrap();
        assert_eq!(g.roots, short);
        assert!(!g.closed);

        let id = gamma_x(&r, &sc, &TorusPoint::identity(2)).unwrap();
        assert_eq!(id.len(), r.len());
    }

    #[test]
    fn point_parsing() {
        let p: TorusPoint = "A=1/2,0;B=0,3".parse().unwrap();
        assert_eq!(p.b[1], Q::from_integer(3));
        assert!("A=1,2;B=1".parse::<TorusPoint>().is_err());
        assert!("Z=1".parse::<TorusPoint>().is_err());
        assert!("A=1/0".parse::<TorusPoint>().is_err());
    }

    #[test]
    fn characters_are_defined() {
        let r = rs(Family::B, 3);
        let k = ExpKernel::so_odd(r.lie_type()).unwrap();
        let pq = pq_map(&r, &k).unwrap();
        assert!(characters_exist(&r, &k, &pq));
    }
}
