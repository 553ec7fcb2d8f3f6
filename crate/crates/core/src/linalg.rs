//! Small dense exact linear algebra: rational inversion and a Smith normal form
//! over the integers.

use crate::error::invalid;
use crate::{Result, Q};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type QMatrix = Vec<Vec<Q>>;
pub type IMatrix = Vec<Vec<i64>>;

pub fn identity_q(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn identity_i(n: usize) -> IMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Gauss-Jordan inverse of a square rational matrix.
pub fn inverse(m: &QMatrix) -> Result<QMatrix> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return invalid("matrix is not square");
    }
    let mut a = m.clone();
    let mut inv = identity_q(n);
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return invalid("matrix is singular"),
        };
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Ok(inv)
}

pub fn transpose<T: Copy>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

/// `v * M` for a row vector `v`.
pub fn row_times(v: &[Q], m: &QMatrix) -> Vec<Q> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).map(|(x, row)| *x * row[j]).sum())
        .collect()
}

/// Smith normal form `U * A * V = S` of an integer matrix.
///
/// `U` and `V` are unimodular; `S` is diagonal with `s_1 | s_2 | ...` and
/// nonnegative entries.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IMatrix,
    pub s: IMatrix,
    pub v: IMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.len().min(self.s.first().map_or(0, Vec::len)))
            .map(|i| self.s[i][i])
            .collect()
    }
}

pub fn smith_normal_form(a: &IMatrix) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut s = a.clone();
    let mut u = identity_i(rows);
    let mut v = identity_i(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in s.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if *x != 0 && best.is_none_or(|(bi, bj)| x.abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Smith { u, s, v };
            };
            s.swap(t, pi);
            u.swap(t, pi);
            for row in s.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }

            let p = s[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = Integer::div_floor(&s[i][t], &p);
                if f != 0 {
                    for j in 0..cols {
                        s[i][j] -= f * s[t][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= f * u[t][j];
                    }
                }
                clean &= s[i][t] == 0;
            }
            for j in t + 1..cols {
                let f = Integer::div_floor(&s[t][j], &p);
                if f != 0 {
                    for i in 0..rows {
                        s[i][j] -= f * s[i][t];
                    }
                    for i in 0..cols {
                        v[i][j] -= f * v[i][t];
                    }
                }
                clean &= s[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| s[i][j] % p != 0));
            match offending {
                Some(i) => {
                    for j in 0..cols {
                        let x = s[i][j];
                        s[t][j] += x;
                    }
                    for j in 0..rows {
                        let x = u[i][j];
                        u[t][j] += x;
                    }
                }
                None => break,
            }
        }
        if s[t][t] < 0 {
            for j in 0..cols {
                s[t][j] = -s[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
    }
    Smith { u, s, v }
}

pub fn mat_mul_i(a: &IMatrix, b: &IMatrix) -> IMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Least common multiple of the denominators in a rational matrix.
pub fn common_denominator(m: &QMatrix) -> i64 {
    m.iter()
        .flatten()
        .fold(1i64, |acc, x| acc.lcm(x.denom()))
}

pub fn is_integral(x: &Q) -> bool {
    x.is_integer()
}

pub fn abs_det_i(m: &IMatrix) -> i64 {
    smith_normal_form(m).diagonal().iter().product::<i64>().abs()
}
