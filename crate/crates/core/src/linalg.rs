//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::{q, Q};

pub type QMatrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn from_int(m: &[Vec<i64>]) -> QMatrix {
    m.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
}

pub fn mat_vec(m: &QMatrix, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(Q::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &QMatrix) -> QMatrix {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// Column `j` of `m`.
pub fn column(m: &QMatrix, j: usize) -> Vec<Q> {
    m.iter().map(|row| row[j].clone()).collect()
}

/// Builds a matrix whose columns are the given vectors.
pub fn from_columns(cols: &[Vec<Q>]) -> QMatrix {
    let n = cols.first().map_or(0, |c| c.len());
    (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &QMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

pub fn determinant(m: &QMatrix) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let d = &f * &a[c][j];
                a[i][j] -= d;
            }
        }
    }
    det
}

pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    let mut aug: QMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel(m: &QMatrix, ncols: usize) -> Vec<Vec<Q>> {
    let mut a = m.clone();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}
