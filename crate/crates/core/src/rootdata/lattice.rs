//! Lattices in `X_* (x) Q`, given by rational generating sets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg::{self, QMatrix};
use crate::rational::{Q, is_integral};

/// Row-style Hermite reduction of integer generators; returns a basis (as rows).
fn integer_row_basis(mut rows: Vec<Vec<i128>>, n: usize) -> Vec<Vec<i128>> {
    let mut basis = Vec::new();
    for c in 0..n {
        // Euclid on column c among remaining rows.
        loop {
            rows.retain(|r| r.iter().any(|&x| x != 0));
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            let piv = rows[p].clone();
            for &i in &nz {
                if i == p {
                    continue;
                }
                let f = Integer::div_floor(&rows[i][c], &piv[c]);
                for j in 0..n {
                    rows[i][j] -= f * piv[j];
                }
            }
        }
        if let Some(p) = (0..rows.len()).find(|&i| rows[i][c] != 0) {
            let mut r = rows.remove(p);
            if r[c] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            basis.push(r);
        }
    }
    basis
}

/// Basis (as matrix columns) of the lattice generated by `gens`, each a
/// rational vector of length `n`. The generators must span `Q^n`.
pub fn lattice_basis(gens: &[Vec<Q>], n: usize) -> Option<QMatrix> {
    let mut denom = BigInt::from(1);
    for g in gens {
        for x in g {
            denom = denom.lcm(x.denom());
        }
    }
    let scale = Q::from_integer(denom.clone());
    let rows: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| {
            g.iter()
                .map(|x| (x * &scale).to_integer().to_i128().expect("lattice entries too large"))
                .collect()
        })
        .collect();
    let basis = integer_row_basis(rows, n);
    if basis.len() != n {
        return None;
    }
    let cols: Vec<Vec<Q>> = basis
        .into_iter()
        .map(|r| r.into_iter().map(|x| Q::new(BigInt::from(x), denom.clone())).collect())
        .collect();
    Some(linalg::from_columns(&cols))
}

/// Whether `v` lies in the lattice whose basis matrix has inverse `basis_inv`.
pub fn contains(basis_inv: &QMatrix, v: &[Q]) -> bool {
    is_integral(&linalg::mat_vec(basis_inv, v))
}

/// Whether the lattice with basis `a` is contained in the one with inverse basis `b_inv`.
pub fn sublattice(a: &QMatrix, b_inv: &QMatrix) -> bool {
    let n = a.first().map_or(0, |r| r.len());
    (0..n).all(|j| contains(b_inv, &linalg::column(a, j)))
}

/// Index `[L : M]` for lattices `M` inside `L`, from their bases.
pub fn index(outer: &QMatrix, inner: &QMatrix) -> u64 {
    let d = linalg::determinant(inner) / linalg::determinant(outer);
    debug_assert!(d.is_integer() && !d.is_zero());
    d.abs().to_integer().to_u64().expect("index too large")
}

/// The quotient `V / (U + L)` of `V = Q^n` by a rational subspace `U` and a
/// full lattice `L`, a finite-rank torus quotient with rational points.
pub struct TorusQuotient {
    /// Rows spanning the annihilator of `U`.
    proj: QMatrix,
    /// Inverse of a basis of the projected lattice.
    basis_inv: QMatrix,
}

impl TorusQuotient {
    /// `U` spanned by `span`, `L` with basis matrix `lattice` (columns).
    pub fn new(span: &[Vec<Q>], lattice: &QMatrix, n: usize) -> TorusQuotient {
        let proj = if span.is_empty() {
            linalg::identity(n)
        } else {
            linalg::kernel(&span.to_vec(), n)
        };
        if proj.is_empty() {
            return TorusQuotient { proj, basis_inv: vec![] };
        }
        let gens: Vec<Vec<Q>> = (0..n).map(|j| linalg::mat_vec(&proj, &linalg::column(lattice, j))).collect();
        let basis = lattice_basis(&gens, proj.len()).expect("projected lattice has full rank");
        TorusQuotient { proj, basis_inv: linalg::inverse(&basis).expect("basis is invertible") }
    }

    /// Coordinates of the image of `v`, reduced into `[0, 1)`.
    pub fn coords(&self, v: &[Q]) -> Vec<Q> {
        if self.proj.is_empty() {
            return vec![];
        }
        linalg::mat_vec(&self.basis_inv, &linalg::mat_vec(&self.proj, v)).iter().map(crate::rational::fract).collect()
    }

    /// Order of the image of `v`.
    pub fn order(&self, v: &[Q]) -> u64 {
        crate::rational::denominator_lcm(&self.coords(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn quotient_by_a_line() {
        // Z^2 modulo the line through (1, 1): (1/2, 0) has order 2, (1/2, 1/2) order 1.
        let q2 = TorusQuotient::new(&[vec![q(1), q(1)]], &linalg::identity(2), 2);
        assert_eq!(q2.order(&[frac(1, 2), q(0)]), 2);
        assert_eq!(q2.order(&[frac(1, 2), frac(1, 2)]), 1);
        let full = TorusQuotient::new(&[], &linalg::identity(2), 2);
        assert_eq!(full.order(&[frac(1, 3), frac(1, 2)]), 6);
    }

    #[test]
    fn basis_of_a3_intermediate_lattice() {
        // Q^vee + Z * 2 varpi_1 for A3, i.e. SL(4)/mu_2.
        let mut gens: Vec<Vec<Q>> = (0..3)
            .map(|i| (0..3).map(|j| q((i == j) as i64)).collect())
            .collect();
        gens.push(vec![frac(3, 2), q(1), frac(1, 2)]);
        let b = lattice_basis(&gens, 3).unwrap();
        let id = crate::linalg::identity(3);
        assert_eq!(index(&b, &id), 2);
        let b_inv = crate::linalg::inverse(&b).unwrap();
        assert!(sublattice(&id, &b_inv));
        assert!(contains(&b_inv, &[frac(3, 2), q(1), frac(1, 2)]));
        assert!(!contains(&b_inv, &[frac(1, 2), q(0), q(0)]));
    }
}
