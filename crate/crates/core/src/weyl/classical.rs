//! Permutation and signed-permutation models of the classical Weyl groups.
//!
//! Type `A_{n-1}` acts on the sum-zero hyperplane of `Q^n` and types
//! `B_n`, `C_n`, `D_n` act on `Q^n` by signed permutations. The "standard"
//! or `e`-coordinates below are the coordinates in the basis `e_1, ..., e_n`.

use num_traits::{One, Signed, Zero};

use super::{TwistedWeylElt, WeylElt};
use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix};
use crate::rational::{q, Q};
use crate::rootdata::{Family, RootDatum, SimpleType};

/// `e_k -> sign[k] * e_{image[k]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub image: Vec<usize>,
    pub sign: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm { image: (0..n).collect(), sign: vec![1; n] }
    }

    /// Consecutive blocks of the given sizes, each carrying the cycle
    /// `e_s -> e_{s+1} -> ... -> e_{s+a-1} -> e_s`, negated on the last
    /// step when `negative`.
    pub fn blocks(parts: &[usize], negative: bool) -> SignedPerm {
        let n = parts.iter().sum();
        let mut p = SignedPerm::identity(n);
        let mut s = 0;
        for &a in parts {
            for k in s..s + a {
                p.image[k] = if k + 1 < s + a { k + 1 } else { s };
            }
            if negative {
                p.sign[s + a - 1] = -1;
            }
            s += a;
        }
        p
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn negations(&self) -> usize {
        self.sign.iter().filter(|&&s| s < 0).count()
    }

    fn matrix(&self) -> QMatrix {
        let n = self.len();
        let mut a = vec![vec![Q::zero(); n]; n];
        for k in 0..n {
            a[self.image[k]][k] = q(self.sign[k] as i64);
        }
        a
    }
}

/// Cycles of the underlying permutation as `(length, negative)`, longest first.
pub fn cycle_type(p: &SignedPerm) -> Vec<(usize, bool)> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let (mut len, mut sign, mut k) = (0, 1i8, s);
        while !seen[k] {
            seen[k] = true;
            sign *= p.sign[k];
            k = p.image[k];
            len += 1;
        }
        out.push((len, sign < 0));
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn classical_type(rd: &RootDatum) -> Result<SimpleType> {
    match rd.simple_type() {
        Some(t) if t.is_classical() => Ok(t),
        _ => Err(Error::NotClassical(rd.type_label().to_string())),
    }
}

/// Simple coroots as columns in `e`-coordinates.
fn coroot_matrix(t: SimpleType) -> QMatrix {
    let n = t.rank;
    let m = if t.family == Family::A { n + 1 } else { n };
    let mut cols = vec![vec![Q::zero(); m]; n];
    for k in 0..n.min(m - 1) {
        cols[k][k] = Q::one();
        cols[k][k + 1] = -Q::one();
    }
    match t.family {
        Family::B => cols[n - 1][n - 1] = q(2),
        Family::C => cols[n - 1][n - 1] = Q::one(),
        Family::D => {
            cols[n - 1][n - 2] = Q::one();
            cols[n - 1][n - 1] = Q::one();
        }
        _ => {}
    }
    linalg::from_columns(&cols)
}

/// Simple-coroot coordinates to `e`-coordinates.
pub fn to_e_coords(rd: &RootDatum, mu: &[Q]) -> Result<Vec<Q>> {
    let t = classical_type(rd)?;
    Ok(linalg::mat_vec(&coroot_matrix(t), mu))
}

/// `e`-coordinates to simple-coroot coordinates. For type `A` the input
/// must have coordinate sum zero.
pub fn from_e_coords(rd: &RootDatum, x: &[Q]) -> Result<Vec<Q>> {
    let t = classical_type(rd)?;
    if t.family == Family::A {
        let mut acc = Q::zero();
        return Ok(x[..t.rank]
            .iter()
            .map(|v| {
                acc += v;
                acc.clone()
            })
            .collect());
    }
    let inv = linalg::inverse(&coroot_matrix(t)).expect("coroots form a basis");
    Ok(linalg::mat_vec(&inv, x))
}

fn test_vector(t: SimpleType) -> Vec<Q> {
    match t.family {
        Family::A => {
            let m = t.rank as i64 + 1;
            (1..=m).map(|k| q(2 * k - m - 1)).collect()
        }
        _ => (1..=t.rank as i64).map(q).collect(),
    }
}

/// The `e`-space action of `M(w) D^j` for types `B`, `C`, `D`, or of the
/// underlying permutation in type `A` (untwisted only).
pub fn signed_permutation(rd: &RootDatum, x: &TwistedWeylElt) -> Result<SignedPerm> {
    let t = classical_type(rd)?;
    if t.family == Family::A && x.j != 0 {
        return Err(Error::NotClassical("twisted type A; use twisted_a_permutation".into()));
    }
    read_action(rd, t, x, false)
}

/// For `x = w delta` in type `A`, the permutation `pi` with `x = -pi` on the
/// sum-zero hyperplane.
pub fn twisted_a_permutation(rd: &RootDatum, x: &TwistedWeylElt) -> Result<SignedPerm> {
    let t = classical_type(rd)?;
    if t.family != Family::A || x.j != 1 || rd.delta().is_none() {
        return Err(Error::NotClassical(format!("{} is not a twisted type A element", rd.type_label())));
    }
    read_action(rd, t, x, true)
}

fn read_action(rd: &RootDatum, t: SimpleType, x: &TwistedWeylElt, negate: bool) -> Result<SignedPerm> {
    let v = test_vector(t);
    let c = from_e_coords(rd, &v)?;
    let mut y = to_e_coords(rd, &x.apply(rd, &c))?;
    if negate {
        y.iter_mut().for_each(|z| *z = -z.clone());
    }
    let m = v.len();
    let mut p = SignedPerm::identity(m);
    for (pos, val) in y.iter().enumerate() {
        let (k, s) = if t.family == Family::A {
            (v.iter().position(|u| u == val).expect("permutation image"), 1)
        } else {
            let k = v.iter().position(|u| *u == val.abs()).expect("signed permutation image");
            (k, if *val < Q::zero() { -1 } else { 1 })
        };
        p.image[k] = pos;
        p.sign[k] = s;
    }
    Ok(p)
}

/// The (twisted) Weyl element acting on `e`-coordinates by `p`.
///
/// In type `D` an odd number of sign changes gives an element of `W delta`;
/// in type `A`, `twisted` requests the element acting as `-p`.
pub fn from_signed_perm(rd: &RootDatum, p: &SignedPerm, twisted: bool) -> Result<TwistedWeylElt> {
    let t = classical_type(rd)?;
    let n = t.rank;
    let mut a = p.matrix();
    let mut j = 0;
    match t.family {
        Family::A => {
            if p.negations() != 0 {
                return Err(Error::NotClassical("type A permutations carry no signs".into()));
            }
            if twisted {
                a.iter_mut().flatten().for_each(|z| *z = -z.clone());
                j = 1;
            }
        }
        Family::D => j = p.negations() % 2,
        _ => {}
    }
    if j == 1 && (rd.delta_order() != 2) {
        return Err(Error::NoDelta);
    }
    let tm = coroot_matrix(t);
    let n_mat: QMatrix = if t.family == Family::A {
        // Apply to each simple coroot and read back in coroot coordinates.
        let cols: Vec<Vec<Q>> = (0..n)
            .map(|c| from_e_coords(rd, &linalg::mat_vec(&a, &linalg::column(&tm, c))).unwrap())
            .collect();
        linalg::from_columns(&cols)
    } else {
        let inv = linalg::inverse(&tm).expect("coroots form a basis");
        linalg::mat_mul(&inv, &linalg::mat_mul(&a, &tm))
    };
    // n_mat = M D^j, so M[r][delta^j(c)] = n_mat[r][c].
    let mut m = vec![vec![0i64; n]; n];
    for r in 0..n {
        for c in 0..n {
            let v = &n_mat[r][c];
            if !v.is_integer() {
                return Err(Error::NotClassical("signed permutation does not preserve the coroot lattice".into()));
            }
            m[r][rd.delta_index(c, j)] = v.to_integer().try_into().expect("small entries");
        }
    }
    let w = WeylElt::from_matrix(rd, m).ok_or_else(|| Error::NotClassical("not an element of W".into()))?;
    Ok(TwistedWeylElt::new(rd, w, j))
}

/// Partition labelling the (twisted) elliptic class of `x`: the lengths of
/// the negative cycles in types `B`, `C`, `D`; the cycle lengths of `pi`
/// where `x = -pi` in twisted type `A`; `[n]` for the Coxeter class in
/// untwisted type `A_{n-1}`.
pub fn class_label_classical(rd: &RootDatum, x: &TwistedWeylElt) -> Result<Vec<usize>> {
    let t = classical_type(rd)?;
    if !x.is_elliptic(rd) {
        return Err(Error::NotElliptic);
    }
    let cycles = match (t.family, x.j) {
        (Family::A, 0) => cycle_type(&signed_permutation(rd, x)?),
        (Family::A, _) => cycle_type(&twisted_a_permutation(rd, x)?),
        _ => cycle_type(&signed_permutation(rd, x)?),
    };
    Ok(cycles.into_iter().map(|(len, _)| len).collect())
}

/// Partitions of `n` with parts in decreasing order, listed in reverse
/// lexicographic order (`[n]` first).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for a in (1..=max.min(n)).rev() {
            prefix.push(a);
            go(n - a, a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn odd_partitions(n: usize) -> Vec<Vec<usize>> {
    partitions(n).into_iter().filter(|p| p.iter().all(|a| a % 2 == 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::coxeter_element;

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(odd_partitions(6), vec![vec![5, 1], vec![3, 3], vec![3, 1, 1, 1], vec![1; 6]]);
    }

    #[test]
    fn e_coordinates_of_rho() {
        let d5 = RootDatum::named("D5", "sc", "none").unwrap();
        assert_eq!(to_e_coords(&d5, d5.rho()).unwrap(), (0..5).rev().map(q).collect::<Vec<_>>());
        let b3 = RootDatum::named("B3", "sc", "none").unwrap();
        let half = |k: i64| crate::rational::frac(k, 2);
        assert_eq!(to_e_coords(&b3, b3.rho()).unwrap(), vec![q(3), q(2), q(1)]);
        let c3 = RootDatum::named("C3", "sc", "none").unwrap();
        assert_eq!(to_e_coords(&c3, c3.rho()).unwrap(), vec![half(5), half(3), half(1)]);
        let a2 = RootDatum::named("A2", "sc", "none").unwrap();
        let x = to_e_coords(&a2, a2.rho()).unwrap();
        assert_eq!(x, vec![q(1), q(0), q(-1)]);
        assert_eq!(from_e_coords(&a2, &x).unwrap(), a2.rho().to_vec());
    }

    #[test]
    fn coxeter_labels() {
        let c3 = RootDatum::named("C3", "sc", "none").unwrap();
        let cox = TwistedWeylElt::from(coxeter_element(&c3));
        assert_eq!(class_label_classical(&c3, &cox).unwrap(), vec![3]);
        let b2 = RootDatum::named("B2", "sc", "none").unwrap();
        let minus_one = from_signed_perm(&b2, &SignedPerm::blocks(&[1, 1], true), false).unwrap();
        assert_eq!(minus_one.w.reduced_word(&b2).len(), 4);
        assert_eq!(class_label_classical(&b2, &minus_one).unwrap(), vec![1, 1]);
        let a4 = RootDatum::named("A4", "sc", "none").unwrap();
        let cox = TwistedWeylElt::from(coxeter_element(&a4));
        assert_eq!(class_label_classical(&a4, &cox).unwrap(), vec![5]);
    }

    #[test]
    fn type_d_parity() {
        let d4 = RootDatum::named("D4", "sc", "flip").unwrap();
        let x = from_signed_perm(&d4, &SignedPerm::blocks(&[2, 2], true), false).unwrap();
        assert_eq!(x.j, 0);
        assert_eq!(class_label_classical(&d4, &x).unwrap(), vec![2, 2]);
        let y = from_signed_perm(&d4, &SignedPerm::blocks(&[3, 1], true), false).unwrap();
        assert_eq!(y.j, 0);
        let z = from_signed_perm(&d4, &SignedPerm::blocks(&[2, 1, 1], true), false).unwrap();
        assert_eq!(z.j, 1);
        assert!(z.is_elliptic(&d4));
        assert_eq!(class_label_classical(&d4, &z).unwrap(), vec![2, 1, 1]);
        let plain = RootDatum::named("D4", "sc", "none").unwrap();
        assert_eq!(from_signed_perm(&plain, &SignedPerm::blocks(&[4], true), false), Err(Error::NoDelta));
    }

    #[test]
    fn twisted_type_a_round_trip() {
        let a5 = RootDatum::named("A5", "sc", "flip").unwrap();
        let p = SignedPerm::blocks(&[3, 1, 1, 1], false);
        let x = from_signed_perm(&a5, &p, true).unwrap();
        assert_eq!(x.j, 1);
        assert_eq!(twisted_a_permutation(&a5, &x).unwrap(), p);
        assert_eq!(class_label_classical(&a5, &x).unwrap(), vec![3, 1, 1, 1]);
        assert_eq!(x.order(&a5), 6);
    }
}
