//! Weyl group elements and their extension by a diagram automorphism.
//!
//! Elements are integer matrices acting on simple-coroot coordinates.
//! Simple indices are 0-based in the API; the text helpers in
//! [`parse_word`] and [`format_word`] use the usual 1-based digits.

mod classical;
mod enumerate;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix};
use crate::rational::{q, Q};
use crate::rootdata::{Family, RootDatum};

pub use classical::{
    class_label_classical, cycle_type, from_e_coords, from_signed_perm, odd_partitions, partitions,
    signed_permutation, to_e_coords, twisted_a_permutation, SignedPerm,
};
pub use enumerate::{are_conjugate, conjugacy_classes, conjugacy_orbit, enumerate, ConjugacyClass};

/// An element of `W`, stored as its matrix on `X_* (x) Q` in simple-coroot
/// coordinates (row-major, `n x n`).
pub struct WeylElt {
    n: usize,
    m: Vec<i64>,
    word: OnceLock<Vec<usize>>,
}

impl Clone for WeylElt {
    fn clone(&self) -> Self {
        WeylElt { n: self.n, m: self.m.clone(), word: self.word.clone() }
    }
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.m.hash(h)
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.word.get() {
            Some(w) => write!(f, "WeylElt({})", format_word(w, false)),
            None => write!(f, "WeylElt({:?})", self.m),
        }
    }
}

impl WeylElt {
    pub fn identity(n: usize) -> WeylElt {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        let word = OnceLock::from(Vec::new());
        WeylElt { n, m, word }
    }

    /// Wraps a matrix that is already known to lie in `W`.
    pub(crate) fn from_matrix_unchecked(n: usize, m: Vec<i64>) -> WeylElt {
        WeylElt { n, m, word: OnceLock::new() }
    }

    /// Accepts an integer matrix if it is the matrix of an element of `W`.
    pub fn from_matrix(rd: &RootDatum, m: Vec<Vec<i64>>) -> Option<WeylElt> {
        let n = rd.rank();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return None;
        }
        let w = WeylElt::from_matrix_unchecked(n, m.concat());
        let mut x = w.clone();
        let mut steps = 0;
        while let Some(i) = (0..n).find(|&i| x.has_right_descent(i)) {
            x = x.mul_simple(rd, i);
            steps += 1;
            if steps > rd.positive_roots().len() {
                return None;
            }
        }
        (x == WeylElt::identity(n)).then_some(w)
    }

    pub fn reflection(rd: &RootDatum, i: usize) -> Result<WeylElt> {
        let n = rd.rank();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i + 1, rank: n });
        }
        Ok(WeylElt::identity(n).mul_simple(rd, i))
    }

    /// Product `s_{w[0]} s_{w[1]} ...`, multiplied left to right.
    pub fn from_word(rd: &RootDatum, word: &[usize]) -> Result<WeylElt> {
        let n = rd.rank();
        let mut x = WeylElt::identity(n);
        for &i in word {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i + 1, rank: n });
            }
            x = x.mul_simple(rd, i);
        }
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.m[r * self.n + c]
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.m.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn matrix_q(&self) -> QMatrix {
        self.m.chunks(self.n).map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| self.entry(r, c) == (r == c) as i64))
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        (0..self.n)
            .map(|r| (0..self.n).fold(Q::zero(), |acc, c| {
                let e = self.entry(r, c);
                if e == 0 { acc } else { acc + q(e) * &v[c] }
            }))
            .collect()
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.entry(r, c) * v[c]).sum()).collect()
    }

    /// `w(alpha_i^vee)`, column `i` of the matrix.
    pub fn column(&self, i: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.entry(r, i)).collect()
    }

    /// Whether `l(w s_i) < l(w)`, i.e. `w(alpha_i)` is negative.
    pub fn has_right_descent(&self, i: usize) -> bool {
        (0..self.n).map(|r| self.entry(r, i)).find(|&x| x != 0).is_some_and(|x| x < 0)
    }

    pub fn has_left_descent(&self, rd: &RootDatum, i: usize) -> bool {
        self.inverse(rd).has_right_descent(i)
    }

    /// `w s_i`.
    pub fn mul_simple(&self, rd: &RootDatum, i: usize) -> WeylElt {
        let n = self.n;
        let c = &rd.cartan()[i];
        let mut m = self.m.clone();
        for r in 0..n {
            let f = self.m[r * n + i];
            if f != 0 {
                for k in 0..n {
                    m[r * n + k] -= f * c[k];
                }
            }
        }
        WeylElt::from_matrix_unchecked(n, m)
    }

    /// `s_i w`.
    pub fn simple_mul(&self, rd: &RootDatum, i: usize) -> WeylElt {
        let n = self.n;
        let c = &rd.cartan()[i];
        let mut m = self.m.clone();
        for k in 0..n {
            let f: i64 = (0..n).map(|l| c[l] * self.m[l * n + k]).sum();
            m[i * n + k] -= f;
        }
        WeylElt::from_matrix_unchecked(n, m)
    }

    pub fn mul(&self, other: &WeylElt) -> WeylElt {
        let n = self.n;
        let mut m = vec![0i64; n * n];
        for r in 0..n {
            for l in 0..n {
                let a = self.m[r * n + l];
                if a != 0 {
                    for c in 0..n {
                        m[r * n + c] += a * other.m[l * n + c];
                    }
                }
            }
        }
        WeylElt::from_matrix_unchecked(n, m)
    }

    pub fn inverse(&self, rd: &RootDatum) -> WeylElt {
        let mut w = self.reduced_word(rd).to_vec();
        w.reverse();
        let inv = WeylElt::from_word(rd, &w).expect("valid word");
        let _ = inv.word.set(w);
        inv
    }

    /// Reduced word by the descent walk: repeatedly take the smallest `i`
    /// with `w(alpha_i) < 0`, record `i` as the last letter and continue with
    /// `w s_i`.
    pub fn reduced_word(&self, rd: &RootDatum) -> &[usize] {
        self.word.get_or_init(|| {
            let mut x = self.clone();
            let mut rev = Vec::new();
            while let Some(i) = (0..self.n).find(|&i| x.has_right_descent(i)) {
                rev.push(i);
                x = x.mul_simple(rd, i);
            }
            rev.reverse();
            rev
        })
    }

    /// Number of positive roots made negative.
    pub fn length(&self, rd: &RootDatum) -> usize {
        rd.positive_coroots()
            .iter()
            .filter(|cr| self.apply_int(cr).iter().find(|&&x| x != 0).is_some_and(|&x| x < 0))
            .count()
    }

    /// The image `delta(w)` under the diagram automorphism.
    pub fn delta_conj(&self, rd: &RootDatum, j: usize) -> WeylElt {
        if rd.delta().is_none() || j.is_multiple_of(rd.delta_order()) {
            return self.clone();
        }
        let n = self.n;
        let mut m = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                m[rd.delta_index(r, j) * n + rd.delta_index(c, j)] = self.m[r * n + c];
            }
        }
        WeylElt::from_matrix_unchecked(n, m)
    }

    /// Order in `W`.
    pub fn order(&self) -> u64 {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }
}

/// `|W|`, from the simple types when they are named.
pub fn group_order(rd: &RootDatum) -> u128 {
    let Some(types) = rd.simple_types() else {
        return enumerate(rd).len() as u128;
    };
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    types
        .iter()
        .map(|t| match (t.family, t.rank) {
            (Family::A, n) => fact(n + 1),
            (Family::B | Family::C, n) => (1u128 << n) * fact(n),
            (Family::D, n) => (1u128 << (n - 1)) * fact(n),
            (Family::G, _) => 12,
            (Family::F, _) => 1152,
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (_, _) => 696_729_600,
        })
        .product()
}

/// The longest element of the parabolic subgroup `W(S)`.
pub fn longest_element(rd: &RootDatum, subset: &[usize]) -> WeylElt {
    let mut w = WeylElt::identity(rd.rank());
    while let Some(&i) = subset.iter().find(|&&i| !w.has_right_descent(i)) {
        w = w.mul_simple(rd, i);
    }
    w
}

/// A Coxeter element `s_1 s_2 ... s_n`.
pub fn coxeter_element(rd: &RootDatum) -> WeylElt {
    WeylElt::from_word(rd, &(0..rd.rank()).collect::<Vec<_>>()).expect("valid word")
}

/// An element `w delta^j` of `W <delta>`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwistedWeylElt {
    pub w: WeylElt,
    pub j: usize,
}

impl fmt::Debug for TwistedWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, delta^{})", self.w, self.j)
    }
}

impl From<WeylElt> for TwistedWeylElt {
    fn from(w: WeylElt) -> Self {
        TwistedWeylElt { w, j: 0 }
    }
}

impl TwistedWeylElt {
    pub fn new(rd: &RootDatum, w: WeylElt, j: usize) -> TwistedWeylElt {
        TwistedWeylElt { w, j: j % rd.delta_order() }
    }

    pub fn identity(rd: &RootDatum) -> TwistedWeylElt {
        TwistedWeylElt { w: WeylElt::identity(rd.rank()), j: 0 }
    }

    /// `delta` itself.
    pub fn delta(rd: &RootDatum) -> Result<TwistedWeylElt> {
        if rd.delta().is_none() {
            return Err(Error::NoDelta);
        }
        Ok(TwistedWeylElt { w: WeylElt::identity(rd.rank()), j: 1 })
    }

    /// Parses and multiplies a word; `twist` appends one factor of `delta`.
    pub fn from_word(rd: &RootDatum, word: &[usize], twist: bool) -> Result<TwistedWeylElt> {
        if twist && rd.delta().is_none() {
            return Err(Error::NoDelta);
        }
        Ok(TwistedWeylElt::new(rd, WeylElt::from_word(rd, word)?, twist as usize))
    }

    pub fn parse(rd: &RootDatum, s: &str) -> Result<TwistedWeylElt> {
        let (word, twists) = parse_word(s)?;
        for &i in &word {
            if i >= rd.rank() {
                return Err(Error::IndexOutOfRange { index: i + 1, rank: rd.rank() });
            }
        }
        if twists > 0 && rd.delta().is_none() {
            return Err(Error::NoDelta);
        }
        Ok(TwistedWeylElt::new(rd, WeylElt::from_word(rd, &word)?, twists))
    }

    /// `(w, j)(w', j') = (w delta^j(w'), j + j')`.
    pub fn mul(&self, rd: &RootDatum, other: &TwistedWeylElt) -> TwistedWeylElt {
        let w = self.w.mul(&other.w.delta_conj(rd, self.j));
        TwistedWeylElt::new(rd, w, self.j + other.j)
    }

    pub fn inverse(&self, rd: &RootDatum) -> TwistedWeylElt {
        let r = rd.delta_order();
        let back = (r - self.j % r) % r;
        TwistedWeylElt::new(rd, self.w.inverse(rd).delta_conj(rd, back), back)
    }

    pub fn pow(&self, rd: &RootDatum, k: u64) -> TwistedWeylElt {
        let mut acc = TwistedWeylElt::identity(rd);
        for _ in 0..k {
            acc = acc.mul(rd, self);
        }
        acc
    }

    /// `v x v^{-1}`.
    pub fn conjugate_by(&self, rd: &RootDatum, v: &TwistedWeylElt) -> TwistedWeylElt {
        v.mul(rd, self).mul(rd, &v.inverse(rd))
    }

    pub fn is_identity(&self) -> bool {
        self.j == 0 && self.w.is_identity()
    }

    /// Matrix of the action `M(w) D^j` on simple-coroot coordinates.
    pub fn action_matrix(&self, rd: &RootDatum) -> Vec<Vec<i64>> {
        let n = rd.rank();
        let mut a = vec![vec![0i64; n]; n];
        for c in 0..n {
            let dc = rd.delta_index(c, self.j);
            for (r, row) in a.iter_mut().enumerate() {
                row[c] = self.w.entry(r, dc);
            }
        }
        a
    }

    pub fn apply(&self, rd: &RootDatum, v: &[Q]) -> Vec<Q> {
        self.w.apply(&rd.delta_apply(v, self.j))
    }

    pub fn order(&self, rd: &RootDatum) -> u64 {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(rd, self);
            k += 1;
        }
        k
    }

    /// No nonzero fixed vector: `det(I - M D^j) != 0`.
    pub fn is_elliptic(&self, rd: &RootDatum) -> bool {
        let a = self.action_matrix(rd);
        let n = rd.rank();
        let m: QMatrix = (0..n)
            .map(|r| (0..n).map(|c| q((r == c) as i64 - a[r][c])).collect())
            .collect();
        !linalg::determinant(&m).is_zero()
    }

    /// Whether `w delta(w) = 1` (for `j = 1`) or `w^2 = 1` (for `j = 0`).
    pub fn is_twisted_involution(&self, rd: &RootDatum) -> Result<bool> {
        if self.j != 0 && rd.delta_order() > 2 {
            return Err(Error::UnsupportedDeltaOrder);
        }
        Ok(self.w.mul(&self.w.delta_conj(rd, self.j)).is_identity())
    }

    pub fn length(&self, rd: &RootDatum) -> usize {
        self.w.length(rd)
    }

    /// Reduced word of `w` and the exponent of `delta`.
    pub fn word(&self, rd: &RootDatum) -> (Vec<usize>, usize) {
        (self.w.reduced_word(rd).to_vec(), self.j)
    }

    pub fn to_string(&self, rd: &RootDatum) -> String {
        let mut s = format_word(self.w.reduced_word(rd), rd.rank() > 9);
        for _ in 0..self.j {
            s.push('d');
        }
        if s.is_empty() {
            s.push('e');
        }
        s
    }
}

/// Parses `"2323432134"`, `"10,11,3"` or `"13524-13524d"` into 0-based
/// indices and a count of trailing `d` (delta) factors. `-` separates
/// concatenated segments; `e` or the empty string is the identity.
pub fn parse_word(s: &str) -> Result<(Vec<usize>, usize)> {
    let mut body = s.trim();
    let bad = |m: &str| Error::InvalidWord(format!("{s:?}: {m}"));
    let mut twists = 0;
    while let Some(rest) = body.strip_suffix(['d', 'D']) {
        body = rest.trim_end();
        twists += 1;
    }
    if body.contains(['d', 'D']) {
        return Err(bad("delta may only appear at the end"));
    }
    let body = body.trim_matches(['[', ']']);
    if body.is_empty() || body == "e" {
        return Ok((vec![], twists));
    }
    let mut word = Vec::new();
    if body.contains(',') {
        for part in body.split(',') {
            let k: usize = part.trim().parse().map_err(|_| bad("expected integers"))?;
            if k == 0 {
                return Err(bad("indices start at 1"));
            }
            word.push(k - 1);
        }
    } else {
        for ch in body.chars() {
            match ch {
                '1'..='9' => word.push(ch as usize - '1' as usize),
                '-' | ' ' | '.' => {}
                _ => return Err(bad("unexpected character")),
            }
        }
    }
    Ok((word, twists))
}

/// 1-based rendering; comma-separated when `wide`.
pub fn format_word(word: &[usize], wide: bool) -> String {
    if wide {
        word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
    } else {
        word.iter().map(|i| char::from(b'1' + *i as u8)).collect()
    }
}
