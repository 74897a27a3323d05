//! Finite-order elements `t sigma(w) delta^j` of the extended torus normalizer.
//!
//! `sigma` is the Tits section: `sigma(s_i) = sigma_i` with `sigma_i^2 =
//! m_i = alpha_i^vee(-1)` and `sigma(w) = sigma_{i_1} ... sigma_{i_l}` along a
//! reduced word. The diagram automorphism preserves the pinning, so
//! `delta sigma(w) delta^{-1} = sigma(delta(w))`.

use std::collections::BTreeSet;

use serde_json::json;

use crate::error::{Error, Result};
use crate::rational::{format_q, frac, Q};
use crate::rootdata::{RootDatum, TorusElt};
use crate::weyl::{format_word, TwistedWeylElt, WeylElt};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizerElt {
    pub t: TorusElt,
    pub w: WeylElt,
    pub j: usize,
}

impl NormalizerElt {
    pub fn identity(rd: &RootDatum) -> NormalizerElt {
        NormalizerElt { t: rd.torus_identity(), w: WeylElt::identity(rd.rank()), j: 0 }
    }

    pub fn torus(rd: &RootDatum, t: TorusElt) -> NormalizerElt {
        NormalizerElt { t, w: WeylElt::identity(rd.rank()), j: 0 }
    }

    /// `t sigma(x)`.
    pub fn new(rd: &RootDatum, t: TorusElt, x: &TwistedWeylElt) -> NormalizerElt {
        NormalizerElt { t, w: x.w.clone(), j: x.j % rd.delta_order() }
    }

    /// Image in `W <delta>`.
    pub fn projection(&self) -> TwistedWeylElt {
        TwistedWeylElt { w: self.w.clone(), j: self.j }
    }

    pub fn is_identity(&self) -> bool {
        self.j == 0 && self.w.is_identity() && self.t.is_identity()
    }

    pub fn to_json(&self, rd: &RootDatum) -> serde_json::Value {
        let word: Vec<usize> = self.w.reduced_word(rd).iter().map(|i| i + 1).collect();
        json!({
            "t": self.t.coords().iter().map(format_q).collect::<Vec<_>>(),
            "word": word,
            "j": self.j,
        })
    }

    pub fn to_string(&self, rd: &RootDatum) -> String {
        let mut w = format_word(self.w.reduced_word(rd), rd.rank() > 9);
        if w.is_empty() {
            w.push('e');
        }
        let d = if self.j > 0 { format!(" delta^{}", self.j) } else { String::new() };
        format!("{} * sigma({w}){d}", self.t)
    }
}

/// The canonical lift `sigma(x)`.
pub fn sigma(rd: &RootDatum, x: &TwistedWeylElt) -> NormalizerElt {
    NormalizerElt::new(rd, rd.torus_identity(), x)
}

/// `sigma_i`.
pub fn sigma_simple(rd: &RootDatum, i: usize) -> Result<NormalizerElt> {
    Ok(sigma(rd, &WeylElt::reflection(rd, i)?.into()))
}

/// `sigma(u) sigma(v) = c sigma(uv)`; returns the torus part `c` as integer
/// multiples of `1/2` in coroot coordinates, and `uv`. `word` is a reduced
/// word of `v`.
fn cocycle(rd: &RootDatum, u: &WeylElt, word: &[usize]) -> (Vec<i64>, WeylElt) {
    let mut acc = vec![0i64; rd.rank()];
    let mut u = u.clone();
    for &i in word {
        if u.has_right_descent(i) {
            // sigma(u) sigma_i = sigma(u s_i) m_i = (u s_i)(m_i) sigma(u s_i),
            // and (u s_i)(alpha_i^vee) = -u(alpha_i^vee).
            for (a, c) in acc.iter_mut().zip(u.column(i)) {
                *a -= c;
            }
        }
        u = u.mul_simple(rd, i);
    }
    (acc, u)
}

pub fn multiply(rd: &RootDatum, x: &NormalizerElt, y: &NormalizerElt) -> NormalizerElt {
    // t sigma(w) delta^j t' sigma(w') delta^j'
    //   = (t + w(delta^j t')) sigma(w) sigma(delta^j w') delta^{j+j'}
    let moved = x.w.apply(&rd.delta_apply(y.t.coords(), x.j));
    let word: Vec<usize> = y.w.reduced_word(rd).iter().map(|&i| rd.delta_index(i, x.j)).collect();
    let (c, w) = cocycle(rd, &x.w, &word);
    let total: Vec<Q> = x
        .t
        .coords()
        .iter()
        .zip(&moved)
        .zip(&c)
        .map(|((a, b), &k)| a + b + frac(k, 2))
        .collect();
    NormalizerElt { t: rd.torus_from_cochar(&total), w, j: (x.j + y.j) % rd.delta_order() }
}

pub fn power(rd: &RootDatum, x: &NormalizerElt, k: u64) -> NormalizerElt {
    let mut result = NormalizerElt::identity(rd);
    let mut base = x.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = multiply(rd, &result, &base);
        }
        k >>= 1;
        if k > 0 {
            base = multiply(rd, &base, &base);
        }
    }
    result
}

/// `x^{o}` where `o` is the order of the projection of `x`; a torus element.
pub fn projection_power(rd: &RootDatum, x: &NormalizerElt) -> (u64, TorusElt) {
    let o = x.projection().order(rd);
    let p = power(rd, x, o);
    debug_assert!(p.w.is_identity() && p.j == 0);
    (o, p.t)
}

pub fn order_elt(rd: &RootDatum, x: &NormalizerElt) -> u64 {
    let (o, t) = projection_power(rd, x);
    o * t.order()
}

pub fn inverse(rd: &RootDatum, x: &NormalizerElt) -> NormalizerElt {
    power(rd, x, order_elt(rd, x) - 1)
}

/// Conjugation by `delta^k`.
pub fn delta_conjugate(rd: &RootDatum, x: &NormalizerElt, k: usize) -> NormalizerElt {
    NormalizerElt {
        t: rd.torus_from_cochar(&rd.delta_apply(x.t.coords(), k)),
        w: x.w.delta_conj(rd, k),
        j: x.j,
    }
}

/// `sigma(x)^2` for a (twisted) involution, by the closed formula
/// `(w delta rho^vee - rho^vee)(-1)`.
pub fn involution_square(rd: &RootDatum, x: &TwistedWeylElt) -> Result<TorusElt> {
    if !x.is_twisted_involution(rd)? {
        return Err(Error::NotInvolution);
    }
    let rho = rd.rho();
    let image = x.apply(rd, rho);
    let diff: Vec<Q> = image.iter().zip(rho).map(|(a, b)| a - b).collect();
    Ok(rd.torus_at_minus_one(&diff))
}

/// `(sum d_i rho^vee(S_i))(-1)` for good-element data `(S_i, d_i)`.
pub fn sigma_power_via_good_data(rd: &RootDatum, good: &[(Vec<usize>, u64)]) -> Result<TorusElt> {
    let n = rd.rank();
    let mut prev: Option<BTreeSet<usize>> = None;
    let mut total = vec![Q::from_integer(0.into()); n];
    for (s, d) in good {
        if *d == 0 || d % 2 == 1 {
            return Err(Error::InvalidGoodData(format!("exponent {d} is not a positive even integer")));
        }
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.iter().any(|&i| i >= n) {
            return Err(Error::InvalidGoodData(format!("subset {s:?} out of range")));
        }
        if let Some(p) = &prev {
            if !(set.is_subset(p) && set.len() < p.len()) {
                return Err(Error::InvalidGoodData("subsets are not strictly decreasing".into()));
            }
        }
        let r = rd.rho_check(s);
        for (a, b) in total.iter_mut().zip(&r) {
            *a += b * Q::from_integer((*d as i64).into());
        }
        prev = Some(set);
    }
    Ok(rd.torus_at_minus_one(&total))
}
