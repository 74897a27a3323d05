//! Minimal orders of lifts of `w` to the torus normalizer.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{add_vec, Q};
use crate::rootdata::lattice::TorusQuotient;
use crate::rootdata::RootDatum;
use crate::torusnorm::{order_elt, power, projection_power, sigma, NormalizerElt};
use crate::weyl::TwistedWeylElt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftMethod {
    EllipticTits,
    OddOrder,
    TorsionSearch,
}

impl LiftMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            LiftMethod::EllipticTits => "elliptic-tits",
            LiftMethod::OddOrder => "odd-order",
            LiftMethod::TorsionSearch => "torsion-search",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct LiftOptions {
    /// Search lifts `t sigma(w)` with `t` in `(1/k) X_* / X_*`.
    pub torsion_bound: u64,
}

impl Default for LiftOptions {
    fn default() -> Self {
        LiftOptions { torsion_bound: 2 }
    }
}

#[derive(Debug, Clone)]
pub struct LiftOrderReport {
    pub weyl_order: u64,
    pub lift_order: u64,
    /// False when the value is only an upper bound for the minimum over all of `T`.
    pub exact: bool,
    pub method: LiftMethod,
    pub witness: NormalizerElt,
    /// `min o(g)` over all lifts `g` in `T sigma(x)`, from [`coset_lift_order`].
    pub minimum: u64,
}

const GUARD: u128 = 10_000_000;

/// `sum_{i < d} A^i` for the action matrix `A` of `x`.
fn norm_matrix(rd: &RootDatum, x: &TwistedWeylElt, d: u64) -> Vec<Vec<i64>> {
    let n = rd.rank();
    let a = x.action_matrix(rd);
    let mut sum = vec![vec![0i64; n]; n];
    let mut pw: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect();
    for _ in 0..d {
        for r in 0..n {
            for c in 0..n {
                sum[r][c] += pw[r][c];
            }
        }
        pw = (0..n)
            .map(|r| (0..n).map(|c| (0..n).map(|m| a[r][m] * pw[m][c]).sum()).collect())
            .collect();
    }
    sum
}

/// The minimal order of a lift of `x`, over all of `T`.
///
/// `(t sigma(x))^d = N(t) sigma(x)^d` with `N = sum_{i<d} x^i`, so the
/// `d`-th powers of lifts fill the coset of `sigma(x)^d` modulo the subtorus
/// `N(T)`. The minimum is `d` times the order of `sigma(x)^d` in
/// `T / N(T) = V / (N V + X_*)`.
pub fn coset_lift_order(rd: &RootDatum, x: &TwistedWeylElt) -> u64 {
    let n = rd.rank();
    let (d, t) = projection_power(rd, &sigma(rd, x));
    let s = norm_matrix(rd, x, d);
    let span: Vec<Vec<Q>> = (0..n).map(|c| (0..n).map(|r| Q::from_integer(s[r][c].into())).collect()).collect();
    d * TorusQuotient::new(&span, rd.cochar_basis(), n).order(t.coords())
}

/// `min o(g)` over lifts `g` of `x`.
///
/// Elliptic elements have all lifts conjugate, so `sigma(x)` suffices. For odd
/// `d = o(x)`, `g = sigma(x)` has `g^d` of order dividing 2 and `g^{d+1}` is
/// a lift of order `d`. Otherwise torsion lifts are searched exhaustively.
pub fn lift_order(rd: &RootDatum, x: &TwistedWeylElt, opts: LiftOptions) -> Result<LiftOrderReport> {
    let g = sigma(rd, x);
    let (d, t) = projection_power(rd, &g);
    if x.is_elliptic(rd) {
        return Ok(LiftOrderReport {
            weyl_order: d,
            lift_order: d * t.order(),
            exact: true,
            method: LiftMethod::EllipticTits,
            witness: g,
            minimum: d * t.order(),
        });
    }
    if d % 2 == 1 {
        let m = t.order();
        // k = 1 mod d and k = 0 mod m.
        if let Some(k) = (0..m).map(|s| 1 + d * s).find(|k| k % m == 0) {
            let k = if (d + 1) % m == 0 { d + 1 } else { k };
            let witness = power(rd, &g, k);
            debug_assert_eq!(witness.projection(), *x);
            return Ok(LiftOrderReport {
                weyl_order: d,
                lift_order: order_elt(rd, &witness),
                exact: true,
                method: LiftMethod::OddOrder,
                witness,
                minimum: d,
            });
        }
    }
    torsion_search(rd, x, d, t.coords(), opts.torsion_bound)
}

fn torsion_search(rd: &RootDatum, x: &TwistedWeylElt, d: u64, base: &[Q], k: u64) -> Result<LiftOrderReport> {
    let n = rd.rank();
    let size = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if k == 0 || size > GUARD {
        return Err(Error::SearchGuard(size));
    }
    // (t sigma(x))^d = (sum_{i<d} x^i t) sigma(x)^d.
    let sum = norm_matrix(rd, x, d);
    let points = rd.torsion_points(k);
    let best = points
        .par_iter()
        .enumerate()
        .map(|(idx, t)| {
            let coords = t.coords();
            let st: Vec<Q> = (0..n)
                .map(|r| (0..n).fold(Q::from_integer(0.into()), |acc, c| acc + coords[c].clone() * Q::from_integer(sum[r][c].into())))
                .collect();
            (d * rd.torus_from_cochar(&add_vec(&st, base)).order(), idx)
        })
        .min()
        .expect("nonempty torsion group");
    let witness = NormalizerElt::new(rd, points[best.1].clone(), x);
    debug_assert_eq!(order_elt(rd, &witness), best.0);
    let minimum = coset_lift_order(rd, x);
    Ok(LiftOrderReport {
        weyl_order: d,
        lift_order: best.0,
        exact: best.0 == minimum,
        method: LiftMethod::TorsionSearch,
        witness,
        minimum,
    })
}
