//! `d`-regular elements of `W delta`: those with an eigenvector of
//! eigenvalue a primitive `d`-th root of unity off every root hyperplane.
//!
//! The `zeta_d`-eigenspace is computed exactly over `Q(zeta_d)`. Galois
//! conjugation permutes the primitive roots, so one `zeta_d` per `d` suffices.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{char_poly, cyclotomic_factorization, divisors, CyclotomicField, FieldElt};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{q, Q};
use crate::rootdata::RootDatum;
use crate::torusnorm::{projection_power, sigma};
use crate::weyl::{conjugacy_orbit, TwistedWeylElt, WeylElt};

#[derive(Debug, Clone, Serialize)]
pub struct RegularityReport {
    #[serde(skip)]
    pub element: TwistedWeylElt,
    pub word: String,
    pub order: u64,
    pub regular_orders: Vec<u64>,
    /// Whether `o(x)` itself is a regular order.
    pub z_regular: bool,
    /// `(d, dim of the zeta_d-eigenspace)` for every divisor `d` of `o(x)`.
    pub eigenspace_dims: Vec<(u64, usize)>,
}

/// `<alpha, v>` for a root `alpha` in simple-root coordinates and `v` in
/// simple-coroot coordinates.
fn root_value(rd: &RootDatum, k: &CyclotomicField, root: &[i64], v: &[FieldElt]) -> FieldElt {
    let c = rd.cartan();
    let n = rd.rank();
    let coeffs: Vec<Q> = (0..n).map(|col| q((0..n).map(|i| root[i] * c[i][col]).sum())).collect();
    k.dot_rational(&coeffs, v)
}

fn has_regular_vector(rd: &RootDatum, k: &CyclotomicField, basis: &[Vec<FieldElt>]) -> bool {
    !basis.is_empty()
        && rd.positive_roots().iter().all(|r| basis.iter().any(|b| !root_value(rd, k, r, b).is_zero()))
}

pub fn regularity(rd: &RootDatum, x: &TwistedWeylElt) -> RegularityReport {
    let a = x.action_matrix(rd);
    let o = x.order(rd);
    let results: Vec<(u64, usize, bool)> = divisors(o)
        .into_par_iter()
        .map(|d| {
            let k = CyclotomicField::new(d);
            let basis = k.eigenspace(&a);
            (d, basis.len(), has_regular_vector(rd, &k, &basis))
        })
        .collect();
    RegularityReport {
        element: x.clone(),
        word: x.to_string(rd),
        order: o,
        regular_orders: results.iter().filter(|r| r.2).map(|r| r.0).collect(),
        z_regular: results.iter().any(|r| r.2 && r.0 == o),
        eigenspace_dims: results.iter().map(|r| (r.0, r.1)).collect(),
    }
}

/// Multiplicity of `Phi_d` in the characteristic polynomial of `M(w) D^j`.
pub fn cyclotomic_multiplicity(rd: &RootDatum, x: &TwistedWeylElt, d: u64) -> usize {
    let f = cyclotomic_factorization(&char_poly(&x.action_matrix(rd))).expect("finite order");
    f.iter().find(|(e, _)| *e == d).map_or(0, |(_, m)| *m)
}

fn delta_power_order(rd: &RootDatum, j: usize) -> u64 {
    let r = rd.delta_order();
    (r / num_integer::gcd(r, j % r)) as u64
}

/// `o(x) = lcm(o(delta^j), d)`.
pub fn order_lcm_check(rd: &RootDatum, x: &TwistedWeylElt, d: u64) -> Result<bool> {
    let rep = regularity(rd, x);
    if !rep.regular_orders.contains(&d) {
        return Err(Error::NotRegularOrder(d));
    }
    Ok(rep.order == num_integer::lcm(delta_power_order(rd, x.j), d))
}

/// `sigma(x)^{o(x)} = z_G^{o(x)/d}`.
pub fn verify_regular_power(rd: &RootDatum, x: &TwistedWeylElt, d: u64) -> Result<bool> {
    if d == 1 {
        return Err(Error::TrivialRegularOrder);
    }
    let rep = regularity(rd, x);
    if !rep.regular_orders.contains(&d) {
        return Err(Error::NotRegularOrder(d));
    }
    let (o, t) = projection_power(rd, &sigma(rd, x));
    Ok(t == rd.torus_scale(&rd.z_g(), (o / d) as i64))
}

/// A conjugate of `x` satisfying `sigma(y)^{o} = z_G^{o/d}`. The power law
/// is a statement about some element of each regular class; individual
/// conjugates can fail it (a reflection in `A2` is 2-regular but
/// `sigma(s_1)^2 = m_1`).
pub fn regular_power_witness(rd: &RootDatum, x: &TwistedWeylElt, d: u64) -> Result<Option<TwistedWeylElt>> {
    if d == 1 {
        return Err(Error::TrivialRegularOrder);
    }
    if !regularity(rd, x).regular_orders.contains(&d) {
        return Err(Error::NotRegularOrder(d));
    }
    let o = x.order(rd);
    let target = rd.torus_scale(&rd.z_g(), (o / d) as i64);
    Ok(conjugacy_orbit(rd, x).into_iter().find(|y| projection_power(rd, &sigma(rd, y)).1 == target))
}

/// For `x` with a regular fixed vector, returns `u` with `u x u^{-1} =
/// delta^j`, found by moving a regular fixed vector into the dominant chamber.
/// `None` if `x` fixes no regular vector.
pub fn conjugate_to_delta(rd: &RootDatum, x: &TwistedWeylElt) -> Option<WeylElt> {
    let n = rd.rank();
    let a = linalg::from_int(&x.action_matrix(rd));
    let shifted: Vec<Vec<Q>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { &a[r][c] - q(1) } else { a[r][c].clone() }).collect())
        .collect();
    let basis = linalg::kernel(&shifted, n);
    if basis.is_empty() {
        return None;
    }
    let regular = |v: &[Q]| rd.positive_roots().iter().all(|r| !rd.pair_root(r, v).is_zero());
    // Points on the moment curve avoid each hyperplane for all but finitely many parameters.
    let bound = rd.positive_roots().len() * basis.len() + 1;
    let mut v = (1..=bound as i64).find_map(|c| {
        let mut v = vec![q(0); n];
        let mut p = q(1);
        for b in &basis {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += &p * bi;
            }
            p *= q(c);
        }
        regular(&v).then_some(v)
    })?;
    let mut u = WeylElt::identity(n);
    while let Some(i) = (0..n).find(|&i| rd.pair_simple(i, &v) < q(0)) {
        let s = WeylElt::reflection(rd, i).expect("index in range");
        v = s.apply(&v);
        u = s.mul(&u);
    }
    let ut = TwistedWeylElt::from(u.clone());
    let conj = x.conjugate_by(rd, &ut);
    debug_assert!(conj.w.is_identity());
    conj.w.is_identity().then_some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{coxeter_element, enumerate};

    #[test]
    fn coxeter_is_regular() {
        for t in ["A3", "B3", "C4", "D4", "G2", "F4", "E6"] {
            let rd = RootDatum::named(t, "sc", "none").unwrap();
            let cox = TwistedWeylElt::from(coxeter_element(&rd));
            let r = regularity(&rd, &cox);
            assert!(r.z_regular, "{t}");
            assert!(verify_regular_power(&rd, &cox, r.order).unwrap(), "{t}");
            assert!(order_lcm_check(&rd, &cox, r.order).unwrap());
        }
    }

    #[test]
    fn twisted_a5_example() {
        let rd = RootDatum::named("A5", "sc", "flip").unwrap();
        let x = TwistedWeylElt::parse(&rd, "13524-13524d").unwrap();
        let r = regularity(&rd, &x);
        assert_eq!(r.order, 6);
        assert!(r.regular_orders.contains(&3));
        assert!(order_lcm_check(&rd, &x, 3).unwrap());
        assert!(verify_regular_power(&rd, &x, 3).unwrap());
        assert!(projection_power(&rd, &sigma(&rd, &x)).1.is_identity());
    }

    #[test]
    fn identity_and_errors() {
        let rd = RootDatum::named("B2", "sc", "none").unwrap();
        let e = TwistedWeylElt::identity(&rd);
        assert_eq!(regularity(&rd, &e).regular_orders, vec![1]);
        assert_eq!(verify_regular_power(&rd, &e, 1), Err(Error::TrivialRegularOrder));
        let s = TwistedWeylElt::parse(&rd, "1").unwrap();
        assert_eq!(verify_regular_power(&rd, &s, 2), Err(Error::NotRegularOrder(2)));
    }

    #[test]
    fn reflection_in_a2() {
        let rd = RootDatum::named("A2", "sc", "none").unwrap();
        let s = TwistedWeylElt::parse(&rd, "1").unwrap();
        assert!(!verify_regular_power(&rd, &s, 2).unwrap());
        let w = regular_power_witness(&rd, &s, 2).unwrap().unwrap();
        assert!(verify_regular_power(&rd, &w, 2).unwrap());
    }

    #[test]
    fn dims_match_char_poly_and_d_one() {
        let rd = RootDatum::named("A3", "sc", "flip").unwrap();
        for w in enumerate(&rd) {
            for j in 0..2 {
                let x = TwistedWeylElt::new(&rd, w.clone(), j);
                let r = regularity(&rd, &x);
                for &(d, dim) in &r.eigenspace_dims {
                    assert_eq!(dim, cyclotomic_multiplicity(&rd, &x, d));
                }
                assert_eq!(r.regular_orders.contains(&1), conjugate_to_delta(&rd, &x).is_some());
            }
        }
    }
}
