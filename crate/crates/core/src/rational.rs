//! Exact rational helpers shared by the rest of the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serializes as `"p/q"`, always with an explicit denominator.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn format_qvec(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(format_q).collect();
    format!("[{}]", parts.join(", "))
}

/// Fractional part in `[0, 1)`.
pub fn fract(x: &Q) -> Q {
    x - x.floor()
}

pub fn is_integral(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Least common multiple of the denominators of `v`, as a `u64`.
pub fn denominator_lcm(v: &[Q]) -> u64 {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    l.to_u64().expect("torus element order exceeds u64")
}

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn add_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &[Q], s: &Q) -> Vec<Q> {
    a.iter().map(|x| x * s).collect()
}

pub fn int_vec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Converts an integral rational vector to `i64`; `None` if some entry is not integral.
pub fn to_int_vec(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
        .collect()
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

/// `gcd` of a slice of integers (0 for the empty slice).
pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Returns `u` with `u . a = gcd(a)`.
pub fn bezout(a: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut u = vec![0i64; a.len()];
    for (k, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let e = g.extended_gcd(&x);
        // e.gcd = e.x * g + e.y * x
        for c in u.iter_mut() {
            *c *= e.x;
        }
        u[k] = e.y;
        g = e.gcd;
    }
    if g < 0 {
        g = -g;
        for c in u.iter_mut() {
            *c = -*c;
        }
    }
    (g, u)
}
