//! Rational polynomials, cyclotomic polynomials and linear algebra over
//! `Q(zeta_d) = Q[y] / Phi_d(y)`.

use num_traits::{One, Zero};

use crate::rational::{q, Q};

/// Dense polynomial, coefficients from the constant term up. No trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn from_int(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn zero() -> Poly {
        Poly(vec![])
    }

    pub fn one() -> Poly {
        Poly(vec![Q::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn scale(&self, s: &Q) -> Poly {
        Poly::new(self.0.iter().map(|x| x * s).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let mut quo = vec![Q::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let f = &r[k] / &lead;
            if !f.is_zero() {
                for (i, c) in d.0.iter().enumerate() {
                    r[k - dd + i] -= &f * c;
                }
                quo[k - dd] = f;
            }
            r.pop();
        }
        (Poly::new(quo), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// `(g, s)` with `g = gcd(self, m)` monic and `s * self = g (mod m)`.
    pub fn gcd_ext(&self, m: &Poly) -> (Poly, Poly) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (quo, r) = r0.div_rem(&r1);
            let s = s0.sub(&quo.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let lead = r0.0.last().cloned().unwrap_or_else(Q::one);
        let inv = lead.recip();
        (r0.scale(&inv), s0.scale(&inv))
    }

    pub fn monic(&self) -> Poly {
        let lead = self.0.last().expect("nonzero").recip();
        self.scale(&lead)
    }
}

/// The `d`-th cyclotomic polynomial, as `(y^d - 1) / prod_{e | d, e < d} Phi_e`.
pub fn cyclotomic(d: u64) -> Poly {
    assert!(d >= 1);
    let mut c = vec![Q::zero(); d as usize + 1];
    c[0] = -Q::one();
    c[d as usize] = Q::one();
    let mut p = Poly::new(c);
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (quo, r) = p.div_rem(&cyclotomic(e));
            debug_assert!(r.is_zero());
            p = quo;
        }
    }
    p
}

pub fn euler_phi(d: u64) -> u64 {
    (1..=d).filter(|&k| num_integer::gcd(k, d) == 1).count() as u64
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Characteristic polynomial `det(y I - A)` by the Faddeev-LeVerrier recursion.
pub fn char_poly(a: &[Vec<i64>]) -> Poly {
    let n = a.len();
    let am: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    let mut m = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        let mut next = crate::linalg::mat_mul(&am, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am_k = crate::linalg::mat_mul(&am, &m);
        let tr = (0..n).fold(Q::zero(), |acc, i| acc + &am_k[i][i]);
        coeffs[n - k] = -tr / q(k as i64);
    }
    Poly::new(coeffs)
}

/// Multiplicities of cyclotomic factors, `[(d, mult)]` in increasing `d`.
/// Returns `None` if the polynomial is not a product of cyclotomic polynomials.
pub fn cyclotomic_factorization(p: &Poly) -> Option<Vec<(u64, usize)>> {
    let mut rest = p.monic();
    let n = rest.degree()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while rest.degree() != Some(0) {
        if euler_phi(d) as usize <= n {
            let phi = cyclotomic(d);
            let mut mult = 0;
            loop {
                let (quo, r) = rest.div_rem(&phi);
                if !r.is_zero() {
                    break;
                }
                rest = quo;
                mult += 1;
            }
            if mult > 0 {
                out.push((d, mult));
            }
        }
        d += 1;
        if d > 4 * (n as u64 + 1) * (n as u64 + 1) {
            return None;
        }
    }
    Some(out)
}

/// `Phi2*Phi6^2` style rendering of a factorization.
pub fn format_factorization(f: &[(u64, usize)]) -> String {
    f.iter()
        .map(|&(d, m)| if m == 1 { format!("Phi{d}") } else { format!("Phi{d}^{m}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// The field `Q(zeta_d)`, elements reduced modulo `Phi_d`.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    pub d: u64,
    modulus: Poly,
}

pub type FieldElt = Poly;

impl CyclotomicField {
    pub fn new(d: u64) -> CyclotomicField {
        CyclotomicField { d, modulus: cyclotomic(d) }
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn from_q(&self, x: Q) -> FieldElt {
        Poly::new(vec![x])
    }

    /// The generator `zeta_d`.
    pub fn zeta(&self) -> FieldElt {
        Poly::new(vec![Q::zero(), Q::one()]).rem(&self.modulus)
    }

    pub fn add(&self, a: &FieldElt, b: &FieldElt) -> FieldElt {
        a.add(b)
    }

    pub fn sub(&self, a: &FieldElt, b: &FieldElt) -> FieldElt {
        a.sub(b)
    }

    pub fn mul(&self, a: &FieldElt, b: &FieldElt) -> FieldElt {
        a.mul(b).rem(&self.modulus)
    }

    pub fn inv(&self, a: &FieldElt) -> FieldElt {
        let (g, s) = a.gcd_ext(&self.modulus);
        assert_eq!(g, Poly::one(), "inverse of zero");
        s.rem(&self.modulus)
    }

    /// Basis of `{v : A v = zeta v}` for an integer matrix `A`.
    pub fn eigenspace(&self, a: &[Vec<i64>]) -> Vec<Vec<FieldElt>> {
        let n = a.len();
        let z = self.zeta();
        let mut m: Vec<Vec<FieldElt>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let e = self.from_q(q(a[r][c]));
                        if r == c { self.sub(&e, &z) } else { e }
                    })
                    .collect()
            })
            .collect();
        // Gauss-Jordan over the field.
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(row, p);
            let inv = self.inv(&m[row][col]);
            for c in col..n {
                m[row][c] = self.mul(&m[row][c], &inv);
            }
            for r in 0..n {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..n {
                        let d = self.mul(&f, &m[row][c]);
                        m[r][c] = self.sub(&m[r][c], &d);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Poly::zero(); n];
                v[free] = Poly::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = Poly::zero().sub(&m[r][free]);
                }
                v
            })
            .collect()
    }

    /// `sum_k c_k v_k` for rational `c`.
    pub fn dot_rational(&self, c: &[Q], v: &[FieldElt]) -> FieldElt {
        c.iter().zip(v).fold(Poly::zero(), |acc, (x, y)| acc.add(&y.scale(x)))
    }
}
