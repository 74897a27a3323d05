//! Semisimple root data with an explicit cocharacter lattice.
//!
//! Conventions: simple roots are numbered as in Bourbaki, the Cartan matrix is
//! `C[i][j] = <alpha_i, alpha_j^vee>`, and cocharacters are written in
//! simple-coroot coordinates, so `<alpha_i, mu> = (C mu)_i` and
//! `s_i(mu) = mu - (C mu)_i alpha_i^vee`.
//!
//! A rational cocharacter `mu` stands for the torus point `exp(2 pi i mu)`;
//! in particular `mu(-1)` is the point with coordinates `mu / 2`.

mod file;
pub(crate) mod lattice;
mod names;
mod torus;
mod types;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix};
use crate::rational::{fract, frac, q, Q};

pub use file::RootDatumFile;
pub use lattice::{contains as lattice_contains, lattice_basis};
pub use names::parse_group;
pub use torus::TorusElt;
pub use types::{parse_type_label, Family, SimpleType};

/// Named cocharacter lattices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    /// `SO(2n)` for type `D_n`: `Q^vee + Z varpi_1^vee`.
    SpecialOrthogonal,
    /// `Semispin(2n)` for type `D_n`, `n` even: `Q^vee + Z varpi_n^vee`
    /// (or `varpi_{n-1}^vee` when `alt`).
    HalfSpin { alt: bool },
    /// `SL(n)/mu_k` for type `A_{n-1}`.
    SlQuotient(usize),
    /// A lattice given by an explicit basis that matches no named lattice.
    Explicit,
}

impl Isogeny {
    pub fn parse(s: &str) -> Result<Isogeny> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        Ok(match lower.as_str() {
            "sc" | "simply_connected" | "simply-connected" | "simplyconnected" => Isogeny::SimplyConnected,
            "ad" | "adjoint" => Isogeny::Adjoint,
            "so" | "so(2n)" | "special_orthogonal" => Isogeny::SpecialOrthogonal,
            "semispin" | "halfspin" => Isogeny::HalfSpin { alt: false },
            "semispin'" | "halfspin'" => Isogeny::HalfSpin { alt: true },
            _ => {
                // SL(n)/mu_k, SL(n)/μk, SL/k
                let compact: String = lower.chars().filter(|c| !c.is_whitespace()).collect();
                let Some(rest) = compact.strip_prefix("sl") else {
                    return Err(Error::Parse(format!("unknown isogeny {t:?}")));
                };
                let Some((_, k)) = rest.rsplit_once('/') else {
                    return Err(Error::Parse(format!("unknown isogeny {t:?}")));
                };
                let k = k.trim_start_matches("mu").trim_start_matches('μ').trim_start_matches('_');
                let k: usize = k.parse().map_err(|_| Error::Parse(format!("unknown isogeny {t:?}")))?;
                Isogeny::SlQuotient(k)
            }
        })
    }
}

/// Diagram automorphism requested at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaSpec {
    None,
    /// The order-2 automorphism of `A_n`, `D_n` or `E6`.
    Flip,
    /// The order-3 automorphism of `D4` cycling nodes `1 -> 3 -> 4 -> 1`.
    Triality,
    /// A 1-based permutation of the simple roots.
    Permutation(Vec<usize>),
}

impl DeltaSpec {
    pub fn parse(s: &str) -> Result<DeltaSpec> {
        let t = s.trim();
        Ok(match t.to_ascii_lowercase().as_str() {
            "" | "none" => DeltaSpec::None,
            "flip" => DeltaSpec::Flip,
            "triality" => DeltaSpec::Triality,
            _ => {
                let digits = t.trim_start_matches('[').trim_end_matches(']');
                let perm = digits
                    .split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::Parse(format!("unknown diagram automorphism {t:?}")))?;
                DeltaSpec::Permutation(perm)
            }
        })
    }
}

/// How the isogeny was requested.
#[derive(Debug, Clone)]
pub enum IsogenySpec {
    Named(Isogeny),
    /// Basis vectors of `X_*` in simple-coroot coordinates.
    Basis(Vec<Vec<Q>>),
}

impl From<Isogeny> for IsogenySpec {
    fn from(i: Isogeny) -> Self {
        IsogenySpec::Named(i)
    }
}

/// A validated semisimple root datum. Immutable after construction.
#[derive(Clone)]
pub struct RootDatum {
    type_label: String,
    types: Option<Vec<SimpleType>>,
    isogeny: Isogeny,
    cartan: Vec<Vec<i64>>,
    cochar_basis: QMatrix,
    cochar_basis_inv: QMatrix,
    delta: Option<Vec<usize>>,
    delta_order: usize,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    rho_check: Vec<Q>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("type", &self.type_label)
            .field("isogeny", &self.isogeny)
            .field("delta", &self.delta)
            .finish()
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
            && self.delta == other.delta
            && lattice::sublattice(&self.cochar_basis, &other.cochar_basis_inv)
            && lattice::sublattice(&other.cochar_basis, &self.cochar_basis_inv)
    }
}

fn unit_vectors(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

impl RootDatum {
    /// Builds a datum from a type label (`"F4"`, `"A1xB2"`), a named isogeny or
    /// explicit basis, and a diagram automorphism.
    pub fn build(type_label: &str, isogeny: impl Into<IsogenySpec>, delta: DeltaSpec) -> Result<RootDatum> {
        let types = parse_type_label(type_label)?;
        let cartan = types::product_cartan(&types);
        let label = types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x");
        let delta = delta_permutation(&types, &delta)?;
        let basis = match isogeny.into() {
            IsogenySpec::Named(iso) => named_lattice(&types, &cartan, &iso)?,
            IsogenySpec::Basis(b) => b,
        };
        let mut rd = RootDatum::from_parts(cartan, &basis, delta, label)?;
        rd.types = Some(types);
        rd.isogeny = rd.recognize_isogeny();
        Ok(rd)
    }

    /// Shorthand for `build` with a named isogeny keyword and delta keyword.
    pub fn named(type_label: &str, isogeny: &str, delta: &str) -> Result<RootDatum> {
        RootDatum::build(type_label, Isogeny::parse(isogeny)?, DeltaSpec::parse(delta)?)
    }

    /// Validated construction from raw data. `basis` lists generators of
    /// `X_*` in simple-coroot coordinates; `delta` is a 0-based permutation.
    pub fn from_parts(
        cartan: Vec<Vec<i64>>,
        basis: &[Vec<Q>],
        delta: Option<Vec<usize>>,
        type_label: String,
    ) -> Result<RootDatum> {
        validate_cartan(&cartan)?;
        let n = cartan.len();
        if basis.iter().any(|b| b.len() != n) {
            return Err(Error::InvalidLattice("basis vectors have the wrong length".into()));
        }
        let cochar_basis = lattice_basis(basis, n)
            .ok_or_else(|| Error::InvalidLattice("basis does not have full rank".into()))?;
        let cochar_basis_inv = linalg::inverse(&cochar_basis).expect("lattice basis is invertible");
        // Q^vee inside X_*.
        if !lattice::sublattice(&linalg::identity(n), &cochar_basis_inv) {
            return Err(Error::InvalidLattice("X_* does not contain the coroot lattice".into()));
        }
        // X_* inside P^vee: every basis vector pairs integrally with every simple root.
        let c = linalg::from_int(&cartan);
        let pairings = linalg::mat_mul(&c, &cochar_basis);
        if pairings.iter().flatten().any(|x| !x.is_integer()) {
            return Err(Error::InvalidLattice("X_* is not contained in the coweight lattice".into()));
        }
        let delta = match delta {
            Some(p) if p.iter().enumerate().all(|(i, &x)| i == x) => None,
            other => other,
        };
        let mut delta_order = 1;
        if let Some(p) = &delta {
            validate_delta(&cartan, p)?;
            delta_order = permutation_order(p);
            for j in 0..n {
                let col = linalg::column(&cochar_basis, j);
                let img = permute_vec(p, &col);
                if !lattice::contains(&cochar_basis_inv, &img) {
                    return Err(Error::InvalidDelta("delta does not preserve X_*".into()));
                }
            }
        }
        let (positive_roots, positive_coroots) = positive_system(&cartan);
        let mut rho_check = vec![Q::zero(); n];
        for cr in &positive_coroots {
            for (r, &x) in rho_check.iter_mut().zip(cr) {
                *r += frac(x, 2);
            }
        }
        Ok(RootDatum {
            type_label,
            types: None,
            isogeny: Isogeny::Explicit,
            cartan,
            cochar_basis,
            cochar_basis_inv,
            delta,
            delta_order,
            positive_roots,
            positive_coroots,
            rho_check,
        })
    }

    /// Same Cartan data and lattice, different diagram automorphism.
    pub fn with_delta(&self, delta: DeltaSpec) -> Result<RootDatum> {
        let types = self
            .types
            .as_ref()
            .ok_or_else(|| Error::InvalidDelta("named automorphisms need a named type".into()))?;
        let p = delta_permutation(types, &delta)?;
        let basis: Vec<Vec<Q>> = (0..self.rank()).map(|j| linalg::column(&self.cochar_basis, j)).collect();
        let mut rd = RootDatum::from_parts(self.cartan.clone(), &basis, p, self.type_label.clone())?;
        rd.types = self.types.clone();
        rd.isogeny = self.isogeny.clone();
        Ok(rd)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn type_label(&self) -> &str {
        &self.type_label
    }

    pub fn simple_types(&self) -> Option<&[SimpleType]> {
        self.types.as_deref()
    }

    /// The simple type, if the datum is a single named simple type.
    pub fn simple_type(&self) -> Option<SimpleType> {
        match self.types.as_deref() {
            Some([t]) => Some(*t),
            _ => None,
        }
    }

    pub fn isogeny(&self) -> &Isogeny {
        &self.isogeny
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Columns form a basis of `X_*` in simple-coroot coordinates.
    pub fn cochar_basis(&self) -> &QMatrix {
        &self.cochar_basis
    }

    pub fn cochar_basis_inv(&self) -> &QMatrix {
        &self.cochar_basis_inv
    }

    /// 0-based permutation of the simple roots, `None` when trivial.
    pub fn delta(&self) -> Option<&[usize]> {
        self.delta.as_deref()
    }

    pub fn delta_order(&self) -> usize {
        self.delta_order
    }

    /// `delta^j` applied to a simple index.
    pub fn delta_index(&self, i: usize, j: usize) -> usize {
        match &self.delta {
            None => i,
            Some(p) => (0..j % self.delta_order).fold(i, |x, _| p[x]),
        }
    }

    /// `delta^j` applied to a vector in simple (co)root coordinates.
    pub fn delta_apply<T: Clone>(&self, v: &[T], j: usize) -> Vec<T> {
        match &self.delta {
            None => v.to_vec(),
            Some(p) => (0..j % self.delta_order).fold(v.to_vec(), |acc, _| permute_vec(p, &acc)),
        }
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive coroots in simple-coroot coordinates; entry `k` is the coroot
    /// of `positive_roots()[k]`.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// Connected components of the Dynkin diagram, as sorted index sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![];
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(i) = queue.pop_front() {
                comp.push(i);
                for j in 0..n {
                    if !seen[j] && self.cartan[i][j] != 0 {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.rank() > 0 && self.components().len() == 1
    }

    /// `<alpha_i, mu>` for `mu` in simple-coroot coordinates.
    pub fn pair_simple(&self, i: usize, mu: &[Q]) -> Q {
        self.cartan[i].iter().zip(mu).fold(Q::zero(), |acc, (&c, x)| acc + q(c) * x)
    }

    /// `<beta, mu>` for a root `beta` in simple-root coordinates.
    pub fn pair_root(&self, beta: &[i64], mu: &[Q]) -> Q {
        beta.iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .fold(Q::zero(), |acc, (i, &b)| acc + q(b) * self.pair_simple(i, mu))
    }

    /// Half the sum of the positive coroots of the Levi subsystem spanned by `subset`.
    pub fn rho_check(&self, subset: &[usize]) -> Vec<Q> {
        let n = self.rank();
        let s: BTreeSet<usize> = subset.iter().copied().collect();
        let mut out = vec![Q::zero(); n];
        for cr in &self.positive_coroots {
            if cr.iter().enumerate().all(|(i, &x)| x == 0 || s.contains(&i)) {
                for (o, &x) in out.iter_mut().zip(cr) {
                    *o += frac(x, 2);
                }
            }
        }
        out
    }

    /// `rho^vee` of the whole datum.
    pub fn rho(&self) -> &[Q] {
        &self.rho_check
    }

    pub fn contains_cochar(&self, mu: &[Q]) -> bool {
        lattice::contains(&self.cochar_basis_inv, mu)
    }

    pub fn rho_in_lattice(&self) -> bool {
        self.contains_cochar(&self.rho_check)
    }

    /// Canonical torus point represented by `mu mod X_*`.
    pub fn torus_from_cochar(&self, mu: &[Q]) -> TorusElt {
        assert_eq!(mu.len(), self.rank(), "cocharacter has the wrong length");
        let lattice: Vec<Q> = linalg::mat_vec(&self.cochar_basis_inv, mu).iter().map(fract).collect();
        let coords = linalg::mat_vec(&self.cochar_basis, &lattice);
        TorusElt { coords, lattice }
    }

    /// The point `mu(-1)`.
    pub fn torus_at_minus_one(&self, mu: &[Q]) -> TorusElt {
        let half: Vec<Q> = mu.iter().map(|x| x / q(2)).collect();
        self.torus_from_cochar(&half)
    }

    pub fn torus_identity(&self) -> TorusElt {
        let z = vec![Q::zero(); self.rank()];
        TorusElt { coords: z.clone(), lattice: z }
    }

    /// `m_alpha = alpha^vee(-1)` for a simple root.
    pub fn m_alpha(&self, i: usize) -> TorusElt {
        let mut mu = vec![Q::zero(); self.rank()];
        mu[i] = Q::one();
        self.torus_at_minus_one(&mu)
    }

    /// `z_G = (2 rho^vee)(-1)`.
    pub fn z_g(&self) -> TorusElt {
        self.torus_from_cochar(&self.rho_check)
    }

    /// `z_S = (2 rho^vee(S))(-1)`.
    pub fn z_levi(&self, subset: &[usize]) -> TorusElt {
        self.torus_from_cochar(&self.rho_check(subset))
    }

    pub fn torus_add(&self, a: &TorusElt, b: &TorusElt) -> TorusElt {
        self.torus_from_cochar(&crate::rational::add_vec(&a.coords, &b.coords))
    }

    pub fn torus_neg(&self, a: &TorusElt) -> TorusElt {
        let v: Vec<Q> = a.coords.iter().map(|x| -x).collect();
        self.torus_from_cochar(&v)
    }

    pub fn torus_scale(&self, a: &TorusElt, k: i64) -> TorusElt {
        self.torus_from_cochar(&crate::rational::scale_vec(&a.coords, &q(k)))
    }

    /// `<chi, t> mod 1` for `chi` given in the basis dual to the cocharacter basis.
    pub fn evaluate(&self, chi: &[i64], t: &TorusElt) -> Q {
        let s = chi.iter().zip(&t.lattice).fold(Q::zero(), |acc, (&c, x)| acc + q(c) * x);
        fract(&s)
    }

    /// Whether `t` lies in the center, i.e. every root is trivial on it.
    pub fn is_central(&self, t: &TorusElt) -> bool {
        (0..self.rank()).all(|i| self.pair_simple(i, &t.coords).is_integer())
    }

    /// Fundamental coweights in simple-coroot coordinates (columns of `C^{-1}`).
    pub fn fundamental_coweights(&self) -> Vec<Vec<Q>> {
        let inv = linalg::inverse(&linalg::from_int(&self.cartan)).expect("Cartan matrix is invertible");
        (0..self.rank()).map(|j| linalg::column(&inv, j)).collect()
    }

    /// `|Z(G)| = [P^vee : X_*]`.
    pub fn center_order(&self) -> u64 {
        let pw = linalg::from_columns(&self.fundamental_coweights());
        lattice::index(&pw, &self.cochar_basis)
    }

    /// `[X_* : Q^vee]`, the order of the fundamental group.
    pub fn fundamental_group_order(&self) -> u64 {
        lattice::index(&self.cochar_basis, &linalg::identity(self.rank()))
    }

    /// Enumerates `(1/k) X_* / X_*`.
    pub fn torsion_points(&self, k: u64) -> Vec<TorusElt> {
        let n = self.rank();
        let total = (k as usize).pow(n as u32);
        let mut out = Vec::with_capacity(total);
        let mut digits = vec![0u64; n];
        for _ in 0..total {
            let lat: Vec<Q> = digits.iter().map(|&d| frac(d as i64, k as i64)).collect();
            let coords = linalg::mat_vec(&self.cochar_basis, &lat);
            out.push(TorusElt { coords, lattice: lat });
            for d in digits.iter_mut() {
                *d += 1;
                if *d < k {
                    break;
                }
                *d = 0;
            }
        }
        out
    }

    /// Conventional group name when the datum is a recognized simple group.
    pub fn group_name(&self) -> String {
        let half = frac(1, 2);
        if self.type_label == "A1xA1"
            && self.contains_cochar(&[half.clone(), half.clone()])
            && !self.contains_cochar(&[half, Q::zero()])
        {
            return "SO(4)".into();
        }
        let Some(t) = self.simple_type() else {
            return format!("{}:{:?}", self.type_label, self.isogeny);
        };
        let n = t.rank;
        match (t.family, &self.isogeny) {
            (Family::A, Isogeny::SimplyConnected) => format!("SL({})", n + 1),
            (Family::A, Isogeny::Adjoint) => format!("PSL({})", n + 1),
            (Family::A, Isogeny::SlQuotient(k)) => format!("SL({})/mu{}", n + 1, k),
            (Family::B, Isogeny::SimplyConnected) => format!("Spin({})", 2 * n + 1),
            (Family::B, Isogeny::Adjoint) => format!("SO({})", 2 * n + 1),
            (Family::C, Isogeny::SimplyConnected) => format!("Sp({})", 2 * n),
            (Family::C, Isogeny::Adjoint) => format!("PSp({})", 2 * n),
            (Family::D, Isogeny::SimplyConnected) => format!("Spin({})", 2 * n),
            (Family::D, Isogeny::Adjoint) => format!("PSO({})", 2 * n),
            (Family::D, Isogeny::SpecialOrthogonal) => format!("SO({})", 2 * n),
            (Family::D, Isogeny::HalfSpin { alt: false }) => format!("Semispin({})", 2 * n),
            (Family::D, Isogeny::HalfSpin { alt: true }) => format!("Semispin'({})", 2 * n),
            (_, Isogeny::SimplyConnected) => format!("{t}:sc"),
            (_, Isogeny::Adjoint) => format!("{t}:adjoint"),
            (_, iso) => format!("{t}:{iso:?}"),
        }
    }

    fn recognize_isogeny(&self) -> Isogeny {
        let Some(types) = &self.types else {
            return Isogeny::Explicit;
        };
        let mut candidates = vec![Isogeny::SimplyConnected, Isogeny::Adjoint];
        if let [t] = types.as_slice() {
            match t.family {
                Family::D => {
                    candidates.push(Isogeny::SpecialOrthogonal);
                    if t.rank % 2 == 0 {
                        candidates.push(Isogeny::HalfSpin { alt: false });
                        candidates.push(Isogeny::HalfSpin { alt: true });
                    }
                }
                Family::A => {
                    let m = t.rank + 1;
                    candidates.extend((2..m).filter(|k| m % k == 0).map(Isogeny::SlQuotient));
                }
                _ => {}
            }
        }
        for iso in candidates {
            let Ok(gens) = named_lattice(types, &self.cartan, &iso) else { continue };
            let Some(b) = lattice_basis(&gens, self.rank()) else { continue };
            let b_inv = linalg::inverse(&b).expect("basis invertible");
            if lattice::sublattice(&b, &self.cochar_basis_inv) && lattice::sublattice(&self.cochar_basis, &b_inv) {
                return iso;
            }
        }
        Isogeny::Explicit
    }
}

fn permute_vec<T: Clone>(p: &[usize], v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    for (i, x) in v.iter().enumerate() {
        out[p[i]] = x.clone();
    }
    out
}

fn permutation_order(p: &[usize]) -> usize {
    let mut ord = 1usize;
    let mut seen = vec![false; p.len()];
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        ord = num_integer::lcm(ord, len);
    }
    ord
}

fn validate_cartan(c: &[Vec<i64>]) -> Result<()> {
    let n = c.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    if c.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidCartan("matrix is not square".into()));
    }
    for i in 0..n {
        if c[i][i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {} is not 2", i + 1)));
        }
        for j in 0..n {
            if i != j && (c[i][j] > 0 || ((c[i][j] == 0) != (c[j][i] == 0))) {
                return Err(Error::InvalidCartan(format!("bad off-diagonal pair ({}, {})", i + 1, j + 1)));
            }
        }
    }
    // Symmetrize: C D is symmetric for D = diag(|alpha_j|^2 / 2).
    let mut d: Vec<Option<Q>> = vec![None; n];
    for s in 0..n {
        if d[s].is_some() {
            continue;
        }
        d[s] = Some(Q::one());
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if i == j || c[i][j] == 0 {
                    continue;
                }
                // C[i][j] d_j = C[j][i] d_i
                let dj = &di * q(c[j][i]) / q(c[i][j]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(x) if *x != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    let sym: QMatrix = (0..n)
        .map(|i| (0..n).map(|j| q(c[i][j]) * d[j].clone().unwrap()).collect())
        .collect();
    for k in 1..=n {
        let minor: QMatrix = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
        if linalg::determinant(&minor) <= Q::zero() {
            return Err(Error::InvalidCartan("symmetrization is not positive definite".into()));
        }
    }
    Ok(())
}

fn validate_delta(c: &[Vec<i64>], p: &[usize]) -> Result<()> {
    let n = c.len();
    let mut seen = vec![false; n];
    if p.len() != n || p.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
        return Err(Error::InvalidDelta(format!("{p:?} is not a permutation of the simple roots")));
    }
    for i in 0..n {
        for j in 0..n {
            if c[p[i]][p[j]] != c[i][j] {
                return Err(Error::InvalidDelta("permutation does not preserve the Cartan matrix".into()));
            }
        }
    }
    Ok(())
}

fn delta_permutation(types: &[SimpleType], spec: &DeltaSpec) -> Result<Option<Vec<usize>>> {
    let n: usize = types.iter().map(|t| t.rank).sum();
    let named = |name: &str| -> Result<Vec<usize>> {
        let [t] = types else {
            return Err(Error::InvalidDelta(format!("{name} needs a simple type")));
        };
        let r = t.rank;
        let mut p: Vec<usize> = (0..r).collect();
        match (name, t.family) {
            ("flip", Family::A) => p = (0..r).rev().collect(),
            ("flip", Family::D) => p.swap(r - 2, r - 1),
            ("flip", Family::E) if r == 6 => {
                p.swap(0, 5);
                p.swap(2, 4);
            }
            ("triality", Family::D) if r == 4 => p = vec![2, 1, 3, 0],
            _ => return Err(Error::InvalidDelta(format!("no {name} automorphism for {t}"))),
        }
        Ok(p)
    };
    let p = match spec {
        DeltaSpec::None => return Ok(None),
        DeltaSpec::Flip => named("flip")?,
        DeltaSpec::Triality => named("triality")?,
        DeltaSpec::Permutation(one_based) => {
            if one_based.len() != n || one_based.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::InvalidDelta(format!("{one_based:?} is not a permutation of 1..{n}")));
            }
            one_based.iter().map(|x| x - 1).collect()
        }
    };
    Ok(Some(p))
}

/// Generators of the named lattice, in simple-coroot coordinates.
fn named_lattice(types: &[SimpleType], cartan: &[Vec<i64>], iso: &Isogeny) -> Result<Vec<Vec<Q>>> {
    let n = cartan.len();
    let label = types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x");
    let incompatible = || Error::IncompatibleIsogeny { type_label: label.clone(), isogeny: format!("{iso:?}") };
    let coweights = || {
        let inv = linalg::inverse(&linalg::from_int(cartan)).expect("Cartan matrix is invertible");
        (0..n).map(|j| linalg::column(&inv, j)).collect::<Vec<_>>()
    };
    let mut gens = unit_vectors(n);
    match iso {
        Isogeny::SimplyConnected => {}
        Isogeny::Adjoint => gens = coweights(),
        Isogeny::Explicit => return Err(incompatible()),
        _ => {
            let [t] = types else { return Err(incompatible()) };
            let w = coweights();
            match (iso, t.family) {
                (Isogeny::SpecialOrthogonal, Family::D) => gens.push(w[0].clone()),
                (Isogeny::SpecialOrthogonal, Family::B) => gens = w,
                (Isogeny::HalfSpin { alt }, Family::D) if t.rank % 2 == 0 => {
                    gens.push(w[if *alt { t.rank - 2 } else { t.rank - 1 }].clone())
                }
                (Isogeny::SlQuotient(k), Family::A) if *k >= 1 && (t.rank + 1) % k == 0 => {
                    let m = ((t.rank + 1) / k) as i64;
                    gens.push(w[0].iter().map(|x| x * q(m)).collect());
                }
                _ => return Err(incompatible()),
            }
        }
    }
    Ok(gens)
}

/// Positive roots and their coroots by closure under simple reflections.
fn positive_system(c: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = c.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut coroots: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back((e.clone(), e));
    }
    while let Some((beta, cobeta)) = queue.pop_front() {
        for i in 0..n {
            let is_simple_i = beta.iter().enumerate().all(|(k, &x)| x == (k == i) as i64);
            if is_simple_i {
                continue;
            }
            // <beta, alpha_i^vee> and <alpha_i, beta^vee>
            let b: i64 = (0..n).map(|k| beta[k] * c[k][i]).sum();
            let cb: i64 = (0..n).map(|k| c[i][k] * cobeta[k]).sum();
            let mut nb = beta.clone();
            nb[i] -= b;
            let mut ncb = cobeta.clone();
            ncb[i] -= cb;
            if seen.insert(nb.clone()) {
                queue.push_back((nb, ncb));
            }
        }
        roots.push(beta);
        coroots.push(cobeta);
    }
    let mut idx: Vec<usize> = (0..roots.len()).collect();
    idx.sort_by(|&a, &b| {
        let ha: i64 = roots[a].iter().sum();
        let hb: i64 = roots[b].iter().sum();
        ha.cmp(&hb).then_with(|| roots[b].cmp(&roots[a]))
    });
    (
        idx.iter().map(|&k| roots[k].clone()).collect(),
        idx.iter().map(|&k| coroots[k].clone()).collect(),
    )
}
