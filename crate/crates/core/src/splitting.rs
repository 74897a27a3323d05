//! Whether `1 -> T -> N -> W -> 1` splits, with explicit certificates.
//!
//! A certificate assigns `t_i` to each simple root; `g_i = t_i sigma(s_i)`
//! must satisfy `g_i^2 = 1` and `(g_i g_j)^{m_ij} = 1`, the Coxeter
//! presentation of `W`.
//!
//! Conjugating by `mu` in `V` changes `t_i` by `<alpha_i, mu> alpha_i^vee`, and
//! the pairings `<alpha_i, mu>` can be chosen independently. So `T`-conjugacy
//! classes of splittings are tuples of classes of `t_i` in
//! `V / (Q alpha_i^vee + X_*)`, and the search runs over those.

use std::collections::{BTreeMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::classes::{coset_lift_order, elliptic_classes, named_isogenies, power_closed_form, EllipticClassRecord};
use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, sub_vec, Q};
use crate::rootdata::lattice::{sublattice, TorusQuotient};
use crate::rootdata::{DeltaSpec, Family, Isogeny, RootDatum, TorusElt};
use crate::torusnorm::{multiply, power, projection_power, sigma, NormalizerElt};
use crate::weyl::{conjugacy_classes, enumerate, TwistedWeylElt, WeylElt};

const GUARD: u128 = 10_000_000;

/// Solutions collected by [`splitting_classes`] before deduplication.
const SOLUTION_CAP: usize = 256;

/// `t_i` for each simple root, indexed from 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub t: Vec<TorusElt>,
}

impl Certificate {
    /// `{"1": ["1/2", "0"], ...}` with simple-coroot coordinates.
    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, Vec<String>> = self
            .t
            .iter()
            .enumerate()
            .map(|(i, t)| ((i + 1).to_string(), t.coords().iter().map(format_q).collect()))
            .collect();
        json!(map)
    }

    pub fn from_json(rd: &RootDatum, v: &serde_json::Value) -> Result<Certificate> {
        let n = rd.rank();
        let obj = v.as_object().ok_or_else(|| Error::Parse("certificate must be an object".into()))?;
        let mut t: Vec<Option<TorusElt>> = vec![None; n];
        for (k, coords) in obj {
            let i: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad root index {k:?}")))?;
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            let arr = coords.as_array().ok_or_else(|| Error::Parse(format!("root {i}: expected a list")))?;
            let mu: Vec<Q> = arr
                .iter()
                .map(|c| match c {
                    serde_json::Value::String(s) => parse_q(s),
                    serde_json::Value::Number(x) => parse_q(&x.to_string()),
                    _ => Err(Error::Parse(format!("root {i}: bad coordinate {c}"))),
                })
                .collect::<Result<_>>()?;
            if mu.len() != n {
                return Err(Error::Parse(format!("root {i}: expected {n} coordinates")));
            }
            t[i - 1] = Some(rd.torus_from_cochar(&mu));
        }
        let t = t
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::Parse(format!("missing root {}", i + 1))))
            .collect::<Result<_>>()?;
        Ok(Certificate { t })
    }

    pub fn generators(&self, rd: &RootDatum) -> Vec<NormalizerElt> {
        self.t.iter().enumerate().map(|(i, t)| generator(rd, i, t)).collect()
    }

    /// The image of `w`, as the product of generators along a reduced word.
    pub fn image(&self, rd: &RootDatum, w: &WeylElt) -> NormalizerElt {
        let g = self.generators(rd);
        w.reduced_word(rd).iter().fold(NormalizerElt::identity(rd), |acc, &i| multiply(rd, &acc, &g[i]))
    }
}

fn generator(rd: &RootDatum, i: usize, t: &TorusElt) -> NormalizerElt {
    let s = WeylElt::reflection(rd, i).expect("index in range");
    NormalizerElt::new(rd, t.clone(), &TwistedWeylElt::from(s))
}

/// `m_ij`, the order of `s_i s_j`.
pub fn coxeter_m(rd: &RootDatum, i: usize, j: usize) -> u64 {
    if i == j {
        return 1;
    }
    let c = rd.cartan();
    match c[i][j] * c[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        p => panic!("not a finite type Cartan matrix (product {p})"),
    }
}

fn pair_holds(rd: &RootDatum, i: usize, j: usize, gi: &NormalizerElt, gj: &NormalizerElt) -> bool {
    power(rd, &multiply(rd, gi, gj), coxeter_m(rd, i, j)).is_identity()
}

/// Checks every Coxeter relation by direct multiplication.
pub fn verify_certificate(rd: &RootDatum, cert: &Certificate) -> Result<()> {
    let n = rd.rank();
    if cert.t.len() != n || cert.t.iter().any(|t| t.rank() != n) {
        return Err(Error::InvalidCertificate(format!("expected {n} torus elements of rank {n}")));
    }
    let g = cert.generators(rd);
    for i in 0..n {
        if !power(rd, &g[i], 2).is_identity() {
            return Err(Error::InvalidCertificate(format!("g_{} has order > 2", i + 1)));
        }
        for j in i + 1..n {
            if !pair_holds(rd, i, j, &g[i], &g[j]) {
                let m = coxeter_m(rd, i, j);
                return Err(Error::InvalidCertificate(format!("(g_{} g_{})^{m} != 1", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictSource {
    Classification,
    SearchCertificate,
    Obstruction,
    /// A torsion search that found nothing; says nothing about splitting.
    NoCertificate,
}

impl VerdictSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictSource::Classification => "classification",
            VerdictSource::SearchCertificate => "search-certificate",
            VerdictSource::Obstruction => "obstruction",
            VerdictSource::NoCertificate => "no-certificate",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Obstruction {
    /// `rho^vee` is not a cocharacter, so `sigma(w_0)^2 = z_G != 1`.
    RhoNotInLattice,
    /// Every lift of an element of `W` (or of `W delta`) has order at least
    /// `lift_order > order`.
    Class { label: String, twisted: bool, word: String, order: u64, lift_order: u64 },
}

impl Obstruction {
    pub fn describe(&self) -> String {
        match self {
            Obstruction::RhoNotInLattice => "rho^vee not in X_*".into(),
            Obstruction::Class { label, twisted, word, order, lift_order } => {
                let kind = if *twisted { "twisted class" } else { "class" };
                format!("{kind} {label} (w = {word}): o(w) = {order}, o(sigma(w)) = {lift_order}")
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Obstruction::RhoNotInLattice => json!({"kind": "rho-not-in-lattice"}),
            Obstruction::Class { label, twisted, word, order, lift_order } => json!({
                "kind": "class",
                "label": label,
                "twisted": twisted,
                "word": word,
                "order": order,
                "lift_order": lift_order,
            }),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SplittingVerdict {
    /// `None` when nothing decides the question.
    pub splits: Option<bool>,
    pub source: VerdictSource,
    pub obstructions: Vec<Obstruction>,
    pub certificate: Option<Certificate>,
    /// A negative that rests on the classification alone.
    pub classification_only: bool,
    pub torsion_bound: Option<u64>,
}

impl SplittingVerdict {
    fn from_classification(splits: Option<bool>, classification_only: bool) -> SplittingVerdict {
        SplittingVerdict {
            splits,
            source: VerdictSource::Classification,
            obstructions: vec![],
            certificate: None,
            classification_only,
            torsion_bound: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "splits": self.splits,
            "source": self.source,
            "obstructions": self.obstructions.iter().map(Obstruction::to_json).collect::<Vec<_>>(),
            "certificate": self.certificate.as_ref().map(Certificate::to_json),
            "classification_only": self.classification_only,
            "torsion_bound": self.torsion_bound,
        })
    }
}

fn same_lattice(a: &RootDatum, b: &RootDatum) -> bool {
    sublattice(a.cochar_basis(), b.cochar_basis_inv()) && sublattice(b.cochar_basis(), a.cochar_basis_inv())
}

/// The named isogeny with the same lattice, if any.
fn recognize(rd: &RootDatum) -> Option<Isogeny> {
    if *rd.isogeny() != Isogeny::Explicit {
        return Some(rd.isogeny().clone());
    }
    let named = named_isogenies(rd.type_label(), "none").ok()?;
    named.into_iter().find(|o| same_lattice(o, rd)).map(|o| o.isogeny().clone())
}

/// The case list for simple groups. In characteristic 2 the Tits group
/// is isomorphic to `W`, so everything splits.
pub fn splits_classification(rd: &RootDatum, char2: bool) -> Result<SplittingVerdict> {
    let t = rd.simple_type().ok_or_else(|| Error::NotSimple(rd.type_label().to_string()))?;
    if char2 {
        return Ok(SplittingVerdict::from_classification(Some(true), false));
    }
    let n = t.rank;
    let z = rd.center_order();
    let iso = recognize(rd);
    let splits = match t.family {
        Family::A => Some(z % 2 == 1 || (n == 3 && z == 2)),
        Family::B | Family::C if z == 1 => Some(t.family == Family::B || n <= 2),
        Family::B | Family::C => Some(false),
        Family::D => match iso {
            Some(Isogeny::SpecialOrthogonal | Isogeny::Adjoint) => Some(true),
            Some(Isogeny::HalfSpin { .. }) => Some(n == 4),
            Some(Isogeny::SimplyConnected) => Some(false),
            _ => None,
        },
        Family::G => Some(true),
        Family::F | Family::E => Some(false),
    };
    let subgroup_argument = matches!(t.family, Family::F | Family::E);
    Ok(SplittingVerdict::from_classification(splits, subgroup_argument))
}

fn sigma_power_of(rd: &RootDatum, rec: &EllipticClassRecord) -> Option<TorusElt> {
    match &rec.rep {
        Some(x) => Some(projection_power(rd, &sigma(rd, x)).1),
        None => power_closed_form(rd, rec).ok().map(|(t, _)| t),
    }
}

fn class_obstructions(rd: &RootDatum, twisted: bool) -> Vec<Obstruction> {
    let Ok(records) = elliptic_classes(rd, twisted) else { return vec![] };
    records
        .par_iter()
        .filter_map(|rec| {
            let t = sigma_power_of(rd, rec)?;
            (!t.is_identity()).then(|| Obstruction::Class {
                label: rec.label.clone(),
                twisted,
                word: rec.rep.as_ref().map(|x| x.to_string(rd)).or(rec.rep_word.clone()).unwrap_or_default(),
                order: rec.order,
                lift_order: rec.order * t.order(),
            })
        })
        .collect()
}

/// Largest rank at which every conjugacy class of `W` is scanned.
const FULL_SCAN_RANK: usize = 6;

/// Certified reasons why `W` does not lift: `rho^vee` outside `X_*`,
/// elliptic classes of `W` or `W delta` whose lifts all have doubled order,
/// and (in rank at most 6) any class of `W` whose minimal lift order
/// exceeds its order.
pub fn obstruction_report(rd: &RootDatum) -> Vec<Obstruction> {
    let mut out = Vec::new();
    if !rd.rho_in_lattice() {
        out.push(Obstruction::RhoNotInLattice);
    }
    if rd.simple_type().is_none() {
        return out;
    }
    let plain = rd.with_delta(DeltaSpec::None).unwrap_or_else(|_| rd.clone());
    out.extend(class_obstructions(&plain, false));
    let flipped = if rd.delta().is_some() { Ok(rd.clone()) } else { rd.with_delta(DeltaSpec::Flip) };
    if let Ok(f) = flipped {
        if f.delta().is_some() {
            out.extend(class_obstructions(&f, true));
        }
    }
    if rd.rank() <= FULL_SCAN_RANK {
        let elements = enumerate(&plain);
        let found: Vec<Obstruction> = conjugacy_classes(&plain, &elements, 0)
            .par_iter()
            .filter(|c| !c.rep.is_elliptic(&plain))
            .filter_map(|c| {
                let o = c.rep.order(&plain);
                let m = coset_lift_order(&plain, &c.rep);
                let word = c.rep.to_string(&plain);
                (m > o).then(|| Obstruction::Class { label: word.clone(), twisted: false, word, order: o, lift_order: m })
            })
            .collect();
        out.extend(found);
    }
    out
}

/// Odd `m_ij` edges; their components are the conjugacy classes of simple roots.
fn conjugacy_components(rd: &RootDatum) -> Vec<Vec<usize>> {
    let n = rd.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut comp = vec![r];
        let mut queue = VecDeque::from([r]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if !seen[j] && coxeter_m(rd, i, j) == 3 {
                    seen[j] = true;
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// For each simple root, one point of `(1/k) X_* / X_*` per class modulo
/// `Q alpha_i^vee` with `(t sigma(s_i))^2 = 1`.
fn candidates(rd: &RootDatum, k: u64) -> Vec<Vec<TorusElt>> {
    let n = rd.rank();
    let points = rd.torsion_points(k);
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut e = vec![Q::from_integer(0.into()); n];
            e[i] = Q::from_integer(1.into());
            let quot = TorusQuotient::new(&[e], rd.cochar_basis(), n);
            let mut seen = HashSet::new();
            points
                .iter()
                .filter(|t| seen.insert(quot.coords(t.coords())))
                .filter(|t| power(rd, &generator(rd, i, t), 2).is_identity())
                .cloned()
                .collect()
        })
        .collect()
}

fn guard(rd: &RootDatum, k: u64) -> Result<()> {
    let size = (k as u128).checked_pow(rd.rank() as u32).unwrap_or(u128::MAX);
    if k == 0 || size > GUARD {
        return Err(Error::SearchGuard(size));
    }
    Ok(())
}

/// Depth-first search over `order`, checking each new generator against the
/// ones already placed. `fixed[i]` overrides the candidate list.
fn dfs(
    rd: &RootDatum,
    order: &[usize],
    cands: &[Vec<TorusElt>],
    fixed: &dyn Fn(usize, &[Option<NormalizerElt>], &[Option<TorusElt>]) -> Option<TorusElt>,
    depth: usize,
    gens: &mut Vec<Option<NormalizerElt>>,
    ts: &mut Vec<Option<TorusElt>>,
    out: &mut Vec<Certificate>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    if depth == order.len() {
        out.push(Certificate { t: ts.iter().map(|t| t.clone().expect("assigned")).collect() });
        return;
    }
    let i = order[depth];
    let forced = fixed(i, gens, ts);
    let list: Vec<TorusElt> = match forced {
        Some(t) => vec![t],
        None => cands[i].clone(),
    };
    for t in list {
        let g = generator(rd, i, &t);
        if !power(rd, &g, 2).is_identity() {
            continue;
        }
        let ok = order[..depth].iter().all(|&j| pair_holds(rd, j, i, gens[j].as_ref().unwrap(), &g));
        if !ok {
            continue;
        }
        gens[i] = Some(g);
        ts[i] = Some(t);
        dfs(rd, order, cands, fixed, depth + 1, gens, ts, out, cap);
        gens[i] = None;
        ts[i] = None;
        if out.len() >= cap {
            return;
        }
    }
}

/// Runs the search in parallel over the first root's candidates.
fn run(
    rd: &RootDatum,
    order: &[usize],
    cands: &[Vec<TorusElt>],
    fixed: &(dyn Fn(usize, &[Option<NormalizerElt>], &[Option<TorusElt>]) -> Option<TorusElt> + Sync),
    cap: usize,
) -> Vec<Certificate> {
    let n = rd.rank();
    let first = order[0];
    let mut found: Vec<Certificate> = cands[first]
        .par_iter()
        .flat_map_iter(|t0| {
            let mut gens = vec![None; n];
            let mut ts = vec![None; n];
            let one = [t0.clone()];
            let mut local = Vec::new();
            let mut sub = cands.to_vec();
            sub[first] = one.to_vec();
            dfs(rd, order, &sub, fixed, 0, &mut gens, &mut ts, &mut local, cap);
            local
        })
        .collect();
    found.truncate(cap);
    found
}

/// Symmetry-reduced search: the first root of each conjugacy class is free
/// and the others are transported along `s_i s_j`, which maps `alpha_i` to
/// `alpha_j` when `m_ij = 3`.
fn pruned(rd: &RootDatum, cands: &[Vec<TorusElt>]) -> Option<Certificate> {
    let comps = conjugacy_components(rd);
    let mut order = Vec::new();
    let mut parent: Vec<Option<usize>> = vec![None; rd.rank()];
    for comp in &comps {
        let mut queue = VecDeque::from([comp[0]]);
        let mut placed = HashSet::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &j in comp {
                if !placed.contains(&j) && coxeter_m(rd, i, j) == 3 {
                    placed.insert(j);
                    parent[j] = Some(i);
                    queue.push_back(j);
                }
            }
        }
    }
    let transport = |j: usize, _: &[Option<NormalizerElt>], ts: &[Option<TorusElt>]| -> Option<TorusElt> {
        let i = parent[j]?;
        let u = WeylElt::from_word(rd, &[i, j]).expect("indices in range");
        let ti = ts[i].as_ref().expect("parent placed first");
        Some(rd.torus_from_cochar(&u.apply(ti.coords())))
    };
    run(rd, &order, cands, &transport, 1).into_iter().next()
}

fn full(rd: &RootDatum, cands: &[Vec<TorusElt>], cap: usize) -> Vec<Certificate> {
    let order: Vec<usize> = (0..rd.rank()).collect();
    run(rd, &order, cands, &|_, _, _| None, cap)
}

/// Looks for a splitting with every `t_i` in `(1/k) X_* / X_*`. Failure
/// means only that no such certificate exists at this torsion level.
pub fn search_splitting(rd: &RootDatum, k: u64) -> Result<SplittingVerdict> {
    guard(rd, k)?;
    let cands = candidates(rd, k);
    let cert = pruned(rd, &cands).or_else(|| full(rd, &cands, 1).into_iter().next());
    if let Some(c) = &cert {
        verify_certificate(rd, c)?;
    }
    Ok(SplittingVerdict {
        splits: cert.as_ref().map(|_| true),
        source: if cert.is_some() { VerdictSource::SearchCertificate } else { VerdictSource::NoCertificate },
        obstructions: vec![],
        certificate: cert,
        classification_only: false,
        torsion_bound: Some(k),
    })
}

/// Pairwise inequivalent splittings with torsion `t_i` of order dividing
/// `k`. Every class with such a representative is found unless more than
/// an internal cap of solutions turn up.
pub fn splitting_classes(rd: &RootDatum, k: u64) -> Result<Vec<Certificate>> {
    guard(rd, k)?;
    let cands = candidates(rd, k);
    let mut reps: Vec<Certificate> = Vec::new();
    for c in full(rd, &cands, SOLUTION_CAP) {
        verify_certificate(rd, &c)?;
        if !reps.iter().map(|r| splittings_equivalent(rd, r, &c)).collect::<Result<Vec<_>>>()?.contains(&true) {
            reps.push(c);
        }
    }
    Ok(reps)
}

/// Central elements of order at most 2.
pub fn central_two_torsion(rd: &RootDatum) -> Vec<TorusElt> {
    rd.torsion_points(2).into_iter().filter(|t| rd.is_central(t)).collect()
}

/// Whether `phi'(w) = z_w t phi(w) t^{-1}` for some `t` in `T` and some
/// homomorphism `w -> z_w` into the central 2-torsion.
pub fn splittings_equivalent(rd: &RootDatum, a: &Certificate, b: &Certificate) -> Result<bool> {
    verify_certificate(rd, a)?;
    verify_certificate(rd, b)?;
    let n = rd.rank();
    let quots: Vec<TorusQuotient> = (0..n)
        .map(|i| {
            let mut e = vec![Q::from_integer(0.into()); n];
            e[i] = Q::from_integer(1.into());
            TorusQuotient::new(&[e], rd.cochar_basis(), n)
        })
        .collect();
    let diffs: Vec<Vec<Q>> = (0..n).map(|i| sub_vec(b.t[i].coords(), a.t[i].coords())).collect();
    let comps = conjugacy_components(rd);
    let z = central_two_torsion(rd);
    // z is constant on each component, so the components are independent.
    Ok(comps.iter().all(|comp| {
        z.iter().any(|zc| comp.iter().all(|&i| quots[i].order(&sub_vec(&diffs[i], zc.coords())) == 1))
    }))
}

/// Classification, obstructions and a search at torsion levels 2, 4, ...,
/// up to `max_k`, combined.
pub fn decide(rd: &RootDatum, char2: bool, max_k: u64) -> Result<SplittingVerdict> {
    let class = splits_classification(rd, char2).unwrap_or_else(|_| SplittingVerdict::from_classification(None, false));
    let obstructions = if char2 { vec![] } else { obstruction_report(rd) };
    let mut certificate = None;
    let mut bound = None;
    if obstructions.is_empty() && class.splits != Some(false) {
        let mut k = 2;
        while k <= max_k && guard(rd, k).is_ok() {
            let v = search_splitting(rd, k)?;
            bound = Some(k);
            if v.certificate.is_some() {
                certificate = v.certificate;
                break;
            }
            k *= 2;
        }
    }
    let splits = match (class.splits, certificate.is_some(), obstructions.is_empty()) {
        (Some(s), _, _) => Some(s),
        (None, true, _) => Some(true),
        (None, false, false) => Some(false),
        (None, false, true) => None,
    };
    let source = if certificate.is_some() {
        VerdictSource::SearchCertificate
    } else if !obstructions.is_empty() {
        VerdictSource::Obstruction
    } else if class.splits.is_some() {
        VerdictSource::Classification
    } else {
        VerdictSource::NoCertificate
    };
    Ok(SplittingVerdict {
        splits,
        source,
        classification_only: splits == Some(false) && obstructions.is_empty(),
        obstructions,
        certificate,
        torsion_bound: bound,
    })
}
