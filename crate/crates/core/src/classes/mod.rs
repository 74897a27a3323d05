//! Elliptic (twisted) conjugacy classes, their good-element data, and the
//! value of `sigma(w)^{o(w)}`.
//!
//! Classical classes are indexed by partitions and built from signed
//! permutations. F4, E7, E8 and the one twisted E6 row come from tables;
//! the remaining exceptional classes (E6, twisted E6, triality D4, G2) are
//! found by enumerating `W`.

mod carter;
mod lift;
mod tables;
mod verify;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde_json::json;

use crate::cyclotomic::{char_poly, cyclotomic_factorization, format_factorization};
use crate::error::{Error, Result};
use crate::rational::{frac, Q};
use crate::rootdata::{Family, RootDatum, SimpleType, TorusElt};
use crate::torusnorm::{sigma, sigma_power_via_good_data, NormalizerElt};
use crate::weyl::{
    are_conjugate, conjugacy_classes, coxeter_element, enumerate, from_e_coords, from_signed_perm,
    longest_element, odd_partitions, partitions, SignedPerm, TwistedWeylElt,
};

pub use carter::{expected_char_poly, order_of};
pub use lift::{coset_lift_order, lift_order, LiftMethod, LiftOptions, LiftOrderReport};
pub use verify::{named_isogenies, verify_table, ClassRow, IsogenyRow, TableId, TableReport};

/// Good-element data: `(S_i, d_i)` with 0-based subsets.
pub type GoodData = Vec<(Vec<usize>, u64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticClassRecord {
    pub label: String,
    pub twisted: bool,
    pub rep: Option<TwistedWeylElt>,
    /// Word as printed in the source table, or the reduced word of `rep`.
    pub rep_word: Option<String>,
    /// `o(w)`, computed from `rep` when there is one.
    pub order: u64,
    /// Order column of the source table, when the class is tabulated.
    pub listed_order: Option<u64>,
    pub good_data: Option<GoodData>,
    pub partition: Option<Vec<usize>>,
    pub char_poly: Option<Vec<(u64, usize)>>,
}

impl EllipticClassRecord {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "label": self.label,
            "twisted": self.twisted,
            "rep_word": self.rep_word,
            "order": self.order,
            "listed_order": self.listed_order,
            "good_data": self.good_data.as_ref().map(|g| g
                .iter()
                .map(|(s, d)| json!({"subset": s.iter().map(|i| i + 1).collect::<Vec<_>>(), "d": d}))
                .collect::<Vec<_>>()),
            "partition": self.partition,
            "char_poly": self.char_poly.as_ref().map(|f| format_factorization(f)),
        })
    }
}

/// `[3,1,1]` style label of a partition.
pub fn partition_label(p: &[usize]) -> String {
    format!("[{}]", p.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","))
}

/// Parses `[3,1,1]`, `(3,1,1)` or `3,1,1`.
pub fn parse_partition(s: &str) -> Option<Vec<usize>> {
    let body = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let p: Vec<usize> = body.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
    if p.contains(&0) {
        return None;
    }
    let mut sorted = p.clone();
    sorted.sort_by(|a, b| b.cmp(a));
    Some(sorted)
}

fn simple_type(rd: &RootDatum) -> Result<SimpleType> {
    rd.simple_type().ok_or_else(|| Error::NotSimple(rd.type_label().to_string()))
}

fn factorization(rd: &RootDatum, x: &TwistedWeylElt) -> Vec<(u64, usize)> {
    cyclotomic_factorization(&char_poly(&x.action_matrix(rd))).expect("finite order matrix")
}

fn lcm(p: &[usize]) -> u64 {
    p.iter().fold(1, |a, &b| num_integer::lcm(a, b as u64))
}

fn is_standard_flip(rd: &RootDatum, t: SimpleType) -> bool {
    let n = t.rank;
    match rd.delta() {
        Some(p) if rd.delta_order() == 2 => {
            (0..n).all(|i| p[i] == if i + 2 == n { n - 1 } else if i + 1 == n { n - 2 } else { i })
        }
        _ => false,
    }
}

/// Elliptic classes of `W` (or of `W delta` when `twisted`).
pub fn elliptic_classes(rd: &RootDatum, twisted: bool) -> Result<Vec<EllipticClassRecord>> {
    let t = simple_type(rd)?;
    if twisted && rd.delta().is_none() {
        return Err(Error::NoDelta);
    }
    let n = t.rank;
    match (t.family, twisted) {
        (Family::A, false) => {
            let x = TwistedWeylElt::from(coxeter_element(rd));
            Ok(vec![EllipticClassRecord {
                label: "Coxeter".into(),
                twisted: false,
                rep_word: Some(x.to_string(rd)),
                order: x.order(rd),
                listed_order: None,
                good_data: Some(vec![((0..n).collect(), 2)]),
                partition: Some(vec![n + 1]),
                char_poly: Some(factorization(rd, &x)),
                rep: Some(x),
            }])
        }
        (Family::A, true) => odd_partitions(n + 1)
            .into_iter()
            .map(|p| {
                let x = from_signed_perm(rd, &SignedPerm::blocks(&p, false), true)?;
                Ok(classical_record(rd, x, p, None))
            })
            .collect(),
        (Family::B | Family::C, false) => {
            partitions(n).into_iter().map(|p| signed_record(rd, t, p)).collect()
        }
        (Family::D, true) if !is_standard_flip(rd, t) => enumerated_records(rd, 1, &[]),
        (Family::D, _) => partitions(n)
            .into_iter()
            .filter(|p| (p.len() % 2 == 1) == twisted)
            .map(|p| signed_record(rd, t, p))
            .collect(),
        (Family::F, false) => table_records(rd, tables::F4, false),
        (Family::G, false) => enumerated_records(rd, 0, tables::G2_NAMES),
        (Family::E, false) if n == 6 => enumerated_records(rd, 0, tables::E6_NAMES),
        (Family::E, true) if n == 6 => {
            let mut recs = enumerated_records(rd, 1, &[])?;
            let paper = table_records(rd, tables::E6_TWISTED, true)?;
            for row in paper {
                let x = row.rep.as_ref().expect("tabulated word");
                let slot = recs
                    .iter_mut()
                    .find(|r| r.rep.as_ref().is_some_and(|y| are_conjugate(rd, y, x)))
                    .ok_or_else(|| Error::UnknownLabel(row.label.clone()))?;
                *slot = row;
            }
            Ok(recs)
        }
        (Family::E, false) if n == 7 => table_records(rd, tables::E7, false),
        (Family::E, false) if n == 8 => table_records(rd, tables::E8, false),
        _ => Err(Error::NoDelta),
    }
}

fn classical_record(rd: &RootDatum, x: TwistedWeylElt, p: Vec<usize>, good: Option<GoodData>) -> EllipticClassRecord {
    EllipticClassRecord {
        label: partition_label(&p),
        twisted: x.j != 0,
        rep_word: Some(x.to_string(rd)),
        order: x.order(rd),
        listed_order: None,
        good_data: good,
        char_poly: Some(factorization(rd, &x)),
        partition: Some(p),
        rep: Some(x),
    }
}

fn signed_record(rd: &RootDatum, t: SimpleType, p: Vec<usize>) -> Result<EllipticClassRecord> {
    let x = from_signed_perm(rd, &SignedPerm::blocks(&p, true), false)?;
    let good = match t.family {
        Family::B | Family::D => Some(bd_good_data(t, &p)),
        _ => None,
    };
    Ok(classical_record(rd, x, p, good))
}

/// `(S_i, e_i - e_{i-1})` with `e_i = o(w)/a_i` and `S_i` the nodes after
/// the first `a_1 + ... + a_{i-1}`; in type `D` a tail shorter than `D_2`
/// is dropped.
fn bd_good_data(t: SimpleType, p: &[usize]) -> GoodData {
    let n = t.rank;
    let o = 2 * lcm(p);
    let (mut sig, mut prev) = (0, 0);
    let mut out = Vec::new();
    for &a in p {
        let e = o / a as u64;
        let cut = t.family == Family::D && sig + 2 > n;
        if !cut && e > prev {
            out.push(((sig..n).collect(), e - prev));
        }
        prev = e;
        sig += a;
    }
    out
}

fn table_records(rd: &RootDatum, rows: &[tables::Row], twisted: bool) -> Result<Vec<EllipticClassRecord>> {
    let n = rd.rank();
    let mut out = Vec::new();
    for row in rows {
        let dup = rows.iter().filter(|r| r.label == row.label).count() > 1;
        let label = if dup { format!("{} (o={})", row.label, row.order) } else { row.label.to_string() };
        let good: GoodData = row
            .good
            .iter()
            .map(|(s, d)| (if s.is_empty() { (0..n).collect() } else { s.iter().map(|i| i - 1).collect() }, *d))
            .collect();
        let rep = match row.word {
            Some("w_I") => Some(TwistedWeylElt::from(longest_element(rd, &(0..n).collect::<Vec<_>>()))),
            Some(w) => Some(TwistedWeylElt::parse(rd, w)?),
            None => None,
        };
        let (order, char_poly) = match &rep {
            Some(x) => (x.order(rd), Some(factorization(rd, x))),
            None => (row.order, expected_char_poly(row.label)),
        };
        out.push(EllipticClassRecord {
            label,
            twisted,
            rep,
            rep_word: row.word.map(str::to_string),
            order,
            listed_order: Some(row.order),
            good_data: Some(good),
            partition: None,
            char_poly,
        });
    }
    Ok(out)
}

type ClassCache = HashMap<(Vec<Vec<i64>>, Option<Vec<usize>>, usize), Vec<TwistedWeylElt>>;

/// Minimal-length representatives of the elliptic classes of `W delta^j`.
fn elliptic_reps(rd: &RootDatum, j: usize) -> Vec<TwistedWeylElt> {
    static CACHE: OnceLock<Mutex<ClassCache>> = OnceLock::new();
    let key = (rd.cartan().to_vec(), rd.delta().map(<[usize]>::to_vec), j);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let all = enumerate(rd);
    let reps: Vec<TwistedWeylElt> = conjugacy_classes(rd, &all, j)
        .into_iter()
        .map(|c| c.rep)
        .filter(|x| x.is_elliptic(rd))
        .collect();
    cache.lock().unwrap().insert(key, reps.clone());
    reps
}

fn enumerated_records(
    rd: &RootDatum,
    j: usize,
    names: &[(&[(u64, usize)], &str)],
) -> Result<Vec<EllipticClassRecord>> {
    let n = rd.rank();
    let cox = (j == 0).then(|| factorization(rd, &TwistedWeylElt::from(coxeter_element(rd))));
    let mut out: Vec<EllipticClassRecord> = Vec::new();
    for x in elliptic_reps(rd, j) {
        let f = factorization(rd, &x);
        let base = names
            .iter()
            .find(|(g, _)| *g == f.as_slice())
            .map(|(_, name)| name.to_string())
            .unwrap_or_else(|| format_factorization(&f));
        let clash = out.iter().filter(|r| r.label == base || r.label.starts_with(&format!("{base}#"))).count();
        let label = if clash == 0 { base } else { format!("{base}#{}", clash + 1) };
        let good = (cox.as_ref() == Some(&f)).then(|| vec![((0..n).collect(), 2)]);
        out.push(EllipticClassRecord {
            label,
            twisted: j != 0,
            rep_word: Some(x.to_string(rd)),
            order: x.order(rd),
            listed_order: None,
            good_data: good,
            partition: None,
            char_poly: Some(f),
            rep: Some(x),
        });
    }
    Ok(out)
}

/// Classification of a torus value relative to `z_G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PowerKind {
    Trivial,
    /// Equal to the nontrivial central element `z_G`.
    ZG,
    Nontrivial,
}

impl PowerKind {
    pub fn of(rd: &RootDatum, t: &TorusElt) -> PowerKind {
        if t.is_identity() {
            PowerKind::Trivial
        } else if *t == rd.z_g() {
            PowerKind::ZG
        } else {
            PowerKind::Nontrivial
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            PowerKind::Trivial => "1",
            PowerKind::ZG => "z_G",
            PowerKind::Nontrivial => "nontrivial",
        }
    }
}

/// `sigma(w)^{o(w)}` for the class of `record` by closed formulas: `z_G` in
/// type `A` (twisted or not), the block formula in type `C`, the nested
/// `rho^vee(S_i)` formula in types `B` and `D`, and the good-element data
/// otherwise.
pub fn power_closed_form(rd: &RootDatum, record: &EllipticClassRecord) -> Result<(TorusElt, PowerKind)> {
    let t = simple_type(rd)?;
    let unknown = || Error::UnknownLabel(record.label.clone());
    let value = match t.family {
        Family::A => rd.z_g(),
        Family::C => {
            let p = record.partition.as_ref().ok_or_else(unknown)?;
            let e = lcm(p);
            let mut tau: Vec<Q> = Vec::new();
            for &a in p {
                for i in 1..=a {
                    tau.push(frac((e / a as u64) as i64 * (2 * (a - i) as i64 + 1), 2));
                }
            }
            rd.torus_from_cochar(&from_e_coords(rd, &tau)?)
        }
        Family::B | Family::D if record.partition.is_some() => {
            sigma_power_via_good_data(rd, &bd_good_data(t, record.partition.as_ref().unwrap()))?
        }
        _ => sigma_power_via_good_data(rd, record.good_data.as_ref().ok_or_else(unknown)?)?,
    };
    let kind = PowerKind::of(rd, &value);
    Ok((value, kind))
}

/// Number of positive roots in the span of `subset`.
pub fn positive_root_count(rd: &RootDatum, subset: &[usize]) -> usize {
    rd.positive_roots()
        .iter()
        .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || subset.contains(&i)))
        .count()
}

/// `o(w) l(w) = sum d_i l(w_0(S_i))`, the length form of the good-element
/// factorization.
pub fn length_identity(rd: &RootDatum, x: &TwistedWeylElt, order: u64, good: &GoodData) -> bool {
    let rhs: u64 = good.iter().map(|(s, d)| d * positive_root_count(rd, s) as u64).sum();
    order * x.length(rd) as u64 == rhs
}

/// `sigma((w_0, 1))` for type `A` with the flip; it acts on `T` by inversion
/// and squares to `z_G`.
pub fn epsilon_element(rd: &RootDatum) -> Result<NormalizerElt> {
    let t = simple_type(rd)?;
    // In rank one the flip is trivial and epsilon is sigma(w_0).
    if t.family != Family::A || (t.rank > 1 && !is_standard_a_flip(rd, t.rank)) {
        return Err(Error::NotClassical(format!("{} with the diagram flip of type A", rd.type_label())));
    }
    let w0 = longest_element(rd, &(0..t.rank).collect::<Vec<_>>());
    Ok(sigma(rd, &TwistedWeylElt::new(rd, w0, (t.rank > 1) as usize)))
}

fn is_standard_a_flip(rd: &RootDatum, n: usize) -> bool {
    rd.delta().is_some_and(|p| (0..n).all(|i| p[i] == n - 1 - i))
}

/// Parses `label: word` lines; blank lines and `#` comments are skipped.
pub fn parse_word_file(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (label, word) = line
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("line {}: expected \"label: word\"", k + 1)))?;
        out.push((label.trim().to_string(), word.trim().to_string()));
    }
    Ok(out)
}

/// Attaches user-supplied representatives after checking ellipticity, the
/// order, the characteristic polynomial (when the label determines it) and
/// the length identity (when the class has good data).
pub fn attach_words(rd: &RootDatum, records: &mut [EllipticClassRecord], words: &[(String, String)]) -> Result<()> {
    for (label, word) in words {
        let rec = records
            .iter_mut()
            .find(|r| r.label == *label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        let x = TwistedWeylElt::parse(rd, word)?;
        let bad = |why: &str| Error::InvalidWord(format!("{label}: {word}: {why}"));
        if (x.j != 0) != rec.twisted {
            return Err(bad("wrong coset"));
        }
        if !x.is_elliptic(rd) {
            return Err(bad("not elliptic"));
        }
        if x.order(rd) != rec.order {
            return Err(bad(&format!("order {} differs from {}", x.order(rd), rec.order)));
        }
        let f = factorization(rd, &x);
        if rec.char_poly.as_ref().is_some_and(|g| *g != f) {
            return Err(bad(&format!("characteristic polynomial {}", format_factorization(&f))));
        }
        if let Some(good) = &rec.good_data {
            if !length_identity(rd, &x, rec.order, good) {
                return Err(bad("length does not match the good-element data"));
            }
        }
        rec.char_poly = Some(f);
        rec.rep_word = Some(word.clone());
        rec.rep = Some(x);
    }
    Ok(())
}

/// Finds the record with the given label or partition.
pub fn find_class<'a>(records: &'a [EllipticClassRecord], key: &str) -> Result<&'a EllipticClassRecord> {
    let p = parse_partition(key);
    records
        .iter()
        .find(|r| r.label == key || (p.is_some() && r.partition == p))
        .ok_or_else(|| Error::UnknownLabel(key.to_string()))
}

#[cfg(test)]
mod tests;
