//! Conventional group names such as `SL(4)`, `PSp(6)`, `Spin8` or `2A5`.

use super::{DeltaSpec, Isogeny, RootDatum};
use crate::error::{Error, Result};

fn split_name(s: &str) -> Option<(String, usize, Option<usize>)> {
    // "SL(4)/mu2" -> ("sl", 4, Some(2)); "Spin8" -> ("spin", 8, None)
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = compact.to_ascii_lowercase();
    let (head, quotient) = match lower.split_once(")/") {
        Some((h, k)) => (format!("{h})"), Some(k.to_string())),
        None => (lower.clone(), None),
    };
    let head = head.replace(['(', ')'], "");
    let digits_at = head.find(|c: char| c.is_ascii_digit())?;
    let (name, num) = head.split_at(digits_at);
    let num: usize = num.parse().ok()?;
    let k = match quotient {
        None => None,
        Some(k) => {
            let k = k.trim_start_matches("mu").trim_start_matches('μ').trim_start_matches('_');
            Some(k.parse().ok()?)
        }
    };
    Some((name.to_string(), num, k))
}

/// Parses a group name into a root datum.
///
/// Accepted forms: `SL(n)`, `PGL(n)`, `PSL(n)`, `SL(n)/mu_k`, `SO(m)`,
/// `PSO(2n)`, `Spin(m)`, `Semispin(2n)`, `Sp(2n)`, `PSp(2n)`, a type with an
/// isogeny keyword (`C3:adjoint`, `A1:sc`), a bare type (`G2`, `E7`; simply
/// connected), and twisted labels `2An`, `2Dn`, `3D4`, `2E6` (adjoint, with
/// the diagram automorphism).
pub fn parse_group(s: &str) -> Result<RootDatum> {
    let s = s.trim();
    let bad = || Error::Parse(format!("unrecognized group {s:?}"));
    if let Some((t, iso)) = s.split_once(':') {
        return RootDatum::build(t, Isogeny::parse(iso)?, DeltaSpec::None);
    }
    let mut chars = s.chars();
    if let (Some(p @ ('2' | '3')), Some(f)) = (chars.next(), chars.next()) {
        if f.is_ascii_alphabetic() {
            let delta = if p == '3' { DeltaSpec::Triality } else { DeltaSpec::Flip };
            return RootDatum::build(&s[1..], Isogeny::Adjoint, delta);
        }
    }
    if super::SimpleType::parse(s).is_ok() || super::parse_type_label(s).is_ok() {
        return RootDatum::build(s, Isogeny::SimplyConnected, DeltaSpec::None);
    }
    let (name, m, k) = split_name(s).ok_or_else(bad)?;
    let even = |m: usize| if m.is_multiple_of(2) { Ok(m / 2) } else { Err(bad()) };
    if name == "so" && k.is_none() && m == 4 {
        // (SL(2) x SL(2)) / diagonal mu_2.
        let half = crate::rational::frac(1, 2);
        let basis = vec![vec![crate::rational::q(1), crate::rational::q(0)], vec![half.clone(), half]];
        return RootDatum::build("A1xA1", super::IsogenySpec::Basis(basis), DeltaSpec::None);
    }
    let (label, iso) = match (name.as_str(), k) {
        ("sl", None) if m >= 2 => (format!("A{}", m - 1), Isogeny::SimplyConnected),
        ("sl", Some(k)) if m >= 2 => (format!("A{}", m - 1), Isogeny::SlQuotient(k)),
        ("pgl" | "psl", None) if m >= 2 => (format!("A{}", m - 1), Isogeny::Adjoint),
        ("so", None) if m % 2 == 1 && m >= 5 => (format!("B{}", m / 2), Isogeny::Adjoint),
        ("so", None) if m == 3 => ("A1".to_string(), Isogeny::Adjoint),
        ("so", None) => (format!("D{}", even(m)?), Isogeny::SpecialOrthogonal),
        ("pso", None) => (format!("D{}", even(m)?), Isogeny::Adjoint),
        ("spin", None) if m == 3 => ("A1".to_string(), Isogeny::SimplyConnected),
        ("spin", None) if m % 2 == 1 => (format!("B{}", m / 2), Isogeny::SimplyConnected),
        ("spin", None) => (format!("D{}", even(m)?), Isogeny::SimplyConnected),
        ("semispin", None) => (format!("D{}", even(m)?), Isogeny::HalfSpin { alt: false }),
        ("sp", None) if m == 2 => ("A1".to_string(), Isogeny::SimplyConnected),
        ("sp", None) => (format!("C{}", even(m)?), Isogeny::SimplyConnected),
        ("psp", None) if m == 2 => ("A1".to_string(), Isogeny::Adjoint),
        ("psp", None) => (format!("C{}", even(m)?), Isogeny::Adjoint),
        _ => return Err(bad()),
    };
    RootDatum::build(&label, iso, DeltaSpec::None)
}
