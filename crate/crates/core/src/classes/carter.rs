//! Characteristic polynomials of elliptic classes from Carter labels.

use std::collections::BTreeMap;

/// Cyclotomic multiplicities of the characteristic polynomial of the class
/// with the given label, when every component is one this module knows:
/// `kX_n` with `X` in `A..G`, `~A_n`, and `D_n(a_i)`, `E_n(a_i)`, `F4(a1)`
/// for the small `i` where the polynomial is standard. `None` otherwise.
pub fn expected_char_poly(label: &str) -> Option<Vec<(u64, usize)>> {
    let mut acc: BTreeMap<u64, usize> = BTreeMap::new();
    for comp in label.split('+') {
        let comp = comp.trim();
        let digits = comp.chars().take_while(|c| c.is_ascii_digit()).count();
        let mult: usize = if digits == 0 { 1 } else { comp[..digits].parse().ok()? };
        let body = comp[digits..].trim_start_matches('~');
        let (name, a) = match body.split_once('(') {
            Some((name, rest)) => {
                let i: usize = rest.strip_prefix('a')?.strip_suffix(')')?.parse().ok()?;
                (name, i)
            }
            None => (body, 0),
        };
        let family = name.chars().next()?;
        let rank: usize = name[1..].parse().ok()?;
        for (d, m) in component(family, rank, a)? {
            *acc.entry(d).or_default() += m * mult;
        }
    }
    Some(acc.into_iter().collect())
}

/// `y^k + 1 = prod Phi_d` over `d | 2k`, `d` not dividing `k`.
fn plus_one(k: usize) -> Vec<(u64, usize)> {
    let k = k as u64;
    (1..=2 * k).filter(|d| (2 * k).is_multiple_of(*d) && !k.is_multiple_of(*d)).map(|d| (d, 1)).collect()
}

fn component(family: char, n: usize, a: usize) -> Option<Vec<(u64, usize)>> {
    let v: Vec<(u64, usize)> = match (family, n, a) {
        ('A', _, 0) => (2..=n as u64 + 1).filter(|d| (n as u64 + 1).is_multiple_of(*d)).map(|d| (d, 1)).collect(),
        ('B' | 'C', _, 0) => plus_one(n),
        ('D', _, _) if n >= 2 && a + 1 < n => {
            // D_n(a_i): negative cycles of lengths n - 1 - i and i + 1.
            let mut v = plus_one(n - 1 - a);
            v.extend(plus_one(a + 1));
            v
        }
        ('G', 2, 0) => vec![(6, 1)],
        ('F', 4, 0) => vec![(12, 1)],
        ('F', 4, 1) => vec![(6, 2)],
        ('E', 6, 0) => vec![(3, 1), (12, 1)],
        ('E', 6, 1) => vec![(9, 1)],
        ('E', 6, 2) => vec![(3, 1), (6, 2)],
        ('E', 7, 0) => vec![(2, 1), (18, 1)],
        ('E', 7, 1) => vec![(2, 1), (14, 1)],
        ('E', 7, 2) => vec![(2, 1), (6, 1), (12, 1)],
        ('E', 7, 3) => vec![(2, 1), (6, 1), (10, 1)],
        ('E', 7, 4) => vec![(2, 1), (6, 3)],
        ('E', 8, 0) => vec![(30, 1)],
        _ => return None,
    };
    let mut merged: BTreeMap<u64, usize> = BTreeMap::new();
    for (d, m) in v {
        *merged.entry(d).or_default() += m;
    }
    Some(merged.into_iter().collect())
}

/// Order of an element with the given characteristic polynomial factors,
/// assuming it is semisimple (true for finite reflection groups).
pub fn order_of(factors: &[(u64, usize)]) -> u64 {
    factors.iter().fold(1, |acc, &(d, _)| num_integer::lcm(acc, d))
}
