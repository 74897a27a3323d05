//! Named Cartan types in Bourbaki numbering.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple Cartan type such as `B3` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnknownType(format!("{family:?}{rank}")));
        }
        Ok(SimpleType { family, rank })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        SimpleType::new(family, rank)
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// Cartan matrix with `C[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let roots = self.simple_roots_doubled();
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        let n = roots.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let num = 2 * dot(&roots[i], &roots[j]);
                        let den = dot(&roots[j], &roots[j]);
                        debug_assert_eq!(num % den, 0);
                        num / den
                    })
                    .collect()
            })
            .collect()
    }

    /// Simple roots of a standard realization, with all coordinates doubled
    /// so that the half-integral `E8` and `F4` vectors stay integral.
    fn simple_roots_doubled(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let e = |dim: usize, i: usize| {
            let mut v = vec![0i64; dim];
            v[i] = 2;
            v
        };
        let sub = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vec<_>>();
        let add = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>();
        match self.family {
            Family::A => (0..n).map(|i| sub(e(n + 1, i), e(n + 1, i + 1))).collect(),
            Family::B | Family::C | Family::D => {
                let mut r: Vec<Vec<i64>> = (0..n - 1).map(|i| sub(e(n, i), e(n, i + 1))).collect();
                r.push(match self.family {
                    Family::B => e(n, n - 1),
                    Family::C => e(n, n - 1).iter().map(|x| 2 * x).collect(),
                    _ => add(e(n, n - 2), e(n, n - 1)),
                });
                r
            }
            Family::E => {
                let mut r = vec![
                    vec![1, -1, -1, -1, -1, -1, -1, 1],
                    add(e(8, 0), e(8, 1)),
                ];
                for k in 0..6 {
                    r.push(sub(e(8, k + 1), e(8, k)));
                }
                r.truncate(n);
                r
            }
            Family::F => vec![
                sub(e(4, 1), e(4, 2)),
                sub(e(4, 2), e(4, 3)),
                e(4, 3),
                vec![1, -1, -1, -1],
            ],
            Family::G => vec![vec![2, -2, 0], vec![-4, 2, 2]],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Parses `"A3"` or a product such as `"A1xB2"`.
pub fn parse_type_label(label: &str) -> Result<Vec<SimpleType>> {
    label
        .split(['x', 'X', '*'])
        .map(SimpleType::parse)
        .collect()
}

/// Block-diagonal Cartan matrix of a product of simple types.
pub fn product_cartan(types: &[SimpleType]) -> Vec<Vec<i64>> {
    let n: usize = types.iter().map(|t| t.rank).sum();
    let mut c = vec![vec![0i64; n]; n];
    let mut off = 0;
    for t in types {
        let b = t.cartan();
        for i in 0..t.rank {
            for j in 0..t.rank {
                c[off + i][off + j] = b[i][j];
            }
        }
        off += t.rank;
    }
    c
}
