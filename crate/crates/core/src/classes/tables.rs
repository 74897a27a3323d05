//! Tabulated elliptic classes of the exceptional groups.
//!
//! Subsets are 1-based Bourbaki node lists; `I` is the full node set.

pub(crate) struct Row {
    pub label: &'static str,
    pub order: u64,
    pub word: Option<&'static str>,
    /// `(subset, exponent)`; an empty subset stands for `I`.
    pub good: &'static [(&'static [usize], u64)],
}

const I: &[usize] = &[];

pub(crate) const F4: &[Row] = &[
    Row { label: "4A1", order: 2, word: Some("w_I"), good: &[(I, 2)] },
    Row { label: "D4", order: 8, word: Some("2323432134"), good: &[(I, 2), (&[3, 4], 4)] },
    Row { label: "D4(a1)", order: 4, word: Some("324321324321"), good: &[(I, 2)] },
    Row { label: "C3+A1", order: 8, word: Some("1214321323"), good: &[(I, 2), (&[1, 2], 4)] },
    Row { label: "A2+~A2", order: 3, word: Some("3214321323432132"), good: &[(I, 2)] },
    Row { label: "F4(a1)", order: 6, word: Some("32432132"), good: &[(I, 2)] },
    Row { label: "F4", order: 12, word: Some("4321"), good: &[(I, 2)] },
    Row { label: "A3+~A1", order: 4, word: Some("23234321324321"), good: &[(I, 2), (&[2, 3], 2)] },
    Row { label: "B4", order: 8, word: Some("243213"), good: &[(I, 2)] },
];

pub(crate) const E6_TWISTED: &[Row] =
    &[Row { label: "4254234565423456", order: 6, word: Some("4254234565423456d"), good: &[(I, 2), (&[2, 3, 4, 5], 2)] }];

pub(crate) const E7: &[Row] = &[
    Row { label: "E7", order: 18, word: None, good: &[(I, 2)] },
    Row { label: "E7(a1)", order: 14, word: None, good: &[(I, 2)] },
    Row { label: "E7(a2)", order: 12, word: None, good: &[(I, 6), (&[2, 5, 7], 2)] },
    Row { label: "E7(a3)", order: 30, word: None, good: &[(I, 6), (&[2, 4], 4)] },
    Row { label: "D6+A1", order: 10, word: None, good: &[(I, 2), (&[2, 4], 8)] },
    Row { label: "A7", order: 8, word: None, good: &[(I, 2), (&[2, 5, 7], 2), (&[2], 4)] },
    Row { label: "E7(a4)", order: 6, word: None, good: &[(I, 2)] },
    Row { label: "D6(a2)+A1", order: 6, word: None, good: &[(I, 2), (&[1, 3], 4)] },
    Row { label: "A5+A2", order: 6, word: None, good: &[(I, 2), (&[2, 3, 4, 5], 2)] },
    Row { label: "D4+3A1", order: 6, word: None, good: &[(I, 2), (&[2, 4, 5, 6, 7], 4)] },
    Row { label: "2A3+A1", order: 4, word: None, good: &[(I, 2), (&[2, 5, 7], 2)] },
    Row { label: "7A1", order: 2, word: None, good: &[(I, 2)] },
];

pub(crate) const E8: &[Row] = &[
    Row { label: "E8(a7)", order: 12, word: None, good: &[(I, 2), (&[2, 3, 4, 5], 2)] },
    Row { label: "E7(a2)+A1", order: 12, word: None, good: &[(I, 2), (&[2, 3, 4, 5], 2), (&[2, 4], 8)] },
    Row { label: "E6(a2)+A2", order: 12, word: None, good: &[(I, 2), (&[2, 3, 4, 5], 6)] },
    Row { label: "A7+A1", order: 8, word: None, good: &[(I, 2), (&[2, 3, 4, 5], 2), (&[2, 5], 4)] },
    Row { label: "E6(a2)+A2", order: 6, word: None, good: &[(I, 2), (&[2, 3, 4, 5], 2)] },
    Row { label: "A5+A2+A1", order: 6, word: None, good: &[(I, 2), (&[2, 3, 4, 5, 7, 8], 2), (&[7, 8], 2)] },
    Row { label: "D5(a1)+A3", order: 12, word: None, good: &[(I, 4), (&[1, 2, 3, 4, 5, 6], 2)] },
    Row { label: "2A3+2A1", order: 4, word: None, good: &[(I, 2), (&[2, 3, 4, 5], 2)] },
];

/// Names of the elliptic classes of `W(E6)` by characteristic polynomial
/// (cyclotomic multiplicities).
pub(crate) const E6_NAMES: &[(&[(u64, usize)], &str)] = &[
    (&[(3, 1), (12, 1)], "E6"),
    (&[(9, 1)], "E6(a1)"),
    (&[(3, 1), (6, 2)], "E6(a2)"),
    (&[(2, 2), (3, 1), (6, 1)], "A5+A1"),
    (&[(3, 3)], "3A2"),
];

pub(crate) const G2_NAMES: &[(&[(u64, usize)], &str)] =
    &[(&[(6, 1)], "G2"), (&[(3, 1)], "A2"), (&[(2, 2)], "A1+~A1")];
