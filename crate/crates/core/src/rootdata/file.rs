//! JSON description of a root datum.
//!
//! ```json
//! {"type": "A3", "isogeny": [["1","0","0"],["0","1","0"],["3/2","1","1/2"]], "delta": [3,2,1]}
//! ```
//!
//! `isogeny` is a keyword or a list of basis vectors in simple-coroot
//! coordinates (rationals as `"p/q"` strings). `cartan` is required when
//! `type` is `"custom"`. `delta` is a 1-based permutation or a keyword.

use serde::{Deserialize, Serialize};

use super::{DeltaSpec, Isogeny, IsogenySpec, RootDatum};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{format_q, parse_q, Q};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IsogenyField {
    Keyword(String),
    Basis(Vec<Vec<String>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DeltaField {
    Keyword(String),
    Permutation(Vec<usize>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootDatumFile {
    #[serde(rename = "type")]
    pub type_label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<i64>>>,
    pub isogeny: IsogenyField,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<DeltaField>,
}

fn parse_basis(rows: &[Vec<String>]) -> Result<Vec<Vec<Q>>> {
    rows.iter().map(|r| r.iter().map(|x| parse_q(x)).collect()).collect()
}

impl RootDatumFile {
    pub fn from_json(s: &str) -> Result<RootDatumFile> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn build(&self) -> Result<RootDatum> {
        let delta = match &self.delta {
            None => DeltaSpec::None,
            Some(DeltaField::Keyword(k)) => DeltaSpec::parse(k)?,
            Some(DeltaField::Permutation(p)) => DeltaSpec::Permutation(p.clone()),
        };
        let rd = if self.type_label.eq_ignore_ascii_case("custom") {
            let cartan = self
                .cartan
                .clone()
                .ok_or_else(|| Error::Parse("custom type needs a cartan matrix".into()))?;
            let n = cartan.len();
            let basis = match &self.isogeny {
                IsogenyField::Basis(rows) => parse_basis(rows)?,
                IsogenyField::Keyword(k) => match Isogeny::parse(k)? {
                    Isogeny::SimplyConnected => linalg::identity(n),
                    Isogeny::Adjoint => {
                        let inv = linalg::inverse(&linalg::from_int(&cartan))
                            .ok_or_else(|| Error::InvalidCartan("singular matrix".into()))?;
                        (0..n).map(|j| linalg::column(&inv, j)).collect()
                    }
                    other => {
                        return Err(Error::IncompatibleIsogeny {
                            type_label: "custom".into(),
                            isogeny: format!("{other:?}"),
                        })
                    }
                },
            };
            let delta = match delta {
                DeltaSpec::None => None,
                DeltaSpec::Permutation(p) => {
                    if p.len() != n || p.iter().any(|&x| x == 0 || x > n) {
                        return Err(Error::InvalidDelta(format!("{p:?} is not a permutation of 1..{n}")));
                    }
                    Some(p.iter().map(|x| x - 1).collect())
                }
                _ => return Err(Error::InvalidDelta("named automorphisms need a named type".into())),
            };
            RootDatum::from_parts(cartan, &basis, delta, "custom".into())?
        } else {
            let iso = match &self.isogeny {
                IsogenyField::Keyword(k) => IsogenySpec::Named(Isogeny::parse(k)?),
                IsogenyField::Basis(rows) => IsogenySpec::Basis(parse_basis(rows)?),
            };
            let rd = RootDatum::build(&self.type_label, iso, delta)?;
            if let Some(c) = &self.cartan {
                if c.as_slice() != rd.cartan() {
                    return Err(Error::InvalidCartan("cartan does not match the named type".into()));
                }
            }
            rd
        };
        if let Some(r) = self.rank {
            if r != rd.rank() {
                return Err(Error::Parse(format!("rank {r} does not match the type (rank {})", rd.rank())));
            }
        }
        Ok(rd)
    }

    /// Serializes a datum with an explicit basis.
    pub fn from_datum(rd: &RootDatum) -> RootDatumFile {
        let b = rd.cochar_basis();
        let basis = (0..rd.rank()).map(|j| linalg::column(b, j).iter().map(format_q).collect()).collect();
        RootDatumFile {
            type_label: if rd.simple_types().is_some() { rd.type_label().to_string() } else { "custom".into() },
            rank: Some(rd.rank()),
            cartan: Some(rd.cartan().to_vec()),
            isogeny: IsogenyField::Basis(basis),
            delta: rd.delta().map(|p| DeltaField::Permutation(p.iter().map(|x| x + 1).collect())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_json() {
        let rd = RootDatum::named("A3", "SL/2", "flip").unwrap();
        let f = RootDatumFile::from_datum(&rd);
        let back = RootDatumFile::from_json(&f.to_json()).unwrap().build().unwrap();
        assert_eq!(back, rd);
        assert_eq!(back.isogeny(), &Isogeny::SlQuotient(2));
    }

    #[test]
    fn custom_cartan() {
        let s = r#"{"type": "custom", "cartan": [[2,-1],[-3,2]], "isogeny": "adjoint"}"#;
        let rd = RootDatumFile::from_json(s).unwrap().build().unwrap();
        assert_eq!(rd.positive_roots().len(), 6);
        let s = r#"{"type": "B2", "rank": 3, "isogeny": "sc"}"#;
        assert!(RootDatumFile::from_json(s).unwrap().build().is_err());
        let s = r#"{"type": "A1", "isogeny": [["1/3"]]}"#;
        assert!(RootDatumFile::from_json(s).unwrap().build().is_err());
    }
}
