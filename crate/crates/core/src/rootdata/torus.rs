use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::rational::{denominator_lcm, format_q, format_qvec, Q};

/// A finite-order point of the torus, stored as its canonical representative
/// in `X_* (x) Q / X_*`.
///
/// `coords` are simple-coroot coordinates; `lattice` are the coordinates in the
/// cocharacter basis, each reduced into `[0, 1)`. Both are determined by the
/// class, so derived equality is equality of torus points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusElt {
    pub(crate) coords: Vec<Q>,
    pub(crate) lattice: Vec<Q>,
}

impl TorusElt {
    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn lattice_coords(&self) -> &[Q] {
        &self.lattice
    }

    pub fn is_identity(&self) -> bool {
        self.lattice.iter().all(|x| x.is_zero())
    }

    /// Least `m >= 1` with `m * t` trivial.
    pub fn order(&self) -> u64 {
        denominator_lcm(&self.lattice)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

/// Serialized as its coroot coordinates, each a `"p/q"` string.
impl Serialize for TorusElt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(format_q))
    }
}

impl fmt::Debug for TorusElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusElt{}", format_qvec(&self.coords))
    }
}

impl fmt::Display for TorusElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_qvec(&self.coords))
    }
}
