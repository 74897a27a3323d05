//! Lifting Weyl group elements to the torus normalizer of a split semisimple group.
//!
//! Everything is exact: torus points are rational cocharacters modulo the
//! cocharacter lattice and Weyl group elements are integer matrices.

pub mod classes;
pub mod cyclotomic;
pub mod error;
pub mod linalg;
pub mod regular;
pub mod rational;
pub mod rootdata;
pub mod splitting;
pub mod torusnorm;
pub mod weyl;

pub use classes::{EllipticClassRecord, LiftOrderReport};
pub use error::{Error, Result};
pub use rootdata::{DeltaSpec, Isogeny, IsogenySpec, RootDatum, TorusElt};
pub use torusnorm::NormalizerElt;
pub use weyl::{TwistedWeylElt, WeylElt};
