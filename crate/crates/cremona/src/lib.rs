//! Exact computer algebra for rational maps between reduced projective
//! varieties over any field: decide birationality onto the image through
//! the rank of the Jacobian dual matrix, and extract a representative of
//! the inverse when the verdict is positive.
//!
//! The pipeline: a [`ratmap::RationalDatum`] (validated forms over
//! `k[X]/a`) feeds the Rees presentation ideal of its base ideal
//! ([`rees`]), whose X-degree-1 slice yields the Jacobian dual matrix
//! ([`jdual`]); the map is birational onto its image exactly when that
//! matrix has well-defined rank `n` over the image coordinate ring.
//! Everything is exact: prime fields F_p (p < 2^31) or the rationals.

pub mod field;
pub mod gcd;
pub mod groebner;
pub mod jdual;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod problem;
pub mod ratmap;
pub mod rees;
pub mod report;
pub mod text;

pub mod cli;

pub use field::{Coeff, FieldSpec};
pub use groebner::{DimensionReport, Ideal};
pub use monomial::{Bidegree, Bigrading, Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
pub use text::{parse_poly, print_poly};
