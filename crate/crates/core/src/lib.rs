//! Exact Kauffman bracket and Jones polynomial computations for braid
//! closures under full twisting, with Mahler-measure numerics.

pub mod colored;
pub mod error;
pub mod families;
pub mod laurent;
pub mod mahler;
pub mod roots;
pub mod skein;
pub mod twist;

pub use error::{Error, Result};
pub use laurent::{BivariatePolynomial, LaurentPolynomial, RationalFunction, Var};
pub use skein::{bracket, jones, parse_braid, BraidWord, PlanarMatching, TlVector};
