//! Exact multi-Rees algebras, mixed multiplicities, mixed volumes and
//! sectional Milnor numbers over the rationals.

pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod multiplicity;
pub mod poly;
pub mod polytope;
pub mod rees;

pub mod cli;

pub use error::{Error, ErrorClass, Result};
pub use ideal::{GroebnerBasis, Ideal, MonomialIdeal};
pub use poly::{Monomial, MonomialOrder, Multidegree, Polynomial, Rational, RingContext};
