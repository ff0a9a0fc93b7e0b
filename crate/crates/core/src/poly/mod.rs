//! Exact sparse multivariate polynomials over the rationals, monomial orders
//! and multigraded ring contexts.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::{Monomial, MonomialDisplay};
pub use order::{MonomialOrder, VarSet};
pub use polynomial::{PolyDisplay, Polynomial, Term};
pub use ring::{DegreeOf, Multidegree, RingContext};

pub type Rational = num_rational::BigRational;
