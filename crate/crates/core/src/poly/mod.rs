//! Exact arithmetic for sparse polynomials over prime fields.

pub mod field;
pub mod linear;
pub mod monomial;
pub mod order;
pub mod polynomial;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use linear::{apply_linear_change, Matrix};
pub use monomial::{binomial, monomials_of_degree, Monomial, Ring, MAX_VARS};
pub use order::{compare, MonomialOrder};
pub use polynomial::{Polynomial, Term};
