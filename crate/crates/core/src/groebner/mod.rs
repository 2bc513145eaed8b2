//! Buchberger iterations, Gröbner bases, colon ideals and saturation.

pub mod buchberger;
pub mod colon;
pub mod ideal;

pub use buchberger::{
    buchberger_iteration, divide, groebner_basis, groebner_basis_through, groebner_basis_through_with, groebner_basis_with, normal_form,
    s_polynomial, truncated_initial_generators, Division, GBasis, GbOptions,
};
pub use colon::{ideal_quotient, ideal_quotient_ideal, intersect, saturation};
pub use ideal::{minimalize_monomials, monomial_in, Ideal};
