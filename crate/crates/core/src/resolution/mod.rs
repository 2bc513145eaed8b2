//! Graded Betti tables: Taylor complexes, Koszul homology, Hilbert series.

pub mod betti;
pub mod hilbert;
pub mod koszul;
pub mod taylor;
pub mod truncate;

pub use betti::{BettiTable, DerivedInvariants, Subject};
pub use hilbert::{hilbert_function, hilbert_numerator, multiplicity_of_one, standard_monomials};
pub use koszul::{betti_table, koszul_betti, koszul_betti_monomial, DegreeCaps};
pub use taylor::{minimize_taylor, Entry, Face, TaylorComplex, MAX_TAYLOR_GENERATORS};
pub use truncate::truncate_ideal;
