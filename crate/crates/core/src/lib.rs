//! Graded polynomial algebra over prime fields and checks of uniform bounds
//! on projective dimension and Castelnuovo–Mumford regularity.

pub mod error;
pub mod groebner;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod resolution;
pub mod verifier;

pub use error::{Error, Result};
