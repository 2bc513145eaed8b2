//! Invariants of `S/I` read off Betti tables and colon ideals, plus the
//! generic-coordinate constructions (general linear sections, gins).

pub mod borel;
pub mod generic;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{ideal_quotient_ideal, Ideal};
use crate::poly::MonomialOrder;
use crate::resolution::{betti_table, hilbert_function, BettiTable};

pub use borel::borel_fixed_test;
pub use generic::{
    filter_regular_test, generic_section, gin, random_linear_form, regular_sequence_length, GenericSection, Regularity,
    RETRY_BUDGET,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub pd: usize,
    pub depth: usize,
    pub reg: i64,
    pub alpha: i64,
    pub t: Vec<Option<u32>>,
    pub socle_degrees: Vec<u32>,
    pub mu: u64,
    pub max_degree: u32,
}

impl InvariantBundle {
    pub fn compute(ideal: &Ideal) -> Result<Self> {
        let table = betti_table(ideal)?;
        Self::from_table(ideal, &table)
    }

    pub fn from_table(ideal: &Ideal, table: &BettiTable) -> Result<Self> {
        let d = table.derived_invariants()?;
        let depth = ideal.ring().nvars() - d.pd;
        let socle_degrees = if depth == 0 { socle_degrees(ideal)? } else { Vec::new() };
        Ok(InvariantBundle {
            pd: d.pd,
            depth,
            reg: d.reg,
            alpha: alpha_of(table)?,
            t: d.t,
            socle_degrees,
            mu: table.beta(1),
            max_degree: table.t(1).unwrap_or(0),
        })
    }
}

/// `α = min { j - p : beta_{p,j} != 0 }` with `p = pd`.
pub fn alpha_of(table: &BettiTable) -> Result<i64> {
    if table.is_zero() {
        return Err(Error::Degenerate("alpha of the zero module".into()));
    }
    let p = table.pd();
    let j = table.min_degree(p).expect("pd row is nonzero");
    Ok(j as i64 - p as i64)
}

/// Degrees of a basis of the socle `(I : m) / I`, with multiplicity.
pub fn socle_degrees(ideal: &Ideal) -> Result<Vec<u32>> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let q = ideal_quotient_ideal(ideal, &Ideal::maximal(ring))?;
    if q.is_unit() {
        return Ok(vec![0]);
    }
    let top = q.max_degree();
    let lead_i = ideal.groebner(MonomialOrder::Grevlex).leading_monomials();
    let lead_q = q.groebner(MonomialOrder::Grevlex).leading_monomials();
    let hi = hilbert_function(&lead_i, n, top);
    let hq = hilbert_function(&lead_q, n, top);
    let mut out = Vec::new();
    for d in 0..=top as usize {
        for _ in 0..(hi[d] - hq[d]) {
            out.push(d as u32);
        }
    }
    Ok(out)
}

/// `reg_{1/r} = max { t_i - i : 0 <= i <= ceil(pd / r) }`.
pub fn frac_reg(table: &BettiTable, r: usize) -> Result<i64> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let upto = table.pd().div_ceil(r);
    Ok((0..=upto)
        .filter_map(|i| table.t(i).map(|t| t as i64 - i as i64))
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, Ring};

    fn mono(n: usize, e: &[&[u16]]) -> Ideal {
        let r = Ring::new(n, Default::default()).unwrap();
        let ms: Vec<Monomial> = e.iter().map(|x| Monomial::from_exponents(x)).collect();
        Ideal::from_monomials(r, &ms).unwrap()
    }

    #[test]
    fn alpha_examples() {
        let t = |i: &Ideal| betti_table(i).unwrap();
        assert_eq!(alpha_of(&t(&mono(2, &[&[2, 0], &[0, 2]]))).unwrap(), 2);
        assert_eq!(alpha_of(&t(&mono(2, &[&[2, 0], &[1, 1], &[0, 2]]))).unwrap(), 1);
        assert_eq!(alpha_of(&t(&mono(2, &[&[1, 0]]))).unwrap(), 0);
    }

    #[test]
    fn socle_examples() {
        assert_eq!(socle_degrees(&mono(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap(), vec![1, 1]);
        assert_eq!(socle_degrees(&mono(2, &[&[2, 0], &[0, 2]])).unwrap(), vec![2]);
        assert!(socle_degrees(&mono(2, &[&[1, 0]])).unwrap().is_empty());
    }

    #[test]
    fn frac_reg_examples() {
        let squares = betti_table(&mono(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(frac_reg(&squares, 1).unwrap(), squares.reg());
        assert_eq!(frac_reg(&squares, 2).unwrap(), 1);
        let m2 = betti_table(&mono(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(frac_reg(&m2, 2).unwrap(), 1);
        assert!(frac_reg(&m2, 0).is_err());
    }

    #[test]
    fn bundle_for_square_of_maximal_ideal() {
        let b = InvariantBundle::compute(&mono(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!((b.pd, b.depth, b.reg, b.alpha, b.mu, b.max_degree), (2, 0, 1, 1, 3, 2));
        assert_eq!(b.socle_degrees, vec![1, 1]);
    }

    #[test]
    fn socle_minimum_is_alpha_in_depth_zero() {
        let i = mono(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0], &[0, 0, 2], &[1, 0, 1]]);
        let b = InvariantBundle::compute(&i).unwrap();
        assert_eq!(b.depth, 0);
        assert_eq!(*b.socle_degrees.iter().min().unwrap() as i64, b.alpha);
    }
}
