use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

use super::buchberger::{groebner_basis, normal_form, GBasis};

/// Homogeneous ideal given by monic, nonzero, homogeneous generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for (index, g) in gens.into_iter().enumerate() {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!("generator {index}")));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous { index });
            }
            let g = g.with_order(MonomialOrder::Grevlex).make_monic()?;
            if !out.contains(&g) {
                out.push(g);
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        Ok(Ideal { ring, gens: out })
    }

    pub fn from_monomials(ring: Ring, monomials: &[Monomial]) -> Result<Self> {
        let gens = monomials
            .iter()
            .map(|m| Polynomial::term(ring, MonomialOrder::Grevlex, 1, *m))
            .collect();
        Ideal::new(ring, gens)
    }

    /// The unit ideal `(1) = S`.
    pub fn unit(ring: Ring) -> Self {
        Ideal { ring, gens: vec![Polynomial::constant(ring, MonomialOrder::Grevlex, 1)] }
    }

    /// The irrelevant ideal `(x_1, ..., x_N)`.
    pub fn maximal(ring: Ring) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, MonomialOrder::Grevlex, i)).collect();
        Ideal { ring, gens }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant())
    }

    /// Generator monomials; only meaningful for monomial ideals.
    pub fn monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_monomial() {
            return Err(Error::NotMonomial);
        }
        Ok(self.gens.iter().map(|g| g.lm()).collect())
    }

    /// `I + (extra)`.
    pub fn sum_with(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.sum_with(&other.gens)
    }

    pub fn groebner(&self, ord: MonomialOrder) -> GBasis {
        groebner_basis(self, ord)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.contains_with(&self.groebner(MonomialOrder::Grevlex), f)
    }

    pub(crate) fn contains_with(&self, gb: &GBasis, f: &Polynomial) -> bool {
        normal_form(&f.with_order(gb.order()), gb.elements()).is_zero()
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        let gb = other.groebner(MonomialOrder::Grevlex);
        self.gens.iter().all(|g| other.contains_with(&gb, g))
    }

    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.groebner(MonomialOrder::Grevlex).elements() == other.groebner(MonomialOrder::Grevlex).elements()
    }

    /// Ideal generated by the reduced Gröbner basis in `ord`.
    pub fn reduced(&self, ord: MonomialOrder) -> Ideal {
        let gb = self.groebner(ord);
        Ideal::new(self.ring, gb.elements().to_vec()).expect("Gröbner basis of a nonzero ideal")
    }

    /// Leading-term ideal `in_ord(I)`, as minimal monomial generators.
    pub fn initial_ideal(&self, ord: MonomialOrder) -> Ideal {
        let gb = self.groebner(ord);
        Ideal::from_monomials(self.ring, &gb.leading_monomials()).expect("nonempty")
    }
}

/// Minimal generators of the monomial ideal spanned by `ms`, sorted.
pub fn minimalize_monomials(ms: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = ms.to_vec();
    sorted.sort_by_key(|m| (m.degree(), *m));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Whether `m` lies in the monomial ideal generated by `gens`.
#[inline]
pub fn monomial_in(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}
