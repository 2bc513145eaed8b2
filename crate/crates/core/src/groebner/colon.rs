//! Intersections, colon ideals and saturation via one auxiliary variable.

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

use super::buchberger::{buchberger, GbOptions};
use super::ideal::Ideal;

/// `I ∩ J`, computed as `(t I + (1 - t) J) ∩ S` with `t` eliminated.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    if j.ring() != ring {
        return Err(Error::RingMismatch("intersect".into()));
    }
    if i.is_unit() {
        return Ok(j.clone());
    }
    if j.is_unit() {
        return Ok(i.clone());
    }
    let n = ring.nvars();
    let big = ring.with_nvars(n + 1)?;
    let ord = MonomialOrder::EliminateLast;
    let t = Monomial::var(n + 1, n);
    let one = Polynomial::constant(big, ord, 1);
    let one_minus_t = &one - &Polynomial::term(big, ord, 1, t);
    let mut polys = Vec::with_capacity(i.num_gens() + j.num_gens());
    for f in i.gens() {
        polys.push(f.embed(big, ord).mul_term(1, &t));
    }
    for g in j.gens() {
        polys.push(&g.embed(big, ord) * &one_minus_t);
    }
    let gb = buchberger(big, &polys, ord, GbOptions::default(), None);
    let gens: Vec<Polynomial> = gb
        .into_iter()
        .filter(|g| g.lm().exp(n) == 0)
        .map(|g| g.restrict_to_first(n).map(|p| p.with_order(MonomialOrder::Grevlex)))
        .collect::<Result<_>>()?;
    Ideal::new(ring, gens)
}

/// `I : f = { g : g f ∈ I }`.
pub fn ideal_quotient(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("ideal_quotient"));
    }
    if f.ring() != i.ring() {
        return Err(Error::RingMismatch("ideal_quotient".into()));
    }
    if f.is_constant() {
        return Ok(i.clone());
    }
    if !f.is_homogeneous() {
        return Err(Error::Inhomogeneous { index: 0 });
    }
    if i.is_unit() {
        return Ok(i.clone());
    }
    let principal = Ideal::new(i.ring(), vec![f.clone()])?;
    let meet = intersect(i, &principal)?;
    let gens = meet
        .gens()
        .iter()
        .map(|g| g.exact_div(f))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(i.ring(), gens)?.reduced(MonomialOrder::Grevlex))
}

/// `I : J = ∩_g (I : g)` over the generators `g` of `J`.
pub fn ideal_quotient_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if j.is_unit() {
        return Ok(i.clone());
    }
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let q = ideal_quotient(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.expect("J has generators").reduced(MonomialOrder::Grevlex))
}

/// `I : J^∞`, the stable value of `I ⊆ I:J ⊆ I:J^2 ⊆ ...`.
pub fn saturation(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if j.is_unit() {
        return Ok(i.clone());
    }
    let mut cur = i.reduced(MonomialOrder::Grevlex);
    loop {
        let next = ideal_quotient_ideal(&cur, j)?;
        if next.is_subset_of(&cur) {
            return Ok(cur);
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn r2() -> Ring {
        Ring::with_prime(2, 32003).unwrap()
    }

    fn mono(r: Ring, ms: &[&[u16]]) -> Ideal {
        Ideal::from_monomials(r, &ms.iter().map(|e| Monomial::from_exponents(e)).collect::<Vec<_>>()).unwrap()
    }

    fn x(r: Ring, i: usize) -> Polynomial {
        Polynomial::var(r, MonomialOrder::Grevlex, i)
    }

    #[test]
    fn quotient_examples() {
        let r = r2();
        let q = ideal_quotient(&mono(r, &[&[2, 0]]), &x(r, 0)).unwrap();
        assert!(q.same_ideal(&mono(r, &[&[1, 0]])));
        let i = mono(r, &[&[2, 0], &[1, 1]]);
        let q = ideal_quotient(&i, &x(r, 0)).unwrap();
        assert!(q.same_ideal(&mono(r, &[&[1, 0], &[0, 1]])));
        let one = Polynomial::constant(r, MonomialOrder::Grevlex, 1);
        assert!(ideal_quotient(&i, &one).unwrap().same_ideal(&i));
        assert!(ideal_quotient(&i, &Polynomial::zero(r, MonomialOrder::Grevlex)).is_err());
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let r = r2();
        let a = Ideal::new(r, vec![&x(r, 0) + &x(r, 1)]).unwrap();
        let b = Ideal::new(r, vec![x(r, 0)]).unwrap();
        let meet = intersect(&a, &b).unwrap();
        let prod = &(&x(r, 0) + &x(r, 1)) * &x(r, 0);
        assert!(meet.same_ideal(&Ideal::new(r, vec![prod]).unwrap()));
    }

    #[test]
    fn saturation_examples() {
        let r = r2();
        let m = Ideal::maximal(r);
        let i = mono(r, &[&[2, 0], &[1, 1]]);
        assert!(saturation(&i, &m).unwrap().same_ideal(&mono(r, &[&[1, 0]])));
        assert!(saturation(&i, &Ideal::unit(r)).unwrap().same_ideal(&i));
        let x_ideal = mono(r, &[&[1, 0]]);
        assert!(saturation(&x_ideal, &m).unwrap().same_ideal(&x_ideal));
    }
}
