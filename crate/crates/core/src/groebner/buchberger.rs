//! S-polynomials, the division algorithm, single Buchberger iterations and
//! full (reduced) Gröbner bases.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, Term};

use super::ideal::{minimalize_monomials, Ideal};

/// A generating set together with the order it was computed for.
///
/// With `truncation_degree = None` the elements form a reduced Gröbner basis.
/// With `Some(d)` the leading monomials are only claimed to generate the
/// initial ideal in degrees `<= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBasis {
    elements: Vec<Polynomial>,
    ord: MonomialOrder,
    truncation_degree: Option<u32>,
}

impl GBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.ord
    }

    pub fn truncation_degree(&self) -> Option<u32> {
        self.truncation_degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Minimal generators of the monomial ideal of leading monomials.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        minimalize_monomials(&self.elements.iter().map(|g| g.lm()).collect::<Vec<_>>())
    }

    /// Leading monomials of all elements, in element order, duplicates kept.
    pub fn raw_leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lm()).collect()
    }
}

/// Pair-pruning switches. Turning both off gives the literal procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbOptions {
    pub product_criterion: bool,
    pub chain_criterion: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { product_criterion: true, chain_criterion: true }
    }
}

impl GbOptions {
    pub fn faithful() -> Self {
        GbOptions { product_criterion: false, chain_criterion: false }
    }
}

/// `(in(g)/gcd) f - (in(f)/gcd) g` for monic `f`, `g`. Non-monic inputs are
/// normalized by their leading coefficients first.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("s_polynomial"));
    }
    let f = f.with_order(ord);
    let g = g.with_order(ord);
    Ok(s_poly_sorted(&f, &g))
}

fn s_poly_sorted(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (lf, lg) = (f.lm(), g.lm());
    let gcd = lf.gcd(&lg);
    let mf = lg.div(&gcd).expect("gcd divides");
    let mg = lf.div(&gcd).expect("gcd divides");
    let a = f.mul_term(field.inv(f.lc()), &mf);
    a.sub_mul_term(field.inv(g.lc()), &mg, g)
}

/// Result of the division algorithm: `f = sum q_t f_t + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Division algorithm. Among divisors whose leading monomial divides the
/// current term the lowest index is used; terms that no leading monomial
/// divides go to the remainder.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: MonomialOrder) -> Division {
    let ring = f.ring();
    let field = ring.field();
    let divs: Vec<Polynomial> = divisors.iter().map(|d| d.with_order(ord)).collect();
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divs.len()];
    let mut rem = Vec::new();
    let mut p = f.with_order(ord);
    while let Some(lt) = p.terms().first().copied() {
        match divs.iter().position(|d| !d.is_zero() && d.lm().divides(&lt.monomial)) {
            Some(t) => {
                let d = &divs[t];
                let m = lt.monomial.div(&d.lm()).expect("divides");
                let c = field.div(lt.coeff, d.lc());
                quotients[t].push(Term { coeff: c, monomial: m });
                p = p.sub_mul_term(c, &m, d);
            }
            None => {
                rem.push(lt);
                p.pop_leading();
            }
        }
    }
    Division {
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(ring, ord, q.into_iter().map(|t| (t.monomial, t.coeff))))
            .collect(),
        remainder: Polynomial::from_sorted_terms(ring, ord, rem),
    }
}

/// Fully reduced remainder of `f` modulo `basis`; every polynomial must be
/// sorted in the same order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let mut rem = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms().first().copied() {
        match basis.iter().find(|d| d.lm().divides(&lt.monomial)) {
            Some(d) => {
                let m = lt.monomial.div(&d.lm()).expect("divides");
                let c = field.div(lt.coeff, d.lc());
                p = p.sub_mul_term(c, &m, d);
            }
            None => {
                rem.push(lt);
                p.pop_leading();
            }
        }
    }
    Polynomial::from_sorted_terms(ring, f.order(), rem)
}

/// One iteration of Buchberger's procedure: the inputs together with the
/// nonzero, monic remainders of all S-polynomials `S_ij`, `i < j`, divided by
/// the inputs. With `degree_cap = Some(d)` inputs of degree `> d` are dropped
/// and pairs whose S-polynomial would exceed degree `d` are skipped.
pub fn buchberger_iteration(basis: &[Polynomial], ord: MonomialOrder, degree_cap: Option<u32>) -> Vec<Polynomial> {
    let inputs: Vec<Polynomial> = basis
        .iter()
        .filter(|f| !f.is_zero())
        .filter(|f| degree_cap.is_none_or(|d| f.degree().unwrap_or(0) <= d))
        .map(|f| f.with_order(ord).make_monic().expect("nonzero"))
        .collect();
    let mut out = inputs.clone();
    for i in 0..inputs.len() {
        for j in i + 1..inputs.len() {
            let lcm = inputs[i].lm().lcm(&inputs[j].lm());
            if degree_cap.is_some_and(|d| lcm.degree() > d) {
                continue;
            }
            let s = s_poly_sorted(&inputs[i], &inputs[j]);
            let r = divide(&s, &inputs, ord).remainder;
            if !r.is_zero() {
                out.push(r.make_monic().expect("nonzero"));
            }
        }
    }
    out
}

/// Runs `delta - 1` capped iterations starting from the generators of degree
/// at most `delta`, with no interreduction between iterations.
pub fn truncated_initial_generators(ideal: &Ideal, ord: MonomialOrder, delta: u32) -> Result<GBasis> {
    if delta < 1 {
        return Err(Error::InvalidArgument("truncation degree must be at least 1".into()));
    }
    let mut cur: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .filter(|g| g.degree().unwrap_or(0) <= delta)
        .map(|g| g.with_order(ord))
        .collect();
    for _ in 1..delta {
        cur = buchberger_iteration(&cur, ord, Some(delta));
    }
    Ok(GBasis { elements: cur, ord, truncation_degree: Some(delta) })
}

/// Reduced Gröbner basis with the default pair criteria.
pub fn groebner_basis(ideal: &Ideal, ord: MonomialOrder) -> GBasis {
    groebner_basis_with(ideal, ord, GbOptions::default())
}

pub fn groebner_basis_with(ideal: &Ideal, ord: MonomialOrder, opts: GbOptions) -> GBasis {
    let elements = buchberger(ideal.ring(), ideal.gens(), ord, opts, None);
    GBasis { elements, ord, truncation_degree: None }
}

/// Homogeneous Buchberger stopped after all pairs of degree `<= degree`;
/// the result is a Gröbner basis through that degree.
pub fn groebner_basis_through(ideal: &Ideal, ord: MonomialOrder, degree: u32) -> GBasis {
    groebner_basis_through_with(ideal, ord, degree, GbOptions::default())
}

pub fn groebner_basis_through_with(ideal: &Ideal, ord: MonomialOrder, degree: u32, opts: GbOptions) -> GBasis {
    let elements = buchberger(ideal.ring(), ideal.gens(), ord, opts, Some(degree));
    GBasis { elements, ord, truncation_degree: Some(degree) }
}

/// Gröbner basis of an arbitrary list of polynomials. Pairs are selected by
/// the order's selection degree, which makes the procedure degree-by-degree
/// for inputs homogeneous in that grading.
pub(crate) fn buchberger(
    ring: Ring,
    input: &[Polynomial],
    ord: MonomialOrder,
    opts: GbOptions,
    degree_limit: Option<u32>,
) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let mut start: Vec<Polynomial> = input
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.with_order(ord).make_monic().expect("nonzero"))
        .collect();
    start.sort_by(|a, b| ord.selection_degree(&a.lm()).cmp(&ord.selection_degree(&b.lm())).then(ord.cmp(&a.lm(), &b.lm())));
    start.dedup();

    let push = |basis: &mut Vec<Polynomial>,
                    pending: &mut BTreeSet<(u32, usize, usize)>,
                    pending_set: &mut HashSet<(usize, usize)>,
                    f: Polynomial| {
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.lm().lcm(&f.lm());
            pending.insert((ord.selection_degree(&lcm), i, k));
            pending_set.insert((i, k));
        }
        basis.push(f);
    };

    for f in start {
        push(&mut basis, &mut pending, &mut pending_set, f);
    }

    while let Some(&(deg, i, j)) = pending.iter().next() {
        pending.remove(&(deg, i, j));
        pending_set.remove(&(i, j));
        if degree_limit.is_some_and(|d| deg > d) {
            break;
        }
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if opts.product_criterion && li.is_coprime(&lj) {
            continue;
        }
        if opts.chain_criterion {
            let lcm = li.lcm(&lj);
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let redundant = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lm().divides(&lcm)
                    && !pending_set.contains(&key(i, k))
                    && !pending_set.contains(&key(j, k))
            });
            if redundant {
                continue;
            }
        }
        let s = s_poly_sorted(&basis[i], &basis[j]);
        let h = normal_form(&s, &basis);
        if !h.is_zero() {
            let h = h.make_monic().expect("nonzero");
            push(&mut basis, &mut pending, &mut pending_set, h);
        }
    }
    interreduce(ring, basis, ord)
}

/// Minimal, fully tail-reduced, monic basis sorted by increasing leading
/// monomial.
pub(crate) fn interreduce(ring: Ring, mut basis: Vec<Polynomial>, ord: MonomialOrder) -> Vec<Polynomial> {
    let _ = ring;
    basis.sort_by(|a, b| ord.cmp(&a.lm(), &b.lm()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in basis {
        if !minimal.iter().any(|g| g.lm().divides(&f.lm())) {
            minimal.push(f);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let f = &minimal[idx];
        let lead = Polynomial::from_sorted_terms(f.ring(), ord, vec![f.terms()[0]]);
        let tail = Polynomial::from_sorted_terms(f.ring(), ord, f.terms()[1..].to_vec());
        let reduced = &lead + &normal_form(&tail, &others);
        out.push(reduced.make_monic().expect("nonzero"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::with_prime(2, 32003).unwrap()
    }

    fn p(r: Ring, t: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::from_terms(
            r,
            MonomialOrder::Grevlex,
            t.iter().map(|(c, e)| (Monomial::from_exponents(e), r.field().from_i64(*c))),
        )
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring2();
        let g = MonomialOrder::Grevlex;
        let x2 = p(r, &[(1, &[2, 0])]);
        let xy = p(r, &[(1, &[1, 1])]);
        assert!(s_polynomial(&x2, &xy, g).unwrap().is_zero());
        let f = p(r, &[(1, &[2, 0]), (1, &[0, 2])]);
        assert_eq!(s_polynomial(&f, &xy, g).unwrap(), p(r, &[(1, &[0, 3])]));
        assert!(s_polynomial(&f, &f, g).unwrap().is_zero());
        assert!(s_polynomial(&f, &Polynomial::zero(r, g), g).is_err());
    }

    #[test]
    fn division_examples() {
        let r = ring2();
        let g = MonomialOrder::Grevlex;
        let d = divide(&p(r, &[(1, &[2, 1])]), &[p(r, &[(1, &[2, 0])])], g);
        assert_eq!(d.quotients, vec![p(r, &[(1, &[0, 1])])]);
        assert!(d.remainder.is_zero());
        let d = divide(&p(r, &[(1, &[2, 0]), (1, &[0, 2])]), &[p(r, &[(1, &[1, 0])])], g);
        assert_eq!(d.remainder, p(r, &[(1, &[0, 2])]));
        let d = divide(&p(r, &[(1, &[1, 2]), (1, &[0, 3])]), &[p(r, &[(1, &[1, 1]), (1, &[0, 2])])], g);
        assert_eq!(d.quotients, vec![p(r, &[(1, &[0, 1])])]);
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn iteration_examples() {
        let r = ring2();
        let g = MonomialOrder::Grevlex;
        let mono = vec![p(r, &[(1, &[2, 0])]), p(r, &[(1, &[0, 2])])];
        assert_eq!(buchberger_iteration(&mono, g, None), mono);
        let f = p(r, &[(1, &[2, 0]), (1, &[0, 2])]);
        let xy = p(r, &[(1, &[1, 1])]);
        let out = buchberger_iteration(&[f.clone(), xy.clone()], g, None);
        assert_eq!(out, vec![f, xy, p(r, &[(1, &[0, 3])])]);
    }

    #[test]
    fn groebner_examples() {
        let r = ring2();
        let g = MonomialOrder::Grevlex;
        let i = Ideal::new(r, vec![p(r, &[(1, &[2, 0]), (1, &[0, 2])]), p(r, &[(1, &[1, 1])])]).unwrap();
        let gb = groebner_basis(&i, g);
        assert_eq!(
            gb.leading_monomials(),
            vec![Monomial::from_exponents(&[1, 1]), Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[0, 3])]
        );
        let faithful = groebner_basis_with(&i, g, GbOptions::faithful());
        assert_eq!(faithful, gb);
        let trunc = truncated_initial_generators(&i, g, 3).unwrap();
        let mut lms = trunc.leading_monomials();
        lms.sort();
        let mut want = gb.leading_monomials();
        want.sort();
        assert_eq!(lms, want);
        let one = truncated_initial_generators(&i, g, 1).unwrap();
        assert!(one.is_empty());
        assert!(truncated_initial_generators(&i, g, 0).is_err());
    }
}
