use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::monomial::{Monomial, Ring};
use super::order::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub monomial: Monomial,
}

/// Sparse polynomial; terms are kept strictly descending under `ord`.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    ord: MonomialOrder,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.ord == other.ord {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.ord).terms
        }
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: Ring, ord: MonomialOrder) -> Self {
        Polynomial { ring, ord, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, ord: MonomialOrder, c: u32) -> Self {
        Self::term(ring, ord, c, Monomial::one(ring.nvars()))
    }

    pub fn term(ring: Ring, ord: MonomialOrder, coeff: u32, monomial: Monomial) -> Self {
        let coeff = coeff % ring.characteristic();
        let terms = if coeff == 0 { Vec::new() } else { vec![Term { coeff, monomial }] };
        Polynomial { ring, ord, terms }
    }

    pub fn var(ring: Ring, ord: MonomialOrder, index: usize) -> Self {
        Self::term(ring, ord, 1, Monomial::var(ring.nvars(), index))
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(ring: Ring, ord: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u32)>,
    {
        let field = ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c % field.characteristic());
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        terms.sort_unstable_by(|a, b| ord.cmp(&b.monomial, &a.monomial));
        Polynomial { ring, ord, terms }
    }

    /// Terms must already be strictly descending under `ord` with nonzero
    /// coefficients.
    pub(crate) fn from_sorted_terms(ring: Ring, ord: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ord.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial { ring, ord, terms }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.ord
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn with_order(&self, ord: MonomialOrder) -> Polynomial {
        if ord == self.ord {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| ord.cmp(&b.monomial, &a.monomial));
        Polynomial { ring: self.ring, ord, terms }
    }

    /// Leading term under `ord` (not necessarily the stored order).
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<Term> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("leading_term"));
        }
        if ord == self.ord {
            return Ok(self.terms[0]);
        }
        Ok(*self
            .terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.monomial, &b.monomial))
            .expect("nonempty"))
    }

    /// Leading monomial under the stored order. Panics on zero.
    #[inline]
    pub fn lm(&self) -> Monomial {
        self.terms[0].monomial
    }

    #[inline]
    pub fn lc(&self) -> u32 {
        self.terms[0].coeff
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|t| t.monomial.degree() == d)
            }
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Polynomial::zero(self.ring, self.ord);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.mul(t.coeff, c), monomial: t.monomial })
            .collect();
        Polynomial { ring: self.ring, ord: self.ord, terms }
    }

    /// `c * m * self`; order is preserved because monomial orders are
    /// multiplicative.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Polynomial {
        let field = self.ring.field();
        if c == 0 {
            return Polynomial::zero(self.ring, self.ord);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.mul(t.coeff, c), monomial: t.monomial.mul(m) })
            .collect();
        Polynomial { ring: self.ring, ord: self.ord, terms }
    }

    pub fn make_monic(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("make_monic"));
        }
        let inv = self.ring.field().inv(self.lc());
        Ok(self.scale(inv))
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub fn sub_mul_term(&self, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let ord = self.ord;
        let g = if g.ord == ord { std::borrow::Cow::Borrowed(g) } else { std::borrow::Cow::Owned(g.with_order(ord)) };
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (a, b) = (&self.terms, &g.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].monomial.mul(m);
            if i == a.len() {
                out.push(Term { coeff: field.neg(field.mul(c, b[j].coeff)), monomial: bm });
                j += 1;
                continue;
            }
            match ord.cmp(&a[i].monomial, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: field.neg(field.mul(c, b[j].coeff)), monomial: bm });
                    j += 1;
                }
                Ordering::Equal => {
                    let v = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
                    if v != 0 {
                        out.push(Term { coeff: v, monomial: bm });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring, ord, terms: out }
    }

    fn merge_add(&self, other: &Polynomial) -> Polynomial {
        self.sub_mul_term(self.ring.field().neg(1), &Monomial::one(self.ring.nvars()), other)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.merge_add(other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.sub_mul_term(1, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let e = acc.entry(a.monomial.mul(&b.monomial)).or_insert(0);
                *e = field.add(*e, field.mul(a.coeff, b.coeff));
            }
        }
        Ok(Polynomial::from_terms(self.ring, self.ord, acc))
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.ring, self.ord, 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Reinterprets the polynomial in a ring with `nvars` variables. Every
    /// term must avoid the dropped variables; when widening, the new
    /// variables simply do not occur.
    pub(crate) fn embed(&self, ring: Ring, ord: MonomialOrder) -> Polynomial {
        Polynomial::from_terms(
            ring,
            ord,
            self.terms.iter().map(|t| (t.monomial.resized(ring.nvars()), t.coeff)),
        )
    }

    /// Sets the variables with index `>= keep` to zero and drops them.
    pub fn restrict_to_first(&self, keep: usize) -> Result<Polynomial> {
        let ring = self.ring.with_nvars(keep)?;
        let terms = self
            .terms
            .iter()
            .filter(|t| (keep..self.ring.nvars()).all(|i| t.monomial.exp(i) == 0))
            .map(|t| (t.monomial.resized(keep), t.coeff));
        Ok(Polynomial::from_terms(ring, self.ord, terms))
    }

    /// Removes and returns the leading term under the stored order.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff_of(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|t| t.monomial == *m).map_or(0, |t| t.coeff)
    }

    /// Exact quotient `self / g`, failing if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial("exact_div"));
        }
        let g = g.with_order(self.ord);
        let field = self.ring.field();
        let glead = g.terms[0];
        let ginv = field.inv(glead.coeff);
        let mut rest = self.clone();
        let mut q = Vec::new();
        while !rest.is_zero() {
            let lt = rest.terms[0];
            let m = lt
                .monomial
                .div(&glead.monomial)
                .ok_or_else(|| Error::InvalidArgument("polynomial division is not exact".into()))?;
            let c = field.mul(lt.coeff, ginv);
            q.push(Term { coeff: c, monomial: m });
            rest = rest.sub_mul_term(c, &m, &g);
        }
        Ok(Polynomial::from_sorted_terms(self.ring, self.ord, q))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics if the rings differ; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize, p: u64) -> Ring {
        Ring::with_prime(n, p).unwrap()
    }

    fn poly(r: Ring, ord: MonomialOrder, t: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::from_terms(
            r,
            ord,
            t.iter().map(|(c, e)| (Monomial::from_exponents(e), r.field().from_i64(*c))),
        )
    }

    #[test]
    fn leading_terms() {
        let r = ring(2, 32003);
        let g = MonomialOrder::Grevlex;
        let f = poly(r, g, &[(1, &[2, 0]), (1, &[1, 1])]);
        assert_eq!(f.leading_term(g).unwrap().monomial, Monomial::from_exponents(&[2, 0]));
        let f = poly(r, g, &[(3, &[0, 1])]);
        let lt = f.leading_term(g).unwrap();
        assert_eq!((lt.coeff, lt.monomial), (3, Monomial::from_exponents(&[0, 1])));
        let f = poly(r, g, &[(1, &[1, 1]), (1, &[0, 2]), (1, &[2, 0])]);
        assert_eq!(f.leading_term(MonomialOrder::Lex).unwrap().monomial, Monomial::from_exponents(&[2, 0]));
        assert!(Polynomial::zero(r, g).leading_term(g).is_err());
    }

    #[test]
    fn arithmetic_over_f5() {
        let r = ring(2, 5);
        let g = MonomialOrder::Grevlex;
        let a = poly(r, g, &[(1, &[1, 0]), (1, &[0, 1])]);
        let b = poly(r, g, &[(-1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(&a + &b, poly(r, g, &[(2, &[0, 1])]));
        assert_eq!(poly(r, g, &[(3, &[1, 0])]).make_monic().unwrap(), poly(r, g, &[(1, &[1, 0])]));
        let c = poly(r, g, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(&a * &c, poly(r, g, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert!(Polynomial::zero(r, g).make_monic().is_err());
        assert!(a.checked_add(&Polynomial::zero(ring(3, 5), g)).is_err());
    }

    #[test]
    fn exact_division() {
        let r = ring(2, 32003);
        let g = MonomialOrder::Grevlex;
        let a = poly(r, g, &[(1, &[1, 0]), (1, &[0, 1])]);
        let b = poly(r, g, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        assert!(a.exact_div(&b).is_err());
    }

    fn arb_homog(r: Ring) -> impl Strategy<Value = Polynomial> {
        (0u32..4, proptest::collection::vec(0u32..32003, 1..6)).prop_map(move |(d, cs)| {
            let ms = crate::poly::monomial::monomials_of_degree(r.nvars(), d);
            Polynomial::from_terms(r, MonomialOrder::Grevlex, cs.iter().enumerate().map(|(i, &c)| (ms[i % ms.len()], c)))
        })
    }

    proptest! {
        #[test]
        fn grading_and_leading_terms_multiply(f in arb_homog(ring(3, 32003)), g in arb_homog(ring(3, 32003))) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = &f * &g;
            prop_assert!(fg.is_homogeneous());
            prop_assert_eq!(fg.degree().unwrap(), f.degree().unwrap() + g.degree().unwrap());
            for ord in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
                let a = f.leading_term(ord).unwrap();
                let b = g.leading_term(ord).unwrap();
                let c = fg.leading_term(ord).unwrap();
                prop_assert_eq!(c.monomial, a.monomial.mul(&b.monomial));
                prop_assert_eq!(c.coeff, r3().field().mul(a.coeff, b.coeff));
            }
        }
    }

    fn r3() -> Ring {
        ring(3, 32003)
    }
}
