use std::fmt;

use crate::error::{Error, Result};

use super::field::PrimeField;

/// Largest number of variables a monomial can carry. One slot is kept free
/// for the auxiliary elimination variable used by colon computations.
pub const MAX_VARS: usize = 16;

/// Polynomial ring `F_p[x_1..x_N]` with the standard grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: PrimeField,
}

impl Ring {
    pub fn new(nvars: usize, field: PrimeField) -> Result<Self> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::BadVarCount { got: nvars, max: MAX_VARS });
        }
        Ok(Ring { nvars, field })
    }

    pub fn with_prime(nvars: usize, p: u64) -> Result<Self> {
        Ring::new(nvars, PrimeField::new(p)?)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub(crate) fn with_nvars(&self, nvars: usize) -> Result<Ring> {
        Ring::new(nvars, self.field)
    }
}

/// Dense exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        debug_assert!(nvars <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8 }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::var_pow(nvars, index, 1)
    }

    pub fn var_pow(nvars: usize, index: usize, e: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = e;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn set_exp(&mut self, i: usize, e: u16) {
        debug_assert!(i < self.nvars());
        self.exps[i] = e;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nvars()).filter(move |&i| self.exps[i] > 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].min(other.exps[i]);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Same exponents in a ring with a different number of variables.
    /// Exponents of dropped variables must be zero.
    pub(crate) fn resized(&self, nvars: usize) -> Monomial {
        let mut m = *self;
        for i in nvars..MAX_VARS {
            debug_assert!(m.exps[i] == 0, "dropping a variable that occurs");
            m.exps[i] = 0;
        }
        m.nvars = nvars as u8;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in self.support() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if self.exps[i] > 1 {
                write!(f, "^{}", self.exps[i])?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, in lex-descending
/// order (`x_1^d` first).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        let n = cur.nvars();
        if i + 1 == n {
            cur.exps[i] = left as u16;
            out.push(*cur);
            cur.exps[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur.exps[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur.exps[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = Monomial::one(nvars);
    rec(0, d, &mut cur, &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_division() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 1, 0]);
        assert_eq!(a.degree(), 3);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b), Some(Monomial::from_exponents(&[1, 0, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.lcm(&Monomial::var(3, 2)), Monomial::from_exponents(&[2, 1, 1]));
    }

    #[test]
    fn enumerates_degree_pieces() {
        for n in 1..5 {
            for d in 0..6 {
                let ms = monomials_of_degree(n, d);
                assert_eq!(ms.len() as u64, binomial(n as u64 + d as u64 - 1, d as u64));
                assert!(ms.iter().all(|m| m.degree() == d));
            }
        }
    }
}
