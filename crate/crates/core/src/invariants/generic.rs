//! Random linear forms over `F_p` standing in for "sufficiently general"
//! choices, each checked by a certificate before use.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{ideal_quotient, ideal_quotient_ideal, saturation, Ideal};
use crate::poly::{apply_linear_change, Matrix, Monomial, MonomialOrder, Polynomial, Ring};

/// Draws allowed per general choice before giving up.
pub const RETRY_BUDGET: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    /// `(I : ℓ) / I` has finite length.
    pub filter_regular: bool,
    /// `I : ℓ = I`.
    pub regular: bool,
}

/// Filter-regularity of a linear form on `S/I`, tested as
/// `(I : ℓ) ⊆ I : m^∞`.
pub fn filter_regular_test(l: &Polynomial, ideal: &Ideal) -> Result<Regularity> {
    if l.is_zero() {
        return Err(Error::ZeroPolynomial("filter_regular_test"));
    }
    if l.degree() != Some(1) || !l.is_homogeneous() {
        return Err(Error::NotLinear);
    }
    let q = ideal_quotient(ideal, l)?;
    if q.is_subset_of(ideal) {
        return Ok(Regularity { filter_regular: true, regular: true });
    }
    let sat = saturation(ideal, &Ideal::maximal(ideal.ring()))?;
    Ok(Regularity { filter_regular: q.is_subset_of(&sat), regular: false })
}

/// A linear form with coefficients uniform in `F_p`, never zero.
pub fn random_linear_form<R: Rng>(ring: Ring, rng: &mut R) -> Polynomial {
    let p = ring.characteristic();
    let n = ring.nvars();
    loop {
        let terms: Vec<(Monomial, u32)> = (0..n).map(|i| (Monomial::var(n, i), rng.gen_range(0..p))).collect();
        let f = Polynomial::from_terms(ring, MonomialOrder::Grevlex, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenericSection {
    /// `I + (ℓ_1, ..., ℓ_count)`.
    pub ideal: Ideal,
    pub forms: Vec<Polynomial>,
    /// Whether each `ℓ_k` was regular on `S/(I + (ℓ_1..ℓ_{k-1}))`.
    pub regular: Vec<bool>,
    pub draws: usize,
}

/// Adjoins `count` random linear forms to `I`, each filter-regular on the
/// quotient by the previous ones.
pub fn generic_section(ideal: &Ideal, count: usize, seed: u64) -> Result<GenericSection> {
    let ring = ideal.ring();
    if count > ring.nvars() {
        return Err(Error::InvalidArgument(format!("{count} forms in {} variables", ring.nvars())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = ideal.clone();
    let mut forms = Vec::with_capacity(count);
    let mut regular = Vec::with_capacity(count);
    let mut draws = 0;
    for k in 0..count {
        let mut accepted = false;
        for _ in 0..RETRY_BUDGET {
            draws += 1;
            let l = random_linear_form(ring, &mut rng);
            let r = filter_regular_test(&l, &cur)?;
            if r.filter_regular {
                cur = cur.sum_with(std::slice::from_ref(&l))?;
                forms.push(l);
                regular.push(r.regular);
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(Error::RetryBudget(format!("no filter-regular form found for position {}", k + 1)));
        }
    }
    Ok(GenericSection { ideal: cur, forms, regular, draws })
}

/// Length of a maximal regular sequence of random linear forms on `S/I`.
/// The sequence stops once `m` is associated, that is `(J : m) != J`.
pub fn regular_sequence_length(ideal: &Ideal, seed: u64) -> Result<usize> {
    let ring = ideal.ring();
    let m = Ideal::maximal(ring);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = ideal.clone();
    let mut len = 0;
    'outer: while len < ring.nvars() && !cur.is_unit() {
        let mut certified_positive_depth = false;
        for _ in 0..RETRY_BUDGET {
            let l = random_linear_form(ring, &mut rng);
            if ideal_quotient(&cur, &l)?.is_subset_of(&cur) {
                cur = cur.sum_with(&[l])?;
                len += 1;
                continue 'outer;
            }
            if !certified_positive_depth {
                if !ideal_quotient_ideal(&cur, &m)?.is_subset_of(&cur) {
                    break 'outer;
                }
                certified_positive_depth = true;
            }
        }
        return Err(Error::RetryBudget("positive depth but no regular form drawn".into()));
    }
    Ok(len)
}

/// Generic initial ideal: `in_ord(g I)` for random invertible `g`, returned
/// once two consecutive draws give the same monomial ideal.
pub fn gin(ideal: &Ideal, ord: MonomialOrder, seed: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut prev: Option<Vec<Monomial>> = None;
    for _ in 0..RETRY_BUDGET {
        let g = Matrix::random_invertible(ring.nvars(), ring.field(), &mut rng);
        let moved = ideal
            .gens()
            .iter()
            .map(|f| apply_linear_change(f, &g))
            .collect::<Result<Vec<_>>>()?;
        let lead = Ideal::new(ring, moved)?.groebner(ord).leading_monomials();
        if prev.as_ref() == Some(&lead) {
            return Ideal::from_monomials(ring, &lead);
        }
        prev = Some(lead);
    }
    Err(Error::RetryBudget("generic initial ideal did not stabilize".into()))
}
