use crate::error::Result;
use crate::groebner::{minimalize_monomials, monomial_in, Ideal};

/// Whether `binom(t, s)` is nonzero mod `p`, by Lucas.
fn lucas_nonzero(mut t: u32, mut s: u32, p: u32) -> bool {
    while s > 0 {
        if s % p > t % p {
            return false;
        }
        s /= p;
        t /= p;
    }
    true
}

/// Borel-fixedness in characteristic `p`: for every minimal generator `u`,
/// every `i < j` with `x_j^t` exactly dividing `u`, and every `s` with
/// `binom(t, s) != 0 mod p`, the monomial `(x_i / x_j)^s u` lies in `J`.
pub fn borel_fixed_test(j: &Ideal) -> Result<bool> {
    let gens = minimalize_monomials(&j.monomials()?);
    let p = j.ring().characteristic();
    for u in &gens {
        for jv in u.support().collect::<Vec<_>>() {
            let t = u.exp(jv) as u32;
            for s in 1..=t {
                if !lucas_nonzero(t, s, p) {
                    continue;
                }
                for iv in 0..jv {
                    let mut w = *u;
                    w.set_exp(jv, (t - s) as u16);
                    w.set_exp(iv, w.exp(iv) + s as u16);
                    if !monomial_in(&gens, &w) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

    fn mono(r: Ring, e: &[&[u16]]) -> Ideal {
        let ms: Vec<Monomial> = e.iter().map(|x| Monomial::from_exponents(x)).collect();
        Ideal::from_monomials(r, &ms).unwrap()
    }

    #[test]
    fn strongly_stable_and_not() {
        let r = Ring::new(2, Default::default()).unwrap();
        assert!(borel_fixed_test(&mono(r, &[&[2, 0], &[1, 1]])).unwrap());
        assert!(!borel_fixed_test(&mono(r, &[&[0, 2]])).unwrap());
    }

    #[test]
    fn frobenius_powers_are_borel_fixed() {
        for p in [3u64, 5, 7] {
            let r = Ring::with_prime(2, p).unwrap();
            let e = p as u16;
            assert!(borel_fixed_test(&mono(r, &[&[e, 0], &[0, e]])).unwrap());
        }
        let r = Ring::with_prime(2, 32003).unwrap();
        assert!(!borel_fixed_test(&mono(r, &[&[3, 0], &[0, 3]])).unwrap());
    }

    #[test]
    fn rejects_non_monomial() {
        let r = Ring::new(2, Default::default()).unwrap();
        let f = &Polynomial::var(r, MonomialOrder::Grevlex, 0) + &Polynomial::var(r, MonomialOrder::Grevlex, 1);
        let i = Ideal::new(r, vec![f]).unwrap();
        assert!(matches!(borel_fixed_test(&i), Err(Error::NotMonomial)));
    }

    #[test]
    fn lucas_matches_direct_binomials() {
        for p in [2u32, 3, 5] {
            for t in 0..30u32 {
                for s in 0..=t {
                    let direct = crate::poly::binomial(t as u64, s as u64) % p as u64 != 0;
                    assert_eq!(lucas_nonzero(t, s, p), direct, "t={t} s={s} p={p}");
                }
            }
        }
    }
}
