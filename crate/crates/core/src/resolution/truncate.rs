use crate::groebner::{groebner_basis_through, Ideal};
use crate::poly::MonomialOrder;

/// `I_{<=j}`: the ideal generated by the graded pieces of `I` in degrees at
/// most `j`. `None` when all of them vanish.
pub fn truncate_ideal(ideal: &Ideal, j: u32) -> Option<Ideal> {
    if ideal.is_unit() {
        return Some(ideal.clone());
    }
    let gens: Vec<_> = if ideal.is_monomial() {
        ideal.gens().iter().filter(|g| g.degree().is_some_and(|d| d <= j)).cloned().collect()
    } else {
        groebner_basis_through(ideal, MonomialOrder::Grevlex, j)
            .into_elements()
            .into_iter()
            .filter(|g| g.degree().is_some_and(|d| d <= j))
            .collect()
    };
    if gens.is_empty() {
        None
    } else {
        Ideal::new(ideal.ring(), gens).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, Ring};

    fn mono(ring: Ring, e: &[&[u16]]) -> Ideal {
        let ms: Vec<Monomial> = e.iter().map(|x| Monomial::from_exponents(x)).collect();
        Ideal::from_monomials(ring, &ms).unwrap()
    }

    #[test]
    fn drops_high_generators() {
        let r = Ring::new(2, Default::default()).unwrap();
        let j = mono(r, &[&[2, 0], &[0, 5]]);
        assert!(truncate_ideal(&j, 3).unwrap().same_ideal(&mono(r, &[&[2, 0]])));
        assert!(truncate_ideal(&j, 5).unwrap().same_ideal(&j));
        assert!(truncate_ideal(&j, 1).is_none());
        let k = mono(r, &[&[3, 0], &[2, 1], &[0, 4]]);
        assert!(truncate_ideal(&k, 3).unwrap().same_ideal(&mono(r, &[&[3, 0], &[2, 1]])));
    }

    #[test]
    fn non_monomial_picks_up_degree_three_members() {
        use crate::poly::Polynomial;
        let r = Ring::new(2, Default::default()).unwrap();
        let x = Polynomial::var(r, MonomialOrder::Grevlex, 0);
        let y = Polynomial::var(r, MonomialOrder::Grevlex, 1);
        let i = Ideal::new(r, vec![&(&x * &x) + &(&y * &y), &x * &y]).unwrap();
        let t2 = truncate_ideal(&i, 2).unwrap();
        assert!(t2.same_ideal(&i));
        let cube = y.pow(3);
        assert!(truncate_ideal(&i, 3).unwrap().contains(&cube));
    }
}
