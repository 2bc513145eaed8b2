use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::monomial::Monomial;

/// Monomial orders with `x_1 > x_2 > ... > x_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    /// Graded reverse lexicographic ("revlex").
    Grevlex,
    /// Block order for colon and intersection computations: compares the
    /// exponent of the last variable first, then grevlex on the others.
    /// The last variable carries degree 0 for pair selection.
    EliminateLast,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::EliminateLast => {
                let n = a.nvars();
                a.exp(n - 1)
                    .cmp(&b.exp(n - 1))
                    .then_with(|| grevlex(&a.exponents()[..n - 1], &b.exponents()[..n - 1]))
            }
        }
    }

    /// Degree used for selecting S-pairs.
    #[inline]
    pub fn selection_degree(&self, m: &Monomial) -> u32 {
        match self {
            MonomialOrder::EliminateLast => m.degree() - m.exp(m.nvars() - 1) as u32,
            _ => m.degree(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::EliminateLast => "eliminate-last",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" | "revlex" => Ok(MonomialOrder::Grevlex),
            other => Err(Error::InvalidArgument(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// Checked comparison of two monomials of the same ring.
pub fn compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch(format!(
            "monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(ord.cmp(a, b))
}

#[inline]
fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let g = MonomialOrder::Grevlex;
        assert_eq!(g.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(g.cmp(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        // xz < y^2 in three variables: last nonzero of (1,-2,1) is positive
        assert_eq!(g.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // but xz > y^2 in lex
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(compare(&m(&[1]), &m(&[1, 0]), MonomialOrder::Lex).is_err());
    }

    #[test]
    fn elimination_prefers_last_variable() {
        let e = MonomialOrder::EliminateLast;
        assert_eq!(e.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(e.selection_degree(&m(&[1, 2, 3])), 3);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, 4).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn orders_are_transitive_and_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for ord in [MonomialOrder::Lex, MonomialOrder::Grevlex, MonomialOrder::EliminateLast] {
                if ord.cmp(&a, &b) == Ordering::Less && ord.cmp(&b, &c) == Ordering::Less {
                    prop_assert_eq!(ord.cmp(&a, &c), Ordering::Less);
                }
                prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
                if a.divides(&b) && a != b {
                    prop_assert_eq!(ord.cmp(&a, &b), Ordering::Less);
                }
            }
        }
    }
}
