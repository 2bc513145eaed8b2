//! Hilbert functions of `S/J` for monomial `J`, by counting standard monomials.

use crate::groebner::monomial_in;
use crate::poly::Monomial;

/// Standard monomials (those outside the monomial ideal generated by `gens`)
/// of each degree `0..=max_degree`, each degree in lex-descending order.
pub fn standard_monomials(gens: &[Monomial], nvars: usize, max_degree: u32) -> Vec<Vec<Monomial>> {
    let mut out: Vec<Vec<Monomial>> = Vec::with_capacity(max_degree as usize + 1);
    let one = Monomial::one(nvars);
    out.push(if monomial_in(gens, &one) { vec![] } else { vec![one] });
    for d in 1..=max_degree as usize {
        let mut next = Vec::new();
        // x_i * s with i <= first variable of s enumerates each monomial once
        for s in &out[d - 1] {
            let first = (0..nvars).find(|&k| s.exp(k) > 0).unwrap_or(nvars - 1);
            for i in 0..=first {
                let mut m = *s;
                m.set_exp(i, m.exp(i) + 1);
                if !monomial_in(gens, &m) {
                    next.push(m);
                }
            }
        }
        next.sort_unstable_by(|a, b| b.exponents().cmp(a.exponents()));
        out.push(next);
    }
    out
}

/// `dim_k (S/J)_d` for `d = 0..=max_degree`.
pub fn hilbert_function(gens: &[Monomial], nvars: usize, max_degree: u32) -> Vec<u64> {
    standard_monomials(gens, nvars, max_degree).iter().map(|v| v.len() as u64).collect()
}

/// Coefficients `0..=max_degree` of `K(t) = HS(t) (1 - t)^nvars`.
pub fn hilbert_numerator(hf: &[u64], nvars: usize) -> Vec<i64> {
    let mut k: Vec<i64> = hf.iter().map(|&v| v as i64).collect();
    for _ in 0..nvars {
        for d in (1..k.len()).rev() {
            k[d] -= k[d - 1];
        }
    }
    k
}

/// Number of factors `(1 - t)` dividing the numerator polynomial `k`.
pub fn multiplicity_of_one(k: &[i64]) -> usize {
    let mut poly: Vec<i64> = k.to_vec();
    while poly.last() == Some(&0) {
        poly.pop();
    }
    let mut count = 0;
    while !poly.is_empty() && poly.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q_d = sum_{e <= d} p_e, negated form
        let mut q = Vec::with_capacity(poly.len() - 1);
        let mut acc = 0;
        for &c in &poly[..poly.len() - 1] {
            acc += c;
            q.push(acc);
        }
        poly = q;
        while poly.last() == Some(&0) {
            poly.pop();
        }
        count += 1;
    }
    count
}
