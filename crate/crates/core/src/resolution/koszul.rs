//! Graded Betti numbers as Koszul homology: `beta_{i,j}(S/I)` is the
//! dimension of `H_i(K(x_1..x_N) ⊗ S/I)_j`.
//!
//! Two routes are provided. [`koszul_betti`] works for any homogeneous ideal
//! and realizes the graded pieces of `S/I` by standard monomials of the
//! grevlex initial ideal. [`koszul_betti_monomial`] is the fine-graded
//! version for monomial ideals, one small complex per lcm-lattice element.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{minimalize_monomials, monomial_in, GBasis, Ideal};
use crate::linalg::{rank, SparseRow};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial, PrimeField};

use super::betti::{BettiTable, Subject};
use super::hilbert::{hilbert_function, hilbert_numerator, standard_monomials};

/// Upper bounds on internal degrees: `caps[i] = Some(c)` means
/// `beta_{i,j} = 0` for `j > c`; `None` means row `i` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCaps(pub Vec<Option<u32>>);

impl DegreeCaps {
    /// `t_i` of a table known to dominate the one being computed.
    pub fn from_table(t: &BettiTable) -> Self {
        DegreeCaps((0..t.length()).map(|i| t.t(i)).collect())
    }

    /// Bounds for a monomial ideal read off the Taylor complex: row `i`
    /// lives in degrees at most the sum of the `i` largest generator degrees.
    pub fn a_priori_monomial(gens: &[Monomial]) -> Self {
        let mins = minimalize_monomials(gens);
        let mut degs: Vec<u32> = mins.iter().map(|m| m.degree()).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        let total = mins.iter().fold(Monomial::one(mins.first().map_or(0, |m| m.nvars())), |a, b| a.lcm(b)).degree();
        let nvars = mins.first().map_or(0, |m| m.nvars());
        let len = mins.len().min(nvars);
        let mut caps = Vec::with_capacity(len + 1);
        let mut acc = 0;
        caps.push(Some(0));
        for d in degs.iter().take(len) {
            acc += d;
            caps.push(Some(acc.min(total)));
        }
        DegreeCaps(caps)
    }

    pub fn get(&self, i: usize) -> Option<u32> {
        self.0.get(i).copied().flatten()
    }
}

/// Betti table of `S/I` with caps taken from the fine-graded table of the
/// grevlex initial ideal (semicontinuity makes them valid).
pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    let field = ideal.ring().field();
    if ideal.is_monomial() {
        return koszul_betti_monomial(&ideal.monomials()?, field);
    }
    let gb = ideal.groebner(MonomialOrder::Grevlex);
    let initial = koszul_betti_monomial(&gb.leading_monomials(), field)?;
    koszul_betti_with_basis(ideal, &gb, &DegreeCaps::from_table(&initial))
}

/// Normal-form Koszul homology for a homogeneous ideal, computing
/// `beta_{i,j}(S/I)` for `j <= caps[i]`. The result is checked against the
/// Hilbert series numerator of `S/I`.
pub fn koszul_betti(ideal: &Ideal, caps: &DegreeCaps) -> Result<BettiTable> {
    let gb = ideal.groebner(MonomialOrder::Grevlex);
    koszul_betti_with_basis(ideal, &gb, caps)
}

pub(crate) fn koszul_betti_with_basis(ideal: &Ideal, gb: &GBasis, caps: &DegreeCaps) -> Result<BettiTable> {
    debug_assert_eq!(gb.order(), MonomialOrder::Grevlex);
    let ring = ideal.ring();
    let field = ring.field();
    if ideal.is_unit() {
        return Ok(BettiTable::new(Subject::Quotient));
    }
    let lms = gb.leading_monomials();
    // Trailing variables missing from every grevlex leading monomial form a
    // regular sequence on S/I, and setting them to zero keeps a Gröbner
    // basis with the same leading terms. Betti numbers are unchanged.
    let m = lms.iter().flat_map(|l| l.support().collect::<Vec<_>>()).max().map_or(1, |v| v + 1);
    let basis: Vec<Polynomial> = gb
        .elements()
        .iter()
        .map(|g| g.restrict_to_first(m))
        .collect::<Result<_>>()?;
    let lms: Vec<Monomial> = lms.iter().map(|l| l.resized(m)).collect();

    let rows: Vec<(usize, u32)> = (0..=m).filter_map(|i| caps.get(i).map(|c| (i, c))).filter(|&(i, c)| c as usize >= i).collect();
    if rows.is_empty() {
        return Ok(BettiTable::new(Subject::Quotient));
    }
    let max_q = rows.iter().map(|&(i, c)| c - i as u32 + 1).max().unwrap_or(1);
    let std = standard_monomials(&lms, m, max_q);
    let std_index: Vec<HashMap<Monomial, u32>> = std
        .iter()
        .map(|v| v.iter().enumerate().map(|(k, mo)| (*mo, k as u32)).collect())
        .collect();
    let nf = NormalForms::build(&basis, &lms, &std_index, m, max_q, field);
    let subsets = Subsets::new(m);

    let mut needed: HashSet<(usize, u32)> = HashSet::new();
    for &(i, c) in &rows {
        for j in i as u32..=c {
            if i >= 1 {
                needed.insert((i, j));
            }
            if i < m {
                needed.insert((i + 1, j));
            }
        }
    }
    let mut needed: Vec<(usize, u32)> = needed.into_iter().collect();
    needed.sort_unstable();
    let ranks: HashMap<(usize, u32), usize> = needed
        .par_iter()
        .map(|&(i, j)| ((i, j), differential_rank(i, j, &subsets, &std, &nf, field)))
        .collect();

    let mut table = BettiTable::new(Subject::Quotient);
    for &(i, c) in &rows {
        for j in i as u32..=c {
            let q = (j - i as u32) as usize;
            let dim = subsets.of_size(i).len() * std.get(q).map_or(0, |v| v.len());
            let r_in = if i >= 1 { ranks[&(i, j)] } else { 0 };
            let r_out = if i < m { ranks[&(i + 1, j)] } else { 0 };
            table.set(i, j, (dim - r_in - r_out) as u64);
        }
    }

    let top = rows.iter().map(|&(_, c)| c).max().unwrap_or(0) + m as u32;
    let numerator = hilbert_numerator(&hilbert_function(&lms, m, top), m);
    check_euler(&table, &numerator)?;
    Ok(table)
}

fn check_euler(table: &BettiTable, numerator: &[i64]) -> Result<()> {
    let euler = table.euler_coefficients();
    for (j, &h) in numerator.iter().enumerate() {
        let e = euler.get(&(j as u32)).copied().unwrap_or(0);
        if e != h {
            return Err(Error::IncompleteTable { degree: j as u32, table: e, hilbert: h });
        }
    }
    if let Some((&j, &e)) = euler.iter().find(|(&j, &e)| j as usize >= numerator.len() && e != 0) {
        return Err(Error::IncompleteTable { degree: j, table: e, hilbert: 0 });
    }
    Ok(())
}

/// Subsets of `{0..m}` grouped by size, with lookup from mask to position.
struct Subsets {
    by_size: Vec<Vec<u32>>,
    position: HashMap<u32, usize>,
}

impl Subsets {
    fn new(m: usize) -> Self {
        let mut by_size = vec![Vec::new(); m + 1];
        let mut position = HashMap::new();
        for mask in 0u32..(1 << m) {
            let s = mask.count_ones() as usize;
            position.insert(mask, by_size[s].len());
            by_size[s].push(mask);
        }
        Subsets { by_size, position }
    }

    fn of_size(&self, i: usize) -> &[u32] {
        self.by_size.get(i).map_or(&[], |v| v.as_slice())
    }
}

/// Normal forms of every monomial of each degree `1..=max_q`, as sparse
/// vectors over the standard monomials of that degree.
struct NormalForms {
    by_degree: Vec<HashMap<Monomial, Vec<(u32, u32)>>>,
}

impl NormalForms {
    fn build(
        basis: &[Polynomial],
        lms: &[Monomial],
        std_index: &[HashMap<Monomial, u32>],
        m: usize,
        max_q: u32,
        field: PrimeField,
    ) -> Self {
        let ord = MonomialOrder::Grevlex;
        let mut by_degree = vec![HashMap::new(); max_q as usize + 1];
        for d in 1..=max_q as usize {
            let width = std_index[d].len();
            if width == 0 {
                continue;
            }
            let mut all = monomials_of_degree(m, d as u32);
            all.sort_unstable_by(|a, b| ord.cmp(a, b));
            let mut table: HashMap<Monomial, Vec<(u32, u32)>> = HashMap::with_capacity(all.len());
            let mut acc = vec![0u32; width];
            for w in all {
                if let Some(&k) = std_index[d].get(&w) {
                    table.insert(w, vec![(k, 1)]);
                    continue;
                }
                debug_assert!(monomial_in(lms, &w));
                let g = basis
                    .iter()
                    .find(|g| g.lm().divides(&w))
                    .expect("nonstandard monomial has a reducer");
                let q = w.div(&g.lm()).expect("divides");
                let mut touched = Vec::new();
                for t in &g.terms()[1..] {
                    let u = t.monomial.mul(&q);
                    if let Some(v) = table.get(&u) {
                        let c = field.neg(t.coeff);
                        for &(k, x) in v {
                            if acc[k as usize] == 0 {
                                touched.push(k);
                            }
                            acc[k as usize] = field.add(acc[k as usize], field.mul(c, x));
                        }
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let vec: Vec<(u32, u32)> = touched
                    .into_iter()
                    .filter_map(|k| {
                        let v = std::mem::take(&mut acc[k as usize]);
                        (v != 0).then_some((k, v))
                    })
                    .collect();
                table.insert(w, vec);
            }
            by_degree[d] = table;
        }
        NormalForms { by_degree }
    }

    fn get(&self, m: &Monomial) -> &[(u32, u32)] {
        self.by_degree
            .get(m.degree() as usize)
            .and_then(|t| t.get(m))
            .map_or(&[], |v| v.as_slice())
    }
}

/// Rank of `d_i : Λ^i ⊗ (S/I)_{j-i} -> Λ^{i-1} ⊗ (S/I)_{j-i+1}`.
fn differential_rank(
    i: usize,
    j: u32,
    subsets: &Subsets,
    std: &[Vec<Monomial>],
    nf: &NormalForms,
    field: PrimeField,
) -> usize {
    if i == 0 || (j as usize) < i {
        return 0;
    }
    let q = (j - i as u32) as usize;
    let (Some(src), Some(dst)) = (std.get(q), std.get(q + 1)) else { return 0 };
    if src.is_empty() || dst.is_empty() {
        return 0;
    }
    let width = dst.len();
    let ncols = subsets.of_size(i - 1).len() * width;
    let mut rows: Vec<SparseRow> = Vec::with_capacity(subsets.of_size(i).len() * src.len());
    let neg_one = field.neg(1);
    for &mask in subsets.of_size(i) {
        for b in src {
            let mut row = Vec::new();
            let mut s = 0;
            for a in 0..32 {
                if mask & (1 << a) == 0 {
                    continue;
                }
                let sign = if s % 2 == 0 { 1 } else { neg_one };
                s += 1;
                let face = subsets.position[&(mask ^ (1 << a))];
                let mut w = *b;
                w.set_exp(a, w.exp(a) + 1);
                for &(k, v) in nf.get(&w) {
                    row.push(((face * width) as u32 + k, field.mul(sign, v)));
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rank(field, ncols, &rows)
}

/// Fine-graded Koszul homology of `S/J` for a monomial ideal `J`. Only
/// multidegrees in the lcm lattice of the minimal generators can carry
/// Betti numbers, so each of those is examined separately.
pub fn koszul_betti_monomial(gens: &[Monomial], field: PrimeField) -> Result<BettiTable> {
    const LATTICE_LIMIT: usize = 4_000_000;
    let mins = minimalize_monomials(gens);
    let mut table = BettiTable::new(Subject::Quotient);
    if mins.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    if mins.iter().any(|m| m.is_one()) {
        return Ok(table);
    }
    let nvars = mins[0].nvars();
    let mut lattice: HashSet<Monomial> = HashSet::new();
    lattice.insert(Monomial::one(nvars));
    for g in &mins {
        let new: Vec<Monomial> = lattice.iter().map(|l| l.lcm(g)).collect();
        lattice.extend(new);
        if lattice.len() > LATTICE_LIMIT {
            return Err(Error::InvalidArgument("lcm lattice too large".into()));
        }
    }
    let mut points: Vec<Monomial> = lattice.into_iter().collect();
    points.sort_unstable();
    let strands: Vec<(u32, Vec<u64>)> = points
        .par_iter()
        .map(|a| (a.degree(), multidegree_strand(a, &mins, field)))
        .collect();
    for (deg, betti) in strands {
        for (i, b) in betti.into_iter().enumerate() {
            table.add(i, deg, b);
        }
    }
    Ok(table)
}

/// Betti numbers in multidegree `a`: the Koszul strand has basis
/// `e_F ⊗ x^{a - F}` for `F ⊆ supp(a)` with `x^{a-F}` standard.
fn multidegree_strand(a: &Monomial, mins: &[Monomial], field: PrimeField) -> Vec<u64> {
    let supp: Vec<usize> = a.support().collect();
    let s = supp.len();
    let standard = |mask: u32| {
        let mut w = *a;
        for (bit, &v) in supp.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                w.set_exp(v, w.exp(v) - 1);
            }
        }
        !monomial_in(mins, &w)
    };
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1 << s) {
        if standard(mask) {
            levels[mask.count_ones() as usize].push(mask);
        }
    }
    let position: Vec<HashMap<u32, usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, &mk)| (mk, k)).collect())
        .collect();
    let neg_one = field.neg(1);
    let ranks: Vec<usize> = (0..=s + 1)
        .map(|i| {
            if i == 0 || i > s || levels[i].is_empty() || levels[i - 1].is_empty() {
                return 0;
            }
            let rows: Vec<SparseRow> = levels[i]
                .iter()
                .map(|&mask| {
                    let mut row = Vec::new();
                    let mut k = 0;
                    for bit in 0..s {
                        if mask & (1 << bit) == 0 {
                            continue;
                        }
                        let sign = if k % 2 == 0 { 1 } else { neg_one };
                        k += 1;
                        if let Some(&col) = position[i - 1].get(&(mask ^ (1 << bit))) {
                            row.push((col as u32, sign));
                        }
                    }
                    row
                })
                .collect();
            rank(field, levels[i - 1].len(), &rows)
        })
        .collect();
    (0..=s)
        .map(|i| (levels[i].len() - ranks[i] - ranks[i + 1]) as u64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::resolution::taylor::{minimize_taylor, TaylorComplex};
    use proptest::prelude::*;

    fn ms(e: &[&[u16]]) -> Vec<Monomial> {
        e.iter().map(|x| Monomial::from_exponents(x)).collect()
    }

    fn var(r: Ring, i: usize) -> Polynomial {
        Polynomial::var(r, MonomialOrder::Grevlex, i)
    }

    #[test]
    fn regular_sequence_of_squares() {
        let r = Ring::new(2, PrimeField::default()).unwrap();
        let i = Ideal::from_monomials(r, &ms(&[&[2, 0], &[0, 2]])).unwrap();
        let t = betti_table(&i).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.entries().filter(|e| e.0 >= 1).count(), 2);
        let g = koszul_betti(&i, &DegreeCaps(vec![Some(0), Some(4), Some(6)])).unwrap();
        assert_eq!(g, t);
    }

    #[test]
    fn agrees_with_taylor_on_square_of_maximal_ideal() {
        let f = PrimeField::default();
        let g = ms(&[&[2, 0], &[1, 1], &[0, 2]]);
        let taylor = minimize_taylor(&TaylorComplex::new(&g).unwrap(), f);
        assert_eq!(koszul_betti_monomial(&g, f).unwrap(), taylor);
        let r = Ring::new(2, f).unwrap();
        let graded = koszul_betti(&Ideal::from_monomials(r, &g).unwrap(), &DegreeCaps(vec![Some(0), Some(2), Some(3)])).unwrap();
        assert_eq!(graded, taylor);
    }

    #[test]
    fn semicontinuity_for_a_deformation() {
        let r = Ring::new(2, PrimeField::default()).unwrap();
        let (x, y) = (var(r, 0), var(r, 1));
        let i = Ideal::new(r, vec![&(&x * &x) + &(&y * &y), &x * &y]).unwrap();
        let t = betti_table(&i).unwrap();
        let init = betti_table(&i.initial_ideal(MonomialOrder::Grevlex)).unwrap();
        assert!(t.entrywise_le(&init));
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
    }

    #[test]
    fn trailing_free_variables_do_not_change_the_table() {
        let r3 = Ring::new(3, PrimeField::default()).unwrap();
        let (x, y, z) = (var(r3, 0), var(r3, 1), var(r3, 2));
        let i = Ideal::new(r3, vec![&(&x * &y) - &(&z * &z), &(&x * &x) + &(&y * &z)]).unwrap();
        let t = betti_table(&i).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.pd(), 2);
    }

    #[test]
    fn insufficient_caps_are_detected() {
        let r = Ring::new(2, PrimeField::default()).unwrap();
        let i = Ideal::from_monomials(r, &ms(&[&[2, 0], &[0, 2]])).unwrap();
        let err = koszul_betti(&i, &DegreeCaps(vec![Some(0), Some(2), Some(3)])).unwrap_err();
        assert!(matches!(err, Error::IncompleteTable { .. }));
    }

    #[test]
    fn unit_ideal_has_zero_quotient() {
        let r = Ring::new(2, PrimeField::default()).unwrap();
        assert!(betti_table(&Ideal::unit(r)).unwrap().is_zero());
    }

    #[test]
    fn a_priori_caps_bound_taylor() {
        let g = ms(&[&[2, 0, 0], &[1, 1, 0], &[0, 1, 3]]);
        let caps = DegreeCaps::a_priori_monomial(&g);
        assert_eq!(caps.0, vec![Some(0), Some(4), Some(6), Some(6)]);
    }

    fn arb_monomials() -> impl Strategy<Value = Vec<Monomial>> {
        prop::collection::vec(prop::collection::vec(0u16..3, 3), 1..5).prop_filter_map("nonconstant", |v| {
            let ms: Vec<Monomial> = v.iter().map(|e| Monomial::from_exponents(e)).filter(|m| !m.is_one()).collect();
            (!ms.is_empty()).then_some(ms)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn monomial_routes_agree(g in arb_monomials()) {
            let f = PrimeField::default();
            let fine = koszul_betti_monomial(&g, f).unwrap();
            let taylor = minimize_taylor(&TaylorComplex::new(&minimalize_monomials(&g)).unwrap(), f);
            prop_assert_eq!(&fine, &taylor);
            let r = Ring::new(3, f).unwrap();
            let graded = koszul_betti(&Ideal::from_monomials(r, &g).unwrap(), &DegreeCaps::a_priori_monomial(&g)).unwrap();
            prop_assert_eq!(&graded, &taylor);
        }
    }
}
