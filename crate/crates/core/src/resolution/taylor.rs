//! The Taylor complex of a list of monomials and its reduction to the
//! minimal free resolution by cancelling unit entries.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::poly::{Monomial, PrimeField};

use super::betti::{BettiTable, Subject};

/// Subsets are stored as bit masks, so the generator count is bounded.
pub const MAX_TAYLOR_GENERATORS: usize = 24;

/// A basis element `e_Λ` of the Taylor complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Face {
    pub mask: u32,
    /// `u_Λ = lcm(u_i : i ∈ Λ)`
    pub lcm: Monomial,
}

/// One entry `sign * (u_Λ / u_{Λ∖j}) e_{Λ∖j}` of a differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub target: usize,
    pub sign: i8,
    pub factor: Monomial,
}

#[derive(Clone, Debug)]
pub struct TaylorComplex {
    gens: Vec<Monomial>,
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<u32, usize>>,
}

impl TaylorComplex {
    pub fn new(gens: &[Monomial]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidArgument("Taylor complex needs at least one monomial".into()));
        }
        if gens.len() > MAX_TAYLOR_GENERATORS {
            return Err(Error::InvalidArgument(format!(
                "Taylor complex limited to {MAX_TAYLOR_GENERATORS} generators, got {}",
                gens.len()
            )));
        }
        let r = gens.len();
        let nvars = gens[0].nvars();
        let mut faces: Vec<Vec<Face>> = vec![Vec::new(); r + 1];
        // lcm of each mask, built from the mask without its top bit
        let mut lcms: Vec<Monomial> = vec![Monomial::one(nvars); 1 << r];
        for mask in 1u32..(1 << r) {
            let top = 31 - mask.leading_zeros();
            lcms[mask as usize] = lcms[(mask ^ (1 << top)) as usize].lcm(&gens[top as usize]);
        }
        for mask in 0u32..(1 << r) {
            faces[mask.count_ones() as usize].push(Face { mask, lcm: lcms[mask as usize] });
        }
        let index = faces
            .iter()
            .map(|level| level.iter().enumerate().map(|(k, f)| (f.mask, k)).collect())
            .collect();
        Ok(TaylorComplex { gens: gens.to_vec(), faces, index })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Largest homological degree `r`.
    pub fn length(&self) -> usize {
        self.gens.len()
    }

    pub fn faces(&self, i: usize) -> &[Face] {
        &self.faces[i]
    }

    /// `rank F_i = C(r, i)`.
    pub fn rank(&self, i: usize) -> usize {
        self.faces.get(i).map_or(0, |f| f.len())
    }

    /// `d_i(e_Λ) = sum_{j ∈ Λ} sign(j, Λ) (u_Λ / u_{Λ∖j}) e_{Λ∖j}` with
    /// `sign(j, Λ) = (-1)^{s+1}` for `j` the `s`-th element of `Λ`.
    pub fn differential(&self, i: usize, k: usize) -> Vec<Entry> {
        let face = self.faces[i][k];
        let mut out = Vec::with_capacity(i);
        let mut s = 0;
        for j in 0..self.gens.len() {
            if face.mask & (1 << j) == 0 {
                continue;
            }
            s += 1;
            let sub = face.mask ^ (1 << j);
            let target = self.index[i - 1][&sub];
            let factor = face.lcm.div(&self.faces[i - 1][target].lcm).expect("lcm of a subset divides");
            out.push(Entry { target, sign: if s % 2 == 1 { 1 } else { -1 }, factor });
        }
        out
    }

    /// Checks `d_{i-1} ∘ d_i = 0` for every `i`: each composite entry is a
    /// single monomial times an integer that must vanish.
    pub fn is_complex(&self) -> bool {
        for i in 2..=self.length() {
            for k in 0..self.rank(i) {
                let mut acc: HashMap<usize, (i64, Monomial)> = HashMap::new();
                for e in self.differential(i, k) {
                    for e2 in self.differential(i - 1, e.target) {
                        let m = e.factor.mul(&e2.factor);
                        let slot = acc.entry(e2.target).or_insert((0, m));
                        if slot.1 != m {
                            return false;
                        }
                        slot.0 += (e.sign * e2.sign) as i64;
                    }
                }
                if acc.values().any(|&(c, _)| c != 0) {
                    return false;
                }
            }
        }
        true
    }
}

/// Cancels unit entries (equal multidegrees, nonzero scalar) of the Taylor
/// complex one pivot at a time until none remain. The surviving basis
/// elements give the multigraded Betti numbers of `S/(u_1, ..., u_r)`,
/// returned coarsened to total degree.
pub fn minimize_taylor(complex: &TaylorComplex, field: PrimeField) -> BettiTable {
    let r = complex.length();
    // entries are scalars; the monomial factor is implied by the multidegrees
    let mdeg: Vec<Vec<Monomial>> = (0..=r).map(|i| complex.faces(i).iter().map(|f| f.lcm).collect()).collect();
    let mut alive: Vec<Vec<bool>> = (0..=r).map(|i| vec![true; complex.rank(i)]).collect();
    // rows[i][k]: d_i of element k of level i, keyed by target in level i-1
    let mut rows: Vec<Vec<BTreeMap<usize, u32>>> = vec![Vec::new(); r + 1];
    // cols[i][t]: elements of level i whose d_i hits t
    let mut cols: Vec<Vec<BTreeSet<usize>>> = vec![Vec::new(); r + 1];
    for i in 1..=r {
        cols[i] = vec![BTreeSet::new(); complex.rank(i - 1)];
        rows[i] = (0..complex.rank(i))
            .map(|k| {
                let mut row = BTreeMap::new();
                for e in complex.differential(i, k) {
                    let c = if e.sign > 0 { 1 } else { field.neg(1) };
                    row.insert(e.target, c);
                    cols[i][e.target].insert(k);
                }
                row
            })
            .collect();
    }

    loop {
        let mut pivot = None;
        'search: for i in 1..=r {
            for k in 0..rows[i].len() {
                if !alive[i][k] {
                    continue;
                }
                for (&t, &c) in &rows[i][k] {
                    if c != 0 && mdeg[i][k] == mdeg[i - 1][t] {
                        pivot = Some((i, k, t));
                        break 'search;
                    }
                }
            }
        }
        let Some((i, a, b)) = pivot else { break };
        let phi_inv = field.inv(rows[i][a][&b]);
        let pivot_row: Vec<(usize, u32)> = rows[i][a].iter().map(|(&t, &c)| (t, c)).collect();
        let others: Vec<usize> = cols[i][b].iter().copied().filter(|&s| s != a).collect();
        for s in others {
            let factor = field.mul(rows[i][s][&b], phi_inv);
            for &(t, c) in &pivot_row {
                let cur = rows[i][s].get(&t).copied().unwrap_or(0);
                let v = field.sub(cur, field.mul(factor, c));
                if v == 0 {
                    rows[i][s].remove(&t);
                    cols[i][t].remove(&s);
                } else {
                    rows[i][s].insert(t, v);
                    cols[i][t].insert(s);
                }
            }
            debug_assert!(!rows[i][s].contains_key(&b));
        }
        // drop a from level i
        for &(t, _) in &pivot_row {
            cols[i][t].remove(&a);
        }
        rows[i][a].clear();
        alive[i][a] = false;
        if i < r {
            let hitting: Vec<usize> = cols[i + 1][a].iter().copied().collect();
            for rho in hitting {
                rows[i + 1][rho].remove(&a);
            }
            cols[i + 1][a].clear();
        }
        // drop b from level i - 1
        if i >= 2 {
            let row_b: Vec<usize> = rows[i - 1][b].keys().copied().collect();
            for t in row_b {
                cols[i - 1][t].remove(&b);
            }
            rows[i - 1][b].clear();
        }
        cols[i][b].clear();
        alive[i - 1][b] = false;
    }

    let mut table = BettiTable::new(Subject::Quotient);
    for i in 0..=r {
        for (k, &live) in alive[i].iter().enumerate() {
            if live {
                table.add(i, mdeg[i][k].degree(), 1);
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn two_generator_differential() {
        // (xy, yz): u_12 = xyz, d(e_12) = +x e_2 - z e_1
        let t = TaylorComplex::new(&[m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap();
        assert_eq!((t.rank(0), t.rank(1), t.rank(2)), (1, 2, 1));
        let d = t.differential(2, 0);
        let e1 = t.index[1][&0b01];
        let e2 = t.index[1][&0b10];
        assert!(d.contains(&Entry { target: e2, sign: 1, factor: m(&[1, 0, 0]) }));
        assert!(d.contains(&Entry { target: e1, sign: -1, factor: m(&[0, 0, 1]) }));
        assert!(t.is_complex());
    }

    #[test]
    fn koszul_on_variables() {
        let t = TaylorComplex::new(&[m(&[1, 0]), m(&[0, 1])]).unwrap();
        let d = t.differential(2, 0);
        assert_eq!(d.len(), 2);
        assert!(d.contains(&Entry { target: t.index[1][&0b10], sign: 1, factor: m(&[1, 0]) }));
        assert!(d.contains(&Entry { target: t.index[1][&0b01], sign: -1, factor: m(&[0, 1]) }));
        let vars = TaylorComplex::new(&[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]).unwrap();
        let b = minimize_taylor(&vars, f());
        for i in 0..=3u32 {
            assert_eq!(b.get(i as usize, i), [1, 3, 3, 1][i as usize]);
        }
    }

    #[test]
    fn ranks_are_binomial() {
        let gens: Vec<Monomial> = (0..5).map(|k| m(&[k, 4 - k])).collect();
        let t = TaylorComplex::new(&gens).unwrap();
        for i in 0..=5 {
            assert_eq!(t.rank(i) as u64, crate::poly::binomial(5, i as u64));
        }
        assert!(t.is_complex());
        assert!(TaylorComplex::new(&[]).is_err());
    }

    #[test]
    fn minimization_examples() {
        let b = minimize_taylor(&TaylorComplex::new(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]).unwrap(), f());
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(b.get(1, 2), 3);
        assert_eq!(b.get(2, 3), 2);
        assert_eq!(b.pd(), 2);
        assert_eq!(b.entries().count(), 3);
        // x^3 is redundant
        let b = minimize_taylor(&TaylorComplex::new(&[m(&[2]), m(&[3])]).unwrap(), f());
        assert_eq!(b.beta(1), 1);
        assert_eq!(b.pd(), 1);
    }
}
