//! Rank of sparse matrices over F_p.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::poly::PrimeField;

/// Sparse row: `(column, value)` pairs with nonzero values, any order.
pub type SparseRow = Vec<(u32, u32)>;

/// Incremental row echelon form. Pivot rows are stored normalized to a
/// leading 1 and contain only columns at or after their pivot.
pub struct RowReducer {
    field: PrimeField,
    pivots: Vec<Option<Vec<(u32, u32)>>>,
    acc: Vec<u32>,
    marked: Vec<bool>,
    rank: usize,
}

impl RowReducer {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        RowReducer {
            field,
            pivots: vec![None; ncols],
            acc: vec![0; ncols],
            marked: vec![false; ncols],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: &[(u32, u32)]) -> bool {
        let f = self.field;
        let mut heap = BinaryHeap::new();
        let mut touched = Vec::with_capacity(row.len() * 2);
        for &(c, v) in row {
            let c = c as usize;
            self.acc[c] = f.add(self.acc[c], v);
            if !self.marked[c] {
                self.marked[c] = true;
                touched.push(c);
                heap.push(Reverse(c));
            }
        }
        let mut grew = false;
        while let Some(Reverse(c)) = heap.pop() {
            let v = self.acc[c];
            if v == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(p) => {
                    for &(cc, pv) in p {
                        let cc = cc as usize;
                        self.acc[cc] = f.sub(self.acc[cc], f.mul(v, pv));
                        if !self.marked[cc] {
                            self.marked[cc] = true;
                            touched.push(cc);
                            heap.push(Reverse(cc));
                        }
                    }
                    debug_assert_eq!(self.acc[c], 0);
                }
                None => {
                    let inv = f.inv(v);
                    let mut new_row: Vec<(u32, u32)> = vec![(c as u32, 1)];
                    let mut rest: Vec<usize> = heap.drain().map(|Reverse(x)| x).collect();
                    rest.sort_unstable();
                    for cc in rest {
                        if self.acc[cc] != 0 {
                            new_row.push((cc as u32, f.mul(self.acc[cc], inv)));
                        }
                    }
                    self.pivots[c] = Some(new_row);
                    self.rank += 1;
                    grew = true;
                    break;
                }
            }
        }
        for c in touched {
            self.acc[c] = 0;
            self.marked[c] = false;
        }
        grew
    }
}

pub fn rank(field: PrimeField, ncols: usize, rows: &[SparseRow]) -> usize {
    if ncols == 0 || rows.is_empty() {
        return 0;
    }
    let mut r = RowReducer::new(field, ncols);
    for row in rows {
        r.insert(row);
        if r.rank() == ncols {
            break;
        }
    }
    r.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Dense Gaussian elimination used only as a test oracle.
    fn dense_rank(f: PrimeField, mut m: Vec<Vec<u32>>) -> usize {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, p);
            let inv = f.inv(m[r][c]);
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let k = f.mul(m[i][c], inv);
                    for cc in 0..cols {
                        m[i][cc] = f.sub(m[i][cc], f.mul(k, m[r][cc]));
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_ranks() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(rank(f, 2, &[vec![(0, 1), (1, 1)], vec![(0, 2), (1, 2)]]), 1);
        assert_eq!(rank(f, 2, &[vec![(0, 1)], vec![(1, 3)]]), 2);
        assert_eq!(rank(f, 3, &[]), 0);
    }

    proptest! {
        #[test]
        fn matches_dense_elimination(entries in proptest::collection::vec(proptest::collection::vec(0u32..5, 6), 0..8)) {
            let f = PrimeField::new(5).unwrap();
            let sparse: Vec<SparseRow> = entries
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c as u32, v)).collect())
                .collect();
            prop_assert_eq!(rank(f, 6, &sparse), dense_rank(f, entries.clone()));
        }
    }
}
