use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which module the table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    /// `S/I`
    Quotient,
    /// `I`
    Ideal,
}

/// Graded Betti numbers `beta_{i,j}`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiTable {
    subject: Subject,
    entries: BTreeMap<(usize, u32), u64>,
}

/// `pd`, `reg` and the `t_i` of a table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedInvariants {
    pub pd: usize,
    pub reg: i64,
    /// `t[i] = max{ j : beta_{i,j} != 0 }`, `None` where row `i` vanishes.
    pub t: Vec<Option<u32>>,
}

impl BettiTable {
    pub fn new(subject: Subject) -> Self {
        BettiTable { subject, entries: BTreeMap::new() }
    }

    /// Table of `S` itself (the quotient by the zero ideal).
    pub fn of_ring() -> Self {
        let mut t = BettiTable::new(Subject::Quotient);
        t.set(0, 0, 1);
        t
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn set(&mut self, i: usize, j: u32, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add(&mut self, i: usize, j: u32, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(i, j, beta_{i,j})` in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `beta_i`, the total rank in homological degree `i`.
    pub fn beta(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, &b)| b).sum()
    }

    /// `beta_{i, <= j}`.
    pub fn beta_upto(&self, i: usize, j: u32) -> u64 {
        self.entries.range((i, 0)..=(i, j)).map(|(_, &b)| b).sum()
    }

    pub fn t(&self, i: usize) -> Option<u32> {
        self.entries.range((i, 0)..=(i, u32::MAX)).next_back().map(|(&(_, j), _)| j)
    }

    pub fn min_degree(&self, i: usize) -> Option<u32> {
        self.entries.range((i, 0)..=(i, u32::MAX)).next().map(|(&(_, j), _)| j)
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max_i (t_i - i)`; `0` for the zero table.
    pub fn reg(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// Largest homological index with a nonzero entry, plus one.
    pub fn length(&self) -> usize {
        if self.entries.is_empty() {
            0
        } else {
            self.pd() + 1
        }
    }

    pub fn derived_invariants(&self) -> Result<DerivedInvariants> {
        if self.subject == Subject::Quotient && !self.entries.is_empty() && self.get(0, 0) != 1 {
            return Err(Error::InvalidArgument("quotient table must have beta_{0,0} = 1".into()));
        }
        if self.entries.keys().any(|&(i, j)| (j as usize) < i && self.subject == Subject::Quotient) {
            return Err(Error::InvalidArgument("entry below the diagonal".into()));
        }
        Ok(DerivedInvariants {
            pd: self.pd(),
            reg: self.reg(),
            t: (0..self.length()).map(|i| self.t(i)).collect(),
        })
    }

    /// Table of `I` from the table of `S/I`: `beta_{i,j}(I) = beta_{i+1,j}(S/I)`.
    pub fn to_ideal(&self) -> Result<BettiTable> {
        if self.subject != Subject::Quotient {
            return Err(Error::InvalidArgument("table already describes the ideal".into()));
        }
        let mut out = BettiTable::new(Subject::Ideal);
        for (i, j, b) in self.entries() {
            if i >= 1 {
                out.set(i - 1, j, b);
            }
        }
        Ok(out)
    }

    /// Euler characteristic `sum_i (-1)^i beta_{i,j}` in each internal degree.
    pub fn euler_coefficients(&self) -> BTreeMap<u32, i64> {
        let mut out = BTreeMap::new();
        for (i, j, b) in self.entries() {
            let s = if i % 2 == 0 { b as i64 } else { -(b as i64) };
            *out.entry(j).or_insert(0) += s;
        }
        out
    }

    /// Whether every entry of `self` is at most the matching entry of `other`.
    pub fn entrywise_le(&self, other: &BettiTable) -> bool {
        self.entries().all(|(i, j, b)| b <= other.get(i, j))
    }
}

impl fmt::Display for BettiTable {
    /// Rows indexed by `j - i`, columns by `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero table)");
        }
        let cols = self.length();
        let min_row = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0);
        let max_row = self.reg();
        let width = self.entries.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(2) + 1;
        write!(f, "{:>6}", "")?;
        for i in 0..cols {
            write!(f, "{:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..cols {
            write!(f, "{:>width$}", self.beta(i))?;
        }
        writeln!(f)?;
        for row in min_row..=max_row {
            write!(f, "{:>5}:", row)?;
            for i in 0..cols {
                let j = row + i as i64;
                let b = if j >= 0 { self.get(i, j as u32) } else { 0 };
                if b == 0 {
                    write!(f, "{:>width$}", ".")?;
                } else {
                    write!(f, "{:>width$}", b)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn koszul_xx_yy() -> BettiTable {
        let mut t = BettiTable::new(Subject::Quotient);
        t.set(0, 0, 1);
        t.set(1, 2, 2);
        t.set(2, 4, 1);
        t
    }

    #[test]
    fn derived_examples() {
        let t = koszul_xx_yy();
        let d = t.derived_invariants().unwrap();
        assert_eq!((d.pd, d.reg), (2, 2));
        assert_eq!(d.t, vec![Some(0), Some(2), Some(4)]);
        // reg(I) = reg(S/I) + 1
        assert_eq!(t.to_ideal().unwrap().reg(), t.reg() + 1);

        let s = BettiTable::of_ring().derived_invariants().unwrap();
        assert_eq!((s.pd, s.reg), (0, 0));

        let mut x = BettiTable::new(Subject::Quotient);
        x.set(0, 0, 1);
        x.set(1, 1, 1);
        let d = x.derived_invariants().unwrap();
        assert_eq!((d.pd, d.reg, d.t[1]), (1, 0, Some(1)));
    }

    #[test]
    fn rejects_malformed_quotient_tables() {
        let mut t = BettiTable::new(Subject::Quotient);
        t.set(1, 2, 1);
        assert!(t.derived_invariants().is_err());
    }

    #[test]
    fn display_is_stable() {
        let s = koszul_xx_yy().to_string();
        assert!(s.contains("total:"));
        assert_eq!(s.lines().count(), 5);
    }
}
