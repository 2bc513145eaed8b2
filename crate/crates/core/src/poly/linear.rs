//! Square matrices over F_p and linear changes of coordinates.

use rand::Rng;

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Row-major `n x n` matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    field: PrimeField,
    data: Vec<u32>,
}

impl Matrix {
    pub fn identity(n: usize, field: PrimeField) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { n, field, data }
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.from_i64(v)).collect();
        Ok(Matrix { n, field, data })
    }

    /// Uniformly random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng>(n: usize, field: PrimeField, rng: &mut R) -> Self {
        loop {
            let data = (0..n * n).map(|_| rng.gen_range(0..field.characteristic())).collect();
            let m = Matrix { n, field, data };
            if m.inverse().is_ok() {
                return m;
            }
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let f = self.field;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(self.get(i, k), other.get(k, j)));
                }
                data[i * n + j] = acc;
            }
        }
        Matrix { n, field: f, data }
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let f = self.field;
        let mut a = self.data.clone();
        let mut inv = Matrix::identity(n, f).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                    inv.swap(pivot * n + k, col * n + k);
                }
            }
            let s = f.inv(a[col * n + col]);
            for k in 0..n {
                a[col * n + k] = f.mul(a[col * n + k], s);
                inv[col * n + k] = f.mul(inv[col * n + k], s);
            }
            for r in 0..n {
                let c = a[r * n + col];
                if r != col && c != 0 {
                    for k in 0..n {
                        a[r * n + k] = f.sub(a[r * n + k], f.mul(c, a[col * n + k]));
                        inv[r * n + k] = f.sub(inv[r * n + k], f.mul(c, inv[col * n + k]));
                    }
                }
            }
        }
        Ok(Matrix { n, field: f, data: inv })
    }
}

/// Substitutes `x_j -> sum_i M[i][j] x_i`. Degrees and homogeneity are
/// preserved; `M` must be invertible.
pub fn apply_linear_change(f: &Polynomial, m: &Matrix) -> Result<Polynomial> {
    let ring = f.ring();
    let n = ring.nvars();
    if m.size() != n {
        return Err(Error::RingMismatch(format!("{n} variables but a {0}x{0} matrix", m.size())));
    }
    m.inverse()?;
    let ord = f.order();
    let images: Vec<Polynomial> = (0..n)
        .map(|j| {
            Polynomial::from_terms(ring, ord, (0..n).map(|i| (Monomial::var(n, i), m.get(i, j))))
        })
        .collect();
    // powers[j][e] = images[j]^e, grown on demand
    let mut powers: Vec<Vec<Polynomial>> = images
        .iter()
        .map(|_| vec![Polynomial::constant(ring, ord, 1)])
        .collect();
    let mut out = Polynomial::zero(ring, ord);
    for t in f.terms() {
        let mut acc = Polynomial::constant(ring, ord, t.coeff);
        for j in 0..n {
            let e = t.monomial.exp(j) as usize;
            while powers[j].len() <= e {
                let next = powers[j].last().expect("nonempty") * &images[j];
                powers[j].push(next);
            }
            if e > 0 {
                acc = &acc * &powers[j][e];
            }
        }
        out = &out + &acc;
    }
    Ok(out)
}
