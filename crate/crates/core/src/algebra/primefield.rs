use super::arith::is_prime;
use crate::error::{Error, Result};

/// Dense matrix over F_p, entries kept reduced in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimeFieldMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(modulus: u64, rows: usize, cols: usize) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(PrimeFieldMatrix { modulus, rows, cols, entries: vec![0; rows * cols] })
    }

    pub fn identity(modulus: u64, n: usize) -> Result<Self> {
        let mut m = Self::zeros(modulus, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Builds from signed integer rows, reducing every entry mod p.
    pub fn from_rows(modulus: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(modulus, rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (j, &v) in row.iter().enumerate() {
                m.set_signed(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v % self.modulus;
    }

    pub fn set_signed(&mut self, i: usize, j: usize, v: i64) {
        let p = self.modulus as i64;
        self.entries[i * self.cols + j] = v.rem_euclid(p) as u64;
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat; p is prime and a != 0.
        let (mut base, mut e, mut acc) = (a, self.modulus - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(acc, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let mut out = PrimeFieldMatrix {
            modulus: self.modulus,
            rows: self.rows,
            cols: rhs.cols,
            entries: vec![0; self.rows * rhs.cols],
        };
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = (out.get(i, j) + self.mul_mod(a, rhs.get(k, j))) % self.modulus;
                    out.entries[i * rhs.cols + j] = v;
                }
            }
        }
        out
    }

    /// Row rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let p = self.modulus;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                m.entries.swap(pivot * m.cols + j, rank * m.cols + j);
            }
            let inv = m.inv_mod(m.get(rank, col));
            for j in 0..m.cols {
                let v = m.mul_mod(m.get(rank, j), inv);
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == rank || factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let sub = m.mul_mod(factor, m.get(rank, j));
                    let v = (m.get(r, j) + p - sub) % p;
                    m.set(r, j, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_reduced_on_construction() {
        let m = PrimeFieldMatrix::from_rows(5, &[vec![7, -1], vec![10, 3]]).unwrap();
        assert_eq!((m.get(0, 0), m.get(0, 1), m.get(1, 0)), (2, 4, 0));
        assert_eq!(PrimeFieldMatrix::zeros(6, 1, 1), Err(Error::NotPrime(6)));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2*3 - 1*1 = 5
        let rows = [vec![2, 1], vec![1, 3]];
        assert_eq!(PrimeFieldMatrix::from_rows(5, &rows).unwrap().rank(), 1);
        assert_eq!(PrimeFieldMatrix::from_rows(7, &rows).unwrap().rank(), 2);
        assert_eq!(PrimeFieldMatrix::identity(3, 4).unwrap().nullity(), 0);
    }

    #[test]
    fn multiplication() {
        let a = PrimeFieldMatrix::from_rows(3, &[vec![1, 2], vec![0, 1]]).unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq, PrimeFieldMatrix::from_rows(3, &[vec![1, 1], vec![0, 1]]).unwrap());
    }
}
