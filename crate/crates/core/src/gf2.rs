//! Dense linear algebra over GF(2).

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// A matrix over GF(2) stored as rows of uniform length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    ncols: usize,
    rows: Vec<BitVec>,
}

impl Gf2Matrix {
    pub fn new(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch { expected: ncols, found: bad.len() });
        }
        Ok(Gf2Matrix { ncols, rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = BitVec::zeros(n);
                r.set(i, true);
                r
            })
            .collect();
        Gf2Matrix { ncols: n, rows }
    }

    pub fn from_bools(rows: &[&[bool]]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        Gf2Matrix::new(ncols, rows.iter().map(|r| BitVec::from_bools(r)).collect())
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Reduced row-echelon form and rank. Zero rows are kept at the bottom so
    /// the shape is unchanged.
    pub fn rref(&self) -> (Gf2Matrix, usize) {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        (Gf2Matrix { ncols: self.ncols, rows }, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn in_rowspace(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch { expected: self.ncols, found: v.len() });
        }
        Ok(Echelon::from_rows(self.ncols, &self.rows).contains(v))
    }

    /// A basis of `{v : M v = 0}`, one vector per free column in ascending
    /// column order. Depends only on the row space of `self`.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let (reduced, rank) = self.rref();
        let pivots: Vec<usize> = reduced.rows[..rank]
            .iter()
            .map(|r| r.first_one().expect("nonzero pivot row"))
            .collect();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::zeros(self.ncols);
                v.set(free, true);
                for (row, &p) in reduced.rows[..rank].iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Row spaces are equal.
    pub fn same_rowspace(&self, other: &Gf2Matrix) -> bool {
        if self.ncols != other.ncols {
            return false;
        }
        let (a, ra) = self.rref();
        let (b, rb) = other.rref();
        ra == rb && a.rows[..ra] == b.rows[..rb]
    }
}

/// Incrementally maintained fully-reduced echelon basis, used for repeated
/// membership tests against a fixed row space.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(ncols: usize, rows: &[BitVec]) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored pivots.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: BitVec) -> bool {
        assert_eq!(v.len(), self.ncols);
        let r = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BitVec {
        BitVec::from_bools(&bits.iter().map(|&b| b == 1).collect::<Vec<_>>())
    }

    #[test]
    fn rref_identity() {
        let id = Gf2Matrix::identity(3);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_duplicate_row() {
        let m = Gf2Matrix::new(2, vec![bv(&[1, 1]), bv(&[1, 1])]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r.rows(), &[bv(&[1, 1]), bv(&[0, 0])]);
    }

    #[test]
    fn rref_is_reduced() {
        let m = Gf2Matrix::new(
            4,
            vec![bv(&[0, 1, 1, 0]), bv(&[1, 1, 0, 1]), bv(&[1, 0, 1, 1]), bv(&[0, 0, 1, 1])],
        )
        .unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 3);
        let pivots: Vec<usize> = r.rows()[..rank].iter().map(|x| x.first_one().unwrap()).collect();
        assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in pivots.iter().enumerate() {
            for (j, row) in r.rows().iter().enumerate() {
                assert_eq!(row.get(p), i == j);
            }
        }
        assert!(r.same_rowspace(&m));
    }

    #[test]
    fn membership() {
        let id = Gf2Matrix::identity(2);
        assert!(id.in_rowspace(&bv(&[1, 0])).unwrap());
        assert!(id.in_rowspace(&bv(&[0, 0])).unwrap());
        let m = Gf2Matrix::new(3, vec![bv(&[1, 1, 0]), bv(&[0, 1, 1])]).unwrap();
        assert!(m.in_rowspace(&bv(&[1, 0, 1])).unwrap());
        assert!(!m.in_rowspace(&bv(&[1, 0, 0])).unwrap());
        assert!(m.in_rowspace(&bv(&[0, 0, 0])).unwrap());
        assert!(m.in_rowspace(&bv(&[1, 0])).is_err());
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let m = Gf2Matrix::new(4, vec![bv(&[1, 1, 0, 0]), bv(&[0, 1, 1, 1])]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in m.rows() {
                assert!(!r.dot(v));
            }
        }
        assert_eq!(Gf2Matrix::new(4, ns).unwrap().rank(), 2);
    }

    #[test]
    fn uneven_rows_rejected() {
        assert!(Gf2Matrix::new(2, vec![bv(&[1, 0]), bv(&[1])]).is_err());
    }
}
