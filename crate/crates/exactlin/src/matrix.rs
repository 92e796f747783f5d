//! Dense matrices over the Gaussian rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::gauss::GaussRational as G;
use crate::rat::Rat;
use crate::LinError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<G>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![G::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = G::one();
        }
        m
    }

    /// Matrix unit with a single 1 at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        m[(i, j)] = G::one();
        m
    }

    pub fn diagonal(entries: &[G]) -> Self {
        let mut m = DenseMatrix::zeros(entries.len(), entries.len());
        for (k, e) in entries.iter().enumerate() {
            m[(k, k)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self, LinError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinError::Ragged);
        }
        Ok(DenseMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from integer rows (panics on ragged input).
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| G::from_int(x)).collect()).collect())
            .expect("rectangular integer rows")
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<G>) -> Self {
        assert_eq!(data.len(), rows * cols);
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_flat(&self) -> &[G] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<G> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[G] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<G>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(G::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(G::conj).collect() }
    }

    pub fn conj_transpose(&self) -> Self {
        self.transpose().conj()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &G) -> Self {
        if s.is_one() {
            return self.clone();
        }
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn scale_rat(&self, s: &Rat) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = DenseMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[G]) -> Vec<G> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = G::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += &(a * b);
                    }
                }
                s
            })
            .collect()
    }

    /// Commutator `[A, B] = AB − BA`.
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> G {
        let mut t = G::zero();
        for k in 0..self.rows.min(self.cols) {
            t += &self[(k, k)];
        }
        t
    }

    /// `tr(A·B)` without forming the product.
    pub fn trace_of_product(&self, o: &Self) -> G {
        assert_eq!((self.cols, self.rows), (o.rows, o.cols));
        let mut t = G::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &o[(k, i)];
                if !a.is_zero() && !b.is_zero() {
                    t += &(a * b);
                }
            }
        }
        t
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut out = DenseMatrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug: Vec<Vec<G>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { G::one() } else { G::zero() }));
                r
            })
            .collect();
        let pivots = crate::subspace::rref_rows(&mut aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(DenseMatrix::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect()).expect("square"))
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = G;
    fn index(&self, (i, j): (usize, usize)) -> &G {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut G {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_inverse() {
        let a = DenseMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), DenseMatrix::identity(2));
        assert!(DenseMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let e12 = DenseMatrix::unit(2, 0, 1);
        let e21 = DenseMatrix::unit(2, 1, 0);
        assert_eq!(e12.bracket(&e21), DenseMatrix::from_ints(&[&[1, 0], &[0, -1]]));
        assert!(e12.is_nilpotent());
        assert_eq!(a.trace_of_product(&a), a.mul(&a).trace());
    }
}
