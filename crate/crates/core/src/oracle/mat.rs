//! Dense exact-rational matrices: just enough linear algebra for the oracle.
//! Products skip zero entries (the representation matrices are very sparse),
//! kernels and inverses go through exact Gauss-Jordan elimination over
//! `BigRational`, so there is no rounding anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_i64_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if v != 0 {
                    m.data[i * cols + j] = rat(v);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let bkj = other.at(k, j);
                    if bkj.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] += aik * bkj;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn neg(&self) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.at(i, j).is_zero() {
                    out.data[j * self.rows + i] = self.at(i, j).clone();
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.at(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.data[(i1 * other.rows + i2) * out.cols + (j1 * other.cols + j2)] =
                            a * b;
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.at(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.data[(self.rows + i) * out.cols + (self.cols + j)] = other.at(i, j).clone();
            }
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.at(i, j).clone();
            }
            for j in 0..other.cols {
                out.data[i * out.cols + self.cols + j] = other.at(i, j).clone();
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.data[i * out.cols + jj] = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let mut t = BigRational::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.at(r, c).recip();
            for j in c..self.cols {
                let idx = r * self.cols + j;
                if !self.data[idx].is_zero() {
                    self.data[idx] *= &inv;
                }
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in c..self.cols {
                    let t = &factor * self.at(r, j);
                    self.data[i * self.cols + j] -= t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// A basis of the right kernel, one vector per column.
    pub fn kernel(&self) -> Mat {
        let mut work = self.clone();
        let pivots = work.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.data[fc * out.cols + k] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                let v = work.at(row, fc);
                if !v.is_zero() {
                    out.data[pc * out.cols + k] = -v.clone();
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(n));
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        let mut out = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = aug.at(i, n + j).clone();
            }
        }
        Some(out)
    }

    /// Solves `basis * x = image` column by column, assuming `basis` has full
    /// column rank and the image lies in its span. Returns `None` otherwise.
    pub fn solve_in_span(basis: &Mat, image: &Mat) -> Option<Mat> {
        assert_eq!(basis.rows, image.rows);
        let k = basis.cols;
        let mut aug = basis.hstack(image);
        let pivots = aug.rref();
        // Full column rank means the pivots are exactly the basis columns.
        if pivots.len() != k || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        // Rows below the rank must vanish on the image side.
        for i in k..aug.rows {
            for j in 0..image.cols {
                if !aug.at(i, k + j).is_zero() {
                    return None;
                }
            }
        }
        let mut x = Mat::zeros(k, image.cols);
        for i in 0..k {
            for j in 0..image.cols {
                x.data[i * image.cols + j] = aug.at(i, k + j).clone();
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_simple_matrix() {
        // x + y = 0 has a one-dimensional kernel.
        let m = Mat::from_i64_fn(1, 2, |_, _| 1);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(Mat::identity(4).kernel().cols(), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_i64_fn(3, 3, |i, j| if i == j { 2 } else { (i + 2 * j) as i64 });
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.mul(&inv), Mat::identity(3));
    }

    #[test]
    fn solve_in_span_restriction() {
        // h = diag(1, 2) restricted to the span of e1 is multiplication by 1.
        let h = Mat::from_i64_fn(2, 2, |i, j| if i == j { (i + 1) as i64 } else { 0 });
        let basis = Mat::from_i64_fn(2, 1, |i, _| if i == 0 { 1 } else { 0 });
        let x = Mat::solve_in_span(&basis, &h.mul(&basis)).unwrap();
        assert_eq!(x, Mat::identity(1));
    }

    #[test]
    fn kron_dimensions() {
        let a = Mat::identity(2);
        let b = Mat::from_i64_fn(3, 3, |i, j| (i * 3 + j) as i64);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(k.at(3, 4), b.at(0, 1));
    }
}
