//! Exact integer matrices and the Smith normal form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A dense matrix of `i64` entries. All arithmetic is checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Left transform.
    pub u: IntMatrix,
    /// Right transform.
    pub v: IntMatrix,
    /// The diagonal matrix.
    pub d: IntMatrix,
    /// Nonzero diagonal entries, each dividing the next.
    pub invariants: Vec<i64>,
}

impl IntMatrix {
    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    /// The identity of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    /// A diagonal matrix.
    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`, zero-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    /// Sets the entry at `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    /// Row `i` as a vector.
    pub fn row(&self, i: usize) -> Vec<i64> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Checked product.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Invalid("matrix shapes do not match".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = 0i64;
                for k in 0..self.cols {
                    let p = self.get(i, k).checked_mul(other.get(k, j)).ok_or(Error::Overflow)?;
                    s = s.checked_add(p).ok_or(Error::Overflow)?;
                }
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k · row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, k: i64) -> Result<()> {
        for j in 0..self.cols {
            let x = self.get(src, j).checked_mul(k).ok_or(Error::Overflow)?;
            let y = self.get(dst, j).checked_add(x).ok_or(Error::Overflow)?;
            self.set(dst, j, y);
        }
        Ok(())
    }

    /// `col[dst] += k · col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, k: i64) -> Result<()> {
        for i in 0..self.rows {
            let x = self.get(i, src).checked_mul(k).ok_or(Error::Overflow)?;
            let y = self.get(i, dst).checked_add(x).ok_or(Error::Overflow)?;
            self.set(i, dst, y);
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for j in 0..self.cols {
            let x = self.get(i, j).checked_neg().ok_or(Error::Overflow)?;
            self.set(i, j, x);
        }
        Ok(())
    }

    /// Smith normal form with transforms.
    pub fn smith(&self) -> Result<SmithForm> {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = Self::identity(m);
        let mut v = Self::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            // Pivot: smallest nonzero absolute value in the lower-right block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j);
                    if x != 0 && best.is_none_or(|(bi, bj)| x.unsigned_abs() < d.get(bi, bj).unsigned_abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            loop {
                let p = d.get(t, t);
                let mut dirty = false;
                for i in t + 1..m {
                    let q = d.get(i, t).div_euclid(p);
                    if q != 0 {
                        d.add_row(i, t, -q)?;
                        u.add_row(i, t, -q)?;
                    }
                    if d.get(i, t) != 0 {
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    let q = d.get(t, j).div_euclid(p);
                    if q != 0 {
                        d.add_col(j, t, -q)?;
                        v.add_col(j, t, -q)?;
                    }
                    if d.get(t, j) != 0 {
                        dirty = true;
                    }
                }
                if !dirty {
                    // Divisibility: fold an offending row into the pivot row.
                    let bad = (t + 1..m).find_map(|i| (t + 1..n).find(|&j| d.get(i, j) % p != 0).map(|_| i));
                    match bad {
                        Some(i) => {
                            d.add_row(t, i, 1)?;
                            u.add_row(t, i, 1)?;
                        }
                        None => break,
                    }
                }
                // Move the smallest entry of row and column t to the pivot.
                let mut bi = (t, t);
                for i in t..m {
                    let x = d.get(i, t);
                    if x != 0 && x.unsigned_abs() < d.get(bi.0, bi.1).unsigned_abs() {
                        bi = (i, t);
                    }
                }
                for j in t..n {
                    let x = d.get(t, j);
                    if x != 0 && x.unsigned_abs() < d.get(bi.0, bi.1).unsigned_abs() {
                        bi = (t, j);
                    }
                }
                if bi.0 != t {
                    d.swap_rows(t, bi.0);
                    u.swap_rows(t, bi.0);
                }
                if bi.1 != t {
                    d.swap_cols(t, bi.1);
                    v.swap_cols(t, bi.1);
                }
            }
            if d.get(t, t) < 0 {
                d.negate_row(t)?;
                u.negate_row(t)?;
            }
            t += 1;
        }
        let invariants = (0..m.min(n)).map(|i| d.get(i, i)).filter(|&x| x != 0).collect();
        Ok(SmithForm { u, v, d, invariants })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Determinant of a square matrix by fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<i64> {
    if m.rows != m.cols {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n {
        if a.get(k, k) == 0 {
            match (k + 1..n).find(|&i| a.get(i, k) != 0) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = (a.get(i, j) as i128) * (a.get(k, k) as i128) - (a.get(i, k) as i128) * (a.get(k, j) as i128);
                let y = i64::try_from(x / prev as i128).map_err(|_| Error::Overflow)?;
                a.set(i, j, y);
            }
        }
        prev = a.get(k, k);
    }
    Ok(sign * if n == 0 { 1 } else { a.get(n - 1, n - 1) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    /// Invariant factors from gcds of k×k minors.
    fn oracle(m: &IntMatrix) -> Vec<i64> {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut dets = vec![1i64];
        for k in 1..=m.rows().min(m.cols()) {
            let mut g = 0;
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let rows: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m.get(i, j)).collect()).collect();
                    g = gcd(g, determinant(&IntMatrix::from_rows(&rows).unwrap()).unwrap());
                }
            }
            if g == 0 {
                break;
            }
            dets.push(g);
        }
        dets.windows(2).map(|w| w[1] / w[0]).collect()
    }

    fn check(m: &IntMatrix) {
        let s = m.smith().unwrap();
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(determinant(&s.u).unwrap().abs(), 1);
        assert_eq!(determinant(&s.v).unwrap().abs(), 1);
        assert!(s.invariants.windows(2).all(|w| w[1] % w[0] == 0));
        assert_eq!(s.invariants, oracle(m));
    }

    #[test]
    fn diag_two_three() {
        let m = IntMatrix::diagonal(&[2, 3]);
        assert_eq!(m.smith().unwrap().invariants, vec![1, 6]);
        check(&m);
    }

    #[test]
    fn zero_matrix() {
        assert!(IntMatrix::zeros(3, 2).smith().unwrap().invariants.is_empty());
        assert!(IntMatrix::zeros(0, 0).smith().unwrap().invariants.is_empty());
    }

    #[test]
    fn lattice_alpha_two_beta() {
        let m = IntMatrix::from_rows(&[vec![1, 0], vec![0, 2]]).unwrap();
        assert_eq!(m.smith().unwrap().invariants, vec![1, 2]);
    }

    #[test]
    fn assorted_against_minors() {
        let cases = [
            vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
            vec![vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 0], vec![2, 2, 2]],
            vec![vec![6, 4], vec![4, 6], vec![0, 10]],
            vec![vec![0, 0, 3], vec![0, 5, 0]],
        ];
        for c in cases {
            check(&IntMatrix::from_rows(&c).unwrap());
        }
    }

    #[test]
    fn overflow_is_reported() {
        let m = IntMatrix::from_rows(&[vec![i64::MAX, 2], vec![3, i64::MAX]]).unwrap();
        let _ = m.smith();
        let big = IntMatrix::from_rows(&[vec![i64::MAX, i64::MAX]]).unwrap();
        assert_eq!(big.mul(&IntMatrix::from_rows(&[vec![2], vec![0]]).unwrap()), Err(Error::Overflow));
    }
}
