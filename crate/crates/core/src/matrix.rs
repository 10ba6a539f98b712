//! Dense exact matrices over `Q`.
//!
//! Indices in method names are 0-based. Frieze and juggling code speaks
//! 1-based integers and crosses over through [`RationalMatrix::cyclic_submatrix`],
//! which selects columns by residue mod the column count.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Immutable dense matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    /// Build from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(alloc::format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    /// Build from rows, which must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(alloc::format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { rows: r, cols, entries })
    }

    /// Build from integer rows. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.as_ref().len(), cols, "ragged integer matrix");
                r.as_ref().iter().map(|&v| rational::int(v)).collect()
            })
            .collect();
        Self::from_rows(cols, data).expect("checked above")
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
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

    /// Entry at row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: Rational) -> Self {
        let mut m = self.clone();
        m.entries[i * self.cols + j] = value;
        m
    }

    /// Copy with row `i` multiplied by `c`.
    pub fn scale_row(&self, i: usize, c: &Rational) -> Self {
        let mut m = self.clone();
        for x in &mut m.entries[i * self.cols..(i + 1) * self.cols] {
            *x *= c;
        }
        m
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        RationalMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let x = self.get(i, l);
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let y = other.get(l, j);
                    if !y.is_zero() {
                        out.entries[i * other.cols + j] += x * y;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(alloc::format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Submatrix on the given 0-based rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        RationalMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Submatrix on the given 0-based columns, keeping every row.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    /// `A_I`: columns whose 1-based index is congruent to an element of `set`
    /// mod `n`, deduplicated and in ascending residue order.
    pub fn cyclic_submatrix(&self, set: &[i64], n: usize) -> Result<Self> {
        if n != self.cols {
            return Err(Error::Dimension(alloc::format!(
                "period {n} does not match {} columns",
                self.cols
            )));
        }
        Ok(self.select_columns(&residue_columns(set, n)))
    }

    /// Exact determinant. The 0x0 determinant is 1.
    ///
    /// Rows are cleared of denominators and reduced by fraction-free Bareiss
    /// elimination; the row multipliers are divided out at the end.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(alloc::format!(
                "determinant of a non-square {}x{} matrix",
                self.rows,
                self.cols
            )));
        }
        let (mut m, scale) = self.integer_rows();
        let d = bareiss_det(&mut m, self.rows);
        Ok(Rational::new(d, scale))
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.integer_rows();
        bareiss_rank(&mut m, self.rows, self.cols)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).recip();
            for j in c..self.cols {
                m.entries[r * self.cols + j] *= &inv;
            }
            for i in 0..self.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..self.cols {
                    let t = &f * m.get(r, j);
                    m.entries[i * self.cols + j] -= t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rows spanning the right kernel `{v : M v = 0}`, one per free column.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(free.len(), self.cols);
        for (row, &f) in free.iter().enumerate() {
            out.entries[row * self.cols + f] = Rational::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                out.entries[row * self.cols + pc] = -r.get(pi, f).clone();
            }
        }
        out
    }

    /// Unique solution of `M x = v` for square invertible `M`.
    pub fn solve_square(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.rows != self.cols || v.len() != self.rows {
            return Err(Error::Dimension(alloc::format!(
                "solve needs a square system, got {}x{} with right side of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, n + 1);
        for (i, vi) in v.iter().enumerate() {
            for j in 0..n {
                aug.entries[i * (n + 1) + j] = self.get(i, j).clone();
            }
            aug.entries[i * (n + 1) + n] = vi.clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::Singular);
        }
        Ok((0..n).map(|i| r.get(i, n).clone()).collect())
    }

    /// All maximal minors, indexed by ascending 0-based column subsets in
    /// lexicographic order. Needs `rows <= cols`.
    pub fn maximal_minors(&self) -> Vec<(Vec<usize>, Rational)> {
        k_subsets(self.cols, self.rows)
            .into_iter()
            .map(|s| {
                let d = self.select_columns(&s).det().expect("square by construction");
                (s, d)
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Integer matrix with each row multiplied by the lcm of its denominators,
    /// plus the product of those multipliers.
    fn integer_rows(&self) -> (Vec<BigInt>, BigInt) {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut scale = BigInt::one();
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            out.extend(row.iter().map(|x| x.numer() * (&l / x.denom())));
            scale *= l;
        }
        (out, scale)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<_> = self.entries.iter().map(rational::format).collect();
        let w = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// Distinct residues in `[1, n]` of `set`, ascending, as 0-based columns.
pub fn residue_columns(set: &[i64], n: usize) -> Vec<usize> {
    let mut cols: Vec<usize> =
        set.iter().map(|&i| (i - 1).rem_euclid(n as i64) as usize).collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

/// All `k`-subsets of `0..n`, lexicographic.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn bareiss_det(m: &mut [BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j]) / &prev;
                m[i * n + j] = v;
            }
        }
        prev = m[k * n + k].clone();
    }
    let d = m[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn bareiss_rank(m: &mut [BigInt], rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(r * cols + j, p * cols + j);
            }
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i * cols + j] * &m[r * cols + c] - &m[i * cols + c] * &m[r * cols + j])
                    / &prev;
                m[i * cols + j] = v;
            }
            m[i * cols + c] = BigInt::zero();
        }
        prev = m[r * cols + c].clone();
        r += 1;
    }
    r
}
