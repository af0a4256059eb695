//! Exact linear algebra over the rationals.
//!
//! Linear systems are solved by fraction-free (Bareiss) elimination on an
//! integer-scaled augmented matrix followed by rational back-substitution.
//! Ranks of the sparse boundary matrices use sparse rational elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| Rational::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Rows rescaled to integer entries (each row times the lcm of its
    /// denominators).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Value given to free variables of an underdetermined system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FreePolicy {
    #[default]
    Zero,
    One,
}

/// Row echelon form of an integer matrix by fraction-free elimination.
/// Returns the pivot columns; rows `0..pivots.len()` hold the pivots.
fn bareiss_echelon(a: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in (c + 1)..cols {
                let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact fraction-free step");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `a x = b` exactly. `None` iff the system is inconsistent; free
/// variables take the value chosen by `policy`.
pub fn solve(a: &QMatrix, b: &[Rational], policy: FreePolicy) -> Result<Option<Vec<Rational>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "{} equations but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let aug = QMatrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let mut m = aug.integer_rows();
    let pivots = bareiss_echelon(&mut m);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let free_value = match policy {
        FreePolicy::Zero => Rational::zero(),
        FreePolicy::One => Rational::one(),
    };
    let mut x = vec![free_value; n];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let row = &m[r];
        let mut acc = Rational::from(row[n].clone());
        for j in (c + 1)..n {
            if !row[j].is_zero() {
                acc = acc - Rational::from(row[j].clone()) * x[j].clone();
            }
        }
        x[c] = acc / Rational::from(row[c].clone());
    }
    Ok(Some(x))
}

/// Rank of an integer-valued or rational matrix given densely.
pub fn rank(a: &QMatrix) -> usize {
    let rows: Vec<Vec<(usize, Rational)>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .map(|(j, q)| (j, q.clone()))
                .collect()
        })
        .collect();
    sparse_rank(rows, a.cols())
}

/// Rank of a matrix given as sparse rows of `(column, value)` pairs sorted by
/// column.
pub fn sparse_rank(mut rows: Vec<Vec<(usize, Rational)>>, cols: usize) -> usize {
    rows.retain(|r| !r.is_empty());
    // Rows bucketed by leading column; a bucket's first row is its pivot.
    let mut by_lead: Vec<Vec<Vec<(usize, Rational)>>> = vec![Vec::new(); cols];
    for r in rows {
        by_lead[r[0].0].push(r);
    }
    let mut rank = 0;
    for c in 0..cols {
        let mut bucket = std::mem::take(&mut by_lead[c]);
        if bucket.is_empty() {
            continue;
        }
        // Sparsest row pivots to limit fill-in.
        let best = (0..bucket.len()).min_by_key(|&i| bucket[i].len()).unwrap();
        let pivot = bucket.swap_remove(best);
        rank += 1;
        for row in bucket {
            let factor = &row[0].1 / &pivot[0].1;
            let reduced = axpy(&row, &pivot, &factor);
            if let Some(&(lead, _)) = reduced.first() {
                by_lead[lead].push(reduced);
            }
        }
    }
    rank
}

/// `row - factor * pivot`, dropping zeros.
fn axpy(
    row: &[(usize, Rational)],
    pivot: &[(usize, Rational)],
    factor: &Rational,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn back_substitution_on_unitriangular() {
        let a = QMatrix::from_rows(&[vec![1, 2], vec![0, 1]]);
        let x = solve(&a, &q(&[1, 1]), FreePolicy::Zero).unwrap().unwrap();
        assert_eq!(x, q(&[-1, 1]));
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let a = QMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(solve(&a, &q(&[1, 2]), FreePolicy::Zero).unwrap().is_none());
    }

    #[test]
    fn underdetermined_policies() {
        let a = QMatrix::from_rows(&[vec![1, 1], vec![2, 2]]);
        let x0 = solve(&a, &q(&[1, 2]), FreePolicy::Zero).unwrap().unwrap();
        let x1 = solve(&a, &q(&[1, 2]), FreePolicy::One).unwrap().unwrap();
        assert_eq!(x0, q(&[1, 0]));
        assert_eq!(x1, q(&[0, 1]));
    }

    #[test]
    fn fractional_solution() {
        let a = QMatrix::from_rows(&[vec![2, 1], vec![1, 3]]);
        let x = solve(&a, &q(&[1, 1]), FreePolicy::Zero).unwrap().unwrap();
        assert_eq!(x, vec![Rational::new(2, 5), Rational::new(1, 5)]);
        assert_eq!(a.mul_vec(&x).unwrap(), q(&[1, 1]));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&QMatrix::zeros(3, 4)), 0);
        assert_eq!(rank(&QMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]])), 2);
        assert_eq!(rank(&QMatrix::from_rows(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]])), 2);
        assert_eq!(rank(&QMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn dense_and_sparse_ranks_agree_with_bareiss() {
        let a = QMatrix::from_rows(&[
            vec![0, 3, 1, 0],
            vec![2, 0, 0, 1],
            vec![2, 3, 1, 1],
            vec![4, 0, 0, 2],
        ]);
        let mut ints = a.integer_rows();
        let pivots = bareiss_echelon(&mut ints);
        assert_eq!(pivots.len(), rank(&a));
        assert_eq!(rank(&a), 2);
    }
}
