//! Dense rational matrices and reduced row echelon form.
//!
//! Elimination is fraction-free: each row is scaled to integers and the
//! forward pass uses Bareiss's one-step division, so intermediate entries are
//! minors of the input and never need a gcd. Only the final back-substitution
//! into reduced form works over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use super::{common_denominator, Integer, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are ragged.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row in RatMatrix::from_rows");
            data.extend(row);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_int_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn from_integer_rows(cols: usize, rows: &[Vec<Integer>]) -> Self {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|v| Rational::from_integer(v.clone()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    /// Pivot column of each nonzero row of `reduced`.
    pub pivots: Vec<usize>,
    /// The reduced row echelon form (only the first `rank` rows are nonzero).
    pub reduced: RatMatrix,
    /// One vector per free column: 1 at that column, 0 at the other free
    /// columns. Together they span the right null space.
    pub kernel: Vec<Vec<Rational>>,
}

/// Row-reduces `m` exactly.
pub fn rref(m: &RatMatrix) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Integer>> = (0..rows)
        .map(|r| {
            let row = m.row(r);
            let den = common_denominator(row);
            row.iter()
                .map(|v| (v * Rational::from_integer(den.clone())).to_integer())
                .collect()
        })
        .collect();

    let pivots = bareiss_forward(&mut a, cols);
    let rank = pivots.len();

    // Back-substitute the echelon rows into reduced form over Q.
    let mut red: Vec<Vec<Rational>> = a
        .into_iter()
        .take(rank)
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    for i in (0..rank).rev() {
        let pc = pivots[i];
        let inv = Rational::one() / red[i][pc].clone();
        for v in red[i].iter_mut().skip(pc) {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = red[i].clone();
        for row in red.iter_mut().take(i) {
            let factor = row[pc].clone();
            if factor.is_zero() {
                continue;
            }
            for (c, pv) in pivot_row.iter().enumerate().skip(pc) {
                if !pv.is_zero() {
                    row[c] = &row[c] - &factor * pv;
                }
            }
        }
    }

    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -red[i][free].clone();
            }
            v
        })
        .collect();

    let mut reduced = RatMatrix::zeros(rows, cols);
    for (i, row) in red.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            reduced.set(i, c, v);
        }
    }
    Rref {
        rank,
        pivots,
        reduced,
        kernel,
    }
}

/// Bareiss elimination to row echelon form in place, skipping columns with no
/// available pivot. Returns the pivot columns; rows past the rank end up zero.
pub(crate) fn bareiss_forward(a: &mut [Vec<Integer>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = Integer::one();
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
        let pv = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let t = pv * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { t } else { t / &prev };
            }
        }
        prev = pv.clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix.
pub fn integer_rank(rows: &[Vec<Integer>], cols: usize) -> usize {
    let mut a = rows.to_vec();
    bareiss_forward(&mut a, cols).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn identity_has_full_rank_and_no_kernel() {
        let r = rref(&RatMatrix::identity(3));
        assert_eq!(r.rank, 3);
        assert!(r.kernel.is_empty());
        assert_eq!(r.reduced, RatMatrix::identity(3));
    }

    #[test]
    fn proportional_rows() {
        let m = RatMatrix::from_int_rows(2, &[vec![1, 2], vec![2, 4]]);
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel, vec![vec![rat_int(-2), rat_int(1)]]);
    }

    #[test]
    fn empty_matrix() {
        let r = rref(&RatMatrix::zeros(0, 4));
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.len(), 4);
        let r = rref(&RatMatrix::zeros(3, 0));
        assert_eq!(r.rank, 0);
        assert!(r.kernel.is_empty());
    }

    #[test]
    fn rational_entries() {
        let m = RatMatrix::from_rows(
            3,
            vec![
                vec![rat(1, 2), rat(1, 3), rat_int(0)],
                vec![rat_int(0), rat(2, 3), rat(1, 5)],
            ],
        );
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.kernel.len(), 1);
        let image = m.mul_vec(&r.kernel[0]);
        assert!(image.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn rank_deficient_middle_column() {
        // second column is a multiple of the first: Bareiss has to skip it.
        let m =
            RatMatrix::from_int_rows(4, &[vec![2, 4, 1, 0], vec![1, 2, 3, 1], vec![3, 6, 4, 1]]);
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        for k in &r.kernel {
            assert!(m.mul_vec(k).iter().all(|v| v.is_zero()));
        }
    }
}
