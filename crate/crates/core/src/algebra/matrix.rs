//! Dense matrices over [`Scalar`] with fraction-free elimination.

use super::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &ExactMatrix) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut m = ExactMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let v = (0..self.cols).map(|k| self.get(i, k) * o.get(k, j)).sum();
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        ExactMatrix::from_rows(idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    /// The matrix with column `j` removed.
    pub fn drop_col(&self, j: usize) -> Self {
        ExactMatrix::from_rows(
            (0..self.rows)
                .map(|i| {
                    let mut r = self.row(i).to_vec();
                    r.remove(j);
                    r
                })
                .collect(),
        )
    }

    /// Bareiss elimination, pivoting on the first nonzero entry of each
    /// column. Returns the rank and, for square input, the determinant.
    fn bareiss(&self) -> (usize, Scalar) {
        let mut a: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut prev = Scalar::one();
        let mut sign = 1i64;
        let mut r = 0;
        let mut full = true;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                full = false;
                continue;
            };
            if p != r {
                a.swap(p, r);
                sign = -sign;
            }
            let piv = a[r][c].clone();
            let prev_inv = prev.inv();
            for i in r + 1..self.rows {
                let m = a[i][c].clone();
                for j in c + 1..self.cols {
                    let v = &(&(&piv * &a[i][j]) - &(&m * &a[r][j])) * &prev_inv;
                    a[i][j] = v;
                }
                a[i][c] = Scalar::zero();
            }
            prev = piv;
            r += 1;
        }
        let det = if self.rows == self.cols && full && r == self.rows {
            if r == 0 {
                Scalar::one()
            } else {
                &a[r - 1][r - 1] * &Scalar::from_int(sign)
            }
        } else {
            Scalar::zero()
        };
        (r, det)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    /// Panics for non-square input.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        self.bareiss().1
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                a.data.swap(p * self.cols + j, r * self.cols + j);
            }
            let inv = a.get(r, c).inv();
            for j in 0..self.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let m = a.get(i, c).clone();
                for j in 0..self.cols {
                    let v = a.get(i, j) - &(&m * a.get(r, j));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of the right kernel; each vector has a one in its free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (e, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (k, &pc) in pivots.iter().enumerate() {
                    v[pc] = -e.get(k, free);
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "shape mismatch");
        let aug = ExactMatrix::from_rows(
            (0..self.rows)
                .map(|i| {
                    let mut r = self.row(i).to_vec();
                    r.push(b[i].clone());
                    r
                })
                .collect(),
        );
        let (e, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = e.get(k, self.cols).clone();
        }
        Some(x)
    }

    /// Indices of the lexicographically first rows that are linearly
    /// independent, up to `limit` of them.
    pub fn independent_rows(&self, limit: usize) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new(); // (pivot col, reduced row)
        for i in 0..self.rows {
            if chosen.len() == limit {
                break;
            }
            let mut v = self.row(i).to_vec();
            for (pc, b) in &basis {
                if v[*pc].is_zero() {
                    continue;
                }
                let m = v[*pc].clone();
                for (vj, bj) in v.iter_mut().zip(b) {
                    *vj = &*vj - &(&m * bj);
                }
            }
            if let Some(pc) = v.iter().position(|s| !s.is_zero()) {
                let inv = v[pc].inv();
                let v: Vec<Scalar> = v.iter().map(|s| s * &inv).collect();
                // Keep earlier basis rows reduced at the new pivot.
                for (_, b) in basis.iter_mut() {
                    if !b[pc].is_zero() {
                        let m = b[pc].clone();
                        for (bj, vj) in b.iter_mut().zip(&v) {
                            *bj = &*bj - &(&m * vj);
                        }
                    }
                }
                basis.push((pc, v));
                chosen.push(i);
            }
        }
        chosen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn small_cases() {
        assert_eq!(m(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]]).det(), Scalar::one());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        let k = m(&[&[1, 2], &[2, 4]]).kernel();
        assert_eq!(k, vec![vec![Scalar::from_int(-2), Scalar::one()]]);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), Scalar::from_int(-1));
        assert_eq!(m(&[&[1, 1], &[1, 1], &[0, 1]]).independent_rows(3), vec![0, 2]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[2.into(), 0.into()]), Some(vec![1.into(), 1.into()]));
        assert_eq!(m(&[&[1, 1], &[1, 1]]).solve(&[1.into(), 2.into()]), None);
    }
}
