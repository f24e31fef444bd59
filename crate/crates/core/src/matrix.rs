//! Small dense matrices over exact rational functions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;
use crate::tower::Tower;

#[derive(Clone, PartialEq)]
pub struct RMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<RatFunc>,
}

impl std::fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                write!(f, " {:?}", self.get(r, c))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl RMatrix {
    pub fn zero(rows: usize, cols: usize, tower: &Arc<Tower>) -> Self {
        RMatrix {
            rows,
            cols,
            data: vec![RatFunc::zero(tower); rows * cols],
        }
    }

    pub fn identity(n: usize, tower: &Arc<Tower>) -> Self {
        let mut m = RMatrix::zero(n, n, tower);
        for i in 0..n {
            m.set(i, i, RatFunc::one(tower));
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RatFunc) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(k)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.cols, rhs.rows);
        let tower = self.data[0].tower.clone();
        let mut out = RMatrix::zero(self.rows, rhs.cols, &tower);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// Solve the linear system self * x = rhs (column vector) by Gaussian
    /// elimination. Errors on a singular matrix.
    pub fn solve(&self, rhs: &[RatFunc]) -> Result<Vec<RatFunc>> {
        debug_assert_eq!(self.rows, self.cols);
        debug_assert_eq!(self.rows, rhs.len());
        let n = self.rows;
        let tower = if n > 0 {
            self.data[0].tower.clone()
        } else {
            return Ok(Vec::new());
        };
        let mut a = self.data.clone();
        let mut b = rhs.to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            if pivot != col {
                for c in 0..n {
                    a.swap(col * n + c, pivot * n + c);
                }
                b.swap(col, pivot);
            }
            let pinv = a[col * n + col].inv()?;
            for c in 0..n {
                a[col * n + c] = a[col * n + c].mul(&pinv);
            }
            b[col] = b[col].mul(&pinv);
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for c in 0..n {
                    let v = a[r * n + c].sub(&factor.mul(&a[col * n + c]));
                    a[r * n + c] = v;
                }
                b[r] = b[r].sub(&factor.mul(&b[col]));
            }
        }
        let _ = tower;
        Ok(b)
    }

    /// Rank of a list of equal-length vectors by Gaussian elimination.
    pub fn rank_of_vectors(vectors: &[Vec<RatFunc>]) -> usize {
        if vectors.is_empty() {
            return 0;
        }
        let width = vectors[0].len();
        let mut rows: Vec<Vec<RatFunc>> = vectors.to_vec();
        let mut rank = 0usize;
        let mut col = 0usize;
        while col < width && rank < rows.len() {
            let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
            let Some(p) = pivot else {
                col += 1;
                continue;
            };
            rows.swap(rank, p);
            let pinv = rows[rank][col].inv().expect("nonzero pivot");
            for c in col..width {
                rows[rank][c] = rows[rank][c].mul(&pinv);
            }
            for r in 0..rows.len() {
                if r == rank || rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].clone();
                for c in col..width {
                    let v = rows[r][c].sub(&factor.mul(&rows[rank][c]));
                    rows[r][c] = v;
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_small() {
        let t = Tower::base(4);
        let mut m = RMatrix::zero(2, 2, &t);
        m.set(0, 0, RatFunc::from_int(&t, 2));
        m.set(0, 1, RatFunc::from_int(&t, 1));
        m.set(1, 0, RatFunc::from_int(&t, 1));
        m.set(1, 1, RatFunc::from_int(&t, 3));
        let rhs = vec![RatFunc::from_int(&t, 5), RatFunc::from_int(&t, 10)];
        let x = m.solve(&rhs).unwrap();
        // 2x + y = 5, x + 3y = 10 => x = 1, y = 3
        assert_eq!(x[0], RatFunc::from_int(&t, 1));
        assert_eq!(x[1], RatFunc::from_int(&t, 3));
    }

    #[test]
    fn rank() {
        let t = Tower::base(4);
        let one = RatFunc::one(&t);
        let zero = RatFunc::zero(&t);
        let v1 = vec![one.clone(), zero.clone()];
        let v2 = vec![zero.clone(), one.clone()];
        let v3 = vec![one.clone(), one.clone()];
        assert_eq!(RMatrix::rank_of_vectors(&[v1.clone()]), 1);
        assert_eq!(RMatrix::rank_of_vectors(&[v1, v2, v3]), 2);
    }
}
