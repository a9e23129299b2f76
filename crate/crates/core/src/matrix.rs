//! Dense square integer matrices and an exact rational linear solver.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| i64::from(i == j))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "rows must form a square matrix"
        );
        IntMatrix {
            n,
            data: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn scale(&self, c: i64) -> Self {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Sum of all entries.
    pub fn sum(&self) -> i64 {
        self.data.iter().sum()
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn is_permutation(&self) -> bool {
        let ones = |v: Vec<i64>| v.iter().all(|&x| x == 1);
        self.data.iter().all(|&x| x == 0 || x == 1)
            && ones(self.row_sums())
            && ones(self.col_sums())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.n), |acc, _| &acc * self)
    }

    /// First `(i, j)` where the matrices differ.
    pub fn first_difference(&self, other: &IntMatrix) -> Option<(usize, usize)> {
        assert_eq!(self.n, other.n);
        let pos = self
            .data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)?;
        Some((pos / self.n, pos % self.n))
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|i| self.row(i)))
            .finish()
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        self.scale(-1)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                let src = rhs.row(l);
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Solves `A x = b` exactly; `None` if `A` is singular.
pub fn solve_rational(a: &IntMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.dim();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|&x| rational(x))
                .chain([b[i].clone()])
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact inverse as a dense row-major matrix of rationals.
pub fn inverse_rational(a: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let n = a.dim();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<BigRational> = (0..n).map(|i| rational(i64::from(i == j))).collect();
        cols.push(solve_rational(a, &e)?);
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(&a * &b, IntMatrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!((&a + &b).sum(), 12);
        assert_eq!((&a - &a), IntMatrix::zeros(2));
        assert_eq!(a.transpose().get(0, 1), 3);
        assert_eq!(a.trace(), 5);
        assert!(b.is_permutation());
        assert!(!a.is_permutation());
        assert_eq!(b.pow(2), IntMatrix::identity(2));
        assert_eq!(a.first_difference(&a.transpose()), Some((0, 1)));
        assert_eq!(a.mul_vec(&[1, 1]), vec![3, 7]);
    }

    #[test]
    fn solver() {
        let a = IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse_rational(&a).unwrap();
        let third = |n| BigRational::new(BigInt::from(n), BigInt::from(3));
        assert_eq!(
            inv,
            vec![vec![third(2), third(1)], vec![third(1), third(2)]]
        );
        assert!(solve_rational(&IntMatrix::zeros(2), &[rational(1), rational(1)]).is_none());
        // Needs a row swap.
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            solve_rational(&b, &[rational(5), rational(7)]).unwrap(),
            vec![rational(7), rational(5)]
        );
    }
}
