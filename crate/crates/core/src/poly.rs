//! Bivariate integer polynomials in `s, t` and polynomial matrices.
//!
//! A [`PolyMatrix`] is stored by monomial: each exponent pair `(i, j)` carries
//! an integer matrix, so `X(s,t) = Σ s^i t^j C_ij`. Products then reduce to
//! dense integer matrix products.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, Zero};
use serde::{Serialize, Serializer};

use crate::matrix::{rational, IntMatrix};

/// A polynomial `Σ c_ij s^i t^j` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), i64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), i64)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(c, i, j);
        }
        p
    }

    pub fn add_term(&mut self, c: i64, i: u32, j: u32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// `p(t, s)`.
    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.terms().map(|((i, j), c)| ((j, i), c)))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, x)| (e, x * c)))
    }

    /// Sum of coefficients, i.e. the value at `s = t = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn eval(&self, s: &BigRational, t: &BigRational) -> BigRational {
        self.terms().fold(BigRational::zero(), |acc, ((i, j), c)| {
            acc + rational(c) * num::pow(s.clone(), i as usize) * num::pow(t.clone(), j as usize)
        })
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(c, i, j);
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(-1)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ((i, j), a) in self.terms() {
            for ((p, q), b) in rhs.terms() {
                out.add_term(a * b, i + p, j + q);
            }
        }
        out
    }
}

/// Serialized as a map `"i,j" → coefficient`.
impl Serialize for Poly2 {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_map(self.terms().map(|((i, j), c)| (format!("{i},{j}"), c)))
    }
}

/// A square matrix with polynomial entries, stored as `Σ s^i t^j C_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    coeffs: BTreeMap<(u32, u32), IntMatrix>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::term(0, 0, IntMatrix::identity(n))
    }

    /// `s^i t^j M`.
    pub fn term(i: u32, j: u32, m: IntMatrix) -> Self {
        let mut p = Self::zero(m.dim());
        p.add_term(i, j, &m);
        p
    }

    /// `s^i t^j · 1` scaled by `c`.
    pub fn scalar(c: i64, i: u32, j: u32, n: usize) -> Self {
        Self::term(i, j, IntMatrix::identity(n).scale(c))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, i: u32, j: u32, m: &IntMatrix) {
        assert_eq!(m.dim(), self.n);
        if m.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&(i, j)) {
            Some(old) => old + m,
            None => m.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), sum);
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> IntMatrix {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(self.n))
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&(u32, u32), &IntMatrix)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(i, j)| i + j).max()
    }

    pub fn entry(&self, a: usize, b: usize) -> Poly2 {
        Poly2::from_terms(self.coeffs.iter().map(|(&e, m)| (e, m.get(a, b))))
    }

    pub fn transpose(&self) -> Self {
        self.map_coeffs(|_, m| Some(m.transpose()))
    }

    /// `M(t, s)`.
    pub fn swap_vars(&self) -> Self {
        self.map_exponents(|i, j| (j, i))
    }

    pub fn scale(&self, c: i64) -> Self {
        self.map_coeffs(|_, m| Some(m.scale(c)))
    }

    /// Left multiplication by a constant matrix.
    pub fn left_mul(&self, a: &IntMatrix) -> Self {
        self.map_coeffs(|_, m| Some(a * m))
    }

    /// Keeps only monomials satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(u32, u32) -> bool) -> Self {
        self.map_coeffs(|(i, j), m| keep(i, j).then(|| m.clone()))
    }

    /// Reindexes monomials; colliding images are summed.
    pub fn map_exponents(&self, f: impl Fn(u32, u32) -> (u32, u32)) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), m) in &self.coeffs {
            let (p, q) = f(i, j);
            out.add_term(p, q, m);
        }
        out
    }

    fn map_coeffs(&self, f: impl Fn((u32, u32), &IntMatrix) -> Option<IntMatrix>) -> Self {
        let mut out = Self::zero(self.n);
        for (&e, m) in &self.coeffs {
            if let Some(x) = f(e, m) {
                out.add_term(e.0, e.1, &x);
            }
        }
        out
    }

    /// `s^d M(1/s, t)` for an `M` of s-degree at most `d`.
    pub fn reverse_s(&self, d: u32) -> Self {
        self.map_exponents(|i, j| {
            assert!(i <= d, "s-degree {i} exceeds reversal degree {d}");
            (d - i, j)
        })
    }

    /// `s^d M(t/s, 0)` for an `M` in `s` alone.
    pub fn homogenize(&self, d: u32) -> Self {
        self.map_exponents(|i, j| {
            assert!(
                j == 0 && i <= d,
                "homogenize expects a polynomial in s of degree ≤ {d}"
            );
            (d - i, i)
        })
    }

    /// `M(t, 0)` read as a polynomial in `t`, for an `M` in `s` alone.
    pub fn s_to_t(&self) -> Self {
        self.map_exponents(|i, j| {
            assert_eq!(j, 0, "s_to_t expects a polynomial in s");
            (0, i)
        })
    }

    /// Value at `s = t = 1`.
    pub fn at_one(&self) -> IntMatrix {
        self.coeffs
            .values()
            .fold(IntMatrix::zeros(self.n), |acc, m| &acc + m)
    }

    /// First monomial and entry at which the two sides differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<((u32, u32), (usize, usize))> {
        let diff = self - other;
        let (&e, m) = diff.coeffs.iter().next()?;
        let pos = m
            .first_difference(&IntMatrix::zeros(self.n))
            .expect("stored coefficient is non-zero");
        Some((e, pos))
    }

    pub fn entries_json(&self) -> Vec<Vec<Poly2>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.entry(a, b)).collect())
            .collect()
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        let mut out = self.clone();
        for (&(i, j), m) in &rhs.coeffs {
            out.add_term(i, j, m);
        }
        out
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self + &(-rhs)
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.scale(-1)
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n);
        let mut out = PolyMatrix::zero(self.n);
        for (&(i, j), a) in &self.coeffs {
            for (&(p, q), b) in &rhs.coeffs {
                out.add_term(i + p, j + q, &(a * b));
            }
        }
        out
    }
}

/// Sums scalar-polynomial multiples of constant matrices:
/// `Σ c · s^i t^j · M`.
pub fn combination(n: usize, terms: &[(i64, u32, u32, &IntMatrix)]) -> PolyMatrix {
    let mut out = PolyMatrix::zero(n);
    for &(c, i, j, m) in terms {
        out.add_term(i, j, &m.scale(c));
    }
    out
}
