//! The Kac–Peterson modular S-matrix of su(3)_k, the Verlinde formula as a
//! floating-point oracle for fusion coefficients, and eigenvalues on the
//! real columns.

use std::f64::consts::PI;

use num::complex::Complex64;
use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::alcove::{alcove_index, Alcove, Level, Weight};
use crate::fusion_tables::{build_table, FusionTable};
use crate::genfun::build_boundaries;
use crate::report::Report;

pub const INTEGRALITY_TOL: f64 = 1e-6;
pub const IDENTITY_TOL: f64 = 1e-9;
pub const EIGEN_TOL: f64 = 1e-8;
pub const MAX_LEVEL: u32 = 24;

/// Signed images of `(a, b)` under the Weyl group, in Dynkin labels.
fn weyl_orbit(a: i64, b: i64) -> [(i64, i64, f64); 6] {
    [
        (a, b, 1.0),
        (-a, a + b, -1.0),
        (a + b, -b, -1.0),
        (-a - b, a, 1.0),
        (b, -a - b, 1.0),
        (-b, -a, -1.0),
    ]
}

/// `3⟨x, y⟩` for weights in Dynkin labels.
fn form3(x: (i64, i64), y: (i64, i64)) -> i64 {
    2 * x.0 * y.0 + x.0 * y.1 + x.1 * y.0 + 2 * x.1 * y.1
}

#[derive(Clone, Debug)]
pub struct SMatrix {
    alcove: Alcove,
    entries: Vec<Complex64>,
}

impl SMatrix {
    pub fn level(&self) -> Level {
        self.alcove.level()
    }

    pub fn dim(&self) -> usize {
        self.alcove.len()
    }

    pub fn alcove(&self) -> &Alcove {
        &self.alcove
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim() + j]
    }

    pub fn at(&self, lam: Weight, mu: Weight) -> Complex64 {
        self.get(alcove_index(lam), alcove_index(mu))
    }

    fn product(&self, other: &SMatrix, conj_rhs: bool) -> Vec<Complex64> {
        let n = self.dim();
        let mut out = vec![Complex64::zero(); n * n];
        out.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            for l in 0..n {
                let a = self.get(i, l);
                for (j, x) in row.iter_mut().enumerate() {
                    let b = if conj_rhs {
                        other.get(j, l).conj()
                    } else {
                        other.get(l, j)
                    };
                    *x += a * b;
                }
            }
        });
        out
    }

    /// `max |S Sᵀ* − 1|`.
    pub fn unitarity_error(&self) -> f64 {
        let n = self.dim();
        let p = self.product(self, true);
        (0..n * n)
            .map(|x| (p[x] - Complex64::from(f64::from(u8::from(x / n == x % n)))).norm())
            .fold(0.0, f64::max)
    }

    pub fn symmetry_error(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.get(i, j) - self.get(j, i)).norm())
            .fold(0.0, f64::max)
    }

    /// `max |S² − C|` with `C` the conjugation permutation.
    pub fn conjugation_error(&self) -> f64 {
        let n = self.dim();
        let s2 = self.product(self, false);
        let ws = self.alcove.weights();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let c = if ws[i].conjugate() == ws[j] { 1.0 } else { 0.0 };
                (s2[i * n + j] - Complex64::from(c)).norm()
            })
            .fold(0.0, f64::max)
    }

    /// `max |S⁴ − 1|`; follows from `S² = C` and `C² = 1`.
    pub fn order_four_error(&self) -> f64 {
        let n = self.dim();
        let s2 = self.product(self, false);
        let mut err: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let x: Complex64 = (0..n).map(|l| s2[i * n + l] * s2[l * n + j]).sum();
                let id = if i == j { 1.0 } else { 0.0 };
                err = err.max((x - Complex64::from(id)).norm());
            }
        }
        err
    }
}

pub fn s_matrix(level: Level) -> SMatrix {
    assert!(
        level.k() <= MAX_LEVEL,
        "numeric S-matrix is limited to k ≤ {MAX_LEVEL}"
    );
    let alcove = Alcove::new(level);
    let h = f64::from(level.h());
    let ws = alcove.weights().to_vec();
    let n = ws.len();
    let shifted = |w: Weight| (i64::from(w.l1) + 1, i64::from(w.l2) + 1);
    let norm = Complex64::new(0.0, 1.0) / (3f64.sqrt() * h);
    let mut entries: Vec<Complex64> = (0..n * n)
        .into_par_iter()
        .map(|x| {
            let (a, b) = (shifted(ws[x / n]), shifted(ws[x % n]));
            let sum: Complex64 = weyl_orbit(a.0, a.1)
                .iter()
                .map(|&(p, q, sign)| {
                    let phase = -2.0 * PI * form3((p, q), b) as f64 / (3.0 * h);
                    sign * Complex64::from_polar(1.0, phase)
                })
                .sum();
            norm * sum
        })
        .collect();
    let unit = entries[0] / entries[0].norm();
    for e in &mut entries {
        *e /= unit;
    }
    SMatrix { alcove, entries }
}

/// Verlinde's `Σ_σ S_λσ S_μσ S*_νσ / S_0σ` for one triple.
pub fn verlinde_coefficient(s: &SMatrix, lam: Weight, mu: Weight, nu: Weight) -> f64 {
    let (a, b, c) = (alcove_index(lam), alcove_index(mu), alcove_index(nu));
    let z: Complex64 = (0..s.dim())
        .map(|x| s.get(a, x) * s.get(b, x) * s.get(c, x).conj() / s.get(0, x))
        .sum();
    z.re
}

/// A fusion table computed from the S-matrix and rounded.
#[derive(Clone, Debug)]
pub struct VerlindeTable {
    pub table: FusionTable,
    /// Largest distance of a raw entry from its rounded value.
    pub max_deviation: f64,
}

pub fn verlinde_fusion(level: Level) -> VerlindeTable {
    let s = s_matrix(level);
    let n = s.dim();
    let ws = s.alcove().weights().to_vec();
    let raw: Vec<Vec<f64>> = ws
        .par_iter()
        .map(|&lam| {
            let li = alcove_index(lam);
            let ratio: Vec<Complex64> = (0..n).map(|x| s.get(li, x) / s.get(0, x)).collect();
            let mut m = vec![0.0; n * n];
            for i in 0..n {
                let row: Vec<Complex64> = (0..n).map(|x| s.get(i, x) * ratio[x]).collect();
                for j in 0..n {
                    let z: Complex64 = (0..n).map(|x| row[x] * s.get(j, x).conj()).sum();
                    m[i * n + j] = z.re;
                }
            }
            m
        })
        .collect();
    let max_deviation = raw
        .iter()
        .flatten()
        .map(|x| (x - x.round()).abs())
        .fold(0.0, f64::max);
    let table = FusionTable::from_fn(level, |l, i, j| raw[l][i * n + j].round() as i64);
    VerlindeTable {
        table,
        max_deviation,
    }
}

/// Eigenvalues of `Λ1`, `A`, `Λ`, `K` on the real weight `(μ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RealEigenvalues {
    pub mu: u32,
    pub lambda1: f64,
    pub a: f64,
    pub lambda: f64,
    pub k: f64,
}

pub fn lambda1_closed_form(level: Level, mu: u32) -> f64 {
    let h = f64::from(level.h());
    let s = (PI * f64::from(mu + 1) / h).sin();
    h / (4.0 * s * s)
}

pub fn a_closed_form(level: Level, mu: u32) -> f64 {
    let h = f64::from(level.h());
    6.0 - 2.0 * (1.0 + 2.0 * (2.0 * PI * f64::from(mu + 1) / h).cos())
}

fn three_sines(level: Level, mu: u32, w: Weight) -> f64 {
    let h = f64::from(level.h());
    let x = 2.0 * PI * f64::from(mu + 1) / h;
    (x * f64::from(w.l1 + w.l2 + 2)).sin()
        - (x * f64::from(w.l1 + 1)).sin()
        - (x * f64::from(w.l2 + 1)).sin()
}

/// Closed forms on the real columns against the S-matrix and the integer
/// matrices, plus vanishing row sums on complex rows.
pub fn real_column_checks(level: Level) -> (Vec<RealEigenvalues>, Report) {
    let k = level.k();
    let s = s_matrix(level);
    let n = s.dim();
    let ws = s.alcove().weights().to_vec();
    let table = build_table(level);
    let l1 = build_boundaries(&table).lambda1.at_one();
    let mut r = Report::new();
    let mut eig = Vec::new();
    let mut worst = [0.0f64; 5];

    for mu in 0..=k / 2 {
        let col = alcove_index(Weight::new(mu, mu));
        let s0 = s.get(0, col);
        let c = s0.re / three_sines(level, mu, Weight::ZERO);
        for (i, &w) in ws.iter().enumerate() {
            worst[0] = worst[0]
                .max((s.get(i, col) - Complex64::from(c * three_sines(level, mu, w))).norm());
        }

        let direct: Complex64 = (0..=k)
            .map(|a| s.at(Weight::new(a, 0), Weight::new(mu, mu)) / s0)
            .sum();
        let closed = lambda1_closed_form(level, mu);
        worst[1] = worst[1].max((direct - Complex64::from(closed)).norm());
        // Λ1(1,1) acting on the S-column.
        for i in 0..n {
            let lhs: Complex64 = (0..n).map(|j| (l1.get(i, j) as f64) * s.get(j, col)).sum();
            worst[2] = worst[2].max((lhs - s.get(i, col) * closed).norm() / closed);
        }

        let a_closed = a_closed_form(level, mu);
        if k > 0 {
            let a_direct = 6.0 - 2.0 * (s.at(Weight::new(1, 0), Weight::new(mu, mu)) / s0).re;
            worst[3] = worst[3].max((a_direct - a_closed).abs());
        }
        let lambda = 6.0 * closed;
        worst[4] = worst[4].max((a_closed * lambda - 12.0 * f64::from(level.h())).abs());
        eig.push(RealEigenvalues {
            mu,
            lambda1: closed,
            a: a_closed,
            lambda,
            k: 1.0 / a_closed,
        });
    }

    let mut rec = |name: &str, err: f64| {
        r.expect(name, err < EIGEN_TOL, || format!("max error {err:e}"));
    };
    rec("three-sine column", worst[0]);
    rec("ϖ(Λ1) from S", worst[1]);
    rec("ϖ(Λ1) as eigenvalue", worst[2]);
    rec("ϖ(A) from S", worst[3]);
    rec("ϖ(A)·ϖ(Λ) = 12(k+3)", worst[4]);

    let row_sum_err = ws
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_real())
        .map(|(i, _)| (0..n).map(|x| s.get(i, x)).sum::<Complex64>().norm())
        .fold(0.0, f64::max);
    r.expect(
        "Σ_x S_ix = 0 for complex i",
        row_sum_err < IDENTITY_TOL,
        || format!("max {row_sum_err:e}"),
    );
    (eig, r)
}

/// Unitarity, symmetry, `S² = C`, `S⁴ = 1`, Verlinde integrality and
/// agreement with the exact table.
pub fn modular_checks(level: Level) -> Report {
    let s = s_matrix(level);
    let mut r = Report::new();
    let mut tol =
        |name: &str, err: f64, t: f64| r.expect(name, err < t, || format!("max error {err:e}"));
    tol("unitarity", s.unitarity_error(), IDENTITY_TOL);
    tol("symmetry", s.symmetry_error(), IDENTITY_TOL);
    tol("S² = C", s.conjugation_error(), IDENTITY_TOL);
    tol("S⁴ = 1", s.order_four_error(), EIGEN_TOL);
    let v = verlinde_fusion(level);
    tol("Verlinde integrality", v.max_deviation, INTEGRALITY_TOL);
    let exact = build_table(level);
    let diff = exact
        .matrices()
        .iter()
        .zip(v.table.matrices())
        .find_map(|(a, b)| a.entries.first_difference(&b.entries).map(|d| (a.label, d)));
    let ws = exact.alcove().weights();
    r.record(
        "Verlinde = closed form",
        diff.map(|(l, (i, j))| format!("N_{l} at ({}, {})", ws[i], ws[j])),
    );
    r
}
