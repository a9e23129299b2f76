//! Sums of matrix entries over fusion data, generalizing the
//! Freudenthal–de Vries formula, and the SU(2) nimreps on ADE diagrams.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use crate::alcove::Level;
use crate::error::{Error, Result};
use crate::fusion_tables::{build_table, FusionTable};
use crate::genfun::{build_boundaries, build_x, chebyshev_sequence};
use crate::matrix::{inverse_rational, rational, solve_rational, IntMatrix};
use crate::poly::Poly2;
use crate::report::Report;

/// `ΣM`: the sum of all entries, `Tr(M U)`.
pub fn sigma(m: &IntMatrix) -> i64 {
    m.sum()
}

pub fn sigma_rational(m: &[Vec<BigRational>]) -> BigRational {
    m.iter()
        .flatten()
        .fold(BigRational::zero(), |acc, x| acc + x)
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn rising(k: u32, from: i64, to: i64) -> BigInt {
    (from..=to)
        .map(|j| BigInt::from(i64::from(k) + j))
        .product()
}

pub fn sigma_x_formula(k: u32) -> BigRational {
    let h = i64::from(k) + 3;
    BigRational::new(
        rising(k, 1, 5) * BigInt::from(h * h + 5),
        BigInt::from(1680),
    )
}

pub fn sigma_gx_formula(k: u32) -> BigRational {
    BigRational::new(rising(k, 0, 6), BigInt::from(560))
}

pub fn sigma_lambda_formula(k: u32) -> BigRational {
    BigRational::new(rising(k, 1, 5), BigInt::from(20))
}

pub fn sigma_k_formula(k: u32) -> BigRational {
    BigRational::new(rising(k, 1, 2) * rising(k, 4, 5), BigInt::from(240))
}

/// Direct and closed-form values of the SU(3) sums at one level.
#[derive(Clone, Debug, Serialize)]
pub struct Su3Sums {
    pub k: u32,
    pub sigma_x: i64,
    pub sigma_gx: i64,
    pub sigma_gtx: i64,
    pub sigma_lambda: i64,
    #[serde(serialize_with = "ser_rational")]
    pub sigma_k: BigRational,
    pub report: Report,
}

fn ser_rational<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl Su3Sums {
    pub fn matches(&self, name: &str) -> bool {
        self.report.get(name).is_some_and(|c| c.passed())
    }

    pub fn tsv_header() -> &'static str {
        "k\tSX\tSGX\tSL\tSK\tSX_ok\tSGX_ok\tSL_ok\tSK_ok"
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.k,
            self.sigma_x,
            self.sigma_gx,
            self.sigma_lambda,
            self.sigma_k,
            self.matches("ΣX"),
            self.matches("ΣGX"),
            self.matches("ΣΛ"),
            self.matches("ΣK")
        )
    }
}

impl fmt::Display for Su3Sums {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |n| if self.matches(n) { "✓" } else { "✗" };
        write!(
            f,
            "k={}: ΣX {} ΣGX {} ΣΛ {} ΣK {}",
            self.k,
            mark("ΣX"),
            mark("ΣGX"),
            mark("ΣΛ"),
            mark("ΣK")
        )
    }
}

/// `A = 6·1 − G − Gᵀ`.
pub fn a_matrix(table: &FusionTable) -> IntMatrix {
    &(&IntMatrix::identity(table.dim()).scale(6) - &table.g()) - &table.g_t()
}

pub fn su3_sums(level: Level) -> Su3Sums {
    let k = level.k();
    let table = build_table(level);
    let n = table.dim();
    let x = build_x(&table).at_one();
    let b = build_boundaries(&table);
    let lam = (&(&b.lambda1 + &b.lambda2) + &b.lambda3).at_one().scale(2);
    let (g, g_t) = (table.g(), table.g_t());
    let a = a_matrix(&table);
    let ones: Vec<BigRational> = vec![BigRational::one(); n];
    // K U has every column equal to K·1.
    let k_ones = solve_rational(&a, &ones).expect("A is invertible");
    let sigma_k = k_ones.iter().fold(BigRational::zero(), |acc, y| acc + y);

    let sigma_x = sigma(&x);
    let sigma_gx = sigma(&(&g * &x));
    let sigma_gtx = sigma(&(&g_t * &x));
    let sigma_lambda = sigma(&lam);

    let mut r = Report::new();
    let mut cmp = |name: &str, got: BigRational, want: BigRational| {
        r.expect(name, got == want, || {
            format!("direct {got}, formula {want}")
        });
    };
    cmp("ΣX", rational(sigma_x), sigma_x_formula(k));
    cmp("ΣGX", rational(sigma_gx), sigma_gx_formula(k));
    cmp("ΣΛ", rational(sigma_lambda), sigma_lambda_formula(k));
    cmp("ΣK", sigma_k.clone(), sigma_k_formula(k));
    cmp("ΣGᵀX = ΣGX", rational(sigma_gtx), rational(sigma_gx));
    cmp(
        "6ΣX − ΣGX − ΣGᵀX = ΣΛ",
        rational(6 * sigma_x - sigma_gx - sigma_gtx),
        rational(sigma_lambda),
    );

    let scale = rational(12 * (i64::from(k) + 3));
    let lu = lam.row_sums();
    let bad = (0..n).find(|&i| rational(lu[i]) != &scale * &k_ones[i]);
    let labels = table.alcove().weights();
    r.record("ΛU = 12(k+3)KU", bad.map(|i| format!("row {}", labels[i])));

    let p = table.p();
    let u = IntMatrix::from_fn(n, |_, _| 1);
    r.expect("PU = UP = U", (p * &u) == u && (&u * p) == u, || {
        "P is not stochastic".into()
    });

    Su3Sums {
        k,
        sigma_x,
        sigma_gx,
        sigma_gtx,
        sigma_lambda,
        sigma_k,
        report: r,
    }
}

/// `ΣΛ1(s) = Σ_p (k+2−p)(k+1−p)(1+p)(2+p)/4 · s^p`, checked against the
/// entry sums of `N_(p,0)` and against `binomial(k+5, 5)` at `s = 1`.
pub fn sigma_lambda1_poly(level: Level) -> (Poly2, Report) {
    let k = i64::from(level.k());
    let poly = Poly2::from_terms((0..=k).map(|p| {
        (
            (p as u32, 0),
            (k + 2 - p) * (k + 1 - p) * (1 + p) * (2 + p) / 4,
        )
    }));
    let mut r = Report::new();
    let table = build_table(level);
    let direct = Poly2::from_terms(
        build_boundaries(&table)
            .lambda1
            .monomials()
            .map(|(&e, m)| (e, m.sum())),
    );
    r.expect("ΣΛ1(s) = Tr(Λ1(s) U)", direct == poly, || {
        "coefficient mismatch".into()
    });
    let binom = (1..=5).fold(BigInt::one(), |acc, j| acc * BigInt::from(k + j)) / BigInt::from(120);
    r.expect(
        "ΣΛ1(1) = binomial(k+5, 5)",
        BigInt::from(poly.at_one()) == binom,
        || format!("{} vs {binom}", poly.at_one()),
    );
    (poly, r)
}

/// Direct and closed-form `ΣX(s,t)`, `ΣGX(s,t)` at a point off `s = 1`, `t = 1`, `s = t`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratingSums {
    pub direct_x: BigRational,
    pub formula_x: BigRational,
    pub direct_gx: BigRational,
    pub formula_gx: BigRational,
}

pub fn generating_sums_at(level: Level, s: &BigRational, t: &BigRational) -> GeneratingSums {
    let k = level.k();
    let table = build_table(level);
    let g = table.g();
    let pw = |x: &BigRational, e: u32| num::pow(x.clone(), e as usize);
    let mut direct_x = BigRational::zero();
    let mut direct_gx = BigRational::zero();
    for m in table.matrices() {
        let mono = pw(s, m.label.l1) * pw(t, m.label.l2);
        direct_x += &mono * rational(m.entries.sum());
        direct_gx += &mono * rational((&g * &m.entries).sum());
    }
    let (poly, _) = sigma_lambda1_poly(level);
    let l1 = |x: &BigRational| poly.eval(x, &BigRational::one());
    let one = BigRational::one();
    let ts = t / s;
    let inv_t = &one / t;
    let den = (s - &one) * (s - t) * (t - &one);
    let formula_x = (l1(s) * (&one - s) * s
        + l1(&ts) * pw(s, k + 1) * t * (s - t)
        + l1(&inv_t) * pw(t, k + 1) * (t - &one))
        / &den;
    let formula_gx = (l1(s) * (&one - pw(s, 3))
        + l1(&inv_t) * pw(t, k) * (pw(t, 3) - &one)
        + l1(&ts) * pw(s, k) * (pw(s, 3) - pw(t, 3)))
        / &den;
    GeneratingSums {
        direct_x,
        formula_x,
        direct_gx,
        formula_gx,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiagramKind {
    A,
    D,
    E,
}

/// A simply-laced Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinDiagram {
    pub kind: DiagramKind,
    pub rank: usize,
    pub cartan: IntMatrix,
    pub coxeter: u32,
    pub dual_coxeter: u32,
}

impl DynkinDiagram {
    fn from_edges(kind: DiagramKind, rank: usize, edges: &[(usize, usize)], coxeter: u32) -> Self {
        let mut cartan = IntMatrix::identity(rank).scale(2);
        for &(a, b) in edges {
            cartan.set(a, b, -1);
            cartan.set(b, a, -1);
        }
        DynkinDiagram {
            kind,
            rank,
            cartan,
            coxeter,
            dual_coxeter: coxeter,
        }
    }

    fn chain(n: usize) -> Vec<(usize, usize)> {
        (1..n).map(|i| (i - 1, i)).collect()
    }

    pub fn a(r: usize) -> Self {
        assert!(r >= 1);
        Self::from_edges(DiagramKind::A, r, &Self::chain(r), r as u32 + 1)
    }

    pub fn d(r: usize) -> Self {
        assert!(r >= 4);
        let mut edges = Self::chain(r - 1);
        edges.push((r - 3, r - 1));
        Self::from_edges(DiagramKind::D, r, &edges, 2 * r as u32 - 2)
    }

    pub fn e(r: usize) -> Self {
        let coxeter = match r {
            6 => 12,
            7 => 18,
            8 => 30,
            _ => panic!("E{r} is not a Dynkin diagram"),
        };
        let mut edges = Self::chain(r - 1);
        edges.push((2, r - 1));
        Self::from_edges(DiagramKind::E, r, &edges, coxeter)
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.kind, self.rank)
    }

    pub fn adjacency(&self) -> IntMatrix {
        &IntMatrix::identity(self.rank).scale(2) - &self.cartan
    }

    /// The ADE diagrams of rank at most `max_rank` (E up to E8).
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinDiagram> {
        let mut out: Vec<_> = (1..=max_rank).map(Self::a).collect();
        out.extend((4..=max_rank).map(Self::d));
        out.extend((6..=max_rank.min(8)).map(Self::e));
        out
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || Error::UnsupportedDiagram(s.to_string());
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let r: usize = tail
            .trim_start_matches('_')
            .parse()
            .map_err(|_| unsupported())?;
        match head.to_ascii_uppercase().as_str() {
            "A" if r >= 1 => Ok(Self::a(r)),
            "D" if r >= 4 => Ok(Self::d(r)),
            "E" if (6..=8).contains(&r) => Ok(Self::e(r)),
            _ => Err(unsupported()),
        }
    }
}

/// Essential-path statistics of a diagram.
#[derive(Clone, Debug, Serialize)]
pub struct PathStats {
    pub diagram: String,
    pub d_lambda: Vec<i64>,
    pub d_h: i64,
    pub d_b: i64,
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    #[serde(serialize_with = "ser_rational")]
    pub sigma_k: BigRational,
    /// Whether `Xᵀ = KΛ` holds with `Λ = F_0 + F_{r−1}`.
    pub literal_index_holds: bool,
    pub report: Report,
}

fn rational_matrix_eq(a: &[Vec<BigRational>], b: &IntMatrix) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| *x == rational(b.get(i, j)))
    })
}

fn rational_mul(k: &[Vec<BigRational>], m: &IntMatrix) -> Vec<Vec<BigRational>> {
    let n = m.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(BigRational::zero(), |acc, l| {
                        acc + &k[i][l] * rational(m.get(l, j))
                    })
                })
                .collect()
        })
        .collect()
}

pub fn su2_path_stats(d: &DynkinDiagram) -> PathStats {
    let r = d.rank;
    let g = d.coxeter as usize;
    let f = chebyshev_sequence(&d.adjacency(), g - 1);
    let x = f.iter().fold(IntMatrix::zeros(r), |acc, m| &acc + m);
    let d_lambda: Vec<i64> = f.iter().map(IntMatrix::sum).collect();
    let d_h: i64 = d_lambda.iter().sum();
    let d_b: i64 = d_lambda.iter().map(|x| x * x).sum();
    let u = x.row_sums();
    let v = x.col_sums();
    let k_inv = inverse_rational(&d.cartan).expect("Cartan matrix is invertible");
    let sigma_k = sigma_rational(&k_inv);

    let xt = x.transpose();
    let literal = &f[0] + &f[r - 1];
    let top = &f[0] + &f[g - 2];
    let literal_index_holds = rational_matrix_eq(&rational_mul(&k_inv, &literal), &xt);

    let mut rep = Report::new();
    let (gg, rr) = (d.coxeter as i64, r as i64);
    rep.expect(
        "d_H = Σu = Σv",
        u.iter().sum::<i64>() == d_h && v.iter().sum::<i64>() == d_h,
        || "path counts disagree".into(),
    );
    rep.expect("d_H = g(g+1)r/6", 6 * d_h == gg * (gg + 1) * rr, || {
        format!("d_H = {d_h}")
    });
    rep.expect(
        "ΣK = g(g+1)r/12",
        sigma_k == ratio(i64::from(d.dual_coxeter) * (gg + 1) * rr, 12),
        || format!("ΣK = {sigma_k}"),
    );
    rep.expect(
        "d_H = 2ΣK",
        rational(d_h) == &sigma_k * rational(2),
        || format!("ΣK = {sigma_k}"),
    );
    rep.expect(
        "F_λ ≥ 0",
        f.iter().all(|m| m.rows().iter().flatten().all(|&x| x >= 0)),
        || "negative entry".into(),
    );
    if d.kind == DiagramKind::A {
        rep.expect(
            "Xᵀ = KΛ, Λ = F_0 + F_{r−1}",
            literal_index_holds,
            || "mismatch".into(),
        );
        rep.expect(
            "F_{r−1} is a permutation",
            f[r - 1].is_permutation(),
            || "not a permutation".into(),
        );
    }
    rep.expect(
        "Xᵀ = KΛ, Λ = F_0 + F_{g−2}",
        rational_matrix_eq(&rational_mul(&k_inv, &top), &xt),
        || "mismatch".into(),
    );
    rep.expect(
        "F_{g−2} is a permutation",
        f[g - 2].is_permutation(),
        || "not a permutation".into(),
    );

    PathStats {
        diagram: d.name(),
        d_lambda,
        d_h,
        d_b,
        u,
        v,
        sigma_k,
        literal_index_holds,
        report: rep,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_basics() {
        assert_eq!(sigma(&IntMatrix::identity(3)), 3);
        assert_eq!(sigma(&IntMatrix::from_fn(3, |_, _| 1)), 9);
        let t = build_table(Level::new(1));
        assert_eq!(sigma(&build_x(&t).at_one()), 9);
    }

    #[test]
    fn small_level_sums() {
        let s = su3_sums(Level::new(1));
        assert_eq!((s.sigma_x, s.sigma_lambda, s.sigma_gx), (9, 36, 9));
        assert_eq!(s.sigma_k, ratio(3, 4));
        assert!(s.report.passed(), "{}", s.report);

        let s = su3_sums(Level::new(0));
        assert_eq!(s.sigma_k, ratio(1, 6));
        assert_eq!(sigma_k_formula(0), ratio(1, 6));
        assert!(s.report.passed(), "{}", s.report);

        let s = su3_sums(Level::new(5));
        assert_eq!(s.sigma_x, 6 * 7 * 8 * 9 * 10 * 69 / 1680);
        assert!(s.report.passed(), "{}", s.report);
        assert_eq!(s.to_string(), "k=5: ΣX ✓ ΣGX ✓ ΣΛ ✓ ΣK ✓");
    }

    #[test]
    fn sums_through_level_eight() {
        for k in 0..=8 {
            let s = su3_sums(Level::new(k));
            assert!(s.report.passed(), "k={k}\n{}", s.report);
        }
    }

    #[test]
    fn lambda1_poly() {
        let (p, r) = sigma_lambda1_poly(Level::new(1));
        assert_eq!(p, Poly2::from_terms([((0, 0), 3), ((1, 0), 3)]));
        assert!(r.passed());
        let (p, r) = sigma_lambda1_poly(Level::new(0));
        assert_eq!(p, Poly2::constant(1));
        assert!(r.passed());
        let (p, r) = sigma_lambda1_poly(Level::new(4));
        assert_eq!(p.at_one(), 126);
        assert!(r.passed());
    }

    #[test]
    fn generating_sums_at_a_point() {
        for k in [1, 3, 5] {
            let g = generating_sums_at(Level::new(k), &ratio(3, 2), &ratio(2, 7));
            assert_eq!(g.direct_x, g.formula_x, "k={k}");
            assert_eq!(g.direct_gx, g.formula_gx, "k={k}");
        }
    }

    #[test]
    fn diagrams() {
        let e6 = DynkinDiagram::e(6);
        assert_eq!(e6.adjacency().sum(), 10);
        assert_eq!("E6".parse::<DynkinDiagram>().unwrap(), e6);
        assert_eq!("D_5".parse::<DynkinDiagram>().unwrap(), DynkinDiagram::d(5));
        assert!(matches!(
            "B3".parse::<DynkinDiagram>(),
            Err(Error::UnsupportedDiagram(_))
        ));
        assert!("E9".parse::<DynkinDiagram>().is_err());
        assert_eq!(DynkinDiagram::all_up_to(8).len(), 8 + 5 + 3);
    }

    #[test]
    fn path_stats_examples() {
        let a2 = su2_path_stats(&DynkinDiagram::a(2));
        assert_eq!(a2.d_h, 4);
        assert_eq!(a2.d_b, 8);
        assert!(a2.report.passed());
        let e6 = su2_path_stats(&DynkinDiagram::e(6));
        assert_eq!(e6.d_h, 156);
        assert_eq!(e6.d_b, 2512);
        assert!(e6.report.passed(), "{}", e6.report);
        assert!(!e6.literal_index_holds);
        for k in 0..=12u32 {
            let s = su2_path_stats(&DynkinDiagram::a(k as usize + 1));
            assert_eq!(s.d_h, i64::from((k + 1) * (k + 2) * (k + 3) / 6));
            assert!(s.literal_index_holds);
        }
    }

    #[test]
    fn all_ade_diagrams() {
        for d in DynkinDiagram::all_up_to(12)
            .into_iter()
            .filter(|d| d.kind == DiagramKind::A || d.rank <= 8)
        {
            let s = su2_path_stats(&d);
            assert!(s.report.passed(), "{}\n{}", d.name(), s.report);
            assert_eq!(
                s.literal_index_holds,
                d.kind == DiagramKind::A,
                "{}",
                d.name()
            );
        }
    }
}
