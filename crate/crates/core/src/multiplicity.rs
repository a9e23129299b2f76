//! Classical and level-k multiplicities of su(3) branchings `λ ⊗ μ → ν`.
//!
//! Everything here is a closed form in the Dynkin labels: the admissibility
//! test (triality plus the Wesslén inequalities), the threshold pair
//! `(k0_min, k0_max)` and the resulting ramp `N^(k) = k − k0_min + 1` clipped
//! to `[0, N^∞]`. The semimagic-square algorithm is an independent route to
//! the same numbers and is kept separate so the two can be compared.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alcove::{Level, Truncation, Weight, RHO};
use crate::error::{Error, Result};

/// A branching `λ ⊗ μ → ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub lam: Weight,
    pub mu: Weight,
    pub nu: Weight,
}

impl Triple {
    pub const fn new(lam: Weight, mu: Weight, nu: Weight) -> Self {
        Triple { lam, mu, nu }
    }

    /// `(μ, λ; ν)`.
    pub fn swapped(self) -> Triple {
        Triple::new(self.mu, self.lam, self.nu)
    }

    /// `(λ̄, μ̄; ν̄)`.
    pub fn conjugated(self) -> Triple {
        Triple::new(
            self.lam.conjugate(),
            self.mu.conjugate(),
            self.nu.conjugate(),
        )
    }

    /// The Frobenius move `(λ, μ; ν) → (λ, ν̄; μ̄)`.
    pub fn frobenius(self) -> Triple {
        Triple::new(self.lam, self.nu.conjugate(), self.mu.conjugate())
    }

    /// Permutes the three factors of `λ ⊗ μ ⊗ ν̄ → 1`; `perm[i]` names the
    /// factor moved into slot `i`.
    pub fn permuted(self, perm: [usize; 3]) -> Triple {
        let factors = [self.lam, self.mu, self.nu.conjugate()];
        Triple::new(
            factors[perm[0]],
            factors[perm[1]],
            factors[perm[2]].conjugate(),
        )
    }

    pub fn max_norm(self) -> u32 {
        self.lam.norm().max(self.mu.norm()).max(self.nu.norm())
    }

    fn labels(self) -> [i64; 6] {
        let (l1, l2) = self.lam.signed();
        let (m1, m2) = self.mu.signed();
        let (n1, n2) = self.nu.signed();
        [l1, l2, m1, m2, n1, n2]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.lam, self.mu, self.nu)
    }
}

/// Parses `"l1,l2/m1,m2/n1,n2"`.
impl FromStr for Triple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('/').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Parse(format!(
                "expected triple \"λ/μ/ν\", got {s:?}"
            )));
        };
        Ok(Triple::new(a.parse()?, b.parse()?, c.parse()?))
    }
}

/// The levels at which a branching first appears and reaches its classical value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThresholdPair {
    pub k0_min: u32,
    pub k0_max: u32,
}

impl ThresholdPair {
    pub fn multiplicity(self) -> u32 {
        self.k0_max - self.k0_min + 1
    }

    /// The ramp value at level `k`.
    pub fn at(self, k: u32) -> u32 {
        if k < self.k0_min {
            0
        } else {
            (k - self.k0_min + 1).min(self.multiplicity())
        }
    }

    pub fn at_truncation(self, trunc: Truncation) -> u32 {
        match trunc {
            Truncation::Finite(l) => self.at(l.k()),
            Truncation::Classical => self.multiplicity(),
        }
    }

    /// The levels at which the individual couplings appear.
    pub fn levels(self) -> std::ops::RangeInclusive<u32> {
        self.k0_min..=self.k0_max
    }
}

pub fn triality_conserved(t: Triple) -> bool {
    (t.lam.triality() + t.mu.triality() + 3 - t.nu.triality()).is_multiple_of(3)
}

/// The Wesslén inequalities on ν for fixed λ, μ.
fn wessleen_inequalities(t: Triple) -> bool {
    let [l1, l2, m1, m2, n1, n2] = t.labels();
    let a = 2 * n1 + n2;
    let b = n1 + 2 * n2;
    let c = n1 - n2;
    let lo_a = (2 * m1 + m2 - l1 - 2 * l2)
        .max(2 * l1 + l2 - m1 - 2 * m2)
        .max(l2 - l1 + m2 - m1);
    let lo_b = (l1 + 2 * l2 - 2 * m1 - m2)
        .max(m1 + 2 * m2 - 2 * l1 - l2)
        .max(l1 - l2 + m1 - m2);
    let lo_c = (m1 - m2 - 2 * l1 - l2).max(l1 - l2 - 2 * m1 - m2);
    let hi_c = (l1 - l2 + m1 + 2 * m2).min(l1 + 2 * l2 + m1 - m2);
    (lo_a..=2 * l1 + l2 + 2 * m1 + m2).contains(&a)
        && (lo_b..=l1 + 2 * l2 + m1 + 2 * m2).contains(&b)
        && (lo_c..=hi_c).contains(&c)
}

/// Classical admissibility: triality selection and the Wesslén inequalities.
pub fn is_admissible(t: Triple) -> bool {
    triality_conserved(t) && wessleen_inequalities(t)
}

/// The nine arguments of the `k0_min` maximum, each scaled by 3.
fn k0_min_terms(t: Triple) -> [i64; 9] {
    let [l1, l2, m1, m2, n1, n2] = t.labels();
    [
        3 * (l1 + l2),
        l1 - l2 + m1 + 2 * m2 + 2 * n1 + n2,
        -l1 + l2 + 2 * m1 + m2 + n1 + 2 * n2,
        3 * (m1 + m2),
        2 * l1 + l2 - m1 + m2 + n1 + 2 * n2,
        l1 + 2 * l2 + m1 - m2 + 2 * n1 + n2,
        3 * (n1 + n2),
        l1 + 2 * l2 + m1 + 2 * m2 - n1 + n2,
        2 * l1 + l2 + 2 * m1 + m2 + n1 - n2,
    ]
}

/// The two arguments of the `k0_max` minimum, each scaled by 3.
fn k0_max_terms(t: Triple) -> [i64; 2] {
    let [l1, l2, m1, m2, n1, n2] = t.labels();
    [
        2 * l1 + l2 + 2 * m1 + m2 + n1 + 2 * n2,
        l1 + 2 * l2 + m1 + 2 * m2 + 2 * n1 + n2,
    ]
}

fn exact_third(x: i64) -> u32 {
    assert!(
        x % 3 == 0 && x >= 0,
        "threshold numerator {x} not a non-negative multiple of 3"
    );
    (x / 3) as u32
}

/// Threshold pair of an admissible triple.
pub fn thresholds(t: Triple) -> Result<ThresholdPair> {
    if !is_admissible(t) {
        return Err(Error::NotAdmissible(t));
    }
    let lo = exact_third(*k0_min_terms(t).iter().max().unwrap());
    let hi = exact_third(*k0_max_terms(t).iter().min().unwrap());
    debug_assert!(lo <= hi, "k0_min > k0_max for admissible {t}");
    Ok(ThresholdPair {
        k0_min: lo,
        k0_max: hi,
    })
}

pub fn k0_min(t: Triple) -> Result<u32> {
    thresholds(t).map(|p| p.k0_min)
}

pub fn k0_max(t: Triple) -> Result<u32> {
    thresholds(t).map(|p| p.k0_max)
}

/// `(k_min, k_max)` for the pair: below `k_min` a factor is not integrable,
/// above `k_max` the product is classical.
pub fn pair_bounds(lam: Weight, mu: Weight) -> (u32, u32) {
    (lam.norm().max(mu.norm()), lam.norm() + mu.norm())
}

pub fn classical_multiplicity(t: Triple) -> u32 {
    thresholds(t).map_or(0, ThresholdPair::multiplicity)
}

/// Level-k fusion coefficient; zero for inadmissible or non-integrable input.
pub fn fusion_coefficient(t: Triple, k: Level) -> u32 {
    thresholds(t).map_or(0, |p| p.at(k.k()))
}

pub fn multiplicity_at(t: Triple, trunc: Truncation) -> u32 {
    thresholds(t).map_or(0, |p| p.at_truncation(trunc))
}

/// A 3×3 semimagic square: every row and column sums to `magic`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemimagicTableau {
    pub rows: [[i64; 3]; 3],
    pub magic: i64,
    pub shift: i64,
    pub min_entry: i64,
}

impl SemimagicTableau {
    pub fn is_semimagic(&self) -> bool {
        (0..3).all(|i| {
            self.rows[i].iter().sum::<i64>() == self.magic
                && self.rows.iter().map(|r| r[i]).sum::<i64>() == self.magic
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemimagicOutcome {
    pub multiplicity: u32,
    /// Absent when `S1 − S2` is not a multiple of 3.
    pub tableau: Option<SemimagicTableau>,
    /// `(S + x − c, S + x)`; present when the multiplicity is non-zero.
    pub thresholds: Option<ThresholdPair>,
}

impl SemimagicOutcome {
    pub fn at_level(&self, k: u32) -> u32 {
        self.thresholds.map_or(0, |p| p.at(k))
    }
}

/// Multiplicity and thresholds of `λ ⊗ μ → ν` from the semimagic square
/// built on `λ ⊗ μ ⊗ ν̄`.
pub fn semimagic_multiplicity(t: Triple) -> SemimagicOutcome {
    let (l1, l2) = t.lam.signed();
    let (m1, m2) = t.mu.signed();
    let (nb1, nb2) = t.nu.conjugate().signed();
    let s1 = l1 + m1 + nb1;
    let s2 = l2 + m2 + nb2;
    let none = SemimagicOutcome {
        multiplicity: 0,
        tableau: None,
        thresholds: None,
    };
    if (s1 - s2) % 3 != 0 {
        return none;
    }
    let x = (s1 - s2).abs() / 3;
    let (dx1, dx2) = if s1 >= s2 { (x, 0) } else { (0, x) };
    let cols = [
        (l1 - dx1, l2 - dx2),
        (m1 - dx1, m2 - dx2),
        (nb1 - dx1, nb2 - dx2),
    ];
    let s = s1.min(s2);
    let top = [cols[0].0, cols[1].0, cols[2].0];
    let mid = [cols[0].1, cols[1].1, cols[2].1];
    let bottom = [
        s - top[0] - mid[0],
        s - top[1] - mid[1],
        s - top[2] - mid[2],
    ];
    let rows = [top, mid, bottom];
    let c = rows.iter().flatten().copied().min().unwrap();
    let tableau = SemimagicTableau {
        rows,
        magic: s,
        shift: x,
        min_entry: c,
    };
    debug_assert!(tableau.is_semimagic());
    if c < 0 {
        return SemimagicOutcome {
            tableau: Some(tableau),
            ..none
        };
    }
    SemimagicOutcome {
        multiplicity: (c + 1) as u32,
        tableau: Some(tableau),
        thresholds: Some(ThresholdPair {
            k0_min: (s + x - c) as u32,
            k0_max: (s + x) as u32,
        }),
    }
}

/// Which of the level-k cuts a weight ν satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BmwCuts {
    pub level_line: bool,
    pub first_sum: bool,
    pub second_sum: bool,
    pub diff_lower: bool,
    pub diff_upper: bool,
}

impl BmwCuts {
    pub fn all(self) -> bool {
        self.level_line && self.first_sum && self.second_sum && self.diff_lower && self.diff_upper
    }
}

pub fn bmw_cuts(t: Triple, k: Level) -> BmwCuts {
    let [l1, l2, m1, m2, n1, n2] = t.labels();
    let k3 = 3 * i64::from(k.k());
    BmwCuts {
        level_line: n1 + n2 <= i64::from(k.k()),
        first_sum: 2 * n1 + n2 <= (k3 - l1 + l2 - m1 - 2 * m2).min(k3 - l1 - 2 * l2 - m1 + m2),
        second_sum: n1 + 2 * n2 <= (k3 - 2 * l1 - l2 + m1 - m2).min(k3 + l1 - l2 - 2 * m1 - m2),
        diff_lower: -k3 + l1 + 2 * l2 + m1 + 2 * m2 <= n1 - n2,
        diff_upper: n1 - n2 <= k3 - 2 * l1 - l2 - 2 * m1 - m2,
    }
}

/// Levels above which the cuts on `2ν1 + ν2`, `ν1 + 2ν2`, and the lower and
/// upper bounds on `ν1 − ν2` are automatically
/// satisfied on the classical domain, for `λ1 ≥ max(λ2, μ1, μ2)`.
pub fn bmw_dominance_levels(lam: Weight, mu: Weight) -> [u32; 4] {
    [
        lam.l1 + mu.l1 + lam.l2.max(mu.l2),
        lam.l1 + lam.l2 + mu.l2,
        lam.l2 + mu.l1 + mu.l2,
        lam.l1 + mu.l1 + lam.l2.min(mu.l2),
    ]
}

/// `λ1 ≥ max(λ2, μ1, μ2)`.
pub fn in_standard_position(lam: Weight, mu: Weight) -> bool {
    lam.l1 >= lam.l2.max(mu.l1).max(mu.l2)
}

/// Three of the vertices of the classical domain in the ν-plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WessleenVertices {
    pub v1: (i64, i64),
    pub v2: (i64, i64),
    pub v8: (i64, i64),
}

pub fn wessleen_vertices(lam: Weight, mu: Weight) -> Option<WessleenVertices> {
    if !in_standard_position(lam, mu) {
        return None;
    }
    let (l1, l2) = lam.signed();
    let (m1, m2) = mu.signed();
    let m = l2.min(m2);
    Some(WessleenVertices {
        v1: (l1 + m1, l2 + m2),
        v2: (l1 + m1 + m, l2 + m2 - 2 * m),
        v8: (l1 - m1, l2 + m1 + m2),
    })
}

/// Every ν in `λ ⊗ μ` (or `λ ⋆_k μ`) with its multiplicity, in canonical order.
///
/// At finite level the support is computed twice, once by the BMW cuts and
/// once from the threshold ramp, and the two must agree.
pub fn wessleen_domain(lam: Weight, mu: Weight, trunc: Truncation) -> Vec<(Weight, u32)> {
    let bound = lam.norm() + mu.norm();
    let (k_min, _) = pair_bounds(lam, mu);
    let candidates = (0..=bound).flat_map(|n| (0..=n).map(move |n2| Weight::new(n - n2, n2)));
    let mut out = Vec::new();
    for nu in candidates {
        let t = Triple::new(lam, mu, nu);
        let Ok(p) = thresholds(t) else { continue };
        match trunc {
            Truncation::Classical => out.push((nu, p.multiplicity())),
            Truncation::Finite(level) => {
                let by_cuts = level.k() >= k_min && bmw_cuts(t, level).all();
                let m = p.at(level.k());
                assert_eq!(
                    by_cuts,
                    m > 0,
                    "BMW cuts and threshold ramp disagree on {t} at k={level}"
                );
                if m > 0 {
                    out.push((nu, m));
                }
            }
        }
    }
    out
}

/// Checks the ρ-shift recursion for one instance: the coefficient of
/// `(λ−ρ, μ−ρ; ν−ρ)` at level `k−3` against that of `(λ, μ; ν)` at `k`.
pub fn rho_shift_check(t: Triple, k: Level) -> Result<bool> {
    if k.k() < 3 {
        return Err(Error::RhoShiftPrecondition(format!("level {k} < 3")));
    }
    let shifted_level = Level::new(k.k() - 3);
    let shift = |w: Weight| {
        w.checked_sub(RHO)
            .filter(|s| s.is_integrable(shifted_level))
            .ok_or_else(|| {
                Error::RhoShiftPrecondition(format!(
                    "{w} − ρ is not integrable at level {shifted_level}"
                ))
            })
    };
    let shifted = Triple::new(shift(t.lam)?, shift(t.mu)?, shift(t.nu)?);
    let lhs = fusion_coefficient(shifted, shifted_level);
    let rhs = match thresholds(t) {
        Ok(p) if k.k() >= p.k0_min => p.at(k.k()) - 1,
        _ => 0,
    };
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: u32, b: u32) -> Weight {
        Weight::new(a, b)
    }

    fn tr(l: (u32, u32), m: (u32, u32), n: (u32, u32)) -> Triple {
        Triple::new(l.into(), m.into(), n.into())
    }

    fn weights_up_to(n: u32) -> Vec<Weight> {
        crate::alcove::alcove(Level::new(n)).weights().to_vec()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(tr((1, 0), (1, 0), (0, 1))));
        assert!(!is_admissible(tr((1, 0), (1, 0), (1, 1))));
        assert!(is_admissible(tr((9, 5), (6, 2), (8, 6))));
    }

    #[test]
    fn threshold_examples() {
        let t = tr((9, 5), (6, 2), (8, 6));
        assert_eq!(k0_min(t), Ok(15));
        assert_eq!(k0_max(t), Ok(17));
        assert_eq!(k0_min(tr((9, 5), (6, 2), (10, 5))), Ok(16));
        assert_eq!(k0_min(tr((0, 0), (0, 0), (0, 0))), Ok(0));
        assert_eq!(k0_max(tr((0, 0), (0, 0), (0, 0))), Ok(0));
        assert_eq!(k0_max(tr((1, 0), (1, 0), (0, 1))), Ok(1));
        let bad = tr((1, 0), (1, 0), (1, 1));
        assert_eq!(k0_min(bad), Err(Error::NotAdmissible(bad)));
    }

    #[test]
    fn pair_bounds_examples() {
        assert_eq!(pair_bounds(w(9, 5), w(6, 2)), (14, 22));
        assert_eq!(pair_bounds(w(0, 0), w(0, 0)), (0, 0));
        assert_eq!(pair_bounds(w(9, 5), w(2, 6)), (14, 22));
    }

    #[test]
    fn fusion_coefficient_examples() {
        let t = tr((9, 5), (6, 2), (8, 6));
        let got: Vec<u32> = [15, 16, 17, 20]
            .iter()
            .map(|&k| fusion_coefficient(t, Level::new(k)))
            .collect();
        assert_eq!(got, [1, 2, 3, 3]);
        assert_eq!(fusion_coefficient(t, Level::new(14)), 0);

        let l2 = Level::new(2);
        assert_eq!(fusion_coefficient(tr((1, 1), (0, 2), (0, 2)), l2), 0);
        assert_eq!(fusion_coefficient(tr((1, 1), (0, 2), (1, 0)), l2), 1);
        assert_eq!(
            fusion_coefficient(tr((1, 1), (0, 2), (1, 3)), Level::new(4)),
            1
        );
        assert_eq!(
            fusion_coefficient(tr((1, 1), (0, 2), (1, 3)), Level::new(3)),
            0
        );
        // Non-admissible input is tolerated.
        assert_eq!(
            fusion_coefficient(tr((1, 0), (1, 0), (1, 1)), Level::new(9)),
            0
        );
    }

    #[test]
    fn semimagic_worked_example() {
        let out = semimagic_multiplicity(tr((9, 5), (6, 2), (8, 6)));
        let tab = out.tableau.unwrap();
        assert_eq!(out.multiplicity, 3);
        assert_eq!(tab.rows, [[7, 4, 4], [5, 2, 8], [3, 9, 3]]);
        assert_eq!((tab.magic, tab.shift, tab.min_entry), (15, 2, 2));
        assert_eq!(
            out.thresholds,
            Some(ThresholdPair {
                k0_min: 15,
                k0_max: 17
            })
        );
    }

    #[test]
    fn semimagic_trivial_and_zero() {
        let out = semimagic_multiplicity(tr((0, 0), (0, 0), (0, 0)));
        assert_eq!(out.multiplicity, 1);
        assert_eq!(out.tableau.unwrap().rows, [[0; 3]; 3]);
        let out = semimagic_multiplicity(tr((1, 0), (1, 0), (0, 0)));
        assert_eq!(out.multiplicity, 0);
        assert!(out.tableau.is_none());
        // S1 − S2 divisible by 3 but a negative entry.
        let out = semimagic_multiplicity(tr((2, 0), (0, 0), (0, 1)));
        assert_eq!(out.multiplicity, 0);
        assert!(out.tableau.unwrap().min_entry < 0);
    }

    #[test]
    fn semimagic_agrees_with_closed_forms_exhaustively() {
        let ws = weights_up_to(8);
        for &a in &ws {
            for &b in &ws {
                for &c in &ws {
                    let t = Triple::new(a, b, c);
                    let sm = semimagic_multiplicity(t);
                    assert_eq!(is_admissible(t), sm.multiplicity > 0, "{t}");
                    assert_eq!(thresholds(t).ok(), sm.thresholds, "{t}");
                    if let Some(tab) = sm.tableau {
                        assert!(tab.is_semimagic());
                    }
                }
            }
        }
    }

    #[test]
    fn ramp_shape() {
        let ws = weights_up_to(6);
        for &a in &ws {
            for &b in &ws {
                for &c in &ws {
                    let t = Triple::new(a, b, c);
                    let Ok(p) = thresholds(t) else { continue };
                    let mut prev = 0;
                    for k in 0..=20 {
                        let m = fusion_coefficient(t, Level::new(k));
                        match k {
                            k if k < p.k0_min => assert_eq!(m, 0),
                            k if k <= p.k0_max => assert_eq!(m, prev + 1),
                            _ => assert_eq!(m, prev),
                        }
                        prev = m;
                    }
                }
            }
        }
    }

    #[test]
    fn symmetries_exhaustive() {
        let ws = weights_up_to(6);
        for &a in &ws {
            for &b in &ws {
                for &c in &ws {
                    let t = Triple::new(a, b, c);
                    for k in [0, 3, 6, 9, 12] {
                        let lv = Level::new(k);
                        let m = fusion_coefficient(t, lv);
                        assert_eq!(m, fusion_coefficient(t.swapped(), lv));
                        assert_eq!(m, fusion_coefficient(t.conjugated(), lv));
                        assert_eq!(m, fusion_coefficient(t.frobenius(), lv));
                    }
                }
            }
        }
    }

    #[test]
    fn wessleen_domain_examples() {
        let d = wessleen_domain(w(1, 0), w(1, 0), Truncation::Classical);
        assert_eq!(d, vec![(w(0, 1), 1), (w(2, 0), 1)]);

        let d = wessleen_domain(w(9, 5), w(6, 2), Truncation::Classical);
        assert_eq!(d.len(), 51);
        assert_eq!(d.iter().map(|&(_, m)| m).sum::<u32>(), 95);
        let hist = |m| d.iter().filter(|&&(_, x)| x == m).count();
        assert_eq!((hist(1), hist(2), hist(3)), (21, 16, 14));

        let d = wessleen_domain(w(9, 5), w(6, 2), Truncation::finite(14));
        assert_eq!(d.len(), 15);
        assert!(d.iter().all(|&(_, m)| m == 1));

        assert!(wessleen_domain(w(9, 5), w(6, 2), Truncation::finite(13)).is_empty());
    }

    #[test]
    fn wessleen_domain_matches_semimagic_candidates() {
        for &a in &weights_up_to(5) {
            for &b in &weights_up_to(5) {
                let dom = wessleen_domain(a, b, Truncation::Classical);
                let mut brute = Vec::new();
                for &c in &weights_up_to(12) {
                    let m = semimagic_multiplicity(Triple::new(a, b, c)).multiplicity;
                    if m > 0 {
                        brute.push((c, m));
                    }
                }
                assert_eq!(dom, brute);
            }
        }
    }

    #[test]
    fn vertices_lie_in_domain() {
        for &a in &weights_up_to(7) {
            for &b in &weights_up_to(7) {
                let Some(v) = wessleen_vertices(a, b) else {
                    continue;
                };
                assert_eq!(v.v1, (i64::from(a.l1 + b.l1), i64::from(a.l2 + b.l2)));
                for (x, y) in [v.v1, v.v2, v.v8] {
                    let nu = Weight::new(x as u32, y as u32);
                    assert!(
                        x >= 0 && y >= 0 && is_admissible(Triple::new(a, b, nu)),
                        "{a} {b} {nu}"
                    );
                }
            }
        }
        assert!(wessleen_vertices(w(1, 2), w(0, 0)).is_none());
    }

    #[test]
    fn bmw_dominance() {
        for &a in &weights_up_to(7) {
            for &b in &weights_up_to(7) {
                if !in_standard_position(a, b) {
                    continue;
                }
                let [k35, k36, k37l, k37r] = bmw_dominance_levels(a, b);
                for (nu, _) in wessleen_domain(a, b, Truncation::Classical) {
                    let t = Triple::new(a, b, nu);
                    for k in 0..=a.norm() + b.norm() + 1 {
                        let c = bmw_cuts(t, Level::new(k));
                        assert!(k < k35 || c.first_sum, "{t} k={k}");
                        assert!(k < k36 || c.second_sum, "{t} k={k}");
                        assert!(k < k37l || c.diff_lower, "{t} k={k}");
                        assert!(k < k37r || c.diff_upper, "{t} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn rho_shift_examples() {
        assert_eq!(
            rho_shift_check(tr((9, 5), (6, 2), (8, 6)), Level::new(16)),
            Ok(true)
        );
        assert_eq!(
            fusion_coefficient(tr((8, 4), (5, 1), (7, 5)), Level::new(13)),
            fusion_coefficient(tr((9, 5), (6, 2), (8, 6)), Level::new(16)) - 1
        );
        assert_eq!(
            rho_shift_check(tr((1, 1), (1, 1), (1, 1)), Level::new(3)),
            Ok(true)
        );
        // At threshold both sides vanish.
        assert_eq!(
            rho_shift_check(tr((9, 5), (6, 2), (8, 6)), Level::new(15)),
            Ok(true)
        );
        assert_eq!(
            fusion_coefficient(tr((8, 4), (5, 1), (7, 5)), Level::new(12)),
            0
        );
        assert!(rho_shift_check(tr((1, 0), (1, 1), (1, 1)), Level::new(5)).is_err());
        assert!(rho_shift_check(tr((1, 1), (1, 1), (1, 1)), Level::new(2)).is_err());
    }

    #[test]
    fn rho_shift_exhaustive() {
        let ws: Vec<Weight> = weights_up_to(7)
            .into_iter()
            .filter(|x| x.l1 >= 1 && x.l2 >= 1)
            .collect();
        for &a in &ws {
            for &b in &ws {
                for &c in &ws {
                    let t = Triple::new(a, b, c);
                    for k in (t.max_norm() + 1).max(3)..=16 {
                        assert_eq!(rho_shift_check(t, Level::new(k)), Ok(true), "{t} k={k}");
                    }
                    assert!(rho_shift_check(t, Level::new(t.max_norm())).is_err());
                }
            }
        }
    }

    #[test]
    fn parse_triple() {
        assert_eq!(
            "9,5/6,2/8,6".parse::<Triple>().unwrap(),
            tr((9, 5), (6, 2), (8, 6))
        );
        assert!("9,5/6,2".parse::<Triple>().is_err());
        assert_eq!(
            tr((9, 5), (6, 2), (8, 6)).to_string(),
            "((9,5),(6,2);(8,6))"
        );
    }
}
