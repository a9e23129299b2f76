//! How the couplings of `λ ⋆_k μ` appear level by level.
//!
//! `u_pj` counts the ν whose multiplicity rises from `j` to `j + 1` at level
//! `k_min + p`. It is computed directly from the thresholds and from a closed
//! case ladder, and compared with the profile of `λ ⋆ μ̄`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::alcove::{Level, Truncation, Weight};
use crate::multiplicity::{fusion_coefficient, pair_bounds, thresholds, wessleen_domain, Triple};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelProfile {
    pub lam: Weight,
    pub mu: Weight,
    pub k_min: u32,
    pub k_max: u32,
    /// `rows[p][j] = u_pj` for `j ≤ p`.
    pub rows: Vec<Vec<u32>>,
}

impl LevelProfile {
    pub fn u(&self, p: u32, j: u32) -> u32 {
        self.rows
            .get(p as usize)
            .and_then(|r| r.get(j as usize))
            .copied()
            .unwrap_or(0)
    }

    /// The row at level `k`, truncated to `width` entries.
    pub fn at_level(&self, k: u32, width: usize) -> Vec<u32> {
        (0..width as u32)
            .map(|j| k.checked_sub(self.k_min).map_or(0, |p| self.u(p, j)))
            .collect()
    }

    /// Couplings appearing at level `k_min + p`.
    pub fn new_couplings(&self, p: u32) -> u32 {
        self.rows.get(p as usize).map_or(0, |r| r.iter().sum())
    }
}

fn empty_profile(lam: Weight, mu: Weight) -> LevelProfile {
    let (k_min, k_max) = pair_bounds(lam, mu);
    let rows = (0..=k_max - k_min)
        .map(|p| vec![0; p as usize + 1])
        .collect();
    LevelProfile {
        lam,
        mu,
        k_min,
        k_max,
        rows,
    }
}

/// The profile obtained by differencing the level-k domains.
pub fn profile_direct(lam: Weight, mu: Weight) -> LevelProfile {
    let mut prof = empty_profile(lam, mu);
    let mut prev: BTreeMap<Weight, u32> = BTreeMap::new();
    for k in prof.k_min..=prof.k_max {
        let cur: BTreeMap<Weight, u32> = wessleen_domain(lam, mu, Truncation::finite(k))
            .into_iter()
            .collect();
        let p = (k - prof.k_min) as usize;
        for (nu, &m) in &cur {
            let before = prev.get(nu).copied().unwrap_or(0);
            assert!(
                m == before || m == before + 1,
                "multiplicity of {nu} jumps by more than one at k={k}"
            );
            if m > before {
                prof.rows[p][before as usize] += 1;
            }
        }
        prev = cur;
    }
    prof
}

/// The symmetry used to bring a pair to `λ1 ≥ max(λ2, μ1, μ2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Normalization {
    Identity,
    Conjugate,
    Swap,
    ConjugateSwap,
}

impl Normalization {
    pub fn apply(self, lam: Weight, mu: Weight) -> (Weight, Weight) {
        match self {
            Normalization::Identity => (lam, mu),
            Normalization::Conjugate => (lam.conjugate(), mu.conjugate()),
            Normalization::Swap => (mu, lam),
            Normalization::ConjugateSwap => (mu.conjugate(), lam.conjugate()),
        }
    }
}

pub fn normalize(lam: Weight, mu: Weight) -> (Normalization, Weight, Weight) {
    let top = lam.l1.max(lam.l2).max(mu.l1).max(mu.l2);
    let n = if lam.l1 == top {
        Normalization::Identity
    } else if lam.l2 == top {
        Normalization::Conjugate
    } else if mu.l1 == top {
        Normalization::Swap
    } else {
        Normalization::ConjugateSwap
    };
    let (a, b) = n.apply(lam, mu);
    (n, a, b)
}

/// Multiplicity → number of distinct ν.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MultiplicityHistogram {
    pub counts: BTreeMap<u32, usize>,
}

impl MultiplicityHistogram {
    pub fn from_multiplicities(ms: impl IntoIterator<Item = u32>) -> Self {
        let mut counts = BTreeMap::new();
        for m in ms.into_iter().filter(|&m| m > 0) {
            *counts.entry(m).or_insert(0) += 1;
        }
        MultiplicityHistogram { counts }
    }

    pub fn distinct(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn total(&self) -> u64 {
        self.counts
            .iter()
            .map(|(&m, &c)| u64::from(m) * c as u64)
            .sum()
    }

    pub fn quadratic(&self) -> u64 {
        self.counts
            .iter()
            .map(|(&m, &c)| u64::from(m * m) * c as u64)
            .sum()
    }

    /// Number of ν with multiplicity at least `j`.
    pub fn at_least(&self, j: u32) -> usize {
        self.counts.range(j.max(1)..).map(|(_, &c)| c).sum()
    }
}

impl fmt::Display for MultiplicityHistogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(m, c)| format!("{m}:{c}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn histogram(lam: Weight, mu: Weight, trunc: Truncation) -> MultiplicityHistogram {
    MultiplicityHistogram::from_multiplicities(
        wessleen_domain(lam, mu, trunc).into_iter().map(|(_, m)| m),
    )
}

/// The classical histogram.
pub fn sigma_enum(lam: Weight, mu: Weight) -> MultiplicityHistogram {
    histogram(lam, mu, Truncation::Classical)
}

/// `u_pj` from the case ladder, with the pair brought to standard position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UFormula {
    pub value: i64,
    pub normalization: Normalization,
}

pub fn u_formula(lam: Weight, mu: Weight, p: u32, j: u32) -> UFormula {
    let (normalization, lam, mu) = normalize(lam, mu);
    let sigma = sigma_enum(lam, mu);
    UFormula {
        value: u_ladder(lam, mu, p, j, &sigma),
        normalization,
    }
}

/// The ladder for a pair in standard position; the cases are tried in order.
fn u_ladder(lam: Weight, mu: Weight, p: u32, j: u32, sigma: &MultiplicityHistogram) -> i64 {
    let (k_min, k_max) = pair_bounds(lam, mu);
    let [l1, l2, m1, m2] = [lam.l1, lam.l2, mu.l1, mu.l2].map(i64::from);
    let (k_min, k_max, j) = (i64::from(k_min), i64::from(k_max), i64::from(j));
    let k = k_min + i64::from(p);
    let (mu_lo, mu_hi) = (m1.min(m2), m1.max(m2));
    if k > k_max - j || k < k_min + j {
        return 0;
    }
    // Past the ρ-shift range no ν reaches multiplicity j + 1.
    if l2.min(m1).min(m2) < j {
        return 0;
    }
    if k == k_min + j {
        let rest: i64 = (j + 1..=k_max - k_min)
            .map(|q| u_ladder(lam, mu, q as u32, j as u32, sigma))
            .sum();
        return sigma.at_least(j as u32 + 1) as i64 - rest;
    }
    if l1 + mu_hi + j <= k {
        k_max - k - j + 1
    } else if l1 + mu_lo + j <= k {
        l2 + mu_lo - 2 * j + 1
    } else if k_min + j < k {
        k - l1 + l2 - 3 * j + 1
    } else {
        unreachable!("ladder cases exhaust k_min + j < k ≤ k_max − j")
    }
}

/// The full profile from the ladder.
pub fn profile_formula(lam: Weight, mu: Weight) -> (Normalization, LevelProfile) {
    let (norm, a, b) = normalize(lam, mu);
    let sigma = sigma_enum(a, b);
    let mut prof = empty_profile(lam, mu);
    for (p, row) in prof.rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let v = u_ladder(a, b, p as u32, j as u32, &sigma);
            assert!(v >= 0, "negative u_{p}{j} for {lam} ⊗ {mu}");
            *x = v as u32;
        }
    }
    (norm, prof)
}

/// Whether the nonzero level-k multiplicities of `λ ⋆ μ` and `λ ⋆ μ̄` agree as multisets.
pub fn verify_property_p(lam: Weight, mu: Weight, trunc: Truncation) -> bool {
    histogram(lam, mu, trunc) == histogram(lam, mu.conjugate(), trunc)
}

/// Linear, quadratic and support-count equalities between `λ ⋆ μ` and
/// `λ ⋆ μ̄`, and the first two profile rows.
pub fn sum_rules(lam: Weight, mu: Weight, trunc: Truncation) -> Report {
    let a = histogram(lam, mu, trunc);
    let b = histogram(lam, mu.conjugate(), trunc);
    let mut r = Report::new();
    r.expect("linear", a.total() == b.total(), || {
        format!("{} vs {}", a.total(), b.total())
    });
    r.expect("quadratic", a.quadratic() == b.quadratic(), || {
        format!("{} vs {}", a.quadratic(), b.quadratic())
    });
    r.expect("support", a.distinct() == b.distinct(), || {
        format!("{} vs {}", a.distinct(), b.distinct())
    });
    let u = profile_direct(lam, mu);
    let v = profile_direct(lam, mu.conjugate());
    for (p, j) in [(1, 0), (1, 1)] {
        r.expect(
            format!("u_{p}{j} = v_{p}{j}"),
            u.u(p, j) == v.u(p, j),
            || format!("{} vs {}", u.u(p, j), v.u(p, j)),
        );
    }
    r
}

/// The four level-forced identities relating `λ ⋆ μ` and `λ ⋆ μ̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Automorphism {
    /// `k = 2μ1 + μ2`, `ν ↦ (ν2, k − ν1 − ν2)`.
    MuFirst,
    /// `k = 2μ2 + μ1`, `ν ↦ (k − ν1 − ν2, ν1)`.
    MuSecond,
    /// `k = 2λ2 + λ1`, `ν ↦ (ν1, k − ν1 − ν2)`.
    LamSecond,
    /// `k = 2λ1 + λ2`, `ν ↦ (k − ν1 − ν2, ν2)`.
    LamFirst,
}

impl Automorphism {
    pub const ALL: [Automorphism; 4] = [
        Automorphism::MuFirst,
        Automorphism::MuSecond,
        Automorphism::LamSecond,
        Automorphism::LamFirst,
    ];

    pub fn forced_level(self, lam: Weight, mu: Weight) -> u32 {
        match self {
            Automorphism::MuFirst => 2 * mu.l1 + mu.l2,
            Automorphism::MuSecond => 2 * mu.l2 + mu.l1,
            Automorphism::LamSecond => 2 * lam.l2 + lam.l1,
            Automorphism::LamFirst => 2 * lam.l1 + lam.l2,
        }
    }

    /// Image of ν at level `k`; requires `ν1 + ν2 ≤ k`.
    pub fn map_nu(self, k: u32, nu: Weight) -> Weight {
        let rest = k - nu.norm();
        match self {
            Automorphism::MuFirst => Weight::new(nu.l2, rest),
            Automorphism::MuSecond => Weight::new(rest, nu.l1),
            Automorphism::LamSecond => Weight::new(nu.l1, rest),
            Automorphism::LamFirst => Weight::new(rest, nu.l2),
        }
    }

    /// Whether both weights are integrable at the forced level.
    pub fn applies(self, lam: Weight, mu: Weight) -> bool {
        let k = self.forced_level(lam, mu);
        lam.norm() <= k && mu.norm() <= k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AutomorphismOutcome {
    Verified { level: u32, checked: usize },
    Skipped { level: u32 },
    Failed { level: u32, nu: Weight },
}

pub fn automorphism_checks(lam: Weight, mu: Weight) -> Vec<(Automorphism, AutomorphismOutcome)> {
    Automorphism::ALL
        .iter()
        .map(|&a| {
            let k = a.forced_level(lam, mu);
            if !a.applies(lam, mu) {
                return (a, AutomorphismOutcome::Skipped { level: k });
            }
            let level = Level::new(k);
            let nus: Vec<Weight> = crate::alcove::alcove(level).weights().to_vec();
            let bad = nus.iter().copied().find(|&nu| {
                fusion_coefficient(Triple::new(lam, mu, nu), level)
                    != fusion_coefficient(Triple::new(lam, mu.conjugate(), a.map_nu(k, nu)), level)
            });
            let outcome = match bad {
                Some(nu) => AutomorphismOutcome::Failed { level: k, nu },
                None => AutomorphismOutcome::Verified {
                    level: k,
                    checked: nus.len(),
                },
            };
            (a, outcome)
        })
        .collect()
}

/// One row of a per-level coupling table: the ν gaining a coupling at `k`,
/// with their multiplicity after it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    pub k: u32,
    pub new: Vec<(Weight, u32)>,
}

pub fn coupling_table(lam: Weight, mu: Weight) -> Vec<LevelRow> {
    let (k_min, k_max) = pair_bounds(lam, mu);
    let dom = wessleen_domain(lam, mu, Truncation::Classical);
    (k_min..=k_max)
        .map(|k| {
            let new = dom
                .iter()
                .filter_map(|&(nu, _)| {
                    let p =
                        thresholds(Triple::new(lam, mu, nu)).expect("domain point is admissible");
                    p.levels().contains(&k).then(|| (nu, k - p.k0_min + 1))
                })
                .collect();
            LevelRow { k, new }
        })
        .collect()
}
