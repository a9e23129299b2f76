//! Dominant su(3) weights, the level-k Weyl alcove and the ℤ₃ symmetries
//! acting on it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dominant su(3) weight given by its Dynkin labels.
///
/// The total order is the canonical alcove order: by `l1 + l2`, then by `l2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct Weight {
    pub l1: u32,
    pub l2: u32,
}

/// The Weyl vector (1,1).
pub const RHO: Weight = Weight { l1: 1, l2: 1 };

impl Weight {
    pub const ZERO: Weight = Weight { l1: 0, l2: 0 };

    pub const fn new(l1: u32, l2: u32) -> Self {
        Weight { l1, l2 }
    }

    /// `‖λ‖ = λ1 + λ2`, the smallest level at which the weight is integrable.
    pub const fn norm(self) -> u32 {
        self.l1 + self.l2
    }

    pub const fn triality(self) -> u32 {
        (self.l1 + 2 * self.l2) % 3
    }

    pub const fn conjugate(self) -> Weight {
        Weight {
            l1: self.l2,
            l2: self.l1,
        }
    }

    pub const fn is_real(self) -> bool {
        self.l1 == self.l2
    }

    pub fn is_integrable(self, level: Level) -> bool {
        self.norm() <= level.k()
    }

    pub fn checked_sub(self, other: Weight) -> Option<Weight> {
        Some(Weight {
            l1: self.l1.checked_sub(other.l1)?,
            l2: self.l2.checked_sub(other.l2)?,
        })
    }

    /// Componentwise shift by signed integers; `None` if a component goes negative.
    pub fn shifted(self, d1: i64, d2: i64) -> Option<Weight> {
        let l1 = i64::from(self.l1) + d1;
        let l2 = i64::from(self.l2) + d2;
        (l1 >= 0 && l2 >= 0).then(|| Weight::new(l1 as u32, l2 as u32))
    }

    pub(crate) fn signed(self) -> (i64, i64) {
        (i64::from(self.l1), i64::from(self.l2))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.norm(), self.l2).cmp(&(other.norm(), other.l2))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<[u32; 2]> for Weight {
    fn from([l1, l2]: [u32; 2]) -> Self {
        Weight { l1, l2 }
    }
}

impl From<Weight> for [u32; 2] {
    fn from(w: Weight) -> Self {
        [w.l1, w.l2]
    }
}

impl From<(u32, u32)> for Weight {
    fn from((l1, l2): (u32, u32)) -> Self {
        Weight { l1, l2 }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

/// Parses `"l1,l2"`; surrounding parentheses and spaces are tolerated.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = inner.split(',');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!(
                "expected weight \"l1,l2\", got {s:?}"
            )));
        };
        let parse = |x: &str| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad weight component {x:?} in {s:?}")))
        };
        Ok(Weight::new(parse(a)?, parse(b)?))
    }
}

/// ℤ₃ grading `λ1 + 2λ2 mod 3`.
pub fn triality(w: Weight) -> u32 {
    w.triality()
}

pub fn conjugate(w: Weight) -> Weight {
    w.conjugate()
}

/// A non-negative level `k` of su(3)_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Level(u32);

impl Level {
    pub const fn new(k: u32) -> Self {
        Level(k)
    }

    pub const fn k(self) -> u32 {
        self.0
    }

    /// The shifted level `h = k + 3`.
    pub const fn h(self) -> u32 {
        self.0 + 3
    }
}

impl From<u32> for Level {
    fn from(k: u32) -> Self {
        Level(k)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Either a finite level or the classical (k = ∞) limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truncation {
    Finite(Level),
    Classical,
}

impl Truncation {
    pub fn finite(k: u32) -> Self {
        Truncation::Finite(Level::new(k))
    }

    pub fn level(self) -> Option<Level> {
        match self {
            Truncation::Finite(l) => Some(l),
            Truncation::Classical => None,
        }
    }

    /// True when `k` is at or below this truncation.
    pub fn admits(self, k: u32) -> bool {
        match self {
            Truncation::Finite(l) => k <= l.k(),
            Truncation::Classical => true,
        }
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Finite(l) => write!(f, "{l}"),
            Truncation::Classical => f.write_str("inf"),
        }
    }
}

impl FromStr for Truncation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Truncation::Classical),
            other => other
                .parse::<u32>()
                .map(Truncation::finite)
                .map_err(|_| Error::Parse(format!("expected a level or \"inf\", got {s:?}"))),
        }
    }
}

/// All weights with `l1 + l2 ≤ k`, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove {
    level: Level,
    weights: Vec<Weight>,
}

impl Alcove {
    pub fn new(level: Level) -> Self {
        let k = level.k();
        let weights = (0..=k)
            .flat_map(|n| (0..=n).map(move |l2| Weight::new(n - l2, l2)))
            .collect();
        Alcove { level, weights }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: Weight) -> bool {
        w.is_integrable(self.level)
    }

    /// Position of `w` in the canonical order.
    pub fn index_of(&self, w: Weight) -> Option<usize> {
        self.contains(w).then(|| alcove_index(w))
    }

    pub fn iter(&self) -> impl Iterator<Item = Weight> + '_ {
        self.weights.iter().copied()
    }
}

/// Canonical index of a weight, independent of the level.
pub(crate) fn alcove_index(w: Weight) -> usize {
    let n = w.norm() as usize;
    n * (n + 1) / 2 + w.l2 as usize
}

pub fn alcove(level: Level) -> Alcove {
    Alcove::new(level)
}

/// An affine weight `(λ0, λ1, λ2)` with `λ0 + λ1 + λ2 = k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    level: Level,
    comps: [i64; 3],
}

impl AffineWeight {
    /// Lifts a finite weight; fails if the weight is not integrable at `level`.
    pub fn lift(level: Level, w: Weight) -> Result<Self> {
        if !w.is_integrable(level) {
            return Err(Error::NotIntegrable {
                weight: w,
                level: level.k(),
            });
        }
        let (l1, l2) = w.signed();
        Ok(AffineWeight {
            level,
            comps: [i64::from(level.k()) - l1 - l2, l1, l2],
        })
    }

    /// Builds from explicit components; the level is their sum.
    pub fn from_components(l0: i64, l1: i64, l2: i64) -> Result<Self> {
        let k = l0 + l1 + l2;
        if k < 0 {
            return Err(Error::NotIntegrableAffine {
                level: 0,
                l0,
                l1,
                l2,
            });
        }
        Ok(AffineWeight {
            level: Level::new(k as u32),
            comps: [l0, l1, l2],
        })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn components(&self) -> [i64; 3] {
        self.comps
    }

    pub fn is_integrable(&self) -> bool {
        self.comps.iter().all(|&c| c >= 0)
    }

    /// The finite part `(λ1, λ2)`, if integrable.
    pub fn finite(&self) -> Option<Weight> {
        self.is_integrable()
            .then(|| Weight::new(self.comps[1] as u32, self.comps[2] as u32))
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.comps;
        write!(f, "({a},{b},{c})")
    }
}

/// The outer automorphism `ζ(λ0, λ1, λ2) = (λ2, λ0, λ1)`.
pub fn zeta(w: AffineWeight) -> Result<AffineWeight> {
    let [l0, l1, l2] = w.comps;
    if !w.is_integrable() {
        return Err(Error::NotIntegrableAffine {
            level: w.level.k(),
            l0,
            l1,
            l2,
        });
    }
    Ok(AffineWeight {
        level: w.level,
        comps: [l2, l0, l1],
    })
}

/// `ζ^n` acting on a finite weight at level `k`.
pub fn zeta_pow(level: Level, w: Weight, n: u32) -> Result<Weight> {
    let mut a = AffineWeight::lift(level, w)?;
    for _ in 0..n % 3 {
        a = zeta(a)?;
    }
    Ok(a.finite().expect("ζ preserves integrability"))
}
