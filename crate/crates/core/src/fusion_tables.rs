//! Fusion matrices `N_λ` at level k, the generators `G = N_(1,0)`,
//! `Gᵀ = N_(0,1)`, the simple current `P = N_(k,0)`, and level-annotated
//! product decompositions.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alcove::{alcove_index, Alcove, Level, Truncation, Weight};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::multiplicity::{fusion_coefficient, thresholds, triality_conserved, Triple};
use crate::report::Report;

/// `entries[μ][ν] = N_{λμ}^ν` in canonical alcove order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMatrix {
    pub level: Level,
    pub label: Weight,
    pub entries: IntMatrix,
}

impl FusionMatrix {
    pub fn to_tsv(&self, alcove: &Alcove) -> String {
        let mut out = String::from("mu\\nu");
        for w in alcove.iter() {
            out.push_str(&format!("\t{w}"));
        }
        out.push('\n');
        for (i, w) in alcove.iter().enumerate() {
            out.push_str(&w.to_string());
            for x in self.entries.row(i) {
                out.push_str(&format!("\t{x}"));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    alcove: Alcove,
    matrices: Vec<FusionMatrix>,
}

impl FusionTable {
    pub fn level(&self) -> Level {
        self.alcove.level()
    }

    pub fn alcove(&self) -> &Alcove {
        &self.alcove
    }

    pub fn dim(&self) -> usize {
        self.alcove.len()
    }

    pub fn matrices(&self) -> &[FusionMatrix] {
        &self.matrices
    }

    pub fn get(&self, lam: Weight) -> Option<&FusionMatrix> {
        self.alcove.index_of(lam).map(|i| &self.matrices[i])
    }

    /// `N_λ`; panics if `λ` is outside the alcove.
    pub fn n(&self, lam: Weight) -> &IntMatrix {
        &self
            .get(lam)
            .unwrap_or_else(|| panic!("{lam} outside alcove at level {}", self.level()))
            .entries
    }

    pub fn coefficient(&self, lam: Weight, mu: Weight, nu: Weight) -> i64 {
        let (i, j) = (alcove_index(mu), alcove_index(nu));
        self.n(lam).get(i, j)
    }

    /// Overwrites one coefficient; used to build fault-injected tables.
    pub fn set_coefficient(&mut self, lam: Weight, mu: Weight, nu: Weight, value: i64) {
        let idx = self.alcove.index_of(lam).expect("λ outside alcove");
        self.matrices[idx]
            .entries
            .set(alcove_index(mu), alcove_index(nu), value);
    }

    /// `N_(1,0)`, or zero at level 0.
    pub fn g(&self) -> IntMatrix {
        self.get(Weight::new(1, 0))
            .map_or_else(|| IntMatrix::zeros(self.dim()), |m| m.entries.clone())
    }

    /// `N_(0,1)`, or zero at level 0.
    pub fn g_t(&self) -> IntMatrix {
        self.get(Weight::new(0, 1))
            .map_or_else(|| IntMatrix::zeros(self.dim()), |m| m.entries.clone())
    }

    pub fn p(&self) -> &IntMatrix {
        self.n(Weight::new(self.level().k(), 0))
    }

    pub fn export(&self) -> TableExport {
        TableExport {
            level: self.level().k(),
            legend: self.alcove.weights().to_vec(),
            matrices: self
                .matrices
                .iter()
                .map(|m| MatrixExport {
                    label: m.label,
                    entries: m.entries.rows(),
                })
                .collect(),
        }
    }
}

/// JSON form of a table: nested integer arrays plus the alcove legend.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableExport {
    pub level: u32,
    pub legend: Vec<Weight>,
    pub matrices: Vec<MatrixExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub label: Weight,
    pub entries: Vec<Vec<i64>>,
}

impl FusionTable {
    /// Builds a table from `f(λ index, μ index, ν index)`.
    pub(crate) fn from_fn(level: Level, f: impl Fn(usize, usize, usize) -> i64 + Sync) -> Self {
        let alcove = Alcove::new(level);
        let ws = alcove.weights();
        let matrices = ws
            .par_iter()
            .enumerate()
            .map(|(l, &lam)| FusionMatrix {
                level,
                label: lam,
                entries: IntMatrix::from_fn(ws.len(), |i, j| f(l, i, j)),
            })
            .collect();
        FusionTable { alcove, matrices }
    }
}

pub fn build_table(level: Level) -> FusionTable {
    let ws = Alcove::new(level).weights().to_vec();
    FusionTable::from_fn(level, |l, i, j| {
        i64::from(fusion_coefficient(Triple::new(ws[l], ws[i], ws[j]), level))
    })
}

/// The action of `P` on labels: `P · N_(λ1,λ2) = N_(k−λ1−λ2, λ1)`.
pub fn rotation_action(level: Level, w: Weight) -> Result<Weight> {
    if !w.is_integrable(level) {
        return Err(Error::NotIntegrable {
            weight: w,
            level: level.k(),
        });
    }
    Ok(Weight::new(level.k() - w.norm(), w.l1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTerm {
    pub nu: Weight,
    /// Levels at which the successive couplings appear.
    pub levels: Vec<u32>,
}

impl DecompositionTerm {
    pub fn multiplicity(&self) -> u32 {
        self.levels.len() as u32
    }
}

impl fmt::Display for DecompositionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.levels.as_slice() {
            [k] => write!(f, "{}_{k}", self.nu),
            ks => {
                let ks: Vec<String> = ks.iter().map(u32::to_string).collect();
                write!(f, "{}_{{{}}}", self.nu, ks.join(","))
            }
        }
    }
}

/// `λ ⋆_k μ` with each ν tagged by the levels of its couplings.
///
/// Terms are ordered by first appearance level, then by `(ν2, ν1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedDecomposition {
    pub lam: Weight,
    pub mu: Weight,
    /// `None` for the classical product.
    pub level: Option<u32>,
    pub terms: Vec<DecompositionTerm>,
}

impl AnnotatedDecomposition {
    pub fn distinct(&self) -> usize {
        self.terms.len()
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.terms.iter().map(DecompositionTerm::multiplicity).sum()
    }

    /// Multiplicity → number of distinct ν.
    pub fn histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for t in &self.terms {
            *h.entry(t.multiplicity()).or_insert(0) += 1;
        }
        h
    }

    pub fn term(&self, nu: Weight) -> Option<&DecompositionTerm> {
        self.terms.iter().find(|t| t.nu == nu)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("nu1\tnu2\tmultiplicity\tlevels\n");
        for t in &self.terms {
            let ks: Vec<String> = t.levels.iter().map(u32::to_string).collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                t.nu.l1,
                t.nu.l2,
                t.multiplicity(),
                ks.join(",")
            ));
        }
        out
    }
}

impl fmt::Display for AnnotatedDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

pub fn product(trunc: Truncation, lam: Weight, mu: Weight) -> Result<AnnotatedDecomposition> {
    if let Truncation::Finite(level) = trunc {
        for w in [lam, mu] {
            if !w.is_integrable(level) {
                return Err(Error::NotIntegrable {
                    weight: w,
                    level: level.k(),
                });
            }
        }
    }
    let bound = lam.norm() + mu.norm();
    let mut terms = Vec::new();
    for n in 0..=bound {
        for l2 in 0..=n {
            let nu = Weight::new(n - l2, l2);
            let Ok(p) = thresholds(Triple::new(lam, mu, nu)) else {
                continue;
            };
            let levels: Vec<u32> = p.levels().filter(|&k| trunc.admits(k)).collect();
            if !levels.is_empty() {
                terms.push(DecompositionTerm { nu, levels });
            }
        }
    }
    terms.sort_by_key(|t| (t.levels[0], t.nu.l2, t.nu.l1));
    Ok(AnnotatedDecomposition {
        lam,
        mu,
        level: trunc.level().map(Level::k),
        terms,
    })
}

fn describe(alcove: &Alcove, m: Weight, i: usize, j: usize) -> String {
    let ws = alcove.weights();
    format!("N_{m} at ({}, {})", ws[i], ws[j])
}

/// Structural checks on a table, in order: unit, commutation, conjugation,
/// triality, `P³ = 1`, and `P · N_λ = N_{rotation(λ)}`.
pub fn verify_fusion_table(table: &FusionTable) -> Report {
    let level = table.level();
    let alcove = table.alcove();
    let ws = alcove.weights();
    let n = ws.len();
    let id = IntMatrix::identity(n);
    let mut r = Report::new();

    let unit = table.n(Weight::ZERO).first_difference(&id);
    r.record(
        "unit",
        unit.map(|(i, j)| describe(alcove, Weight::ZERO, i, j)),
    );

    type Commutator = (Weight, Weight, Option<(usize, usize)>);
    let products: Vec<Commutator> = ws
        .par_iter()
        .enumerate()
        .flat_map_iter(|(a, &x)| {
            ws[a + 1..].iter().map(move |&y| {
                let (nx, ny) = (table.n(x), table.n(y));
                (x, y, (nx * ny).first_difference(&(ny * nx)))
            })
        })
        .collect();
    let commute = products.into_iter().find_map(|(x, y, d)| {
        d.map(|(i, j)| format!("[N_{x}, N_{y}] ≠ 0 at ({}, {})", ws[i], ws[j]))
    });
    r.record("commutation", commute);

    let conj = ws.iter().find_map(|&w| {
        let d = table
            .n(w)
            .transpose()
            .first_difference(table.n(w.conjugate()))?;
        Some(format!(
            "N_{w}ᵀ ≠ N_{} at ({}, {})",
            w.conjugate(),
            ws[d.0],
            ws[d.1]
        ))
    });
    r.record("conjugation", conj);

    let trial = ws.iter().find_map(|&w| {
        let m = table.n(w);
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| m.get(i, j) != 0 && !triality_conserved(Triple::new(w, ws[i], ws[j])))
            .map(|(i, j)| describe(alcove, w, i, j))
    });
    r.record("triality", trial);

    let p = table.p();
    r.record(
        "P^3 = 1",
        p.pow(3)
            .first_difference(&id)
            .map(|(i, j)| format!("P³ at ({}, {})", ws[i], ws[j])),
    );

    let rot = ws.iter().find_map(|&w| {
        let target = rotation_action(level, w).expect("alcove weight");
        let d = (p * table.n(w)).first_difference(table.n(target))?;
        Some(format!(
            "P·N_{w} ≠ N_{target} at ({}, {})",
            ws[d.0], ws[d.1]
        ))
    });
    r.record("rotation", rot);
    r
}

pub fn verify_table(level: Level) -> Report {
    verify_fusion_table(&build_table(level))
}
