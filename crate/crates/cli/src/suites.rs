//! Verification suites driven by `verify`.

use std::str::FromStr;

use rayon::prelude::*;
use su3_fusion::fusion_tables::verify_fusion_table;
use su3_fusion::genfun::{lemma_checks, su2_generating, verify_identities_for, GenfunData};
use su3_fusion::level_profiles::{
    automorphism_checks, profile_direct, profile_formula, sum_rules, verify_property_p,
    AutomorphismOutcome,
};
use su3_fusion::modular::{
    modular_checks, real_column_checks, s_matrix, verlinde_coefficient, INTEGRALITY_TOL,
};
use su3_fusion::multiplicity::semimagic_multiplicity;
use su3_fusion::oblades::{count_at_level, fundamental_checks, scan_checks};
use su3_fusion::paths_dims::{su2_path_stats, su3_sums, DynkinDiagram};
use su3_fusion::{
    alcove, build_table, fusion_coefficient, FusionTable, Level, Report, Triple, Truncation, Weight,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Genfun,
    Sums,
    Modular,
    PropP,
    Oblades,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Tables,
        Suite::Genfun,
        Suite::Sums,
        Suite::Modular,
        Suite::PropP,
        Suite::Oblades,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Genfun => "genfun",
            Suite::Sums => "sums",
            Suite::Modular => "modular",
            Suite::PropP => "propP",
            Suite::Oblades => "oblades",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite {s:?}; expected tables, genfun, sums, modular, propP, oblades or all"))
    }
}

/// Optional overrides of the per-suite defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_level: Option<u32>,
    pub max_weight: Option<u32>,
}

/// The output of one suite: display lines and the checks behind them.
#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub suite: Suite,
    pub lines: Vec<String>,
    pub report: Report,
}

impl SuiteRun {
    fn from_report(suite: Suite, report: Report) -> Self {
        let lines = report.checks.iter().map(ToString::to_string).collect();
        SuiteRun {
            suite,
            lines,
            report,
        }
    }
}

pub const MESH_MAX_LEVEL: u32 = 18;

pub fn run(suite: Suite, bounds: Bounds, fault: bool) -> Vec<SuiteRun> {
    let lvl = |d: u32| bounds.max_level.unwrap_or(d);
    let wt = |d: u32| bounds.max_weight.unwrap_or(d);
    match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| run(s, bounds, fault))
            .collect(),
        Suite::Tables => {
            let mut r = tables(lvl(8), fault);
            r.extend("", oracle_mesh(wt(8), lvl(MESH_MAX_LEVEL)));
            vec![SuiteRun::from_report(suite, r)]
        }
        Suite::Genfun => {
            let mut r = genfun(lvl(8), fault);
            r.extend("", su2(lvl(10)));
            r.extend("", ade());
            vec![SuiteRun::from_report(suite, r)]
        }
        Suite::Sums => vec![sums(lvl(12))],
        Suite::Modular => vec![SuiteRun::from_report(suite, modular(lvl(12)))],
        Suite::PropP => vec![SuiteRun::from_report(suite, property_p(wt(8), lvl(16)))],
        Suite::Oblades => {
            let mut r = fundamental_checks();
            r.extend(&format!("norms ≤ {}: ", wt(8)), scan_checks(wt(8)));
            vec![SuiteRun::from_report(suite, r)]
        }
    }
}

/// Corrupts one coefficient of `N_(1,0)`.
pub fn inject_fault(table: &mut FusionTable) {
    if table.level().k() == 0 {
        return;
    }
    let (f, z) = (Weight::new(1, 0), Weight::ZERO);
    let v = table.coefficient(f, z, f);
    table.set_coefficient(f, z, f, v + 1);
}

fn table_at(k: u32, fault: bool) -> FusionTable {
    let mut t = build_table(Level::new(k));
    if fault {
        inject_fault(&mut t);
    }
    t
}

pub fn tables(max_level: u32, fault: bool) -> Report {
    let mut r = Report::new();
    for k in 0..=max_level {
        let t = table_at(k, fault);
        r.extend(&format!("k={k}: "), verify_fusion_table(&t));
    }
    r
}

/// Closed form, semimagic ramp, O-blade count and rounded Verlinde agree on
/// every triple of norm at most `max_weight` and every level up to `max_level`.
pub fn oracle_mesh(max_weight: u32, max_level: u32) -> Report {
    let ws = alcove(Level::new(max_weight)).weights().to_vec();
    let ws = &ws;
    let triples: Vec<Triple> = ws
        .iter()
        .flat_map(|&l| {
            ws.iter()
                .flat_map(move |&m| ws.iter().map(move |&n| Triple::new(l, m, n)))
        })
        .collect();
    let sm: Vec<_> = triples
        .par_iter()
        .map(|&t| semimagic_multiplicity(t))
        .collect();
    let mut first: [Option<String>; 4] = Default::default();
    for k in 0..=max_level {
        let level = Level::new(k);
        let s = s_matrix(level);
        let found: Vec<(usize, String)> = triples
            .par_iter()
            .zip(&sm)
            .filter_map(|(&t, o)| {
                let n = fusion_coefficient(t, level);
                if o.at_level(k) != n {
                    return Some((0, format!("{t} at k={k}")));
                }
                if count_at_level(t, k) != n as usize {
                    return Some((1, format!("{t} at k={k}")));
                }
                if t.max_norm() <= k {
                    let v = verlinde_coefficient(&s, t.lam, t.mu, t.nu);
                    if (v - v.round()).abs() > INTEGRALITY_TOL {
                        return Some((2, format!("{t} at k={k}: {v}")));
                    }
                    if v.round() as i64 != i64::from(n) {
                        return Some((3, format!("{t} at k={k}: {v} vs {n}")));
                    }
                }
                None
            })
            .collect();
        for (i, why) in found {
            first[i].get_or_insert(why);
        }
    }
    let names = [
        "mesh: closed form = semimagic",
        "mesh: closed form = O-blades",
        "mesh: Verlinde integrality",
        "mesh: closed form = Verlinde",
    ];
    let mut r = Report::new();
    for (name, f) in names.into_iter().zip(first) {
        r.record(name, f);
    }
    r
}

pub fn genfun(max_level: u32, fault: bool) -> Report {
    let mut r = Report::new();
    for k in 1..=max_level {
        let t = table_at(k, fault);
        r.extend(
            &format!("k={k}: "),
            verify_identities_for(&GenfunData::new(&t)),
        );
        r.extend(&format!("k={k}: "), lemma_checks(&t));
    }
    r
}

/// The SU(2) generating identity on `A_{k+1}`.
pub fn su2(max_level: u32) -> Report {
    let mut r = Report::new();
    for k in 0..=max_level {
        let d = DynkinDiagram::a(k as usize + 1);
        r.extend(
            &format!("{}: ", d.name()),
            su2_generating(k, &d.adjacency()).report,
        );
    }
    r
}

/// `A_1..A_12`, `D_4..D_8`, `E_6..E_8`.
pub fn ade_diagrams() -> Vec<DynkinDiagram> {
    let mut v: Vec<_> = (1..=12).map(DynkinDiagram::a).collect();
    v.extend((4..=8).map(DynkinDiagram::d));
    v.extend((6..=8).map(DynkinDiagram::e));
    v
}

pub fn ade() -> Report {
    let mut r = Report::new();
    for d in ade_diagrams() {
        r.extend(&format!("{}: ", d.name()), su2_path_stats(&d).report);
    }
    r
}

pub fn sums(max_level: u32) -> SuiteRun {
    let mut lines = Vec::new();
    let mut report = Report::new();
    for k in 0..=max_level {
        let s = su3_sums(Level::new(k));
        lines.push(s.to_string());
        report.extend(&format!("k={k}: "), s.report);
    }
    SuiteRun {
        suite: Suite::Sums,
        lines,
        report,
    }
}

pub fn modular(max_level: u32) -> Report {
    let mut r = Report::new();
    for k in 0..=max_level {
        let level = Level::new(k);
        r.extend(&format!("k={k}: "), modular_checks(level));
        r.extend(&format!("k={k}: "), real_column_checks(level).1);
    }
    r
}

/// Folds per-pair reports with identical check names into one report that
/// keeps the first failure of each check.
fn merge(reports: Vec<(String, Report)>) -> Report {
    let mut out = Report::new();
    let Some((_, head)) = reports.first() else {
        return out;
    };
    for (i, c) in head.checks.iter().enumerate() {
        let failure = reports.iter().find_map(|(tag, r)| {
            r.checks
                .get(i)
                .and_then(|c| c.failure.as_ref())
                .map(|why| format!("{tag}: {why}"))
        });
        out.record(c.name.clone(), failure);
    }
    out
}

/// Property 𝒫, the sum rules, the level profiles and the automorphisms over
/// all pairs of norm at most `max_weight` and levels up to `max_level`.
pub fn property_p(max_weight: u32, max_level: u32) -> Report {
    let ws = alcove(Level::new(max_weight)).weights().to_vec();
    let pairs: Vec<(Weight, Weight)> = ws
        .iter()
        .flat_map(|&a| ws.iter().map(move |&b| (a, b)))
        .collect();
    let reports: Vec<(String, Report)> = pairs
        .par_iter()
        .map(|&(lam, mu)| {
            let mut r = Report::new();
            let bad = (0..=max_level).find(|&k| !verify_property_p(lam, mu, Truncation::finite(k)));
            r.record(
                format!("property 𝒫 (k ≤ {max_level})"),
                bad.map(|k| format!("k={k}")),
            );
            let truncs = (0..=max_level)
                .map(Truncation::finite)
                .chain([Truncation::Classical]);
            let rules: Vec<(Truncation, Report)> =
                truncs.map(|t| (t, sum_rules(lam, mu, t))).collect();
            for (i, c) in rules[0].1.checks.iter().enumerate() {
                let bad = rules.iter().find(|(_, rep)| !rep.checks[i].passed());
                r.record(
                    format!("sum rule {}", c.name),
                    bad.map(|(t, _)| format!("k={t}")),
                );
            }
            let direct = profile_direct(lam, mu);
            r.expect(
                "profile ladder = direct",
                profile_formula(lam, mu).1 == direct,
                String::new,
            );
            r.expect(
                "profile μ ↔ μ̄",
                profile_direct(lam, mu.conjugate()).rows == direct.rows,
                String::new,
            );
            let bad = automorphism_checks(lam, mu)
                .into_iter()
                .find_map(|(a, o)| match o {
                    AutomorphismOutcome::Failed { level, nu } => {
                        Some(format!("{a:?} at k={level}, ν={nu}"))
                    }
                    _ => None,
                });
            r.record("automorphisms", bad);
            (format!("{lam} ⊗ {mu}"), r)
        })
        .collect();
    merge(reports)
}
