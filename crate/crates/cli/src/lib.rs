//! Command-line front end: argument parsing and rendering.

pub mod config;
pub mod suites;

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use su3_fusion::genfun::verify_identities;
use su3_fusion::level_profiles::{coupling_table, profile_direct};
use su3_fusion::modular::{s_matrix, verlinde_coefficient, verlinde_fusion};
use su3_fusion::multiplicity::classical_multiplicity;
use su3_fusion::oblades::{
    enumerate_couplings, psi_triple, render_svg, render_text, weights_of, OBlade,
};
use su3_fusion::paths_dims::{su2_path_stats, su3_sums, DynkinDiagram, Su3Sums};
use su3_fusion::{build_table, k0_min, product, Error, Level, Report, Triple, Truncation, Weight};

use crate::config::Config;
use crate::suites::{Bounds, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "su3fusion",
    version,
    about = "Affine su(3) fusion rules, thresholds and pictographs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// A key=value file with default `max_level` and `max_weight`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose λ ⋆_k μ with the threshold levels of every coupling.
    Product {
        #[arg(long, default_value = "inf")]
        level: Truncation,
        #[arg(long)]
        lhs: Weight,
        #[arg(long)]
        rhs: Weight,
        /// Use μ̄ instead of μ.
        #[arg(long)]
        conjugate_rhs: bool,
    },
    /// Print the fusion matrix N_λ, or the whole table.
    Matrix {
        #[arg(long)]
        level: u32,
        #[arg(long, conflicts_with = "all")]
        weight: Option<Weight>,
        #[arg(long)]
        all: bool,
    },
    /// Check the generating-polynomial identities.
    GenpolyVerify {
        #[arg(long, conflicts_with = "max_level")]
        level: Option<u32>,
        #[arg(long)]
        max_level: Option<u32>,
    },
    /// Path sums at each level, or the statistics of a Dynkin diagram.
    Paths {
        #[arg(long)]
        max_level: Option<u32>,
        /// A simply-laced diagram such as A5, D4 or E6.
        #[arg(long)]
        diagram: Option<DynkinDiagram>,
    },
    /// Couplings appearing at each level from k_min to k_max.
    Thresholds {
        #[arg(long)]
        lhs: Weight,
        #[arg(long)]
        rhs: Weight,
        #[arg(long)]
        conjugate_rhs: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max_level: Option<u32>,
        #[arg(long)]
        max_weight: Option<u32>,
        /// Corrupt one fusion coefficient before verifying.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Image of a branching under the fork exchange.
    Psi {
        #[arg(long)]
        triple: Triple,
    },
    /// The O-blades of a branching.
    Oblades {
        #[arg(long)]
        triple: Triple,
        /// Write one SVG per coupling into this directory.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// The S-matrix and Verlinde fusion at one level.
    Verlinde {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        triple: Option<Triple>,
    },
}

/// Rendered output and exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }

    fn status(stdout: String, passed: bool) -> Self {
        Output {
            stdout,
            code: if passed { 0 } else { 1 },
        }
    }
}

/// A failure of the inputs' mathematical preconditions, reported with exit 1.
#[derive(Debug)]
pub struct DomainError(pub String);

impl std::fmt::Display for DomainError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DomainError {}

/// Pretty JSON with sorted keys, so that parsing and re-rendering is stable.
pub fn to_json<T: Serialize>(x: &T) -> Result<String> {
    let v = serde_json::to_value(x)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn unsupported(cmd: &str, f: Format) -> anyhow::Error {
    anyhow::anyhow!(
        "{cmd} does not support --format {}",
        format!("{f:?}").to_lowercase()
    )
}

pub fn run(cli: Cli) -> Result<Output> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let f = cli.format;
    match cli.command {
        Command::Product {
            level,
            lhs,
            rhs,
            conjugate_rhs,
        } => {
            let rhs = if conjugate_rhs { rhs.conjugate() } else { rhs };
            let d = product(level, lhs, rhs)?;
            Ok(Output::ok(match f {
                Format::Text => format!("{d}\n"),
                Format::Json => to_json(&d)?,
                Format::Tsv => d.to_tsv(),
                Format::Svg => return Err(unsupported("product", f)),
            }))
        }
        Command::Matrix { level, weight, all } => {
            let table = build_table(Level::new(level));
            if all || weight.is_none() {
                return Ok(Output::ok(match f {
                    Format::Json => to_json(&table.export())?,
                    Format::Text | Format::Tsv => table
                        .matrices()
                        .iter()
                        .map(|m| format!("# N_{}\n{}", m.label, m.to_tsv(table.alcove())))
                        .collect::<Vec<_>>()
                        .join("\n"),
                    Format::Svg => return Err(unsupported("matrix", f)),
                }));
            }
            let w = weight.expect("checked above");
            let Some(m) = table.get(w) else {
                bail!("{w} is not integrable at level {level}");
            };
            Ok(Output::ok(match f {
                Format::Json => to_json(
                    &json!({ "level": level, "label": m.label, "legend": table.alcove().weights(), "entries": m.entries.rows() }),
                )?,
                Format::Text | Format::Tsv => m.to_tsv(table.alcove()),
                Format::Svg => return Err(unsupported("matrix", f)),
            }))
        }
        Command::GenpolyVerify { level, max_level } => {
            let levels: Vec<u32> = match level {
                Some(k) => vec![k],
                None => (1..=max_level.or(cfg.max_level).unwrap_or(8)).collect(),
            };
            let mut r = Report::new();
            for k in levels {
                r.extend(&format!("k={k}: "), verify_identities(Level::new(k)));
            }
            render_report(&r, f)
        }
        Command::Paths { max_level, diagram } => match diagram {
            Some(d) => {
                let s = su2_path_stats(&d);
                let passed = s.report.passed();
                let out = match f {
                    Format::Json => to_json(&s)?,
                    Format::Text | Format::Tsv => {
                        let mut o = format!(
                            "{}: d_H={} d_B={} ΣK={} d_λ={:?}\n",
                            s.diagram, s.d_h, s.d_b, s.sigma_k, s.d_lambda
                        );
                        o.push_str(&s.report.to_string());
                        o
                    }
                    Format::Svg => return Err(unsupported("paths", f)),
                };
                Ok(Output::status(out, passed))
            }
            None => {
                let rows: Vec<Su3Sums> = (0..=max_level.or(cfg.max_level).unwrap_or(12))
                    .map(|k| su3_sums(Level::new(k)))
                    .collect();
                let passed = rows.iter().all(|s| s.report.passed());
                let out = match f {
                    Format::Json => to_json(&rows)?,
                    Format::Text | Format::Tsv => {
                        let mut o = format!("{}\n", Su3Sums::tsv_header());
                        for s in &rows {
                            o.push_str(&s.tsv_row());
                            o.push('\n');
                        }
                        o
                    }
                    Format::Svg => return Err(unsupported("paths", f)),
                };
                Ok(Output::status(out, passed))
            }
        },
        Command::Thresholds {
            lhs,
            rhs,
            conjugate_rhs,
        } => {
            let rhs = if conjugate_rhs { rhs.conjugate() } else { rhs };
            render_thresholds(lhs, rhs, f)
        }
        Command::Verify {
            suite,
            max_level,
            max_weight,
            inject_fault,
        } => {
            let bounds = Bounds {
                max_level: max_level.or(cfg.max_level),
                max_weight: max_weight.or(cfg.max_weight),
            };
            let runs = suites::run(suite, bounds, inject_fault);
            let mut all = Report::new();
            for r in &runs {
                all.extend(&format!("{}: ", r.suite.name()), r.report.clone());
            }
            let out = match f {
                Format::Json => to_json(&json!({
                    "passed": all.passed(),
                    "suites": runs.iter().map(|r| json!({ "suite": r.suite.name(), "checks": r.report.checks })).collect::<Vec<_>>(),
                }))?,
                Format::Text | Format::Tsv => {
                    let mut o = String::new();
                    for r in &runs {
                        for line in &r.lines {
                            let _ = writeln!(o, "{line}");
                        }
                    }
                    let failed = all.failures().count();
                    let _ = writeln!(o, "{} checks, {} failed", all.checks.len(), failed);
                    if let Some(c) = all.first_failure() {
                        let _ = writeln!(o, "first failure: {c}");
                    }
                    o
                }
                Format::Svg => return Err(unsupported("verify", f)),
            };
            Ok(Output::status(out, all.passed()))
        }
        Command::Psi { triple } => {
            let image = psi_triple(triple).map_err(|e| match e {
                Error::PsiUndefined(t) => {
                    anyhow::Error::new(DomainError(format!("Ψ undefined on this triple {t}")))
                }
                other => other.into(),
            })?;
            let m = classical_multiplicity(image);
            let k0 = k0_min(image).ok();
            Ok(Output::ok(match f {
                Format::Json => to_json(
                    &json!({ "triple": triple, "image": image, "multiplicity": m, "k0_min": k0 }),
                )?,
                Format::Text | Format::Tsv => {
                    let k0 = k0.map_or("-".to_string(), |k| k.to_string());
                    format!("{image}  mult={m}  k0_min={k0}\n")
                }
                Format::Svg => return Err(unsupported("psi", f)),
            }))
        }
        Command::Oblades { triple, svg } => {
            let blades = enumerate_couplings(triple);
            if let Some(dir) = &svg {
                std::fs::create_dir_all(dir)
                    .with_context(|| format!("creating {}", dir.display()))?;
                for (i, o) in blades.iter().enumerate() {
                    let path = dir.join(format!("oblade-{}.svg", i + 1));
                    std::fs::write(&path, render_svg(o))
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            }
            Ok(Output::ok(match f {
                Format::Json => to_json(&blades.iter().map(oblade_json).collect::<Vec<_>>())?,
                Format::Svg => blades.iter().map(render_svg).collect(),
                Format::Text | Format::Tsv => {
                    if blades.is_empty() {
                        format!("{triple}: no couplings\n")
                    } else {
                        blades
                            .iter()
                            .map(|o| render_text(o) + "\n")
                            .collect::<Vec<_>>()
                            .join("\n")
                    }
                }
            }))
        }
        Command::Verlinde { level, triple } => {
            let level = Level::new(level);
            match triple {
                Some(t) => {
                    if t.max_norm() > level.k() {
                        bail!("{t} has a weight outside the level-{} alcove", level.k());
                    }
                    let v = verlinde_coefficient(&s_matrix(level), t.lam, t.mu, t.nu);
                    let n = su3_fusion::fusion_coefficient(t, level);
                    Ok(Output::ok(match f {
                        Format::Json => to_json(
                            &json!({ "triple": t, "level": level.k(), "verlinde": v, "fusion": n }),
                        )?,
                        Format::Text | Format::Tsv => {
                            format!("{t} at k={}: Verlinde {v:.9}  fusion {n}\n", level.k())
                        }
                        Format::Svg => return Err(unsupported("verlinde", f)),
                    }))
                }
                None => {
                    let s = s_matrix(level);
                    let v = verlinde_fusion(level);
                    let agrees = v.table == build_table(level);
                    let out = match f {
                        Format::Json => to_json(&json!({
                            "level": level.k(),
                            "dim": s.dim(),
                            "unitarity_error": s.unitarity_error(),
                            "symmetry_error": s.symmetry_error(),
                            "max_deviation": v.max_deviation,
                            "agrees_with_closed_form": agrees,
                        }))?,
                        Format::Text | Format::Tsv => format!(
                            "k={}: dim {}  unitarity {:.2e}  symmetry {:.2e}  max deviation {:.2e}  closed form {}\n",
                            level.k(),
                            s.dim(),
                            s.unitarity_error(),
                            s.symmetry_error(),
                            v.max_deviation,
                            if agrees { "agrees" } else { "DIFFERS" }
                        ),
                        Format::Svg => return Err(unsupported("verlinde", f)),
                    };
                    Ok(Output::status(out, agrees))
                }
            }
        }
    }
}

fn oblade_json(o: &OBlade) -> serde_json::Value {
    json!({ "coords": o.coords, "edges": o.edges(), "weights": weights_of(o), "threshold": o.threshold() })
}

fn render_report(r: &Report, f: Format) -> Result<Output> {
    let out = match f {
        Format::Json => to_json(r)?,
        Format::Text | Format::Tsv => r.to_string(),
        Format::Svg => return Err(unsupported("this command", f)),
    };
    Ok(Output::status(out, r.passed()))
}

fn render_thresholds(lam: Weight, mu: Weight, f: Format) -> Result<Output> {
    let rows = coupling_table(lam, mu);
    let prof = profile_direct(lam, mu);
    let width = prof
        .rows
        .iter()
        .filter_map(|r| r.iter().rposition(|&x| x > 0))
        .max()
        .map_or(1, |j| j + 1);
    let couplings = |r: &su3_fusion::level_profiles::LevelRow| {
        r.new
            .iter()
            .map(|(nu, m)| format!("{nu}:{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(Output::ok(match f {
        Format::Json => to_json(&json!({ "lhs": lam, "rhs": mu, "rows": rows, "profile": prof }))?,
        Format::Tsv => {
            let mut o = String::from("k\tnew\tu\tcouplings\n");
            for r in &rows {
                let u = prof.at_level(r.k, width);
                let u: Vec<String> = u.iter().map(u32::to_string).collect();
                let _ = writeln!(
                    o,
                    "{}\t{}\t{}\t{}",
                    r.k,
                    r.new.len(),
                    u.join(","),
                    couplings(r)
                );
            }
            o
        }
        Format::Text => {
            let mut o = format!("{lam} ⊗ {mu}: k_min={} k_max={}\n", prof.k_min, prof.k_max);
            let mut total = 0;
            for r in &rows {
                total += r.new.len();
                let u: Vec<String> = prof
                    .at_level(r.k, width)
                    .iter()
                    .map(u32::to_string)
                    .collect();
                let _ = writeln!(
                    o,
                    "k={:<3} new={:<3} u=({})  {}",
                    r.k,
                    r.new.len(),
                    u.join(","),
                    couplings(r)
                );
            }
            let _ = writeln!(o, "total {total}");
            o
        }
        Format::Svg => return Err(unsupported("thresholds", f)),
    }))
}
