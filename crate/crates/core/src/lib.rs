//! Fusion rules, generating polynomials and level profiles for affine su(3) at level k.

pub mod alcove;
pub mod error;
pub mod fusion_tables;
pub mod genfun;
pub mod level_profiles;
pub mod matrix;
pub mod modular;
pub mod multiplicity;
pub mod oblades;
pub mod paths_dims;
pub mod poly;
pub mod report;

pub use alcove::{alcove, AffineWeight, Alcove, Level, Truncation, Weight};
pub use error::{Error, Result};
pub use fusion_tables::{build_table, product, FusionTable};
pub use matrix::IntMatrix;
pub use multiplicity::{fusion_coefficient, k0_max, k0_min, thresholds, ThresholdPair, Triple};
pub use report::Report;
