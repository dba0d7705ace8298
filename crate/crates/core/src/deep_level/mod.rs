//! Explicit test functions beyond Iwahori level: Scholze's family on
//! `GL_2` over a local field of equal characteristic, and the Drinfeld-case
//! formula at pro-p Iwahori level.

pub mod corpus;
pub mod drinfeld;
pub mod finite_field;
pub mod scholze;
pub mod series;

pub use drinfeld::{drinfeld_propp_value, DiagonalTorusPoint, TorusCondition, TrivialOffCritical};
pub use finite_field::FiniteField;
pub use scholze::{ell_invariant, gl2_level_index, k_invariant, level_compatibility_check, scholze_phi, scholze_z, Ell};
pub use series::{Matrix2, TruncatedSeries, Valuation};
