pub mod error;
pub mod laurent;
pub mod root_datum;
pub mod affine_weyl;
pub mod hecke;
pub mod kl;
pub mod bernstein;
pub mod transfer;
pub mod deep_level;
pub mod config;
pub mod json;
pub mod cli;
