//! Exact finite models of strict bimonoidal categories with anti-involution,
//! their matrix categories and bar constructions, and a law-checking harness
//! that evaluates every structural identity on sampled data.

pub mod bar;
pub mod braided;
pub mod category;
pub mod check;
pub mod cli;
pub mod error;
pub mod exec;
pub mod instances;
pub mod involution;
pub mod laws;
pub mod matrices;
pub mod mutate;
pub mod perm;
pub mod rig;
pub mod sample;

pub use category::{Bimonoidal, Overlay};
pub use check::{CheckConfig, CheckReport, LawResult, Witness};
pub use error::{Error, Result};
pub use exec::Exec;
pub use perm::Perm;
pub use sample::SampleSpec;
