//! Verification harness: closed-form predictions for elementary abelian
//! restrictions of Specht and signed permutation modules, checked against
//! sampled generic Jordan types.

pub mod campaign;
pub mod case;
pub mod config;

pub use campaign::{replay, run, Mismatch, Report, Summary, SCHEMA};
pub use case::{run_case, CaseResult, CaseSpec, Check, Verdict};
pub use config::{Campaign, Config, Pair};
