//! Std companion of `constacyclic-core`: serializable reports, the
//! published parameter tables, a rayon executor for the distance engine and
//! the command implementations behind the `constacyclic` binary.

pub mod commands;
pub mod dto;
pub mod exec;
pub mod runspec;
pub mod tables;

pub use commands::{execute, AppError, Outcome, Output, Status};
pub use runspec::{Command, Format, Preset, RunSpec};
