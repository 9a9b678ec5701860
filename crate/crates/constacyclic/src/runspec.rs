//! A complete, serializable description of one CLI invocation.

use std::path::PathBuf;

use constacyclic_core::distance::DEFAULT_BUDGET;
use serde::{Deserialize, Serialize};

use crate::dto::FamilyDescriptor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// The defining polynomials of the worked examples where one exists,
    /// the automatic choice otherwise.
    #[default]
    Paper,
    /// The lexicographically smallest primitive polynomial.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Command {
    /// Describe the tower `GF(q^m)` for a given `r`.
    Field { q: u64, m: u32, r: u64 },
    /// List the q-cyclotomic cosets of `Ω^{(t)}`.
    Cosets {
        q: u64,
        m: u32,
        r: u64,
        #[serde(default = "one")]
        residue: u64,
    },
    Construct { family: FamilyDescriptor },
    /// Certify a family code (or its dual), or a code loaded from a
    /// descriptor file.
    Certify {
        #[serde(default)]
        family: Option<FamilyDescriptor>,
        #[serde(default)]
        descriptor: Option<PathBuf>,
        #[serde(default)]
        dual: bool,
    },
    Table { id: u8 },
    SelfdualScan { q: u64, m: u32 },
}

fn one() -> u64 {
    1
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub command: Command,
    #[serde(default)]
    pub preset: Preset,
    /// Explicit `GF(p)` coefficients of the tower modulus, constant first.
    #[serde(default)]
    pub modulus: Option<Vec<u32>>,
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub extended: bool,
}

impl RunSpec {
    pub fn new(command: Command) -> Self {
        RunSpec {
            command,
            preset: Preset::default(),
            modulus: None,
            budget: DEFAULT_BUDGET,
            format: Format::default(),
            out: None,
            extended: false,
        }
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}
