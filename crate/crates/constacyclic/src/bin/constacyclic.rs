use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use constacyclic::dto::FamilyDescriptor;
use constacyclic::{execute, AppError, Command, Format, Preset, RunSpec};
use constacyclic_core::distance::DEFAULT_BUDGET;

/// Constacyclic codes over finite fields: construction, bounds and
/// distance certification.
#[derive(Debug, Parser)]
#[command(name = "constacyclic", version)]
struct Cli {
    /// Tower modulus choice.
    #[arg(long, global = true, value_enum, default_value_t = Preset::Paper)]
    preset: Preset,
    /// Explicit GF(p) coefficients of the tower modulus, constant term first.
    #[arg(long, global = true, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// Operation budget for exhaustive and low-weight searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Lift the desk-scale limits on table rows.
    #[arg(long, global = true)]
    extended: bool,
    /// Read the whole invocation from a JSON run spec.
    #[arg(long, global = true, conflicts_with = "modulus")]
    spec: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// parity, qweight, cprm, s1, s2, s3 or s4.
    #[arg(long)]
    family: String,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    ell: Option<u32>,
    /// Parity class for the parity family.
    #[arg(long)]
    i: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    selectors: Option<Vec<u32>>,
}

impl FamilyArgs {
    fn descriptor(self) -> FamilyDescriptor {
        FamilyDescriptor {
            family: self.family,
            q: self.q,
            m: self.m,
            ell: self.ell,
            i: self.i,
            selectors: self.selectors,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Describe the tower GF(q^m).
    Field {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        /// Order of λ; defaults to q - 1.
        #[arg(long)]
        r: Option<u64>,
    },
    /// List the q-cyclotomic cosets of Ω.
    Cosets {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, default_value_t = 1)]
        residue: u64,
    },
    /// Build a family code: defining set, generator polynomial, bounds.
    Construct(FamilyArgs),
    /// Certify the minimum distance of a family code or a stored descriptor.
    Certify {
        #[arg(long, requires_all = ["q", "m"])]
        family: Option<String>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        selectors: Option<Vec<u32>>,
        /// Certify the dual code instead.
        #[arg(long)]
        dual: bool,
        /// A code descriptor written by `construct`.
        #[arg(long, conflicts_with = "family")]
        descriptor: Option<PathBuf>,
    },
    /// Recompute a published parameter table.
    Table {
        #[arg(long, default_value_t = 1)]
        id: u8,
    },
    /// Check self-duality of the parity and S4 codes.
    SelfdualScan {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
    },
}

fn run_spec(cli: Cli) -> Result<RunSpec, AppError> {
    if let Some(path) = cli.spec {
        return Ok(RunSpec::from_json(&std::fs::read_to_string(path)?)?);
    }
    let cmd = cli
        .cmd
        .ok_or_else(|| AppError::Usage(String::from("a subcommand or --spec is required")))?;
    let command = match cmd {
        Cmd::Field { q, m, r } => Command::Field {
            q,
            m,
            r: r.unwrap_or(q.saturating_sub(1)),
        },
        Cmd::Cosets { q, m, r, residue } => Command::Cosets {
            q,
            m,
            r: r.unwrap_or(q.saturating_sub(1)),
            residue,
        },
        Cmd::Construct(f) => Command::Construct { family: f.descriptor() },
        Cmd::Certify {
            family,
            q,
            m,
            ell,
            i,
            selectors,
            dual,
            descriptor,
        } => Command::Certify {
            family: family.map(|family| FamilyDescriptor {
                family,
                q: q.unwrap_or_default(),
                m: m.unwrap_or_default(),
                ell,
                i,
                selectors,
            }),
            descriptor,
            dual,
        },
        Cmd::Table { id } => Command::Table { id },
        Cmd::SelfdualScan { q, m } => Command::SelfdualScan { q, m },
    };
    Ok(RunSpec {
        command,
        preset: cli.preset,
        modulus: cli.modulus,
        budget: cli.budget,
        format: cli.format,
        out: cli.out,
        extended: cli.extended,
    })
}

fn run(cli: Cli) -> Result<i32, AppError> {
    let spec = run_spec(cli)?;
    let outcome = execute(&spec)?;
    let text = outcome.output.render(spec.format)?;
    match &spec.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(outcome.status.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
