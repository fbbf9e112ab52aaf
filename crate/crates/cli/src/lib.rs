//! Command-line front end: reads a JSON workspace, runs one computation, prints one JSON document.
//!
//! Exit status is 0 on success, 1 when a verification check fails, and 2 for invalid input.

pub mod commands;
pub mod dot;
pub mod error;
pub mod naming;
pub mod workspace;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub use error::CliError;
pub use workspace::{Overrides, Workspace, WorkspaceFile};

#[derive(Parser, Debug)]
#[command(name = "dct", version, about = "Exact higher Auslander-Reiten computations over prime fields")]
pub struct Cli {
    /// Workspace JSON file.
    #[arg(long, global = true)]
    pub workspace: Option<PathBuf>,
    /// Override the workspace's d.
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Override the workspace's prime.
    #[arg(long, global = true)]
    pub field: Option<u64>,
    /// Total-dimension bound for enumerating indecomposables.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Budget for exhaustive searches.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    /// Emit JSON on stdout (always on).
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write a DOT diagram to this path.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the algebra and report its path basis.
    CheckAlgebra,
    Hom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    Ext {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Minimal projective resolution.
    Resolve {
        #[arg(long)]
        module: String,
        #[arg(long)]
        length: Option<usize>,
    },
    TauD {
        #[arg(long)]
        module: String,
    },
    Decompose {
        #[arg(long)]
        module: String,
    },
    /// Indecomposables up to isomorphism, bounded by total dimension.
    Enumerate,
    DRigid {
        #[arg(long)]
        category: String,
    },
    /// Certify or refute d-cluster-tilting against the enumerated universe.
    CtCheck {
        #[arg(long)]
        category: String,
    },
    /// Extend a map, or the minimal radical map into a generator, to a left d-exact sequence.
    BuildDExact {
        #[arg(long)]
        category: String,
        #[arg(long)]
        morphism: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
    Defect {
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        module: String,
    },
    /// Every workspace sequence unless one is named.
    VerifyDefectFormula {
        #[arg(long)]
        category: String,
        #[arg(long)]
        sequence: Option<String>,
    },
    VerifyArDuality {
        #[arg(long)]
        category: String,
    },
    /// Right-determined maps for the whole Hom space, a generated subspace, or every End-submodule.
    Determined {
        #[arg(long)]
        category: String,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_delimiter = ',')]
        morphism: Vec<String>,
        #[arg(long)]
        all: bool,
    },
    /// d-almost split sequence ending in a generator.
    Dass {
        #[arg(long)]
        category: String,
        #[arg(long)]
        target: String,
    },
    GldimEnd {
        #[arg(long)]
        category: String,
    },
    EmitDot {
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long)]
        category: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
}

/// What the process prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

fn error_body(code: &str, message: &str) -> Value {
    json!({ "error": { "code": code, "message": message } })
}

fn render(v: &Value, code: i32) -> Output {
    let mut stdout = serde_json::to_string_pretty(v).expect("report serializes");
    stdout.push('\n');
    Output { stdout, code }
}

fn dispatch(cli: &Cli) -> Result<commands::Outcome, CliError> {
    let path = cli.workspace.as_ref().ok_or_else(|| CliError::Input("--workspace is required".into()))?;
    let file = WorkspaceFile::load(path)?;
    let ws = Workspace::build(file, Overrides { d: cli.d, field: cli.field, cap: cli.cap })?;
    use Command::*;
    let out = match &cli.command {
        CheckAlgebra => commands::check_algebra(&ws),
        Hom { source, target } => commands::hom(&ws, source, target),
        Ext { source, target, degree } => commands::ext(&ws, source, target, *degree),
        Resolve { module, length } => commands::resolve(&ws, module, *length),
        TauD { module } => commands::tau_d(&ws, module),
        Decompose { module } => commands::decompose(&ws, module),
        Enumerate => commands::enumerate(&ws, cli.bound),
        DRigid { category } => commands::d_rigid(&ws, category),
        CtCheck { category } => commands::ct_check(&ws, category, cli.bound),
        BuildDExact { category, morphism, target } => {
            commands::build_d_exact(&ws, category, morphism.as_deref(), target.as_deref())
        }
        Defect { sequence, module } => commands::defect(&ws, sequence, module),
        VerifyDefectFormula { category, sequence } => {
            commands::verify_defect_formula(&ws, category, sequence.as_deref())
        }
        VerifyArDuality { category } => commands::verify_ar_duality(&ws, category),
        Determined { category, source, target, morphism, all } => {
            commands::determined(&ws, category, source, target, morphism, *all)
        }
        Dass { category, target } => commands::dass(&ws, category, target),
        GldimEnd { category } => commands::gldim_end(&ws, category),
        EmitDot { sequence, category, target } => {
            commands::emit_dot(&ws, sequence.as_deref(), category.as_deref(), target.as_deref())
        }
    }?;
    if let (Some(path), Some(text)) = (&cli.dot, &out.dot) {
        std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(out)
}

pub fn run_cli(cli: &Cli) -> Output {
    match dispatch(cli) {
        Ok(o) => render(&o.report, i32::from(o.finding)),
        Err(e) => render(&error_body(e.code(), &e.to_string()), e.exit_code()),
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                Output { stdout: e.to_string(), code: 0 }
            }
            _ => render(&error_body("usage", e.to_string().trim()), 2),
        },
    }
}
