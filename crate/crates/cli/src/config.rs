use std::path::PathBuf;

use certifier::{BoundMode, FigureVariant};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 20240611;
pub const DEFAULT_FIGURE_EPS: f64 = 1e-6;
pub const DEFAULT_FIGURE_B: f64 = 4e4;

/// Parsed command line. Unknown flags are rejected by the parser and every default
/// is the published parameter.
#[derive(Debug, Clone, Parser)]
#[command(name = "hill", version, about = "Certify and cross-check fiberwise convexity in Hill's lunar problem")]
pub struct RunConfig {
    /// Directory for reports and CSV files.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Lattice step; one value for every sweep, or `eps_x,eps_u` for the 2-D sweep.
    #[arg(long, global = true, value_delimiter = ',')]
    pub eps: Vec<f64>,
    /// Number of x-stripes in the 2-D sweep.
    #[arg(long, global = true, default_value_t = 8)]
    pub stripes: usize,
    /// Restrict `verify figures` to one row id.
    #[arg(long, global = true)]
    pub only: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Run a certification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Monte-Carlo and grid batteries of the oracle.
    Oracle {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Write CSV data: hill-region, fiber, flow, disk or graph:<name>.
    Emit(EmitArgs),
}

#[derive(Debug, Clone, Subcommand)]
pub enum Suite {
    /// The sixteen one-variable sweeps.
    Figures {
        #[arg(long, default_value_t = DEFAULT_FIGURE_B)]
        b: f64,
        #[arg(long, value_enum, default_value_t = VariantArg::Tabulated)]
        variant: VariantArg,
    },
    /// Factor bounds, derivative bounds and the 2-D certificate.
    Final {
        #[arg(long, value_enum, default_value_t = BoundsArg::Script)]
        bounds: BoundsArg,
    },
    /// The three steps of the convexity proof.
    Steps {
        #[arg(long, value_enum, default_value_t = VariantArg::Tabulated)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = BoundsArg::Script)]
        bounds: BoundsArg,
    },
}

#[derive(Debug, Clone, Args)]
pub struct EmitArgs {
    pub target: String,
    /// Sample count (per axis for two-variable graphs).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub p: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub q: Vec<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long, default_value_t = 1e-4)]
    pub dt: f64,
    #[arg(long, default_value_t = 10_000)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Tabulated)]
    pub variant: VariantArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Tabulated,
    Printed,
}

impl From<VariantArg> for FigureVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Tabulated => FigureVariant::Tabulated,
            VariantArg::Printed => FigureVariant::Printed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundsArg {
    Script,
    Table,
    Certified,
}

impl From<BoundsArg> for BoundMode {
    fn from(b: BoundsArg) -> Self {
        match b {
            BoundsArg::Script => BoundMode::PublishedScript,
            BoundsArg::Table => BoundMode::PublishedTable,
            BoundsArg::Certified => BoundMode::Certified,
        }
    }
}
