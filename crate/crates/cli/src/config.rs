use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kummer_core::sigma::{LambdaMode, SigmaLevel};
use serde_json::{json, Value};

/// Highest truncation order accepted on the command line.
pub const MAX_ORDER_LIMIT: u32 = 20;

#[derive(Parser, Debug)]
#[command(name = "kummer", version, about = "Exact verification reports for the genus-2 Kummer quartic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// `symbolic`, `zero`, or five rationals `l0,l1,l2,l3,l4`
    #[arg(long, global = true, default_value = "symbolic", allow_hyphen_values = true)]
    pub lambda: String,
    /// Highest homogeneous piece of the sigma expansion: 3, 5 or 7
    #[arg(long = "sigma-level", global = true, default_value_t = 7)]
    pub sigma_level: u32,
    /// Truncation order in (u, v)
    #[arg(long = "max-order", global = true, env = "KUMMER_MAX_ORDER", default_value_t = 16)]
    pub max_order: u32,
    /// Seed for the random chart-B points
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Number of random chart-B points
    #[arg(long, global = true, default_value_t = 20)]
    pub points: usize,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Tolerance for the Chern quadrature
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Command {
    /// Order-by-order vanishing of σ⁸ det K
    QuarticVerify,
    /// Residuals of the five fourth-order equations
    PdeVerify,
    /// Residual of K applied to the third derivatives
    KernelVerify,
    /// Gauss-metric numerators and their determinant
    MetricReport,
    /// Lowest terms of the cleared Ricci tensor at every sigma level
    RicciLeading,
    /// Quartic, derivative and curvature checks in the inversion chart
    InversionVerify,
    /// Exact Ricci components at chart-B points
    RicciPoint,
    /// Closed-form dZ against jet coefficients
    DzCheck,
    /// Einstein condition on the round sphere
    SphereVerify,
    /// Einstein condition in the Kähler chart
    KahlerVerify,
    /// First Chern number by quadrature
    Chern,
    /// Göpel tetrad constants and the double-quadric identity
    Goepel,
    /// Fresnel reduction to the double sphere
    Fresnel,
    /// Every check, in one combined report
    All,
}

impl Command {
    /// Execution order used by `all`.
    pub const SUITE: [Command; 13] = [
        Command::QuarticVerify,
        Command::PdeVerify,
        Command::KernelVerify,
        Command::MetricReport,
        Command::RicciLeading,
        Command::InversionVerify,
        Command::RicciPoint,
        Command::DzCheck,
        Command::SphereVerify,
        Command::KahlerVerify,
        Command::Chern,
        Command::Goepel,
        Command::Fresnel,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Command::QuarticVerify => "quartic-verify",
            Command::PdeVerify => "pde-verify",
            Command::KernelVerify => "kernel-verify",
            Command::MetricReport => "metric-report",
            Command::RicciLeading => "ricci-leading",
            Command::InversionVerify => "inversion-verify",
            Command::RicciPoint => "ricci-point",
            Command::DzCheck => "dz-check",
            Command::SphereVerify => "sphere-verify",
            Command::KahlerVerify => "kahler-verify",
            Command::Chern => "chern",
            Command::Goepel => "goepel",
            Command::Fresnel => "fresnel",
            Command::All => "all",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Validated run configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub lambda: LambdaMode,
    pub level: SigmaLevel,
    pub max_order: u32,
    pub seed: u64,
    pub points: usize,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub tol: f64,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            lambda: LambdaMode::Symbolic,
            level: SigmaLevel::Seven,
            max_order: 16,
            seed: 1,
            points: 20,
            output: None,
            format: Format::Json,
            tol: 1e-6,
        }
    }

    pub fn from_cli(cli: &Cli) -> Result<RunConfig, String> {
        let o = &cli.opts;
        let lambda: LambdaMode = o.lambda.parse().map_err(|e| format!("--lambda: {e}"))?;
        let level = SigmaLevel::from_degree(o.sigma_level)
            .ok_or_else(|| format!("--sigma-level must be 3, 5 or 7, got {}", o.sigma_level))?;
        let cfg = RunConfig {
            command: cli.command,
            lambda,
            level,
            max_order: o.max_order,
            seed: o.seed,
            points: o.points,
            output: o.output.clone(),
            format: o.format,
            tol: o.tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        let floor = self.level.degree() + 2;
        if self.max_order > MAX_ORDER_LIMIT || self.max_order < floor {
            return Err(format!(
                "max order {} outside [{floor}, {MAX_ORDER_LIMIT}] for sigma level {}",
                self.max_order, self.level
            ));
        }
        if self.points == 0 {
            return Err("--points must be at least 1".into());
        }
        if !(self.tol.is_finite() && self.tol >= 1e-10) {
            return Err(format!("--tol must be a finite number >= 1e-10, got {}", self.tol));
        }
        Ok(())
    }

    /// Echo of the settings that determine the report; the output path and
    /// format are presentation only.
    pub fn echo(&self) -> Value {
        json!({
            "lambda": self.lambda.to_text(),
            "max_order": self.max_order,
            "points": self.points,
            "seed": self.seed.to_string(),
            "sigma_level": self.level.degree(),
            "tol": self.tol,
        })
    }
}
