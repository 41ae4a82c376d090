//! Command-line driver: load groups, rings and fixtures, run verification
//! suites, emit deterministic reports.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2 input
//! error.

use clap::{Args, Parser, Subcommand};
use indukt_core::error::Error;
use indukt_core::suite::{run_suite, ReportFormat, SuiteCommand, SuiteConfig};
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "indukt", version, about = "Exact induction-theory workbench for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Builtin group name (S3, D4, A4, Q8, C6, S4) or group spec file
    #[arg(long, default_value = "S3")]
    group: String,
    /// Builtin ring name (Z, Z[i], Z[C3], ZxZ-swap) or ring spec file
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Seed for all sampled checks (recorded in the report)
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Samples per check
    #[arg(long, default_value_t = 4)]
    samples: usize,
    /// Maximum object rank in sampled morphisms
    #[arg(long, default_value_t = 2)]
    max_rank: usize,
    /// Restrict checks to these canonical subgroup ids
    #[arg(long, value_delimiter = ',')]
    subgroups: Option<Vec<usize>>,
    /// Family tag: H | Hp:<p> | E | Ep:<p> | FC
    #[arg(long)]
    family: Option<String>,
    /// Coefficient mode: Z | Zp:<p> | Q | Z-half
    #[arg(long, default_value = "Z")]
    coeff: String,
    /// Report output path (stdout when absent)
    #[arg(long)]
    out: Option<String>,
    /// Report format
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Group facts: order, subgroup lattice, classification of subgroups
    Group(CommonArgs),
    /// Subgroup-class families and their closure invariants
    Families(CommonArgs),
    /// The seven axiom checks for Ind/Res/conj on the twisted category
    Axioms {
        #[command(flatten)]
        common: CommonArgs,
        /// Run a single axiom (1..7) instead of all seven
        #[arg(long)]
        axiom: Option<u8>,
        /// Load the whole configuration from a JSON file instead of flags
        #[arg(long)]
        config: Option<String>,
    },
    /// Frobenius reciprocity, choice independence, regular-representation identity
    Frobenius(CommonArgs),
    /// The induction engine on a Green-module fixture
    Dress {
        #[command(flatten)]
        common: CommonArgs,
        /// fixed-point | burnside | zmod | path to Mackey fixture file
        #[arg(long, default_value = "fixed-point")]
        fixture: String,
        /// Also run the vanishing check at the induced regular class
        #[arg(long)]
        swan: bool,
    },
    /// Table of marks and the Artin induction certificate
    Artin(CommonArgs),
    /// Composition laws of the twisted category on sampled and fixture morphisms
    Twisted {
        #[command(flatten)]
        common: CommonArgs,
        /// Morphism literal fixture file
        #[arg(long)]
        morphisms: Option<String>,
    },
}

fn to_config(command: SuiteCommand, common: &CommonArgs) -> SuiteConfig {
    let mut config = SuiteConfig::new(command, &common.group);
    config.ring = common.ring.clone();
    config.seed = common.seed;
    config.samples = common.samples;
    config.max_rank = common.max_rank;
    config.subgroup_filter = common.subgroups.clone();
    config.family = common.family.clone();
    config.coeff = common.coeff.clone();
    config
}

fn parse_format(s: &str) -> Result<ReportFormat, Error> {
    match s {
        "text" => Ok(ReportFormat::Text),
        "structured" => Ok(ReportFormat::Structured),
        other => Err(Error::InputError(format!(
            "unknown format {other:?} (want text or structured)"
        ))),
    }
}

fn run() -> Result<i32, Error> {
    let cli = Cli::parse();
    let (config, common) = match &cli.command {
        Command::Group(c) => (to_config(SuiteCommand::Group, c), c.clone()),
        Command::Families(c) => (to_config(SuiteCommand::Families, c), c.clone()),
        Command::Axioms {
            common,
            axiom,
            config,
        } => {
            let mut cfg = match config {
                Some(path) => SuiteConfig::from_config_file(path)?,
                None => to_config(SuiteCommand::Axioms, common),
            };
            if axiom.is_some() {
                cfg.axiom = *axiom;
            }
            (cfg, common.clone())
        }
        Command::Frobenius(c) => (to_config(SuiteCommand::Frobenius, c), c.clone()),
        Command::Dress {
            common,
            fixture,
            swan,
        } => {
            let mut cfg = to_config(SuiteCommand::Dress, common);
            cfg.fixture = Some(fixture.clone());
            cfg.swan = *swan;
            (cfg, common.clone())
        }
        Command::Artin(c) => (to_config(SuiteCommand::Artin, c), c.clone()),
        Command::Twisted { common, morphisms } => {
            let mut cfg = to_config(SuiteCommand::Twisted, common);
            cfg.morphisms = morphisms.clone();
            (cfg, common.clone())
        }
    };
    let format = parse_format(&common.format)?;
    let started = Instant::now();
    let report = run_suite(&config)?;
    let rendered = report.render(format);
    match &common.out {
        Some(path) => std::fs::write(path, rendered.as_bytes())?,
        None => {
            std::io::stdout().write_all(rendered.as_bytes())?;
        }
    }
    // timing stays out of the report so files are byte-identical per seed
    eprintln!(
        "{} checks in {:.3}s",
        report.checks.len(),
        started.elapsed().as_secs_f64()
    );
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
