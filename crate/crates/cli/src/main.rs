use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crossed_forge_cli::output::OutputFormat;
use crossed_forge_cli::run::{self, Options};

/// Crossed products of cyclic groups: validate crossed systems and
/// presentation families, build product tables, enumerate symmetric
/// 2-cocycles, decide cyclicity with witnesses, and cross-check everything
/// against a brute-force oracle.
#[derive(Parser)]
#[command(name = "crossed-forge", version, max_term_width = 100)]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: OutputFormat,
    /// Search budget for enumerations.
    #[arg(long, global = true, env = "CROSSED_FORGE_BUDGET")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the construct in an input file; exit 0/1.
    Validate { file: PathBuf },
    /// Build the product table of a finite construct and print it.
    Product {
        file: PathBuf,
        /// Print the full multiplication table.
        #[arg(long)]
        table: bool,
        /// Print the multiset of element orders.
        #[arg(long)]
        order_profile: bool,
    },
    /// Symmetric normalized 2-cocycle profiles.
    Cocycles {
        #[command(subcommand)]
        command: CocyclesCommand,
    },
    /// Decide whether the crossed product is cyclic; print the verdict.
    Classify { file: PathBuf },
    /// Print the cyclic generator witness, or fail with the obstruction.
    Generator { file: PathBuf },
    /// Test two finite constructs for isomorphism.
    Iso { file_a: PathBuf, file_b: PathBuf },
    /// Extract the crossed system of a group relative to a normal subgroup.
    Extract {
        /// Input file of the ambient group.
        #[arg(long)]
        group: PathBuf,
        /// Comma-separated element indices of the normal subgroup.
        #[arg(long)]
        normal: String,
        /// Comma-separated coset representatives (default: first element of
        /// each coset in index order).
        #[arg(long)]
        transversal: Option<String>,
    },
    /// Brute-force ground truth.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand)]
enum CocyclesCommand {
    /// List all profiles of period m with values in C_n.
    Enumerate {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Only profiles whose twisted product is cyclic.
        #[arg(long)]
        cyclic_only: bool,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustive consistency sweep of the decision procedures against
    /// brute force, for all parameters up to the given product order.
    Sweep {
        #[arg(long)]
        max_order: u64,
    },
    /// Enumerate every normalized crossed system on cyclic groups of the
    /// given orders, one per line.
    Enumerate {
        /// Order of the normal factor H.
        #[arg(long)]
        h: u64,
        /// Order of the quotient factor G.
        #[arg(long)]
        g: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        format: cli.format,
        budget: cli.budget,
    };
    let outcome = match cli.command {
        Command::Validate { file } => run::validate(&file, &opts),
        Command::Product {
            file,
            table,
            order_profile,
        } => run::product(&file, table, order_profile, &opts),
        Command::Cocycles { command } => match command {
            CocyclesCommand::Enumerate { m, n, cyclic_only } => {
                run::cocycles_enumerate(m, n, cyclic_only, &opts)
            }
        },
        Command::Classify { file } => run::classify(&file, &opts),
        Command::Generator { file } => run::generator(&file, &opts),
        Command::Iso { file_a, file_b } => run::iso(&file_a, &file_b, &opts),
        Command::Extract {
            group,
            normal,
            transversal,
        } => run::extract(&group, &normal, transversal.as_deref(), &opts),
        Command::Oracle { command } => match command {
            OracleCommand::Sweep { max_order } => run::oracle_sweep(max_order, &opts),
            OracleCommand::Enumerate { h, g } => run::oracle_enumerate(h, g, &opts),
        },
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
