//! `theta-dims`: exact invariant dimensions for theta-graph coefficient
//! spaces of finite groups.

mod commands;
mod group_arg;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use theta_dims::verify::Suite;
use theta_dims::{Convention, ModuleChoice, Parity, SymmetryChoice};

use commands::{Method, RunConfig, VerifyArgs, REYNOLDS_DEFAULT};
use group_arg::GroupArg;
use output::Format;

#[derive(Parser)]
#[command(name = "theta-dims", version, about = "Exact dimensions of (π×π)⋊Z₂-invariants in Λ³W and Sym³W")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Worker threads for the parallel sums.
    #[arg(long, global = true, env = "THETA_DIMS_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of one invariant space.
    Dims {
        /// cyclic:N, sl2:P or cayley:FILE (JSON {order, mul}).
        #[arg(long)]
        group: GroupArg,
        /// group-algebra or aug-kernel.
        #[arg(long, default_value = "group-algebra")]
        module: ModuleChoice,
        /// even (Λ³) or odd (Sym³).
        #[arg(long)]
        parity: Parity,
        /// perm, chartab, orbit, reynolds or closed-form.
        #[arg(long, default_value = "perm")]
        method: Method,
        /// flip (chartab only) or inversion. Defaults to flip for chartab and
        /// inversion otherwise.
        #[arg(long)]
        convention: Option<Convention>,
        /// full or pi-pi.
        #[arg(long, default_value = "full")]
        symmetry: SymmetryChoice,
        /// Character-table JSON; SL_2(F_5) has a builtin table.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Largest group order the Reynolds method accepts.
        #[arg(long, default_value_t = REYNOLDS_DEFAULT)]
        reynolds_max_order: usize,
        /// Sum over conjugacy-class pairs instead of element pairs.
        #[arg(long)]
        class_pairs: bool,
    },
    /// Lens-space table for Z_1 .. Z_max.
    LensTable {
        #[arg(long, default_value_t = 15)]
        max_n: u64,
        /// Recompute every row with the permutation path and the orbit oracle.
        #[arg(long)]
        cross_check: bool,
    },
    /// Conjugacy classes with power maps and the inversion action.
    Classes {
        #[arg(long)]
        group: GroupArg,
    },
    /// Run a self-check suite: all, fixtures, cross-methods or conventions.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
        /// SL_2(F_5) element fixture JSON replacing the builtin one.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Character-table JSON replacing the builtin SL_2(F_5) table.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Confirm the inversion-convention C[π] values for SL_2(F_5) with
        /// the orbit oracle.
        #[arg(long)]
        orbit: bool,
        /// Largest group order the Reynolds oracle accepts in the battery.
        #[arg(long)]
        reynolds_max_order: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dims { group, module, parity, method, convention, symmetry, table, reynolds_max_order, class_pairs } => {
            commands::cmd_dims(&RunConfig {
                group,
                module,
                parity,
                symmetry,
                method,
                convention,
                table,
                reynolds_max_order,
                class_pairs,
                threads: cli.threads,
            })
        }
        Command::LensTable { max_n, cross_check } => commands::cmd_lens_table(max_n, cross_check, cli.threads),
        Command::Classes { group } => commands::cmd_classes(&group),
        Command::Verify { suite, fixture, table, orbit, reynolds_max_order } => commands::cmd_verify(&VerifyArgs {
            suite,
            fixture,
            table,
            orbit,
            reynolds_max_order,
            threads: cli.threads,
        }),
    };
    match result {
        Ok((out, failure)) => {
            print!("{}", out.render(cli.format));
            match failure {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    eprintln!("theta-dims: {msg}");
                    ExitCode::from(1)
                }
            }
        }
        Err(msg) => {
            eprintln!("theta-dims: {msg}");
            ExitCode::from(2)
        }
    }
}
