//! `hopflab` — verification CLI for the noncommutative-algebra laboratory.
//!
//! Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
//! parse error.

use std::path::PathBuf;

use hopflab_cli::commands;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "hopflab",
    version,
    about = "Normal ordering, Hopf-axiom checking, duality pairings, and representation numerics"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify Hopf axioms and confluence for a catalogue model or .alg file
    Check {
        /// Catalogue model name or path to an .alg file
        target: String,
        /// Check all generator words up to this length
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
    },
    /// Normal-order an expression in a model's algebra
    Nf {
        /// Catalogue model name
        #[arg(long)]
        model: Option<String>,
        /// Path to an .alg file
        #[arg(long)]
        file: Option<PathBuf>,
        /// Expression over the model's generators and parameters
        #[arg(long)]
        expr: String,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a duality pairing or audit its compatibility
    Pair {
        /// Catalogue pairing name
        #[arg(long)]
        pairing: String,
        /// Expression over the first algebra's generators
        #[arg(long)]
        left: Option<String>,
        /// Expression over the second algebra's generators
        #[arg(long)]
        right: Option<String>,
        /// Run the relation/bracket compatibility audit instead
        #[arg(long)]
        compat: bool,
        /// Audit degree (normal words up to this length)
        #[arg(long, default_value_t = 2)]
        degree: u32,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
    },
    /// List the built-in model and pairing catalogue
    Models {
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
        /// Write canonical .alg files for every catalogue model into a directory
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Finite-window representation of the quantum sphere
    Podles {
        /// Deformation parameter, a rational in (0, 1), e.g. 1/2
        #[arg(long)]
        mu: String,
        /// Family parameter, a nonnegative rational
        #[arg(long, default_value = "0")]
        c: String,
        /// Eigenvalue branch: plus or minus
        #[arg(long, default_value = "plus")]
        sign: String,
        /// Truncation dimension (at least 2)
        #[arg(long, default_value_t = 64)]
        dim: usize,
        /// Write the spectrum of the diagonal generator as CSV
        #[arg(long)]
        spectrum: Option<PathBuf>,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
    },
    /// Flip-symmetrised two-particle system and singlet entanglement
    Twoparticle {
        /// Two one-particle energies, comma separated
        #[arg(long, default_value = "1,3")]
        levels: String,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
    },
    /// Coordinate operators on the log lattice and their commutator study
    Igl {
        /// Character parameter of the representation
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        lambda: f64,
        /// Deformation scale
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        kappa: f64,
        /// Base grid size (at least 3)
        #[arg(long, default_value_t = 256)]
        grid: usize,
        /// Number of log-step halvings for the convergence study
        #[arg(long, default_value_t = 4)]
        refine: usize,
        /// Smallest lattice node
        #[arg(long, default_value_t = 0.0625)]
        xi_min: f64,
        /// Lattice ratio (defaults to 2^(1/32))
        #[arg(long)]
        ratio: Option<f64>,
        /// Write the h/residual/order table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the diagonal-coordinate spectrum as CSV
        #[arg(long)]
        spectrum: Option<PathBuf>,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    // die quietly when the reader of a pipe goes away (e.g. `hopflab ... | head`)
    // instead of panicking mid-print
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(), // help/version exit 0, usage errors exit 2
    };
    let outcome = match cli.command {
        Cmd::Check { target, degree, json } => {
            commands::run_check(commands::CheckOpts { target, degree, json })
        }
        Cmd::Nf { model, file, expr, json } => {
            commands::run_nf(commands::NfOpts { model, file, expr, json })
        }
        Cmd::Pair {
            pairing,
            left,
            right,
            compat,
            degree,
            json,
        } => commands::run_pair(commands::PairOpts {
            pairing,
            left,
            right,
            compat,
            degree,
            json,
        }),
        Cmd::Models { json, emit } => commands::run_models(commands::ModelsOpts { json, emit }),
        Cmd::Podles {
            mu,
            c,
            sign,
            dim,
            spectrum,
            json,
        } => commands::run_podles(commands::PodlesOpts {
            mu,
            c,
            sign,
            dim,
            spectrum,
            json,
        }),
        Cmd::Twoparticle { levels, json } => {
            commands::run_twoparticle(commands::TwoOpts { levels, json })
        }
        Cmd::Igl {
            lambda,
            kappa,
            grid,
            refine,
            xi_min,
            ratio,
            csv,
            spectrum,
            json,
        } => commands::run_igl(commands::IglOpts {
            lambda,
            kappa,
            grid,
            refine,
            xi_min,
            ratio,
            csv,
            spectrum,
            json,
        }),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
