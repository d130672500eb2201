//! `silt-lab`: batch front end for silt-core.

mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use silt_core::FieldDescriptor;

#[derive(Parser, Debug)]
#[command(name = "silt-lab", version, about = "Silting mutation and two-term enumeration for quiver algebras")]
pub struct Cli {
    /// Ground field: `rational` or `gf:<p>`.
    #[arg(long, global = true, default_value = "gf:32003")]
    pub field: String,
    /// Seed for all randomised steps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of two-term silting objects before giving up.
    #[arg(long, global = true, default_value_t = silt_core::silting::DEFAULT_CAP)]
    pub cap: usize,
    /// Longest path considered when building an algebra.
    #[arg(long, global = true, default_value_t = silt_core::algebra::DEFAULT_MAX_PATH_LEN)]
    pub max_path_len: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for the breadth-first enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basis, Cartan matrix, radical layers, symmetry and fingerprint.
    Basis {
        /// A `.qpr` file or a bundled preset (A_con, B_con, C_con).
        input: String,
    },
    /// Mutate the regular complex along a word such as "s1 s2^-1".
    Mutate { input: String, word: String },
    /// All two-term silting complexes, one JSON object per line.
    TwoSilt { input: String },
    /// Fingerprints of the endomorphism algebras of two-term silting complexes.
    DerivedClass { input: String },
    /// Mutation graph of a presentation, or a bundled picture (hexagon, octagon).
    Graph {
        input: String,
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
    },
    /// Permutation model for n irreducible factors.
    CaModel {
        n: usize,
        /// Comma-separated factor labels (defaults to f1,…,fn).
        #[arg(long)]
        labels: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors count as parse errors; help and version succeed.
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let descriptor = match cli.field.parse::<FieldDescriptor>() {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let mut out = io::stdout().lock();
    match commands::run(&cli, &descriptor, &mut out) {
        Ok(()) => {
            let _ = out.flush();
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &silt_core::Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}
