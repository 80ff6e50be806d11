use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skewpbw::dsl::cli::{execute, Command};

/// Exact arithmetic in skew PBW extensions and Burchnall-Chaundy
/// annihilators.
///
/// Every SPEC argument is a path to an algebra spec file or a preset name
/// (weyl, weyl-rational, q-weyl, quantum-plane, higher-endo, heisenberg),
/// optionally with parameters such as `q-weyl:q=5`.
#[derive(Parser)]
#[command(name = "skewpbw", version)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the defining data of an algebra.
    Validate { spec: String },
    /// Normalize an expression to PBW normal form.
    Eval { spec: String, expr: String },
    /// Test whether two elements commute.
    Commutes { spec: String, p: String, q: String },
    /// Basis of the bounded centralizer of an element.
    Centralizer {
        spec: String,
        expr: String,
        /// Bound on the total degree in the algebra variables.
        #[arg(long, default_value_t = 4)]
        deg: u32,
        /// Bound on the degree of the coefficients.
        #[arg(long = "coeff-deg", default_value_t = 0)]
        coeff_deg: u32,
    },
    /// Monic polynomial F(s, t) with F(P, Q) = 0 for commuting P, Q.
    Annihilate {
        spec: String,
        p: String,
        q: String,
        /// Largest power of P to search.
        #[arg(long = "max-s")]
        max_s: Option<u32>,
    },
    /// Evaluate F(P, Q) and report whether it vanishes.
    Verify {
        spec: String,
        p: String,
        q: String,
        /// Polynomial in s and t.
        poly: String,
    },
    /// Print the spec file of a preset.
    Preset { name: String },
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Validate { spec } => Command::Validate { spec },
            Cmd::Eval { spec, expr } => Command::Eval { spec, expr },
            Cmd::Commutes { spec, p, q } => Command::Commutes { spec, p, q },
            Cmd::Centralizer { spec, expr, deg, coeff_deg } => Command::Centralizer { spec, expr, deg, coeff_deg },
            Cmd::Annihilate { spec, p, q, max_s } => Command::Annihilate { spec, p, q, max_s },
            Cmd::Verify { spec, p, q, poly } => Command::Verify { spec, p, q, poly },
            Cmd::Preset { name } => Command::Preset { name },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = execute(&cli.command.into(), cli.json);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
