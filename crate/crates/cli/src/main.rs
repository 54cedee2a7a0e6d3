//! `coalc`: command-line front end for the `coalc` library.
//!
//! Every verb prints a JSON report (or a table with `--human`) and exits
//! with 0 when the verdict is `valid`/`holds`, 1 when it is
//! `invalid`/`violated`, and 2 on usage, input or precondition errors.

mod commands;
mod report;
mod resolve;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "coalc", version, about = "Exact checks and solvers for coalgebras, comodules and calculi")]
struct Cli {
    /// Render the report as a plain table instead of JSON.
    #[arg(long, global = true)]
    human: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Theorem {
    Thm32,
    Thm33,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ZooAction {
    List,
    Emit,
}

/// Structure arguments are `zoo:<name>` (e.g. `zoo:matrix2`) or paths to
/// JSON structure files. A coalgebra given where a bicomodule is expected
/// stands for its regular bicomodule.
#[derive(Subcommand)]
pub enum Command {
    /// Check the axioms of any structure.
    Validate { structure: String },
    /// Check whether a coalgebra is cocommutative.
    Cocommutative { coalgebra: String },
    /// Build the dual algebra and check associativity and unit.
    DualAlgebra { coalgebra: String },
    /// Check that C* is a dimodule over C.
    DimoduleCheck { coalgebra: String },
    /// Emit the regular bicomodule of a coalgebra.
    Regular { coalgebra: String },
    /// Emit the dual of a comodule or bicomodule.
    Dual { structure: String },
    /// Tensor a left comodule with a right comodule.
    Tensor { left: String, right: String },
    /// Check the four hom coactions on Hom(W, U) and their commutation.
    QuadrupleCheck {
        source: String,
        /// Defaults to the source.
        target: Option<String>,
    },
    /// Solve for the comodule maps W → U.
    ComSpace {
        source: String,
        target: String,
        /// Use right coactions instead of left ones.
        #[arg(long)]
        right: bool,
    },
    /// Solve for the left or right codual of a bicomodule.
    Codual { side: SideArg, bicomodule: String },
    /// Compare the left codual of C with the dual bicomodule of C.
    Prop28 { coalgebra: String },
    /// Solve for the calculi on a bicomodule.
    FoccSolve { bicomodule: String },
    /// Solve for the coderivations of a coalgebra.
    Coder { coalgebra: String },
    /// Compute δ ∘ X for a vector cofield X.
    Cartan {
        /// A calculus file, or a bicomodule/coalgebra with `--focc-index`.
        focc: String,
        #[arg(long, default_value_t = 0)]
        focc_index: usize,
        /// A map file or `codual:<s>`.
        #[arg(long, default_value = "codual:0")]
        x: String,
    },
    /// Verify a structural theorem on concrete inputs.
    Verify {
        theorem: Theorem,
        /// thm32: a calculus, bicomodule or coalgebra.
        /// thm33: a coalgebra or left comodule (its switch bicomodule is used).
        input: String,
        #[arg(long, default_value_t = 0)]
        focc_index: usize,
        /// thm32 only: a map file or `codual:<s>`; all codual basis cofields when omitted.
        #[arg(long)]
        x: Option<String>,
    },
    /// Describe how X ↦ δ ∘ X relates the left codual to Coder(C).
    Probe {
        focc: String,
        #[arg(long, default_value_t = 0)]
        focc_index: usize,
    },
    /// List the built-in coalgebras or emit one as a structure file.
    Zoo { action: ZooAction, name: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            let text = if cli.human {
                report.render_human()
            } else {
                report.render_json()
            };
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.verdict.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("coalc: {e:#}");
            ExitCode::from(2)
        }
    }
}
