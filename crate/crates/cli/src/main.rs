mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "z3du",
    version,
    about = "Rewriting workbench for down-up algebras and their relatives"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Selects a presentation: a catalog entry, a dictionary instance of the
/// Z3-symmetric algebra, or a JSON file.
#[derive(Args, Debug, Clone)]
#[group(skip)]
pub struct PresArgs {
    /// Catalog presentation name.
    #[arg(long, short = 'p', group = "source")]
    pres: Option<String>,
    /// Parameter dictionary; selects `z3downup` with those parameters.
    #[arg(long, group = "source")]
    dict: Option<String>,
    /// Presentation file in the JSON format.
    #[arg(long, group = "source")]
    file: Option<PathBuf>,
    /// Parameter value, `name=expr`; rationals as `p/q`. Repeatable.
    #[arg(long = "bind", value_name = "P=VAL")]
    binds: Vec<String>,
    /// Generator precedence, smallest first, comma separated.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List, show or load presentations.
    Present {
        #[command(subcommand)]
        action: PresentAction,
    },
    /// Normal forms of expressions.
    Nf {
        #[command(flatten)]
        source: PresArgs,
        /// Expressions over the generators.
        #[arg(required = true)]
        exprs: Vec<String>,
        /// Complete the system to this degree before reducing.
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Degree-bounded completion.
    Complete {
        #[command(flatten)]
        source: PresArgs,
        #[arg(long, default_value_t = 6)]
        max_deg: usize,
        /// Print every rule of the completed system.
        #[arg(long)]
        rules: bool,
    },
    /// Normal words up to a degree.
    Basis {
        #[command(flatten)]
        source: PresArgs,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
    },
    /// Number of normal words in each degree.
    Hilbert {
        #[command(flatten)]
        source: PresArgs,
        #[arg(long, default_value_t = 8)]
        max_deg: usize,
    },
    /// Check that a map defined by a check-spec file respects the relations.
    Homcheck {
        /// Check-spec JSON file.
        spec: PathBuf,
        /// Completion degree for the target (overrides the file).
        #[arg(long)]
        completion_deg: Option<usize>,
    },
    /// Bounded evidence for injectivity and dimension questions.
    Probe {
        #[command(subcommand)]
        kind: ProbeKind,
    },
    /// Run the claim suite and print one entry per claim.
    VerifyClaims {
        /// Restrict to these topics. Repeatable.
        #[arg(long = "scope", value_name = "TOPIC")]
        scopes: Vec<String>,
        /// List topics and claims without running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PresentAction {
    /// Catalog entries and parameter dictionaries.
    List,
    /// Print a presentation; optionally save it as JSON.
    Show {
        #[command(flatten)]
        source: PresArgs,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Validate a presentation file and print it.
    Load { path: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ProbeKind {
    /// Whether the normal words run out by `max_deg`.
    FiniteDimension {
        #[command(flatten)]
        source: PresArgs,
        #[arg(long, default_value_t = 6)]
        max_deg: usize,
    },
    /// Independence of the images of the source normal words.
    Injectivity {
        spec: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
        /// Complete the target system to this degree first.
        #[arg(long)]
        complete_target: Option<usize>,
    },
    /// Injectivity on the Lie subalgebra spanned by bracket words.
    LieInjectivity {
        spec: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Expand matrix entries in this Laurent variable.
        #[arg(long)]
        laurent_var: Option<String>,
    },
    /// One parameter regime of the infinite-dimensionality argument.
    InfiniteDimension {
        /// gamma-zero, alpha-nonzero, beta-one or beta-generic.
        case: String,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
