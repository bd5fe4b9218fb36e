mod commands;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use threeiet::iet::DEFAULT_RETURN_CAP;

/// Three-interval exchanges, their codings, and substitution audits.
#[derive(Parser, Debug)]
#[command(name = "threeiet", version)]
pub struct Cli {
    /// Emit a single JSON document on standard output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Prefix length used for fixed points, audits and searches.
    #[arg(long, global = true, default_value_t = 1000)]
    pub seed_prefix_len: usize,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Slope ε, e.g. "(-1+sqrt(5))/2".
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: String,
    /// Length l of the exchanged interval.
    #[arg(long, allow_hyphen_values = true)]
    pub l: String,
    /// Left end c of the exchanged interval.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub c: String,
}

#[derive(Args, Debug, Clone)]
pub struct WordArgs {
    /// The word itself, over {A,B,C} or {0,1}.
    #[arg(conflicts_with = "file")]
    pub word: Option<String>,
    /// Read the word from a file (one word, optional trailing newline).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Complexity,
    Balance,
    Certificate,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Code the orbit of 0 under the three-interval exchange.
    Gen3iet {
        #[command(flatten)]
        params: ParamArgs,
        /// Number of letters.
        #[arg(short, long)]
        n: usize,
    },
    /// Code the orbit of 0 under the rotation R (or R′ with --prime).
    Gensturm {
        #[command(flatten)]
        params: ParamArgs,
        /// Number of letters.
        #[arg(short, long)]
        n: usize,
        /// Use R′ instead of R.
        #[arg(long)]
        prime: bool,
    },
    /// Induce the rotation R on [c, c+l) and compare with the exchange.
    Induce {
        #[command(flatten)]
        params: ParamArgs,
        /// Largest return time followed before giving up.
        #[arg(long, default_value_t = DEFAULT_RETURN_CAP)]
        cap: usize,
    },
    /// Complexity, balance and certificate reports for a word.
    Analyze {
        #[command(flatten)]
        input: WordArgs,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Check::Complexity, Check::Balance, Check::Certificate])]
        checks: Vec<Check>,
        /// Largest factor length reported (defaults: 30 for complexity, 300 for balance).
        #[arg(long)]
        n_max: Option<usize>,
        /// Minimal word length accepted by the certificate.
        #[arg(long, default_value_t = threeiet::theorems::DEFAULT_MIN_LENGTH)]
        min_length: usize,
    },
    /// Infinite distinct orbit condition for (ε, l).
    Idoc {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Whether a number is a Sturm number.
    Sturm {
        /// Number such as "(-1+sqrt(5))/2" or "1/2*sqrt(2)".
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Recover (c, l) from a 3iet word.
    Recover {
        #[command(flatten)]
        input: WordArgs,
        /// Slope ε; estimated from letter frequencies when absent.
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<String>,
    },
    /// Audit a substitution on {A,B,C} against the necessary conditions.
    Audit {
        /// Morphism text such as "A>AB;B>ACAB;C>B".
        morphism: String,
        /// Also verify the block facts on this many letters of the fixed point.
        #[arg(long)]
        facts_depth: Option<usize>,
    },
    /// Exhaustive search over substitutions on {A,B,C}.
    Search {
        /// Longest image of a single letter.
        #[arg(long, default_value_t = 8)]
        max_image_length: usize,
        /// Longest combined length of the three images.
        #[arg(long, default_value_t = 8)]
        max_total_length: usize,
    },
    /// Draw the stepped line of a ternary word as SVG.
    Svg {
        #[command(flatten)]
        input: WordArgs,
        /// Pixel size of a unit step.
        #[arg(long, default_value_t = 20.0)]
        width: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if std::env::args().any(|a| a == "--json") {
                println!(
                    "{}",
                    serde_json::json!({ "error": e.kind().to_string(), "detail": e.to_string() })
                );
            } else {
                let _ = e.print();
            }
            return ExitCode::from(1);
        }
    };
    ExitCode::from(commands::run(&cli))
}
