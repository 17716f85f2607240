use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twistpres::{Kind, Variant};

mod commands;
mod keys;
mod report;

use keys::{parse_kind, parse_variant, GenusRange};

/// Presentations of mapping class groups of nonorientable surfaces and
/// their twist subgroups.
///
/// Every flag can also be set through an environment variable named
/// `TWISTPRES_<FLAG>`; flags take precedence over the environment.
#[derive(Parser, Debug)]
#[command(name = "twistpres", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit catalog presentations.
    Gen {
        #[command(flatten)]
        key: KeyArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Reidemeister-Schreier rewriting of the mapping class group
    /// presentation onto the twist subgroup, with provenance.
    Rs {
        #[command(flatten)]
        key: KeyArgs,
        /// Rename the rewritten generators to e, c, B<i> and R.
        #[arg(long)]
        rename: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check every relator in the GF(2) homology representation.
    Verify {
        #[command(flatten)]
        key: KeyArgs,
        /// Presentation JSON file instead of catalog keys.
        #[arg(long, env = "TWISTPRES_INPUT")]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Abelian invariants via Smith normal form.
    Abelianize {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, env = "TWISTPRES_INPUT")]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Validate derivation scripts.
    ///
    /// A shipped fixture file carries its own context; a bare script needs
    /// `--input`. With neither `--script` nor `--input`, every file under
    /// `<fixtures>/derivations` is checked.
    CheckDerivation {
        #[arg(long)]
        script: Vec<PathBuf>,
        #[arg(long, env = "TWISTPRES_INPUT")]
        input: Option<PathBuf>,
        #[arg(long, env = "TWISTPRES_FIXTURES", default_value = "fixtures")]
        fixtures: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Full pipeline per genus: build, verify, rewrite, abelianize and
    /// compare with the twist catalog.
    Reproduce {
        #[arg(long, env = "TWISTPRES_G", default_value = "3..10")]
        g: GenusRange,
        #[arg(long, env = "TWISTPRES_S", default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        s: u8,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Write (or with `--check`, compare) the shipped fixture corpus.
    Fixtures {
        #[arg(long, env = "TWISTPRES_FIXTURES", default_value = "fixtures")]
        fixtures: PathBuf,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct KeyArgs {
    /// Genus, or an inclusive range `a..b`.
    #[arg(long, env = "TWISTPRES_G")]
    g: Option<GenusRange>,
    /// Boundary components (0 or 1); both when omitted.
    #[arg(long, env = "TWISTPRES_S", value_parser = clap::value_parser!(u8).range(0..=1))]
    s: Option<u8>,
    #[arg(long, env = "TWISTPRES_KIND", value_parser = parse_kind)]
    kind: Option<Kind>,
    #[arg(long, env = "TWISTPRES_VARIANT", value_parser = parse_variant)]
    variant: Option<Variant>,
}

#[derive(Args, Debug, Clone)]
struct OutArgs {
    #[arg(long, env = "TWISTPRES_FORMAT", value_enum)]
    format: Option<OutFormat>,
    /// Output file (reports) or directory (gen, rs); stdout when omitted.
    #[arg(long, env = "TWISTPRES_OUT")]
    out: Option<PathBuf>,
    /// Leave the generation timestamp out of reports.
    #[arg(long, env = "TWISTPRES_NO_TIMESTAMP")]
    no_timestamp: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutFormat {
    Json,
    Gap,
    Magma,
    Text,
}

/// Result of a command that ran to completion.
#[derive(Debug, PartialEq, Eq)]
enum Outcome {
    Ok,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match commands::run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
