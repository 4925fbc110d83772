use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use chain_codes::commands::{self, Outcome};
use chain_codes::io::{read_json, to_pretty, CodeSpec};
use chain_codes::ring::RingParams;
use chain_codes::Result;

/// Chain rings and additive cyclic codes over them. Reports are JSON.
#[derive(Parser)]
#[command(name = "chain-codes", version)]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring inspection.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Cyclotomic cosets of `N` under `p` and `p^r`.
    Cosets(RingLen),
    /// Primitive idempotents, minimal polynomials and the `μ` permutation.
    Idempotents(RingLen),
    /// Build, dualise or enumerate a code.
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Character exponent table `β(a, z)` of a small rank-one ring.
    Chars(RingOnly),
    /// Cross-check a code against the brute-force oracle.
    Verify(CodeArgs),
}

#[derive(Subcommand)]
enum RingCommand {
    Info(RingOnly),
}

#[derive(Subcommand)]
enum CodeCommand {
    Build(CodeArgs),
    Dual(CodeArgs),
    Weights(CodeArgs),
}

#[derive(Args)]
struct RingOnly {
    #[arg(long)]
    ring: PathBuf,
}

#[derive(Args)]
struct RingLen {
    #[arg(long)]
    ring: PathBuf,
    #[arg(long = "N")]
    n: u64,
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    code: PathBuf,
    /// Must agree with the ring inside the code spec.
    #[arg(long)]
    ring: Option<PathBuf>,
    /// Enumeration cap as log2 of the number of words.
    #[arg(long)]
    cap: Option<u32>,
}

impl CodeArgs {
    fn load(&self) -> Result<(CodeSpec, Option<RingParams>)> {
        let spec = read_json(&self.code)?;
        let ring = self.ring.as_deref().map(read_json).transpose()?;
        Ok((spec, ring))
    }
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Ring { command: RingCommand::Info(a) } => commands::ring_info(&read_json(&a.ring)?),
        Command::Cosets(a) => commands::cosets(&read_json(&a.ring)?, a.n),
        Command::Idempotents(a) => commands::idempotents(&read_json(&a.ring)?, a.n),
        Command::Chars(a) => commands::chars(&read_json(&a.ring)?),
        Command::Code { command } => match command {
            CodeCommand::Build(a) => {
                let (spec, ring) = a.load()?;
                commands::code_build(&spec, ring.as_ref(), a.cap)
            }
            CodeCommand::Dual(a) => {
                let (spec, ring) = a.load()?;
                commands::code_dual(&spec, ring.as_ref())
            }
            CodeCommand::Weights(a) => {
                let (spec, ring) = a.load()?;
                commands::code_weights(&spec, ring.as_ref(), a.cap)
            }
        },
        Command::Verify(a) => {
            let (spec, ring) = a.load()?;
            commands::verify(&spec, ring.as_ref(), a.cap)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            let text = to_pretty(&outcome.report);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(outcome.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
