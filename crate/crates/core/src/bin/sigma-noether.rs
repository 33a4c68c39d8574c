use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sigma_noether::workbench::{error_exit_code, execute, parse_spec, render_text, Format, Options, TaskKind};
use sigma_noether::Error;

#[derive(Parser)]
#[command(name = "sigma-noether", version, about = "Gabriel filters and totally σ-noetherian checks on finite rings and monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Ring summary: ideals, spectrum, local factors, optional filter.
    Inspect,
    /// The K / Z / C partition of Spec(A) for a filter.
    Partition,
    /// Torsion submodule and σ-closure of a submodule.
    Closure,
    /// Totally σ-finitely generated certificate for a submodule.
    Certify,
    /// Exhaustive theorem suite over A and A².
    Suite,
    /// Every Gabriel filter of a ring.
    Census,
    /// S-finiteness decision for a monomial ideal.
    Monomial,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Spec file, or `-` for standard input.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Size cap for the ring (the suite defaults to 16).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Largest exponent n tried by the monomial decision.
    #[arg(long, global = true)]
    budget: Option<u32>,
    /// Exit with 1 when a monomial decision is not certified.
    #[arg(long, global = true)]
    expect_pass: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

fn task_of(c: Command) -> TaskKind {
    match c {
        Command::Inspect => TaskKind::Enumerate,
        Command::Partition => TaskKind::Partition,
        Command::Closure => TaskKind::Closure,
        Command::Certify => TaskKind::Certify,
        Command::Suite => TaskKind::Suite,
        Command::Census => TaskKind::Census,
        Command::Monomial => TaskKind::MonomialDecide,
    }
}

fn read_spec(path: &Option<PathBuf>) -> Result<String, Error> {
    match path.as_deref() {
        None => Err(Error::Validation("--spec <file> is required".into())),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let run = || -> Result<(String, i32), Error> {
        let spec = parse_spec(&read_spec(&c.spec)?)?;
        let opts = Options {
            task: Some(task_of(cli.command)),
            cap: c.cap,
            budget: c.budget,
            expect_pass: c.expect_pass,
            timing: c.timing,
        };
        let outcome = execute(&spec, &opts)?;
        let format = match c.format {
            Some(FormatArg::Json) => Format::Json,
            Some(FormatArg::Text) => Format::Text,
            None => spec.format.unwrap_or_default(),
        };
        let text = match format {
            Format::Json => outcome.report.to_json() + "\n",
            Format::Text => render_text(&outcome.report),
        };
        Ok((text, outcome.exit_code))
    };
    match run() {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
