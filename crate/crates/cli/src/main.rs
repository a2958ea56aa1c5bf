use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twisted_alexander::presentations::BUILDERS;
use twisted_alexander_cli::{parse_job, run_job, Report, RunError};

const OK: u8 = 0;
const CHECK_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Parser)]
#[command(name = "talex", version, about = "Twisted Alexander polynomials of finitely presented groups")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Seed for `rho random` lines.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a job and print the full report.
    Compute { job: PathBuf },
    /// Run a job and print only its checks.
    Check { job: PathBuf },
    /// List the presentation builders.
    Builders,
    /// Run every `*.job` file in a directory and print a summary table.
    Corpus { dir: PathBuf },
}

enum Outcome {
    Report(Report),
    Failed(u8, String),
}

fn execute(path: &Path, seed: u64) -> Outcome {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::Failed(INPUT_ERROR, format!("{}: {e}", path.display())),
    };
    let spec = match parse_job(&text) {
        Ok(s) => s,
        Err(e) => return Outcome::Failed(INPUT_ERROR, format!("{}: {e}", path.display())),
    };
    match run_job(&spec, seed) {
        Ok(r) => Outcome::Report(r),
        Err(e @ RunError::Input(_)) => Outcome::Failed(INPUT_ERROR, format!("{}: {e}", path.display())),
        Err(e @ RunError::Internal(_)) => Outcome::Failed(INTERNAL, format!("{}: {e}", path.display())),
    }
}

fn status(report: &Report) -> u8 {
    if report.passed() {
        OK
    } else {
        CHECK_FAILED
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Builders => {
            for (name, help) in BUILDERS {
                println!("{name:<14} {help}");
            }
            OK
        }
        Command::Compute { job } => match execute(&job, cli.seed) {
            Outcome::Report(r) => {
                match cli.format {
                    Format::Text => print!("{}", r.to_text()),
                    Format::Records => print!("{}", r.to_records()),
                }
                status(&r)
            }
            Outcome::Failed(code, msg) => {
                eprintln!("error: {msg}");
                code
            }
        },
        Command::Check { job } => match execute(&job, cli.seed) {
            Outcome::Report(r) => {
                for (name, passed, detail) in r.checks() {
                    match cli.format {
                        Format::Text => println!("{} {name}: {detail}", if passed { "ok  " } else { "FAIL" }),
                        Format::Records => println!("{}", serde_json::json!({ "record": "check", "name": name, "passed": passed, "detail": detail })),
                    }
                }
                status(&r)
            }
            Outcome::Failed(code, msg) => {
                eprintln!("error: {msg}");
                code
            }
        },
        Command::Corpus { dir } => {
            let mut paths: Vec<PathBuf> = match fs::read_dir(&dir) {
                Ok(entries) => entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "job")).collect(),
                Err(e) => {
                    eprintln!("error: {}: {e}", dir.display());
                    return ExitCode::from(INPUT_ERROR);
                }
            };
            paths.sort();
            let mut worst = OK;
            for path in &paths {
                let file = path.file_name().unwrap().to_string_lossy();
                let (code, summary) = match execute(path, cli.seed) {
                    Outcome::Report(r) => (status(&r), r.ratio().unwrap_or("").to_string()),
                    Outcome::Failed(code, msg) => (code, msg),
                };
                worst = worst.max(code);
                let label = ["ok", "check-failed", "input-error", "internal"][code as usize];
                match cli.format {
                    Format::Text => println!("{file:<32} {label:<13} {summary}"),
                    Format::Records => println!("{}", serde_json::json!({ "record": "corpus", "job": file, "status": label, "summary": summary })),
                }
            }
            worst
        }
    };
    ExitCode::from(code)
}
