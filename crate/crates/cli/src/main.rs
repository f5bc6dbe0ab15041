use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stiffshell::config::{canonical_echo, load_config};
use stiffshell::selfcheck::{self_check, CheckLevel, Fault};
use stiffshell::sweep::{exit_code, plot_script, run_single, run_sweep};
use stiffshell::Error;

#[derive(Parser)]
#[command(name = "stiffshell", version, about = "Critical pulsating load of stiffened shells on a viscoelastic foundation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search the mode rectangle for the critical force of one configuration.
    Solve {
        #[arg(long)]
        config: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the canonical configuration echo here.
        #[arg(long)]
        echo: Option<PathBuf>,
    },
    /// Run the [sweep] section and write one CSV row per value.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Defaults to `output.csv` from the config.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        plot_script: Option<PathBuf>,
        #[arg(long)]
        echo: Option<PathBuf>,
    },
    /// Run the built-in oracle suites.
    Check {
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, hide = true, default_value = "none")]
        inject_fault: FaultArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    None,
    FlipB12,
}

fn write(path: &Path, contents: &str) -> Result<(), ExitCode> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| io_failure(path, e))?;
    }
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn io_failure(path: &Path, e: std::io::Error) -> ExitCode {
    eprintln!("error: cannot write {}: {e}", path.display());
    ExitCode::FAILURE
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(&e) as u8)
}

fn run(cli: Cli) -> Result<(), ExitCode> {
    match cli.command {
        Command::Solve { config, out, echo } => {
            let run = load_config(&config).map_err(fail)?;
            if let Some(p) = echo {
                write(&p, &canonical_echo(&run).map_err(fail)?)?;
            }
            let report = run_single(&run).map_err(fail)?;
            print!("{}", report.render());
            if let Some(p) = out.or(run.output.report.clone()) {
                write(&p, &report.to_json())?;
            }
        }
        Command::Sweep {
            config,
            out,
            plot_script: script,
            echo,
        } => {
            let run = load_config(&config).map_err(fail)?;
            if let Some(p) = echo {
                write(&p, &canonical_echo(&run).map_err(fail)?)?;
            }
            let out = out.or(run.output.csv.clone()).ok_or_else(|| {
                fail(Error::Config {
                    path: "output.csv".into(),
                    message: "no --out given and no output.csv in the config".into(),
                })
            })?;
            let table = run_sweep(&run).map_err(fail)?;
            write(&out, &table.to_csv())?;
            if let Some(p) = script.or(run.output.plot_script.clone()) {
                write(&p, &plot_script(&out, table.parameter))?;
            }
            let ok = table.rows.iter().filter(|r| r.status == "ok").count();
            println!("{} rows ({ok} ok) -> {}", table.rows.len(), out.display());
        }
        Command::Check { full, inject_fault } => {
            let level = if full { CheckLevel::Full } else { CheckLevel::Fast };
            let fault = match inject_fault {
                FaultArg::None => Fault::None,
                FaultArg::FlipB12 => Fault::FlipB12,
            };
            let report = self_check(level, fault);
            print!("{}", report.render());
            if !report.passed() {
                return Err(ExitCode::from(5));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
