use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use flexrcc::commands;
use flexrcc::io::report::{render_creep_human, render_creep_machine, render_sweep_table};
use flexrcc::Error;

/// Spatial stiffness of flexure mechanisms.
#[derive(Parser)]
#[command(name = "flexrcc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Assemble the stiffness matrix and print a report.
    Analyze {
        file: PathBuf,
        /// Print the center-of-compliance lines.
        #[arg(long)]
        rcc: bool,
        /// Also write a key/value report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Measured directional stiffness file to compare against.
        #[arg(long)]
        measured: Option<PathBuf>,
    },
    /// Evaluate the [sweep] grid and print a ranked table.
    Sweep {
        file: PathBuf,
        /// Also write the table to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit the relaxation model to (time, force) samples.
    Creep {
        samples: PathBuf,
        /// Also write a key/value report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse and assemble a mechanism file without solving.
    Validate { file: PathBuf },
}

fn write_out(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Analyze {
            file,
            rcc,
            out,
            measured,
        } => {
            let report = commands::analyze_file(&file, measured.as_deref())?;
            print!("{}", report.render_human(rcc));
            if let Some(out) = out {
                write_out(&out, &report.render_machine())?;
            }
            if rcc {
                if report.rcc_height.is_err() {
                    return Err(Error::NoRotationCenter);
                }
                if report.ideal_center.is_err() {
                    return Err(Error::CenterAtInfinity);
                }
            }
        }
        Command::Sweep { file, out } => {
            let table = render_sweep_table(&commands::sweep_file(&file)?);
            print!("{table}");
            if let Some(out) = out {
                write_out(&out, &table)?;
            }
        }
        Command::Creep { samples, out } => {
            let (n, fit) = commands::creep_file(&samples)?;
            let source = samples.display().to_string();
            print!("{}", render_creep_human(&source, n, &fit));
            if let Some(out) = out {
                write_out(&out, &render_creep_machine(&source, n, &fit))?;
            }
        }
        Command::Validate { file } => println!("{}", commands::validate_file(&file)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 2 } else { 1 })
        }
    }
}
