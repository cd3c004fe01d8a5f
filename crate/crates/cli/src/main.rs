use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use dirac_yukawa_cli::args::{Cli, Command, OutputArgs};
use dirac_yukawa_cli::{run, CliError, CliResult};

fn output_args(cli: &Cli) -> &OutputArgs {
    match &cli.command {
        Command::Table(a) => &a.output,
        Command::Spectrum(a) => &a.output,
        Command::Sweep(a) => &a.output,
        Command::Wavefunction(a) => &a.output,
        Command::Oracle(a) => &a.output,
    }
}

fn execute(cli: &Cli) -> CliResult<()> {
    let report = run(cli)?;
    let out = output_args(cli);
    let text = report.dataset.render(out.format)?;
    match &out.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    if let Some(summary) = report.summary {
        eprintln!("{summary}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
