use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use borel::{run, Cli, CliError, Command};
use clap::Parser;

fn execute(cli: &Cli) -> anyhow::Result<()> {
    let output = run(&Command::try_from(cli)?)?;
    match &cli.out {
        Some(path) => std::fs::write(path, output)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => std::io::stdout()
            .lock()
            .write_all(output.as_bytes())
            .context("cannot write to standard output")?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("borel: {err:#}");
            let code = err
                .downcast_ref::<CliError>()
                .map_or(1, CliError::exit_code);
            ExitCode::from(code)
        }
    }
}
