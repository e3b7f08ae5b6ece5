use std::process::ExitCode;

use clap::Parser;
use rek_lab::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = rek_lab::run(
        &cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code.code())
}
