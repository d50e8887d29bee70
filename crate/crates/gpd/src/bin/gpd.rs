use std::process::ExitCode;

use clap::Parser;
use gpd::cli::{run, Cli};

fn main() -> ExitCode {
    // clap exits with 2 on usage errors
    let cli = Cli::parse();
    ExitCode::from(run(&cli))
}
