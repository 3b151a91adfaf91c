use std::io;
use std::process::ExitCode;

use cagbox::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli, &mut io::stdout().lock(), &mut io::stderr().lock()).into()
}
