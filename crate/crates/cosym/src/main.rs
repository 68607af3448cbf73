use clap::Parser;
use cosym::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
