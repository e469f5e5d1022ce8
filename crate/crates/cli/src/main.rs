use clap::Parser;
use schublines::commands;

fn main() {
    let cli = schublines::Cli::parse();
    std::process::exit(commands::run(cli));
}
