use clap::Parser;
use rwl_core::cli::{main_with, Cli};

fn main() {
    std::process::exit(main_with(Cli::parse()));
}
