use clap::Parser;

fn main() {
    let cli = nbody_cli::Cli::parse();
    std::process::exit(nbody_cli::main_with(cli));
}
