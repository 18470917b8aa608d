use clap::Parser;

fn main() {
    let cli = smallrep::cli::Cli::parse();
    std::process::exit(smallrep::cli::run(cli));
}
