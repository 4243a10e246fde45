use clap::Parser;

use adcodes::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let result = run(&cli);
    if cli.json {
        println!("{}", result.to_json());
    } else if result.status == adcodes::cli::Status::Error {
        eprintln!("{}", result.text);
    } else {
        println!("{}", result.text.trim_end());
    }
    std::process::exit(result.status.exit_code());
}
