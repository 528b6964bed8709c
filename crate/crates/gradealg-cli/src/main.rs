use clap::Parser;

use gradealg_cli::cli::Cli;

/// Exit code 0 means a verdict was computed (even a negative one); nonzero
/// means an operational error (bad usage, unreadable or malformed input).
fn main() {
    let cli = Cli::parse();
    match gradealg_cli::run(&cli) {
        Ok(output) => print!("{}", output.human),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
