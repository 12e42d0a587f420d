use clap::Parser;
use hill_cli::{run, RunConfig};

fn main() {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        // clap exits 2 on bad arguments and 0 for --help
        Err(e) => e.exit(),
    };
    let code = match run(&cfg) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
