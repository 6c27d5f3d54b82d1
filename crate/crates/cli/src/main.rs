use std::process::ExitCode;

use clap::Parser;
use tangles_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let envelope = serde_json::json!({ "error": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
