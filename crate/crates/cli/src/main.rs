mod args;
mod commands;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Format};

/// What every invocation prints in JSON mode.
#[derive(Serialize)]
struct RunRecord<'a> {
    command: Vec<String>,
    config: &'a Cli,
    version: &'static str,
    result: serde_json::Value,
    wall_time_ms: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build_global() {
            eprintln!("error: cannot start {} workers: {e}", cli.global.jobs);
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(out) => {
            match cli.global.format {
                Format::Json => {
                    let record = RunRecord {
                        command: std::env::args().collect(),
                        config: &cli,
                        version: env!("CARGO_PKG_VERSION"),
                        result: out.result,
                        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
                    };
                    println!("{}", serde_json::to_string_pretty(&record).expect("records serialize"));
                }
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
