use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use springer_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let out = if cli.json {
        serde_json::to_string_pretty(&report.to_json(&command)).expect("values serialize") + "\n"
    } else {
        report.text.clone()
    };
    // A closed pipe (`| head`) is not an error.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    if !cli.quiet {
        for w in &report.warnings {
            eprintln!("warning: {w}");
        }
        eprintln!("time: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
