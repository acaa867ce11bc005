mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run::execute(&cli.command) {
        Ok(out) => {
            let text = match cli.format {
                Format::Text => out.text.clone(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&out.to_json()).expect("JSON values always serialise");
                    s.push('\n');
                    s
                }
            };
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(if out.verified { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
