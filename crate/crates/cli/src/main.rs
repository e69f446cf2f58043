use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zdg_cli::{execute, Cli, BUDGET_ENV, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = std::env::var(BUDGET_ENV).ok();
    let code = match execute(&cli, env.as_deref()) {
        Ok(out) => {
            let written = match &cli.common.output {
                Some(path) => std::fs::write(path, &out.document).map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(out.document.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => {
                    if let Some(m) = &out.message {
                        eprintln!("zdg: {m}");
                    }
                    out.exit_code()
                }
                Err(e) => {
                    eprintln!("zdg: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(e) => {
            eprintln!("zdg: {e}");
            e.code
        }
    };
    ExitCode::from(code as u8)
}
