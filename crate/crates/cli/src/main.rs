use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sparselab_cli::{run, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        // a closed pipe (`| head`) is not a failure
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            0
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
