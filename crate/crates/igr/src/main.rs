/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        writeln!(std::io::stdout().lock(), $($t)*)
    }};
}

mod args;
mod commands;
mod diagram;
mod dto;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn run(cli: Cli) -> anyhow::Result<u8> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    match &cli.command {
        Command::Decompose(a) => commands::decompose(a),
        Command::Cohomology(a) => commands::cohomology(a),
        Command::Ext(a) => commands::ext(a),
        Command::Staircase(a) => commands::staircase_cmd(a),
        Command::Pairing(a) => commands::pairing(a),
        Command::CheckCollection(a) => commands::check_collection(a),
        Command::Fullness(a) => commands::fullness(a),
        Command::K0(a) => commands::k0(a),
        Command::VerifyPaper(a) => verify::verify_paper(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Usage errors exit 1 so that 2 and 3 keep their verification meaning.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}
