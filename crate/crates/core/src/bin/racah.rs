use std::process::ExitCode;

use racah::cli::{run, Command};

fn main() -> ExitCode {
    let cmd = Command::from_args(std::env::args_os()).unwrap_or_else(|e| e.exit());
    let out = run(&cmd);
    if out.code == 2 {
        eprint!("{}", out.output);
    } else {
        print!("{}", out.output);
    }
    ExitCode::from(out.code as u8)
}
