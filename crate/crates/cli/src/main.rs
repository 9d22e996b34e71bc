use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let output = threehat_cli::run(std::env::args_os());
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(output.code as u8)
}
