use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = svcfc_cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    println!("{out}");
    ExitCode::from(code as u8)
}
