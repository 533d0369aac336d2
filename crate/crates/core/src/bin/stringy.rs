use std::io;
use std::process::ExitCode;

use stringy_core::cli::{run, MAX_N_VAR};

fn main() -> ExitCode {
    let max_n = std::env::var(MAX_N_VAR).ok();
    let code = run(
        std::env::args_os(),
        max_n.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
